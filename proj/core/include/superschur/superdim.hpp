#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace superschur {

class SuperDim;

/// A pair of integers that may carry negative components. Rank formulas are
/// differences of superdimensions; a negative component here signals that an
/// assumed configuration is impossible.
struct SignedSuperDim {
  std::int64_t even = 0;
  std::int64_t odd = 0;

  bool is_nonnegative() const { return even >= 0 && odd >= 0; }
  std::int64_t total() const { return even + odd; }

  /// Throws std::domain_error when a component is negative.
  SuperDim to_superdim() const;

  friend bool operator==(const SignedSuperDim&, const SignedSuperDim&) = default;
  friend SignedSuperDim operator+(SignedSuperDim a, SignedSuperDim b) {
    return {a.even + b.even, a.odd + b.odd};
  }
  friend SignedSuperDim operator-(SignedSuperDim a, SignedSuperDim b) {
    return {a.even - b.even, a.odd - b.odd};
  }
};

/// Superdimension (dim V_0, dim V_1) of a superspace. Both components are
/// non-negative.
class SuperDim {
 public:
  constexpr SuperDim() = default;
  SuperDim(std::int64_t even, std::int64_t odd);

  constexpr std::int64_t even() const { return even_; }
  constexpr std::int64_t odd() const { return odd_; }

  SignedSuperDim as_signed() const { return {even_, odd_}; }

  friend bool operator==(const SuperDim&, const SuperDim&) = default;

  SuperDim& operator+=(const SuperDim& other) {
    even_ += other.even_;
    odd_ += other.odd_;
    return *this;
  }
  friend SuperDim operator+(SuperDim a, const SuperDim& b) { return a += b; }
  friend SignedSuperDim operator-(const SuperDim& a, const SuperDim& b) {
    return a.as_signed() - b.as_signed();
  }

 private:
  std::int64_t even_ = 0;
  std::int64_t odd_ = 0;
};

/// Componentwise partial order: (m,n) <= (k,l) iff m <= k and n <= l.
bool leq(const SuperDim& a, const SuperDim& b);
bool leq(const SignedSuperDim& a, const SignedSuperDim& b);
/// a <= b and a != b.
bool strictly_less(const SignedSuperDim& a, const SignedSuperDim& b);

/// m + n.
std::int64_t total(const SuperDim& a);

/// Parity swap (m,n) -> (n,m).
SuperDim pi_swap(const SuperDim& a);

/// (m(m-1)/2 + n(n+1)/2, mn): the largest superdimension of the derived
/// algebra of something with central quotient of superdimension (m,n), and of
/// the multiplier of an algebra of superdimension (m,n).
SuperDim bound(const SuperDim& a);

/// Superdimension of a tensor product of superspaces.
SuperDim tensor(const SuperDim& a, const SuperDim& b);

std::string to_string(const SuperDim& a);
std::string to_string(const SignedSuperDim& a);
std::ostream& operator<<(std::ostream& os, const SuperDim& a);
std::ostream& operator<<(std::ostream& os, const SignedSuperDim& a);

}  // namespace superschur
