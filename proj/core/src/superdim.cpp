#include "superschur/superdim.hpp"

#include <ostream>
#include <stdexcept>

namespace superschur {

SuperDim::SuperDim(std::int64_t even, std::int64_t odd) : even_(even), odd_(odd) {
  if (even < 0 || odd < 0) {
    throw std::domain_error("negative superdimension (" + std::to_string(even) + "," +
                            std::to_string(odd) + ")");
  }
}

SuperDim SignedSuperDim::to_superdim() const { return SuperDim(even, odd); }

bool leq(const SuperDim& a, const SuperDim& b) {
  return a.even() <= b.even() && a.odd() <= b.odd();
}

bool leq(const SignedSuperDim& a, const SignedSuperDim& b) {
  return a.even <= b.even && a.odd <= b.odd;
}

bool strictly_less(const SignedSuperDim& a, const SignedSuperDim& b) {
  return leq(a, b) && !(a == b);
}

std::int64_t total(const SuperDim& a) { return a.even() + a.odd(); }

SuperDim pi_swap(const SuperDim& a) { return SuperDim(a.odd(), a.even()); }

SuperDim bound(const SuperDim& a) {
  const std::int64_t m = a.even();
  const std::int64_t n = a.odd();
  return SuperDim(m * (m - 1) / 2 + n * (n + 1) / 2, m * n);
}

SuperDim tensor(const SuperDim& a, const SuperDim& b) {
  return SuperDim(a.even() * b.even() + a.odd() * b.odd(),
                  a.even() * b.odd() + a.odd() * b.even());
}

std::string to_string(const SuperDim& a) {
  return "(" + std::to_string(a.even()) + "," + std::to_string(a.odd()) + ")";
}

std::string to_string(const SignedSuperDim& a) {
  return "(" + std::to_string(a.even) + "," + std::to_string(a.odd) + ")";
}

std::ostream& operator<<(std::ostream& os, const SuperDim& a) { return os << to_string(a); }
std::ostream& operator<<(std::ostream& os, const SignedSuperDim& a) {
  return os << to_string(a);
}

}  // namespace superschur
