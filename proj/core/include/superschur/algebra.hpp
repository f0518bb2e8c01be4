#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superschur/linalg.hpp"
#include "superschur/superdim.hpp"

namespace superschur {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

/// (-1)^{|a||b|}
inline int sign(Parity a, Parity b) {
  return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}

/// Structure constants keyed by (i, j) with i <= j. Missing entries are zero.
using StructureConstants = std::map<std::pair<std::size_t, std::size_t>, Vec>;

/// Finite-dimensional Lie superalgebra over the rationals, given by a
/// homogeneous basis (even elements first) and structure constants.
///
/// Values are immutable and cheap to copy; the only way to obtain one is
/// through validate(), so every instance satisfies grading, super skew
/// symmetry and the super Jacobi identity.
class LieSuperalgebra {
 public:
  /// Checks the axioms and builds the algebra. `labels` may be empty, in which
  /// case e0, e1, ... are used. Throws a ValidationError subclass.
  static LieSuperalgebra validate(std::string name, std::vector<Parity> parities,
                                  StructureConstants constants,
                                  std::vector<std::string> labels = {});

  /// The zero algebra.
  LieSuperalgebra();

  const std::string& name() const { return data_->name; }
  std::size_t dim() const { return data_->parities.size(); }
  SuperDim sdim() const;
  std::size_t even_dim() const { return data_->even_dim; }
  Parity parity(std::size_t i) const { return data_->parities[i]; }
  const std::vector<Parity>& parities() const { return data_->parities; }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const StructureConstants& constants() const { return data_->constants; }

  /// [e_i, e_j] for any i, j (skew-extended).
  const Vec& bracket(std::size_t i, std::size_t j) const {
    return data_->table[i * dim() + j];
  }
  /// Bilinear extension to arbitrary coordinate vectors.
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Indices of basis elements with parity p: [0, even_dim) or [even_dim, dim).
  std::size_t begin(Parity p) const { return p == Parity::Even ? 0 : even_dim(); }
  std::size_t end(Parity p) const { return p == Parity::Even ? even_dim() : dim(); }

  /// Returns a copy carrying a different display name.
  LieSuperalgebra renamed(std::string name) const;

  /// Same underlying object (used for parent checks on subspaces).
  bool same_as(const LieSuperalgebra& other) const { return data_ == other.data_; }

  /// Equal parities and structure constants (names and labels ignored).
  bool same_structure(const LieSuperalgebra& other) const;

  bool is_abelian() const { return data_->constants.empty(); }

 private:
  struct Data {
    std::string name;
    std::vector<Parity> parities;
    std::vector<std::string> labels;
    StructureConstants constants;
    std::size_t even_dim = 0;
    std::vector<Vec> table;
  };
  explicit LieSuperalgebra(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Parity of a nonzero homogeneous coordinate vector, or nullopt when the
/// vector is zero or mixes parities.
std::optional<Parity> homogeneous_parity(const LieSuperalgebra& L, const Vec& v);

}  // namespace superschur
