#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "superschur/algebra.hpp"
#include "superschur/linalg.hpp"

namespace superschur {

/// Deterministic source of small random choices. Draws avoid the standard
/// distributions so that a seed reproduces the same corpus on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

struct CorpusOptions {
  SuperDim max_sdim{4, 3};
  /// Coefficients of random cocycle combinations are drawn from [-c, c].
  std::int64_t coefficient_range = 2;
};

/// Random nilpotent superalgebra: an abelian seed extended centrally one
/// generator at a time by random cocycles, stopping within max_sdim.
LieSuperalgebra random_nilpotent(Rng& rng, const CorpusOptions& options = {});

/// `count` algebras from a fixed seed.
std::vector<LieSuperalgebra> random_corpus(std::uint64_t seed, std::size_t count,
                                           const CorpusOptions& options = {});

/// Random invertible parity-preserving matrix of size dim L (block
/// unitriangular times a random permutation inside each parity block, with
/// small integer entries and random nonzero diagonal scalings).
Matrix random_basis_change(const LieSuperalgebra& L, Rng& rng);

/// Random nonzero vector in the span of `rows` (small integer coefficients),
/// or the zero vector when there are no rows.
Vec random_combination(const Matrix& rows, std::size_t dim, Rng& rng);

}  // namespace superschur
