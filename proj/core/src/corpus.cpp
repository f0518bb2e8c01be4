#include "superschur/corpus.hpp"

#include <algorithm>
#include <limits>

#include "superschur/cohomology.hpp"
#include "superschur/constructions.hpp"
#include "superschur/structure.hpp"

namespace superschur {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Vec random_combination(const Matrix& rows, std::size_t dim, Rng& rng) {
  Vec v(dim);
  if (rows.empty()) return v;
  for (int attempt = 0; attempt < 8 && is_zero(v); ++attempt) {
    v.assign(dim, Scalar(0));
    for (const auto& r : rows) axpy(v, Scalar(rng.between(-2, 2)), r);
  }
  if (is_zero(v)) v = rows.front();
  return v;
}

namespace {

Vec random_cochain_coordinates(std::size_t width, const Matrix& basis, std::int64_t range,
                               Rng& rng) {
  Vec v(width);
  for (int attempt = 0; attempt < 8 && is_zero(v); ++attempt) {
    v.assign(width, Scalar(0));
    for (const auto& b : basis) axpy(v, Scalar(rng.between(-range, range)), b);
  }
  return v;
}

}  // namespace

LieSuperalgebra random_nilpotent(Rng& rng, const CorpusOptions& options) {
  const auto max_even = options.max_sdim.even();
  const auto max_odd = options.max_sdim.odd();
  std::int64_t a = 0, b = 0;
  while (a + b == 0) {
    a = rng.between(0, std::min<std::int64_t>(max_even, 3));
    b = rng.between(0, std::min<std::int64_t>(max_odd, 2));
  }
  LieSuperalgebra L = abelian(static_cast<std::size_t>(a), static_cast<std::size_t>(b));

  const std::int64_t room = (max_even - a) + (max_odd - b);
  const std::int64_t steps = rng.between(0, room);
  for (std::int64_t step = 0; step < steps; ++step) {
    std::vector<Parity> choices;
    if (L.sdim().even() < max_even) choices.push_back(Parity::Even);
    if (L.sdim().odd() < max_odd) choices.push_back(Parity::Odd);
    if (choices.empty()) break;
    const Parity p = choices[rng.below(choices.size())];

    Matrix basis;
    for (const auto& f : cocycle_space(L, p)) basis.push_back(f.coordinates(L));
    const Vec coords = random_cochain_coordinates(cochain_coordinates(L, p).size(), basis,
                                                  options.coefficient_range, rng);
    const Cochain2 f = Cochain2::from_coordinates(L, p, coords);

    Matrix coboundaries;
    for (const auto& g : coboundary_space(L, p)) coboundaries.push_back(g.coordinates(L));
    if (is_zero(coords) || in_span(coords, rref(coboundaries))) {
      L = direct_sum(L, p == Parity::Even ? abelian(1, 0) : abelian(0, 1));
    } else {
      L = central_extension(L, {f}).algebra;
    }
  }

  if (rng.below(4) == 0) L = change_basis(L, random_basis_change(L, rng));
  return L;
}

std::vector<LieSuperalgebra> random_corpus(std::uint64_t seed, std::size_t count,
                                           const CorpusOptions& options) {
  Rng rng(seed);
  std::vector<LieSuperalgebra> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_nilpotent(rng, options)
                      .renamed("R" + std::to_string(seed) + "-" + std::to_string(i)));
  }
  return out;
}

Matrix random_basis_change(const LieSuperalgebra& L, Rng& rng) {
  const std::size_t n = L.dim();
  Matrix P(n, Vec(n));
  static const long diagonal[] = {1, -1, 2, -2, 3};
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const std::size_t lo = L.begin(p), d = L.end(p) - lo;
    Matrix lower(d, Vec(d)), upper(d, Vec(d));
    for (std::size_t i = 0; i < d; ++i) {
      lower[i][i] = 1;
      upper[i][i] = make_scalar(diagonal[rng.below(5)], rng.coin() ? 1 : 2);
      for (std::size_t j = 0; j < i; ++j) lower[i][j] = rng.between(-1, 1);
      for (std::size_t j = i + 1; j < d; ++j) upper[i][j] = rng.between(-1, 1);
    }
    std::vector<std::size_t> perm(d);
    for (std::size_t i = 0; i < d; ++i) perm[i] = i;
    for (std::size_t i = d; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        Scalar s = 0;
        for (std::size_t k = 0; k < d; ++k) s += lower[i][k] * upper[k][perm[j]];
        P[lo + i][lo + j] = s;
      }
    }
  }
  return P;
}

}  // namespace superschur
