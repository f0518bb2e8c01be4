#include "superschur/structure.hpp"

#include <set>

#include "superschur/errors.hpp"

namespace superschur {

namespace {

void require_parent(const LieSuperalgebra& L, const Subspace& U) {
  if (!U.parent().same_as(L)) throw ParentMismatch();
}

/// Homogeneous kernel of a linear map given by the images of basis vectors:
/// x -> sum_i x_i images[i]. The map must send each parity block to a
/// homogeneous target, so the kernel splits by parity.
Subspace homogeneous_kernel(const LieSuperalgebra& L, const std::vector<Vec>& images,
                            std::size_t target_dim) {
  const std::size_t n = L.dim();
  std::vector<Vec> vectors;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const std::size_t lo = L.begin(p), hi = L.end(p), width = hi - lo;
    if (width == 0) continue;
    Matrix equations(target_dim, Vec(width));
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t k = 0; k < target_dim; ++k) equations[k][i - lo] = images[i][k];
    }
    for (const auto& sol : kernel(equations, width)) {
      Vec v(n);
      for (std::size_t i = lo; i < hi; ++i) v[i] = sol[i - lo];
      vectors.push_back(std::move(v));
    }
  }
  return Subspace::span(L, vectors);
}

}  // namespace

Subspace bracket_subspaces(const LieSuperalgebra& L, const Subspace& U, const Subspace& W) {
  require_parent(L, U);
  require_parent(L, W);
  std::vector<Vec> vectors;
  for (const auto& u : U.basis()) {
    for (const auto& w : W.basis()) vectors.push_back(L.bracket(u, w));
  }
  return Subspace::span(L, vectors);
}

Subspace derived_subalgebra(const LieSuperalgebra& L) {
  std::vector<Vec> vectors;
  for (const auto& [key, vec] : L.constants()) vectors.push_back(vec);
  return Subspace::span(L, vectors);
}

Subspace center(const LieSuperalgebra& L) {
  // ad x applied to every basis element, stacked into one long vector.
  const std::size_t n = L.dim();
  std::vector<Vec> images(n, Vec(n * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& b = L.bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) images[i][j * n + k] = b[k];
    }
  }
  return homogeneous_kernel(L, images, n * n);
}

Subspace centralizer(const LieSuperalgebra& L, const Vec& z) {
  const std::size_t n = L.dim();
  if (is_zero(z)) return Subspace::whole(L);
  if (!homogeneous_parity(L, z)) throw NonHomogeneous();
  std::vector<Vec> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(L.bracket(unit_vec(n, i), z));
  return homogeneous_kernel(L, images, n);
}

Subspace bracket_with(const LieSuperalgebra& L, const Vec& z) {
  const std::size_t n = L.dim();
  if (is_zero(z)) return Subspace::zero(L);
  if (!homogeneous_parity(L, z)) throw NonHomogeneous();
  std::vector<Vec> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(L.bracket(unit_vec(n, i), z));
  return Subspace::span(L, images);
}

Subspace second_center(const LieSuperalgebra& L) {
  const Quotient q = quotient(L, center(L));
  return q.preimage(center(q.algebra()));
}

std::vector<Subspace> lower_central_series(const LieSuperalgebra& L) {
  const Subspace whole = Subspace::whole(L);
  std::vector<Subspace> series{whole};
  while (true) {
    Subspace next = bracket_subspaces(L, whole, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::size_t> nilpotency_class(const LieSuperalgebra& L) {
  const auto series = lower_central_series(L);
  if (!series.back().is_zero()) return std::nullopt;
  return series.size() - 1;
}

bool is_nilpotent(const LieSuperalgebra& L) { return nilpotency_class(L).has_value(); }

bool is_ideal(const LieSuperalgebra& L, const Subspace& I) {
  require_parent(L, I);
  return bracket_subspaces(L, Subspace::whole(L), I).is_subspace_of(I);
}

Vec Quotient::project(const Vec& x) const {
  Vec r = reduce(reduce(x, ideal_.even_rows()), ideal_.odd_rows());
  Vec y(kept_.size());
  for (std::size_t a = 0; a < kept_.size(); ++a) y[a] = r[kept_[a]];
  return y;
}

Vec Quotient::lift(const Vec& y) const {
  Vec x(source_.dim());
  for (std::size_t a = 0; a < kept_.size(); ++a) x[kept_[a]] = y[a];
  return x;
}

Subspace Quotient::project(const Subspace& U) const {
  require_parent(source_, U);
  std::vector<Vec> images;
  for (const auto& u : U.basis()) images.push_back(project(u));
  return Subspace::span(algebra_, images);
}

Subspace Quotient::preimage(const Subspace& V) const {
  require_parent(algebra_, V);
  std::vector<Vec> vectors = ideal_.basis();
  for (const auto& v : V.basis()) vectors.push_back(lift(v));
  return Subspace::span(source_, vectors);
}

Quotient quotient(const LieSuperalgebra& L, const Subspace& I) {
  require_parent(L, I);
  if (!is_ideal(L, I)) throw NotAnIdeal();

  std::set<std::size_t> pivots;
  for (auto c : pivot_columns(I.even_rows())) pivots.insert(c);
  for (auto c : pivot_columns(I.odd_rows())) pivots.insert(c);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    if (!pivots.count(i)) kept.push_back(i);
  }

  std::vector<Parity> parities;
  std::vector<std::string> labels;
  for (auto i : kept) {
    parities.push_back(L.parity(i));
    labels.push_back(L.labels()[i]);
  }

  Quotient q(L, I, LieSuperalgebra(), kept);
  StructureConstants constants;
  for (std::size_t a = 0; a < kept.size(); ++a) {
    for (std::size_t b = a; b < kept.size(); ++b) {
      Vec c = q.project(L.bracket(kept[a], kept[b]));
      if (!is_zero(c)) constants.emplace(std::pair{a, b}, std::move(c));
    }
  }
  q.algebra_ = LieSuperalgebra::validate(L.name() + "/I", std::move(parities),
                                         std::move(constants), std::move(labels));
  return q;
}

DirectSum direct_sum_with_embedding(const LieSuperalgebra& A, const LieSuperalgebra& B) {
  const std::size_t n = A.dim() + B.dim();
  DirectSum out;
  out.first_index.resize(A.dim());
  out.second_index.resize(B.dim());
  std::vector<Parity> parities;
  std::vector<std::string> labels;
  std::set<std::string> used(A.labels().begin(), A.labels().end());
  auto fresh = [&used](std::string label) {
    while (used.count(label)) label += "'";
    used.insert(label);
    return label;
  };

  for (Parity p : {Parity::Even, Parity::Odd}) {
    for (std::size_t i = A.begin(p); i < A.end(p); ++i) {
      out.first_index[i] = parities.size();
      parities.push_back(p);
      labels.push_back(A.labels()[i]);
    }
    for (std::size_t i = B.begin(p); i < B.end(p); ++i) {
      out.second_index[i] = parities.size();
      parities.push_back(p);
      labels.push_back(fresh(B.labels()[i]));
    }
  }

  StructureConstants constants;
  auto embed = [&](const LieSuperalgebra& X, const std::vector<std::size_t>& index) {
    for (const auto& [key, vec] : X.constants()) {
      Vec v(n);
      for (std::size_t k = 0; k < vec.size(); ++k) v[index[k]] = vec[k];
      constants.emplace(std::pair{index[key.first], index[key.second]}, std::move(v));
    }
  };
  embed(A, out.first_index);
  embed(B, out.second_index);

  out.algebra = LieSuperalgebra::validate(A.name() + "+" + B.name(), std::move(parities),
                                          std::move(constants), std::move(labels));
  return out;
}

LieSuperalgebra direct_sum(const LieSuperalgebra& A, const LieSuperalgebra& B) {
  return direct_sum_with_embedding(A, B).algebra;
}

LieSuperalgebra change_basis(const LieSuperalgebra& L, const Matrix& P) {
  const std::size_t n = L.dim();
  if (P.size() != n) throw InvalidParams("change-of-basis matrix has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (P[i].size() != n) throw InvalidParams("change-of-basis matrix has wrong size");
    for (std::size_t j = 0; j < n; ++j) {
      if (P[i][j] != 0 && L.parity(i) != L.parity(j)) throw ParityMixing();
    }
  }
  const auto inv = inverse(P);
  if (!inv) throw SingularMatrix();

  std::vector<Vec> columns(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) columns[j][i] = P[i][j];
  }
  StructureConstants constants;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      Vec c = mat_vec(*inv, L.bracket(columns[a], columns[b]));
      if (!is_zero(c)) constants.emplace(std::pair{a, b}, std::move(c));
    }
  }
  return LieSuperalgebra::validate(L.name(), L.parities(), std::move(constants), L.labels());
}

DefiningPair DefiningPair::make(LieSuperalgebra K, Subspace M) {
  require_parent(K, M);
  if (!M.is_subspace_of(center(K).intersect(derived_subalgebra(K)))) {
    throw InvalidParams("kernel is not contained in Z(K) ∩ K^2");
  }
  return DefiningPair(std::move(K), std::move(M));
}

}  // namespace superschur
