#include "superschur/cohomology.hpp"

#include <set>
#include <stdexcept>

#include "superschur/errors.hpp"

namespace superschur {

namespace {

using Coordinate = std::pair<std::size_t, std::size_t>;

std::map<Coordinate, std::size_t> coordinate_index(const LieSuperalgebra& L, Parity parity) {
  std::map<Coordinate, std::size_t> index;
  for (const auto& c : cochain_coordinates(L, parity)) index.emplace(c, index.size());
  return index;
}

/// Adds `coef * f(e_a, e_b)` to an equation row, folding (a, b) onto the
/// stored coordinate with the super-alternating sign.
void add_term(Vec& row, const std::map<Coordinate, std::size_t>& index, const LieSuperalgebra& L,
              std::size_t a, std::size_t b, const Scalar& coef) {
  if (coef == 0) return;
  Scalar c = coef;
  if (a > b) {
    c *= -sign(L.parity(a), L.parity(b));
    std::swap(a, b);
  }
  const auto it = index.find({a, b});
  if (it != index.end()) row[it->second] += c;
}

/// f([e_a, e_b], e_c) with sign s.
void add_bracket_term(Vec& row, const std::map<Coordinate, std::size_t>& index,
                      const LieSuperalgebra& L, std::size_t a, std::size_t b, std::size_t c, int s) {
  const Vec& ab = L.bracket(a, b);
  for (std::size_t t = 0; t < ab.size(); ++t) {
    if (ab[t] != 0) add_term(row, index, L, t, c, s * ab[t]);
  }
}

std::vector<Cochain2> to_cochains(const LieSuperalgebra& L, Parity parity, const Matrix& rows) {
  std::vector<Cochain2> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(Cochain2::from_coordinates(L, parity, r));
  return out;
}

Matrix coboundary_rows(const LieSuperalgebra& L, Parity parity) {
  const auto coords = cochain_coordinates(L, parity);
  Matrix rows;
  for (std::size_t a = L.begin(parity); a < L.end(parity); ++a) {
    Vec row(coords.size());
    for (std::size_t c = 0; c < coords.size(); ++c) {
      row[c] = -L.bracket(coords[c].first, coords[c].second)[a];
    }
    if (!is_zero(row)) rows.push_back(std::move(row));
  }
  return rref(std::move(rows));
}

Matrix cocycle_rows(const LieSuperalgebra& L, Parity parity) {
  const std::size_t width = cochain_coordinates(L, parity).size();
  if (width == 0) return {};
  return kernel(cocycle_equations(L, parity), width);
}

SuperDim count(std::size_t even, std::size_t odd) {
  return SuperDim(static_cast<std::int64_t>(even), static_cast<std::int64_t>(odd));
}

}  // namespace

std::vector<Coordinate> cochain_coordinates(const LieSuperalgebra& L, Parity parity) {
  std::vector<Coordinate> coords;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t j = i; j < L.dim(); ++j) {
      if (L.parity(i) + L.parity(j) != parity) continue;
      if (i == j && L.parity(i) == Parity::Even) continue;
      coords.emplace_back(i, j);
    }
  }
  return coords;
}

Cochain2 Cochain2::from_coordinates(const LieSuperalgebra& L, Parity parity, const Vec& coords) {
  const auto layout = cochain_coordinates(L, parity);
  if (coords.size() != layout.size()) throw InvalidParams("cochain coordinate vector has wrong length");
  Cochain2 f(parity, L.dim());
  for (std::size_t c = 0; c < layout.size(); ++c) {
    if (coords[c] != 0) f.values_.emplace(layout[c], coords[c]);
  }
  return f;
}

void Cochain2::set(std::size_t i, std::size_t j, const Scalar& value) {
  if (i > j || j >= dim_) throw InvalidParams("cochain entry must satisfy i <= j < dim");
  if (value == 0) {
    values_.erase({i, j});
  } else {
    values_[{i, j}] = value;
  }
}

Scalar Cochain2::eval(const LieSuperalgebra& L, std::size_t i, std::size_t j) const {
  if (i <= j) {
    const auto it = values_.find({i, j});
    return it == values_.end() ? Scalar(0) : it->second;
  }
  const auto it = values_.find({j, i});
  if (it == values_.end()) return 0;
  return -sign(L.parity(i), L.parity(j)) * it->second;
}

Scalar Cochain2::eval(const LieSuperalgebra& L, const Vec& x, const Vec& y) const {
  Scalar out = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] != 0) out += x[i] * y[j] * eval(L, i, j);
    }
  }
  return out;
}

Vec Cochain2::coordinates(const LieSuperalgebra& L) const {
  const auto layout = cochain_coordinates(L, parity_);
  Vec v(layout.size());
  for (std::size_t c = 0; c < layout.size(); ++c) {
    const auto it = values_.find(layout[c]);
    if (it != values_.end()) v[c] = it->second;
  }
  return v;
}

Matrix cocycle_equations(const LieSuperalgebra& L, Parity parity) {
  const auto index = coordinate_index(L, parity);
  const std::size_t n = L.dim();
  Matrix rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = j; k < n; ++k) {
        const Parity x = L.parity(i), y = L.parity(j), z = L.parity(k);
        Vec row(index.size());
        add_bracket_term(row, index, L, i, j, k, sign(x, z));
        add_bracket_term(row, index, L, j, k, i, sign(y, x));
        add_bracket_term(row, index, L, k, i, j, sign(z, y));
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::vector<Cochain2> cocycle_space(const LieSuperalgebra& L, Parity parity) {
  return to_cochains(L, parity, cocycle_rows(L, parity));
}

std::vector<Cochain2> coboundary_space(const LieSuperalgebra& L, Parity parity) {
  return to_cochains(L, parity, coboundary_rows(L, parity));
}

bool is_cocycle(const LieSuperalgebra& L, const Cochain2& f) {
  if (f.dim() != L.dim()) return false;
  const Vec coords = f.coordinates(L);
  for (const auto& row : cocycle_equations(L, f.parity())) {
    Scalar s = 0;
    for (std::size_t c = 0; c < coords.size(); ++c) s += row[c] * coords[c];
    if (s != 0) return false;
  }
  return true;
}

MultiplierResult multiplier(const LieSuperalgebra& L) {
  MultiplierResult result;
  std::size_t z[2], b[2], m[2];
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const auto slot = static_cast<std::size_t>(p);
    const Matrix cocycles = cocycle_rows(L, p);
    const Matrix coboundaries = coboundary_rows(L, p);
    Matrix reps;
    for (const auto& f : cocycles) reps.push_back(reduce(f, coboundaries));
    reps = rref(std::move(reps));
    z[slot] = cocycles.size();
    b[slot] = coboundaries.size();
    m[slot] = reps.size();
    if (z[slot] != b[slot] + m[slot]) {
      throw std::logic_error("coboundaries are not all cocycles");
    }
    for (auto& c : to_cochains(L, p, reps)) result.cocycle_basis.push_back(std::move(c));
  }
  result.sdim_Z2 = count(z[0], z[1]);
  result.sdim_B2 = count(b[0], b[1]);
  result.sdim_M = count(m[0], m[1]);
  return result;
}

DefiningPair CentralExtension::defining_pair() const {
  if (!is_defining_pair()) throw InvalidParams("extension kernel is not inside Z(K) ∩ K^2");
  return DefiningPair::make(algebra, kernel);
}

CentralExtension central_extension(const LieSuperalgebra& L, const std::vector<Cochain2>& chosen) {
  for (const auto& f : chosen) {
    if (!is_cocycle(L, f)) throw NotACocycle("chosen cochain is not a 2-cocycle");
  }
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const Matrix coboundaries = coboundary_rows(L, p);
    Matrix reduced;
    for (const auto& f : chosen) {
      if (f.parity() == p) reduced.push_back(reduce(f.coordinates(L), coboundaries));
    }
    const std::size_t wanted = reduced.size();
    if (rank(std::move(reduced)) != wanted) throw DependentClasses();
  }

  std::vector<Parity> parities;
  std::vector<std::string> labels;
  std::vector<std::size_t> base_index(L.dim());
  std::vector<std::size_t> new_index(chosen.size());
  std::set<std::string> used(L.labels().begin(), L.labels().end());
  std::size_t counter = 0;
  auto fresh = [&]() {
    std::string label;
    do {
      label = "c" + std::to_string(++counter);
    } while (used.count(label));
    used.insert(label);
    return label;
  };
  std::vector<std::string> new_labels;
  for (std::size_t r = 0; r < chosen.size(); ++r) new_labels.push_back(fresh());

  for (Parity p : {Parity::Even, Parity::Odd}) {
    for (std::size_t i = L.begin(p); i < L.end(p); ++i) {
      base_index[i] = parities.size();
      parities.push_back(p);
      labels.push_back(L.labels()[i]);
    }
    for (std::size_t r = 0; r < chosen.size(); ++r) {
      if (chosen[r].parity() != p) continue;
      new_index[r] = parities.size();
      parities.push_back(p);
      labels.push_back(new_labels[r]);
    }
  }

  const std::size_t n = parities.size();
  StructureConstants constants;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t j = i; j < L.dim(); ++j) {
      Vec v(n);
      const Vec& b = L.bracket(i, j);
      for (std::size_t k = 0; k < b.size(); ++k) v[base_index[k]] = b[k];
      for (std::size_t r = 0; r < chosen.size(); ++r) v[new_index[r]] = chosen[r].eval(L, i, j);
      if (!is_zero(v)) constants.emplace(std::pair{base_index[i], base_index[j]}, std::move(v));
    }
  }

  auto K = LieSuperalgebra::validate("ext(" + L.name() + ")", std::move(parities),
                                     std::move(constants), std::move(labels));
  std::vector<Vec> generators;
  for (auto idx : new_index) generators.push_back(unit_vec(n, idx));
  auto M = Subspace::span(K, generators);

  CentralExtension ext{K, M, base_index};
  ext.kernel_in_center = M.is_subspace_of(center(K));
  ext.kernel_in_derived = M.is_subspace_of(derived_subalgebra(K));
  return ext;
}

CentralExtension cover_candidate(const LieSuperalgebra& L) {
  auto ext = central_extension(L, multiplier(L).cocycle_basis);
  ext.algebra = ext.algebra.renamed("cover(" + L.name() + ")");
  ext.kernel = Subspace::span(ext.algebra, ext.kernel.basis());
  return ext;
}

}  // namespace superschur
