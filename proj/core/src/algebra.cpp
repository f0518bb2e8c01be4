#include "superschur/algebra.hpp"

#include <set>

#include "superschur/errors.hpp"

namespace superschur {

LieSuperalgebra::LieSuperalgebra() : data_(std::make_shared<const Data>()) {}

SuperDim LieSuperalgebra::sdim() const {
  return SuperDim(static_cast<std::int64_t>(even_dim()),
                  static_cast<std::int64_t>(dim() - even_dim()));
}

LieSuperalgebra LieSuperalgebra::validate(std::string name, std::vector<Parity> parities,
                                          StructureConstants constants,
                                          std::vector<std::string> labels) {
  const std::size_t n = parities.size();
  auto data = std::make_shared<Data>();

  std::size_t even_dim = 0;
  while (even_dim < n && parities[even_dim] == Parity::Even) ++even_dim;
  for (std::size_t i = even_dim; i < n; ++i) {
    if (parities[i] != Parity::Odd) {
      throw BasisOrderError("even basis element e" + std::to_string(i) +
                            " follows an odd one");
    }
  }

  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (labels.size() != n) throw ValidationError("label count does not match dimension");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != n) {
    throw ValidationError("basis labels are not unique");
  }

  StructureConstants normalized;
  for (auto& [key, vec] : constants) {
    const auto [i, j] = key;
    if (i > j || j >= n) {
      throw ValidationError("structure constant key (" + std::to_string(i) + "," +
                            std::to_string(j) + ") is out of range or not ordered");
    }
    if (vec.size() != n) throw ValidationError("structure constant vector has wrong length");
    if (is_zero(vec)) continue;
    if (i == j && parities[i] == Parity::Even) {
      throw SkewSymmetryError("[e" + std::to_string(i) + ",e" + std::to_string(i) +
                              "] must vanish for even e" + std::to_string(i));
    }
    const Parity target = parities[i] + parities[j];
    for (std::size_t k = 0; k < n; ++k) {
      if (vec[k] != 0 && parities[k] != target) throw GradingError(i, j, k);
    }
    normalized.emplace(key, std::move(vec));
  }

  std::vector<Vec> table(n * n, Vec(n));
  for (const auto& [key, vec] : normalized) {
    const auto [i, j] = key;
    table[i * n + j] = vec;
    if (i != j) table[j * n + i] = scaled(vec, -sign(parities[i], parities[j]));
  }

  auto triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    // [[e_a, e_b], e_c]
    Vec out(n);
    const Vec& ab = table[a * n + b];
    for (std::size_t t = 0; t < n; ++t) {
      if (ab[t] != 0) axpy(out, ab[t], table[t * n + c]);
    }
    return out;
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = j; k < n; ++k) {
        const Parity x = parities[i], y = parities[j], z = parities[k];
        Vec residual = scaled(triple(i, j, k), sign(x, z));
        axpy(residual, sign(y, x), triple(j, k, i));
        axpy(residual, sign(z, y), triple(k, i, j));
        if (!is_zero(residual)) throw JacobiError(i, j, k, to_string(residual));
      }
    }
  }

  data->name = std::move(name);
  data->parities = std::move(parities);
  data->labels = std::move(labels);
  data->constants = std::move(normalized);
  data->even_dim = even_dim;
  data->table = std::move(table);
  return LieSuperalgebra(std::move(data));
}

Vec LieSuperalgebra::bracket(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      axpy(out, x[i] * y[j], bracket(i, j));
    }
  }
  return out;
}

LieSuperalgebra LieSuperalgebra::renamed(std::string name) const {
  auto data = std::make_shared<Data>(*data_);
  data->name = std::move(name);
  return LieSuperalgebra(std::move(data));
}

bool LieSuperalgebra::same_structure(const LieSuperalgebra& other) const {
  return parities() == other.parities() && constants() == other.constants();
}

std::optional<Parity> homogeneous_parity(const LieSuperalgebra& L, const Vec& v) {
  bool has_even = false, has_odd = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    (L.parity(i) == Parity::Even ? has_even : has_odd) = true;
  }
  if (has_even == has_odd) return std::nullopt;
  return has_even ? Parity::Even : Parity::Odd;
}

}  // namespace superschur
