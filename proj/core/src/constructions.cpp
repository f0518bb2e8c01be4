#include "superschur/constructions.hpp"

#include <cctype>
#include <regex>

#include "superschur/errors.hpp"

namespace superschur {

namespace {

std::string pair_name(const char* head, std::size_t a, std::size_t b) {
  return std::string(head) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

LieSuperalgebra abelian(std::size_t m, std::size_t n) {
  std::vector<Parity> parities(m, Parity::Even);
  parities.insert(parities.end(), n, Parity::Odd);
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= m; ++i) labels.push_back("a" + std::to_string(i));
  for (std::size_t j = 1; j <= n; ++j) labels.push_back("b" + std::to_string(j));
  return LieSuperalgebra::validate(pair_name("Ab", m, n), std::move(parities), {},
                                   std::move(labels));
}

LieSuperalgebra heisenberg_even(std::size_t p, std::size_t q) {
  if (p + q == 0) throw InvalidParams("H(p,q) needs p + q >= 1");
  const std::size_t n = 2 * p + 1 + q;
  const std::size_t z = 2 * p;
  std::vector<Parity> parities(2 * p + 1, Parity::Even);
  parities.insert(parities.end(), q, Parity::Odd);
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= p; ++i) labels.push_back("u" + std::to_string(i));
  for (std::size_t i = 1; i <= p; ++i) labels.push_back("v" + std::to_string(i));
  labels.push_back("z");
  for (std::size_t k = 1; k <= q; ++k) labels.push_back("w" + std::to_string(k));

  StructureConstants constants;
  for (std::size_t i = 0; i < p; ++i) constants.emplace(std::pair{i, p + i}, unit_vec(n, z));
  for (std::size_t k = 0; k < q; ++k) {
    const std::size_t w = z + 1 + k;
    constants.emplace(std::pair{w, w}, unit_vec(n, z));
  }
  return LieSuperalgebra::validate(pair_name("H", p, q), std::move(parities),
                                   std::move(constants), std::move(labels));
}

LieSuperalgebra heisenberg_odd(std::size_t k) {
  if (k == 0) throw InvalidParams("H(k) needs k >= 1");
  const std::size_t n = 2 * k + 1;
  const std::size_t z = k;
  std::vector<Parity> parities(k, Parity::Even);
  parities.insert(parities.end(), k + 1, Parity::Odd);
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= k; ++i) labels.push_back("u" + std::to_string(i));
  labels.push_back("z");
  for (std::size_t i = 1; i <= k; ++i) labels.push_back("w" + std::to_string(i));

  StructureConstants constants;
  for (std::size_t i = 0; i < k; ++i) constants.emplace(std::pair{i, z + 1 + i}, unit_vec(n, z));
  return LieSuperalgebra::validate("H(" + std::to_string(k) + ")", std::move(parities),
                                   std::move(constants), std::move(labels));
}

DefiningPair free_two_step_cover(std::size_t m, std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Parity> parities;
  auto add = [&](std::string label, Parity p) {
    labels.push_back(std::move(label));
    parities.push_back(p);
    return labels.size() - 1;
  };
  auto s = [](std::size_t i) { return std::to_string(i + 1); };

  std::vector<std::size_t> u(m), v(n);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> x, y, z;
  for (std::size_t i = 0; i < m; ++i) u[i] = add("u" + s(i), Parity::Even);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = k + 1; l < m; ++l) x[{k, l}] = add("x" + s(k) + "_" + s(l), Parity::Even);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) z[{a, b}] = add("z" + s(a) + "_" + s(b), Parity::Even);
  }
  for (std::size_t j = 0; j < n; ++j) v[j] = add("v" + s(j), Parity::Odd);
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < n; ++q) y[{p, q}] = add("y" + s(p) + "_" + s(q), Parity::Odd);
  }

  const std::size_t dim = labels.size();
  StructureConstants constants;
  for (const auto& [kl, target] : x) constants.emplace(std::pair{u[kl.first], u[kl.second]}, unit_vec(dim, target));
  for (const auto& [pq, target] : y) constants.emplace(std::pair{u[pq.first], v[pq.second]}, unit_vec(dim, target));
  for (const auto& [st, target] : z) constants.emplace(std::pair{v[st.first], v[st.second]}, unit_vec(dim, target));

  auto H = LieSuperalgebra::validate("cover(" + pair_name("Ab", m, n) + ")", std::move(parities),
                                     std::move(constants), std::move(labels));
  auto M = derived_subalgebra(H);
  return DefiningPair::make(std::move(H), std::move(M));
}

LieSuperalgebra model_l4() {
  const std::size_t n = 4;
  StructureConstants constants;
  constants.emplace(std::pair{0, 1}, unit_vec(n, 2));  // [x,y] = z
  constants.emplace(std::pair{0, 2}, unit_vec(n, 3));  // [x,z] = t
  return LieSuperalgebra::validate("L4", std::vector<Parity>(4, Parity::Even),
                                   std::move(constants), {"x", "y", "z", "t"});
}

LieSuperalgebra builtin(std::string_view name) {
  std::string compact;
  for (char c : name) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact == "L4") return model_l4();

  static const std::regex grammar(R"(^(Ab|H)\((\d+)(?:,(\d+))?\)$)");
  std::smatch match;
  if (!std::regex_match(compact, match, grammar)) {
    throw UnknownName("unknown algebra name '" + std::string(name) +
                      "' (expected Ab(m,n), H(p,q), H(k) or L4)");
  }
  auto number = [&](const std::string& digits) -> std::size_t {
    if (digits.size() > 3) throw InvalidParams("parameter too large in '" + compact + "'");
    return std::stoul(digits);
  };
  const bool two_args = match[3].matched;
  if (match[1] == "Ab") {
    if (!two_args) throw UnknownName("Ab takes two arguments: Ab(m,n)");
    return abelian(number(match[2]), number(match[3]));
  }
  if (two_args) return heisenberg_even(number(match[2]), number(match[3]));
  return heisenberg_odd(number(match[2]));
}

std::vector<NamedAlgebra> model_registry() {
  std::vector<NamedAlgebra> out;
  auto add = [&out](LieSuperalgebra L) { out.push_back({L.name(), std::move(L)}); };
  for (std::size_t p = 0; 2 * p + 1 <= 6; ++p) {
    for (std::size_t q = 0; 2 * p + 1 + q <= 6; ++q) {
      if (p + q >= 1) add(heisenberg_even(p, q));
    }
  }
  for (std::size_t k = 1; 2 * k + 1 <= 6; ++k) add(heisenberg_odd(k));
  add(model_l4());
  add(direct_sum(heisenberg_even(1, 0), abelian(1, 0)));
  add(direct_sum(heisenberg_even(1, 0), abelian(0, 1)));
  add(direct_sum(heisenberg_even(0, 1), abelian(1, 0)));
  add(direct_sum(heisenberg_odd(1), abelian(1, 0)));
  add(direct_sum(model_l4(), abelian(0, 1)));
  return out;
}

}  // namespace superschur
