#include "superschur/classify.hpp"

#include <array>

#include "superschur/cohomology.hpp"
#include "superschur/constructions.hpp"
#include "superschur/errors.hpp"
#include "superschur/invariants.hpp"
#include "superschur/structure.hpp"

namespace superschur {

Fingerprint fingerprint(const LieSuperalgebra& L) {
  const Subspace L2 = derived_subalgebra(L);
  const Subspace Z = center(L);
  Fingerprint f;
  f.sdim_L = L.sdim();
  f.sdim_L2 = L2.sdim();
  f.sdim_Z = Z.sdim();
  f.smr = smr(L);
  f.nilpotency_class = nilpotency_class(L);
  f.derived_in_center = L2.is_subspace_of(Z);
  return f;
}

std::optional<HeisenbergParams> recognize_heisenberg(const LieSuperalgebra& L) {
  const Subspace L2 = derived_subalgebra(L);
  const Subspace Z = center(L);
  if (!(L2 == Z)) return std::nullopt;
  const auto [even, odd] = std::pair{L.sdim().even(), L.sdim().odd()};
  if (Z.sdim() == SuperDim(1, 0)) {
    if (even % 2 == 0) return std::nullopt;
    return HeisenbergParams{HeisenbergFamily::EvenCenter, static_cast<std::size_t>((even - 1) / 2),
                            static_cast<std::size_t>(odd)};
  }
  if (Z.sdim() == SuperDim(0, 1)) {
    if (odd != even + 1) return std::nullopt;
    return HeisenbergParams{HeisenbergFamily::OddCenter, static_cast<std::size_t>(even), 0};
  }
  return std::nullopt;
}

std::string to_string(TableLabel label) {
  switch (label) {
    case TableLabel::Abelian: return "Abelian";
    case TableLabel::H10: return "H(1,0)";
    case TableLabel::H10PlusAb10: return "H(1,0)+Ab(1,0)";
    case TableLabel::H10PlusAb01: return "H(1,0)+Ab(0,1)";
    case TableLabel::H01: return "H(0,1)";
  }
  return "?";
}

const std::vector<TableEntry>& theorem_table() {
  static const std::vector<TableEntry> table{
      {TableLabel::Abelian, SuperDim(0, 0)},
      {TableLabel::H10, SuperDim(1, 0)},
      {TableLabel::H10PlusAb10, SuperDim(2, 0)},
      {TableLabel::H10PlusAb01, SuperDim(1, 1)},
      {TableLabel::H01, SuperDim(1, 1)},
  };
  return table;
}

namespace {

LieSuperalgebra table_model(TableLabel label) {
  switch (label) {
    case TableLabel::Abelian: return abelian(2, 1);
    case TableLabel::H10: return heisenberg_even(1, 0);
    case TableLabel::H10PlusAb10: return direct_sum(heisenberg_even(1, 0), abelian(1, 0));
    case TableLabel::H10PlusAb01: return direct_sum(heisenberg_even(1, 0), abelian(0, 1));
    case TableLabel::H01: return heisenberg_even(0, 1);
  }
  return LieSuperalgebra();
}

struct Reference {
  TableLabel label;
  Fingerprint print;
};

const std::vector<Reference>& non_abelian_references() {
  static const std::vector<Reference> refs = [] {
    std::vector<Reference> out;
    for (const auto& row : theorem_table()) {
      if (row.label == TableLabel::Abelian) continue;
      out.push_back({row.label, fingerprint(table_model(row.label))});
    }
    return out;
  }();
  return refs;
}

}  // namespace

Classification classify_mr_le2(const LieSuperalgebra& L) {
  if (!is_nilpotent(L)) throw NotNilpotent();
  if (L.is_abelian()) return TableEntry{TableLabel::Abelian, SuperDim(0, 0)};

  const Fingerprint f = fingerprint(L);
  if (f.smr.total() >= 3) {
    return NotCovered{NotCoveredReason::RankTooLarge, f.smr,
                      "multiplier-rank " + std::to_string(f.smr.total()) + " exceeds 2"};
  }
  for (const auto& ref : non_abelian_references()) {
    if (ref.print == f) return TableEntry{ref.label, f.smr.to_superdim()};
  }
  return NotCovered{NotCoveredReason::Contradiction, f.smr,
                    "non-abelian nilpotent algebra of superdimension " + to_string(f.sdim_L) +
                        " with smr " + to_string(f.smr) + " matches no table row"};
}

bool TableVerification::passed() const {
  for (const auto& r : rows) {
    if (!r.passed()) return false;
  }
  return abelian_grid_ok && intermediates_ok && fingerprints_distinct;
}

TableVerification verify_theorem_table() {
  TableVerification v;
  for (const auto& row : theorem_table()) {
    const LieSuperalgebra L = table_model(row.label);
    TableRowCheck check;
    check.label = row.label;
    check.expected_smr = row.smr;
    check.computed_smr = smr(L);
    check.smr_matches = check.computed_smr == row.smr.as_signed();
    const auto c = classify_mr_le2(L);
    check.classifies_back =
        std::holds_alternative<TableEntry>(c) && std::get<TableEntry>(c) == row;
    v.rows.push_back(check);
  }

  v.abelian_grid_ok = true;
  for (std::size_t m = 0; m <= 5; ++m) {
    for (std::size_t n = 0; m + n <= 5; ++n) {
      if (!(smr(abelian(m, n)) == SignedSuperDim{0, 0})) v.abelian_grid_ok = false;
    }
  }

  v.multiplier_h10_ab10 = multiplier(table_model(TableLabel::H10PlusAb10)).sdim_M;
  v.multiplier_h10_ab01 = multiplier(table_model(TableLabel::H10PlusAb01)).sdim_M;
  v.intermediates_ok =
      v.multiplier_h10_ab10 == SuperDim(4, 0) && v.multiplier_h10_ab01 == SuperDim(3, 2);

  const auto& refs = non_abelian_references();
  v.fingerprints_distinct = true;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    for (std::size_t j = i + 1; j < refs.size(); ++j) {
      if (refs[i].print == refs[j].print) v.fingerprints_distinct = false;
    }
  }
  return v;
}

}  // namespace superschur
