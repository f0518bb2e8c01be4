#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "superschur/algebra.hpp"
#include "superschur/superdim.hpp"

namespace superschur {

/// Basis-independent data separating the algebras of the classification
/// table from each other and from everything else of rank at most two.
struct Fingerprint {
  SuperDim sdim_L;
  SuperDim sdim_L2;
  SuperDim sdim_Z;
  SignedSuperDim smr;
  std::optional<std::size_t> nilpotency_class;
  bool derived_in_center = false;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const LieSuperalgebra& L);

enum class HeisenbergFamily { EvenCenter, OddCenter };

struct HeisenbergParams {
  HeisenbergFamily family;
  std::size_t p = 0;  // H(p,q); for the odd family p holds k
  std::size_t q = 0;
  friend bool operator==(const HeisenbergParams&, const HeisenbergParams&) = default;
};

/// Recognizes a Heisenberg superalgebra by L^2 = Z(L) with a one-dimensional
/// center, and reads off its parameters from the superdimension.
std::optional<HeisenbergParams> recognize_heisenberg(const LieSuperalgebra& L);

enum class TableLabel { Abelian, H10, H10PlusAb10, H10PlusAb01, H01 };

std::string to_string(TableLabel label);

struct TableEntry {
  TableLabel label;
  SuperDim smr;
  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

enum class NotCoveredReason {
  /// mr >= 3; the table says nothing.
  RankTooLarge,
  /// mr <= 2 but no table row matches: would contradict the classification.
  Contradiction,
};

struct NotCovered {
  NotCoveredReason reason;
  SignedSuperDim smr;
  std::string detail;
};

using Classification = std::variant<TableEntry, NotCovered>;

/// The five rows of the multiplier-rank <= 2 table, in order.
const std::vector<TableEntry>& theorem_table();

/// Throws NotNilpotent.
Classification classify_mr_le2(const LieSuperalgebra& L);

struct TableRowCheck {
  TableLabel label;
  SuperDim expected_smr;
  SignedSuperDim computed_smr;
  bool smr_matches = false;
  bool classifies_back = false;
  bool passed() const { return smr_matches && classifies_back; }
};

struct TableVerification {
  std::vector<TableRowCheck> rows;
  /// Abelian Ab(m,n) with m + n <= 5, all with smr (0,0).
  bool abelian_grid_ok = false;
  /// sdim M of H(1,0)⊕Ab(1,0) and H(1,0)⊕Ab(0,1).
  SuperDim multiplier_h10_ab10;
  SuperDim multiplier_h10_ab01;
  bool intermediates_ok = false;
  bool fingerprints_distinct = false;
  bool passed() const;
};

TableVerification verify_theorem_table();

}  // namespace superschur
