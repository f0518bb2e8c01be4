#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace superschur {

struct LedgerEntry {
  std::string key;
  std::string description;
  bool passed = false;
  std::size_t cases = 0;
  std::string detail;  // first failure, or a measurement for informational rows
  /// Measured rather than asserted; never affects the overall verdict.
  bool informational = false;
};

struct VerificationOptions {
  std::uint64_t seed = 7;
  std::size_t corpus_size = 100;
};

/// Runs the classification-table check and the property suite over a seeded
/// random corpus. One ledger entry per result.
std::vector<LedgerEntry> run_verification(const VerificationOptions& options);

/// True when every non-informational entry passed.
bool all_passed(const std::vector<LedgerEntry>& ledger);

}  // namespace superschur
