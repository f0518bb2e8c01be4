#pragma once

#include "oracle.hpp"
#include "superschur/algebra.hpp"
#include "superschur/superdim.hpp"

namespace test_support {

inline superschur::SuperDim sd(std::int64_t e, std::int64_t o) { return superschur::SuperDim(e, o); }

inline oracle::Table to_table(const superschur::LieSuperalgebra& L) {
  oracle::Table t;
  for (auto p : L.parities()) t.parity.push_back(p == superschur::Parity::Odd ? 1 : 0);
  for (const auto& [key, v] : L.constants()) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] == 0) continue;
      t.brackets.push_back({static_cast<int>(key.first), static_cast<int>(key.second), static_cast<int>(k),
                            oracle::Rational(boost::multiprecision::cpp_int(v[k].get_num().get_str())) /
                                oracle::Rational(boost::multiprecision::cpp_int(v[k].get_den().get_str()))});
    }
  }
  return t;
}

inline superschur::SuperDim from_pair(const oracle::Pair& p) { return superschur::SuperDim(p.first, p.second); }

}  // namespace test_support
