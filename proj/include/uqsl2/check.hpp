#pragma once

#include <string>
#include <vector>

#include "uqsl2/matrix.hpp"

namespace uqsl2 {

/// One operator identity evaluated on a module: both sides are kept so a
/// failure can be inspected.
struct IdentityCheck {
  std::string name;
  Matrix lhs;
  Matrix rhs;

  bool holds() const { return lhs == rhs; }
};

using CheckList = std::vector<IdentityCheck>;

inline bool all_hold(const CheckList& checks) {
  for (const auto& c : checks)
    if (!c.holds()) return false;
  return true;
}

/// First (row, col) where the two sides differ, as "r,c"; empty if equal.
inline std::string first_mismatch(const IdentityCheck& c) {
  if (c.lhs.rows() != c.rhs.rows() || c.lhs.cols() != c.rhs.cols())
    return "shape " + c.lhs.shape() + " vs " + c.rhs.shape();
  for (std::size_t i = 0; i < c.lhs.rows(); ++i)
    for (std::size_t j = 0; j < c.lhs.cols(); ++j)
      if (c.lhs(i, j) != c.rhs(i, j))
        return std::to_string(i) + "," + std::to_string(j) + ": " + to_string(c.lhs(i, j)) +
               " vs " + to_string(c.rhs(i, j));
  return {};
}

}  // namespace uqsl2
