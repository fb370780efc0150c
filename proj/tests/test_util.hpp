#pragma once

#include <string>

#include "qblocks/dyck.hpp"
#include "qblocks/qfield.hpp"

namespace qblocks::testing {

inline DyckPath P(const std::string& steps) { return DyckPath::from_steps(steps); }
inline RatQ br(int n) { return qint(n); }

}  // namespace qblocks::testing
