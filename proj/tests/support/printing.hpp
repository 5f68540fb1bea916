#pragma once

#include <ostream>

#include "symcls/cyclo.hpp"

namespace symcls {

inline void PrintTo(const CycNum& x, std::ostream* os) { *os << x.to_string(); }

}  // namespace symcls
