#pragma once

#include <ostream>

#include "lingres/hedge_algebra.hpp"

namespace lingres {

// gtest diagnostics: generator name plus raw hedge ids, outermost first.
inline void PrintTo(const Term& t, std::ostream* os) {
  *os << generator_name(t.generator());
  if (t.depth() == 0) return;
  *os << '[';
  for (std::size_t i = 0; i < t.depth(); ++i) *os << (i ? "," : "") << int(t.hedges()[i]);
  *os << ']';
}

}  // namespace lingres
