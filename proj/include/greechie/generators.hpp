#pragma once

#include "greechie/logic.hpp"

#include <cstddef>
#include <string>

namespace greechie {

/// Spreadsheet-style label for a zero-based index: a..z, aa, ab, ...
std::string alpha_label(std::size_t index, bool uppercase);

/// Abstract n-star in dimension d: a center context of d atoms, each center
/// atom extended by its own context holding d-1 fresh atoms. d^2 atoms and
/// d+1 contexts. Throws LogicError for d < 3.
Logic make_star(int d);

}  // namespace greechie
