#pragma once

#include "greechie/logic.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>

namespace greechie {

/// Counting proof that no two-valued state exists: summing the single true
/// atom of every context gives the (odd) context count, while summing atom by
/// atom counts each true atom an even number of times.
struct ParityCertificate {
  std::size_t context_count = 0;
  std::map<std::string, std::size_t> multiplicities;
};

/// A certificate iff the context count is odd and every atom occurs in an
/// even number of contexts.
std::optional<ParityCertificate> parity_obstruction(const Logic& logic);

}  // namespace greechie
