#include "greechie/parity.hpp"

namespace greechie {

std::optional<ParityCertificate> parity_obstruction(const Logic& logic) {
  ParityCertificate cert;
  cert.context_count = logic.contexts().size();
  if (cert.context_count % 2 == 0) return std::nullopt;
  for (std::size_t a = 0; a < logic.atoms().size(); ++a) {
    const auto m = logic.atom_contexts()[a].size();
    if (m % 2 != 0) return std::nullopt;
    cert.multiplicities.emplace(logic.atoms()[a].label, m);
  }
  return cert;
}

}  // namespace greechie
