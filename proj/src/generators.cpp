#include "greechie/generators.hpp"

#include "greechie/error.hpp"

#include <algorithm>

namespace greechie {

std::string alpha_label(std::size_t index, bool uppercase) {
  const char base = uppercase ? 'A' : 'a';
  std::string s;
  std::size_t n = index + 1;
  while (n > 0) {
    --n;
    s.push_back(static_cast<char>(base + n % 26));
    n /= 26;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

Logic make_star(int d) {
  if (d < 3) throw LogicError("star needs dimension >= 3, got " + std::to_string(d));
  const auto n = static_cast<std::size_t>(d);
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < n * n; ++i) atoms.push_back({alpha_label(i, true), std::nullopt});

  std::vector<Context> contexts;
  Context center{alpha_label(0, false), {}};
  for (std::size_t i = 0; i < n; ++i) center.members.push_back(atoms[i].label);
  contexts.push_back(center);

  std::size_t next = n;
  for (std::size_t i = 0; i < n; ++i) {
    Context arm{alpha_label(i + 1, false), {atoms[i].label}};
    for (std::size_t j = 1; j < n; ++j) arm.members.push_back(atoms[next++].label);
    contexts.push_back(std::move(arm));
  }
  return Logic(d, std::move(atoms), std::move(contexts));
}

}  // namespace greechie
