#include "greechie/states.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace greechie {

std::string TwoValuedState::bits() const {
  std::string s;
  s.reserve(values.size());
  for (auto v : values) s.push_back(v ? '1' : '0');
  return s;
}

namespace {

constexpr std::int8_t kUnset = -1;

class Solver {
 public:
  explicit Solver(const Logic& logic)
      : members_(logic.context_members()),
        incidence_(logic.atom_contexts()),
        value_(logic.atoms().size(), kUnset),
        ones_(members_.size(), 0),
        open_(members_.size(), 0) {
    for (std::size_t c = 0; c < members_.size(); ++c) open_[c] = members_[c].size();
  }

  template <typename Visit>
  void search(const Visit& visit) {
    const auto c = first_open_context();
    if (c == members_.size()) {
      emit(visit);
      return;
    }
    for (auto atom : members_[c]) {
      if (value_[atom] != kUnset) continue;
      branch(atom, [&] { search(visit); });
    }
  }

  // Runs `then` with `atom` set true and propagated, then restores.
  template <typename Then>
  void branch(std::size_t atom, const Then& then) {
    const auto mark = trail_.size();
    if (assign(atom, 1) && propagate()) then();
    undo(mark);
  }

  std::size_t first_open_context() const {
    std::size_t c = 0;
    while (c < members_.size() && ones_[c] > 0) ++c;
    return c;
  }

 private:
  template <typename Visit>
  void emit(const Visit& visit) {
    TwoValuedState s;
    s.values.resize(value_.size());
    for (std::size_t i = 0; i < value_.size(); ++i) s.values[i] = value_[i] == 1 ? 1 : 0;
    visit(s);
  }

  bool assign(std::size_t atom, std::int8_t v) {
    if (value_[atom] != kUnset) return value_[atom] == v;
    value_[atom] = v;
    trail_.push_back(atom);
    queue_.push_back(atom);
    bool ok = true;
    for (auto c : incidence_[atom]) {
      --open_[c];
      if (v == 1 && ++ones_[c] > 1) ok = false;
    }
    return ok;
  }

  bool propagate() {
    bool ok = true;
    while (ok && !queue_.empty()) {
      const auto atom = queue_.back();
      queue_.pop_back();
      for (auto c : incidence_[atom]) {
        if (value_[atom] == 1) {
          for (auto peer : members_[c]) {
            if (peer != atom && !assign(peer, 0)) {
              ok = false;
              break;
            }
          }
        } else if (ones_[c] == 0) {
          if (open_[c] == 0) {
            ok = false;
          } else if (open_[c] == 1) {
            for (auto peer : members_[c]) {
              if (value_[peer] == kUnset) {
                ok = assign(peer, 1);
                break;
              }
            }
          }
        }
        if (!ok) break;
      }
    }
    queue_.clear();
    return ok;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto atom = trail_.back();
      trail_.pop_back();
      for (auto c : incidence_[atom]) {
        ++open_[c];
        if (value_[atom] == 1) --ones_[c];
      }
      value_[atom] = kUnset;
    }
  }

  const std::vector<std::vector<std::size_t>>& members_;
  const std::vector<std::vector<std::size_t>>& incidence_;
  std::vector<std::int8_t> value_;
  std::vector<std::size_t> ones_;
  std::vector<std::size_t> open_;
  std::vector<std::size_t> trail_;
  std::vector<std::size_t> queue_;
};

void classify(const Logic& logic, StateSpaceReport& report) {
  report.count = report.states.size();
  report.empty = report.states.empty();
  const auto n = logic.atoms().size();
  report.unital = !report.empty;
  for (std::size_t a = 0; a < n && report.unital; ++a) {
    report.unital = std::any_of(report.states.begin(), report.states.end(),
                                [a](const TwoValuedState& s) { return s[a]; });
  }
  report.separating = !report.empty;
  for (std::size_t a = 0; a < n && report.separating; ++a) {
    for (std::size_t b = a + 1; b < n && report.separating; ++b) {
      report.separating = std::any_of(report.states.begin(), report.states.end(),
                                      [a, b](const TwoValuedState& s) { return s[a] != s[b]; });
    }
  }
}

}  // namespace

StateSpaceReport enumerate_states(const Logic& logic, const EnumerationOptions& options) {
  StateSpaceReport report;
  const auto& first = logic.context_members().front();
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  // Small logics are faster single-threaded.
  if (logic.atoms().size() < 24) threads = 1;

  if (threads <= 1) {
    for_each_state(logic, [&](const TwoValuedState& s) { report.states.push_back(s); });
  } else {
    // One task per member of the first context; each branch sets a different
    // atom true there, so the subtrees are disjoint.
    std::vector<std::future<std::vector<TwoValuedState>>> tasks;
    for (auto atom : first) {
      tasks.push_back(std::async(std::launch::async, [&logic, atom] {
        std::vector<TwoValuedState> out;
        Solver solver(logic);
        solver.branch(atom, [&] { solver.search([&](const TwoValuedState& s) { out.push_back(s); }); });
        return out;
      }));
    }
    for (auto& t : tasks) {
      auto part = t.get();
      report.states.insert(report.states.end(), std::make_move_iterator(part.begin()),
                           std::make_move_iterator(part.end()));
    }
  }
  std::sort(report.states.begin(), report.states.end());
  classify(logic, report);
  return report;
}

std::size_t count_states(const Logic& logic) {
  std::size_t n = 0;
  Solver solver(logic);
  solver.search([&](const TwoValuedState&) { ++n; });
  return n;
}

void for_each_state(const Logic& logic, const std::function<void(const TwoValuedState&)>& visit) {
  Solver solver(logic);
  solver.search(visit);
}

bool is_two_valued(const Logic& logic, const TwoValuedState& state) {
  if (state.values.size() != logic.atoms().size()) return false;
  for (const auto& members : logic.context_members()) {
    std::size_t ones = 0;
    for (auto a : members) ones += state[a] ? 1 : 0;
    if (ones != 1) return false;
  }
  return true;
}

}  // namespace greechie
