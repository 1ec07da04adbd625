#include "greechie/cli.hpp"

#include "greechie/collapse.hpp"
#include "greechie/diagrams.hpp"
#include "greechie/error.hpp"
#include "greechie/generators.hpp"
#include "greechie/gls.hpp"
#include "greechie/parity.hpp"
#include "greechie/quantum.hpp"
#include "greechie/realization.hpp"
#include "greechie/rules.hpp"
#include "greechie/states.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

namespace greechie::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::vector<std::string> files;
  std::string format = "text";
  std::string out_path;
  bool strict = false;
  bool count_only = false;
  bool list = false;
  unsigned threads = 0;
  std::string dot_mode = "greechie-incidence";
  std::string pair;
  int star_dim = 0;
};

/// Outcome of one subcommand on one logic.
struct FileResult {
  Json json = Json::object();
  std::string text;
  bool finding = false;  // negative finding, fails the run under --strict
};

std::string format_probability(double p) {
  std::ostringstream os;
  os << std::setprecision(12) << p;
  return os.str();
}

Json pair_json(const AtomPair& p) { return Json::array({p.first, p.second}); }

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::vector<std::string> non_maximal_labels(const Logic& logic) {
  std::vector<std::string> out;
  for (auto c : logic.non_maximal_contexts()) out.push_back(logic.contexts()[c].label);
  return out;
}

FileResult run_check(const Logic& logic) {
  const auto report = verify_realization(logic);
  FileResult r;
  std::ostringstream text;
  Json contexts = Json::array();
  for (const auto& c : report.contexts) {
    Json offending = Json::array();
    text << "context " << c.context << ": ";
    if (c.orthogonal()) {
      text << "orthogonal\n";
    } else {
      text << "FAIL";
      for (const auto& p : c.offending) {
        text << " (" << p.atoms.first << "," << p.atoms.second << ") inner product "
             << p.product.to_token();
        offending.push_back({{"atoms", pair_json(p.atoms)}, {"inner_product", p.product.to_token()}});
      }
      text << "\n";
    }
    contexts.push_back({{"label", c.context}, {"orthogonal", c.orthogonal()}, {"offending", offending}});
  }
  Json collinear = Json::array();
  for (const auto& p : report.collinear) {
    text << "collinear: " << p.first << " " << p.second << "\n";
    collinear.push_back(pair_json(p));
  }
  text << "result: " << (report.passed() ? "pass" : "fail") << " (" << report.orthogonal_contexts()
       << "/" << report.contexts.size() << " contexts orthogonal)\n";
  r.text = text.str();
  r.json = {{"passed", report.passed()},
            {"orthogonal_contexts", report.orthogonal_contexts()},
            {"context_count", report.contexts.size()},
            {"contexts", contexts},
            {"collinear", collinear}};
  r.finding = !report.passed();
  return r;
}

FileResult run_states(const Logic& logic, const Options& opt) {
  FileResult r;
  if (opt.count_only) {
    const auto n = count_states(logic);
    r.text = std::to_string(n) + "\n";
    r.json = {{"count", n}};
    r.finding = n == 0;
    return r;
  }
  const auto report = enumerate_states(logic, {opt.threads});
  std::ostringstream text;
  Json columns = Json::array();
  for (const auto& a : logic.atoms()) columns.push_back(a.label);
  if (opt.list) {
    for (const auto& s : report.states) text << s.bits() << "\n";
  } else {
    const auto nm = non_maximal_labels(logic);
    text << "atoms: " << logic.atoms().size() << "\n"
         << "contexts: " << logic.contexts().size() << "\n"
         << "states: " << report.count << "\n"
         << "empty: " << (report.empty ? "yes" : "no") << "\n"
         << "unital: " << (report.unital ? "yes" : "no") << "\n"
         << "separating: " << (report.separating ? "yes" : "no") << "\n"
         << "non-maximal contexts: " << (nm.empty() ? "none" : join(nm, " ")) << "\n";
  }
  r.text = text.str();
  r.json = {{"atoms", logic.atoms().size()},
            {"contexts", logic.contexts().size()},
            {"count", report.count},
            {"empty", report.empty},
            {"unital", report.unital},
            {"separating", report.separating},
            {"non_maximal_contexts", non_maximal_labels(logic)}};
  if (opt.list) {
    Json states = Json::array();
    for (const auto& s : report.states) states.push_back(s.bits());
    r.json["columns"] = columns;
    r.json["states"] = states;
  }
  r.finding = report.empty;
  return r;
}

FileResult run_rules(const Logic& logic, const Options& opt) {
  const auto report = enumerate_states(logic, {opt.threads});
  const auto rules = derive_rules(report, logic);
  FileResult r;
  std::ostringstream text;
  text << "states: " << report.count << "\n";
  Json one_zero = Json::array();
  Json one_one = Json::array();
  Json equivalences = Json::array();
  if (rules.explosion) {
    text << "explosion: no two-valued states, every implication holds vacuously\n";
  }
  for (const auto& p : rules.one_zero) {
    text << "one-zero: " << p.first << " -> " << p.second << "\n";
    one_zero.push_back(pair_json(p));
  }
  for (const auto& p : rules.one_one) {
    if (p.first != p.second) text << "one-one: " << p.first << " -> " << p.second << "\n";
    one_one.push_back(pair_json(p));
  }
  for (const auto& p : rules.equivalences) {
    text << "equivalent: " << p.first << " <-> " << p.second << "\n";
    equivalences.push_back(pair_json(p));
  }
  if (!rules.never_true.empty()) text << "never-true: " << join(rules.never_true, " ") << "\n";
  r.text = text.str();
  r.json = {{"states", report.count},
            {"explosion", rules.explosion},
            {"one_zero", one_zero},
            {"one_one", one_one},
            {"equivalences", equivalences},
            {"never_true", rules.never_true}};
  r.finding = rules.explosion;
  return r;
}

FileResult run_parity(const Logic& logic) {
  const auto cert = parity_obstruction(logic);
  FileResult r;
  std::ostringstream text;
  if (cert) {
    text << "certificate: " << cert->context_count
         << " contexts (odd), every atom in an even number of contexts\n";
    Json mult = Json::object();
    for (const auto& [atom, m] : cert->multiplicities) {
      text << "  " << atom << " " << m << "\n";
      mult[atom] = m;
    }
    r.json = {{"certificate", {{"context_count", cert->context_count}, {"multiplicities", mult}}}};
  } else {
    std::vector<std::string> odd;
    for (std::size_t a = 0; a < logic.atoms().size(); ++a) {
      if (logic.atom_contexts()[a].size() % 2 != 0) odd.push_back(logic.atoms()[a].label);
    }
    text << "no certificate: " << logic.contexts().size() << " contexts ("
         << (logic.contexts().size() % 2 ? "odd" : "even") << ")";
    if (!odd.empty()) text << ", odd multiplicity: " << join(odd, " ");
    text << "\n";
    r.json = {{"certificate", nullptr}};
    r.finding = true;
  }
  r.text = text.str();
  return r;
}

FileResult run_collapse(const Logic& logic) {
  const auto report = infer_collapses(logic);
  FileResult r;
  std::ostringstream text;
  Json ids = Json::array();
  for (const auto& id : report.identifications) {
    text << "identified: " << id.atoms.first << " = " << id.atoms.second
         << " (orthogonal to " << join(id.witness, " ") << ")\n";
    ids.push_back({{"atoms", pair_json(id.atoms)}, {"witness", id.witness}});
  }
  if (report.contradiction) {
    text << "contradiction: " << report.contradiction->first << " and "
         << report.contradiction->second << " share a context but are identified\n";
  }
  if (ids.empty() && !report.contradiction) text << "no identifications in dimension " << logic.dimension() << "\n";
  r.text = text.str();
  r.json = {{"dimension", logic.dimension()},
            {"identifications", ids},
            {"contradiction", report.contradiction ? pair_json(*report.contradiction) : Json(nullptr)}};
  r.finding = !report.identifications.empty() || report.contradiction.has_value();
  return r;
}

FileResult run_dual(const Logic& logic) {
  const auto g = tkadlec_dual(logic);
  FileResult r;
  std::ostringstream text;
  text << "nodes: " << join(g.nodes, " ") << "\n";
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    text << e.first << " -- " << e.second << " [" << join(e.shared, ",") << "]\n";
    edges.push_back({{"from", e.first}, {"to", e.second}, {"shared", e.shared}});
  }
  text << "edges: " << g.edges.size() << "\n";
  r.text = text.str();
  r.json = {{"nodes", g.nodes}, {"edges", edges}};
  return r;
}

FileResult run_dot(const Logic& logic, const Options& opt) {
  const auto mode = opt.dot_mode == "tkadlec" ? DotMode::tkadlec : DotMode::greechie_incidence;
  FileResult r;
  r.text = emit_dot(logic, mode);
  r.json = {{"mode", opt.dot_mode}, {"dot", r.text}};
  return r;
}

FileResult run_quantum(const Logic& logic, const Options& opt) {
  const auto report = enumerate_states(logic, {opt.threads});
  const auto rules = derive_rules(report, logic);
  const EntangledPair pair(logic.dimension());
  FileResult r;
  std::ostringstream text;

  if (!opt.pair.empty()) {
    const auto comma = opt.pair.find(',');
    if (comma == std::string::npos) throw Error("--pair expects two labels separated by a comma");
    const std::string x = opt.pair.substr(0, comma);
    const std::string y = opt.pair.substr(comma + 1);
    const auto& ax = logic.atom(x);
    const auto& ay = logic.atom(y);
    if (!ax.ray) throw AbstractLogicError(x);
    if (!ay.ray) throw AbstractLogicError(y);
    auto jp = joint_probability(pair, *ax.ray, *ay.ray);
    jp.classical_bound = classical_bound(rules, x, y);
    std::optional<double> classical;
    double event = jp.prob_both;
    std::string rule = "none";
    if (jp.classical_bound == ClassicalBound::zero) {
      classical = 0.0;
      rule = "one-zero " + x + " -> " + y;
    } else if (jp.classical_bound == ClassicalBound::equal) {
      classical = 0.0;
      event = jp.marginal_left - jp.prob_both;
      rule = "equivalence " + x + " <-> " + y;
    }
    const bool violated = classical && event > kProbabilityTolerance;
    text << "pair: " << x << "," << y << "\n"
         << "rule: " << rule << "\n"
         << "classical: " << (classical ? "0" : "unconstrained") << "\n"
         << "quantum: " << format_probability(event) << "\n"
         << "joint: " << format_probability(jp.prob_both) << "\n"
         << "marginals: " << format_probability(jp.marginal_left) << " "
         << format_probability(jp.marginal_right) << "\n"
         << "violated: " << (violated ? "yes" : "no") << "\n";
    r.text = text.str();
    r.json = {{"pair", Json::array({x, y})},
              {"classical_bound", to_string(jp.classical_bound)},
              {"classical", classical ? Json(*classical) : Json(nullptr)},
              {"quantum", event},
              {"prob_both", jp.prob_both},
              {"marginal_left", jp.marginal_left},
              {"marginal_right", jp.marginal_right},
              {"violated", violated}};
    r.finding = !violated;
    return r;
  }

  const auto entries = falsification_report(logic, rules, pair);
  Json rows = Json::array();
  std::size_t violations = 0;
  text << std::left << std::setw(28) << "rule" << std::setw(12) << "classical" << std::setw(18)
       << "quantum"
       << "violated\n";
  for (const auto& e : entries) {
    const std::string arrow = e.kind == RuleKind::one_zero ? " -> " : " <-> ";
    text << std::setw(28) << (to_string(e.kind) + " " + e.atoms.first + arrow + e.atoms.second)
         << std::setw(12) << "0" << std::setw(18) << format_probability(e.quantum)
         << (e.violated ? "yes" : "no") << "\n";
    rows.push_back({{"kind", to_string(e.kind)},
                    {"atoms", pair_json(e.atoms)},
                    {"classical", e.classical},
                    {"quantum", e.quantum},
                    {"prob_both", e.prob_both},
                    {"violated", e.violated}});
    violations += e.violated ? 1 : 0;
  }
  if (rules.explosion) text << "explosion: no two-valued states, no classical rules to test\n";
  text << "violations: " << violations << "/" << entries.size() << "\n";
  r.text = text.str();
  r.json = {{"explosion", rules.explosion}, {"rules", rows}, {"violations", violations}};
  r.finding = violations == 0;
  return r;
}

class Output {
 public:
  Output(std::ostream& fallback, const std::string& path) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error("cannot write '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int run_files(const std::string& command, const Options& opt, std::ostream& out, std::ostream& err,
              const std::function<FileResult(const Logic&)>& analyze) {
  const bool json = opt.format == "json";
  const bool batch = opt.files.size() > 1;
  Output output(out, opt.out_path);
  auto& os = output.stream();

  Json results = Json::array();
  std::size_t ok = 0;
  std::size_t errors = 0;
  std::size_t findings = 0;
  for (const auto& file : opt.files) {
    Json entry = {{"file", file}};
    if (!json && batch) os << "== " << file << " ==\n";
    try {
      const auto logic = load_logic(file);
      auto r = analyze(logic);
      entry["ok"] = true;
      entry["finding"] = r.finding;
      for (auto& [k, v] : r.json.items()) entry[k] = v;
      if (!json) os << r.text;
      ++ok;
      findings += r.finding ? 1 : 0;
    } catch (const ParseError& e) {
      err << file << ":" << e.line() << ":" << e.column() << ": " << e.message() << "\n";
      entry["ok"] = false;
      entry["error"] = {{"line", e.line()}, {"column", e.column()}, {"message", e.message()}};
      ++errors;
    } catch (const Error& e) {
      err << file << ": " << e.what() << "\n";
      entry["ok"] = false;
      entry["error"] = {{"line", nullptr}, {"column", nullptr}, {"message", e.what()}};
      ++errors;
    }
    results.push_back(std::move(entry));
  }

  if (json) {
    Json doc = {{"command", command},
                {"results", results},
                {"summary", {{"files", opt.files.size()}, {"ok", ok}, {"errors", errors}, {"findings", findings}}}};
    os << doc.dump(2) << "\n";
  } else if (batch) {
    os << "summary: " << opt.files.size() << " files, " << ok << " ok, " << errors << " failed, "
       << findings << " with findings\n";
  }
  if (errors) return kExitUsage;
  if (opt.strict && findings) return kExitFinding;
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite quantum logic verification: realizations, two-valued states, rules, "
               "Kochen-Specker obstructions and quantum predictions."};
  app.name("greechie");
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("files", opt.files, "Input .gls files")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", opt.out_path, "Write output to this path instead of stdout");
    sub->add_flag("--strict", opt.strict, "Exit with status 1 on negative findings");
  };

  auto* check = app.add_subcommand("check", "Exact orthogonality and distinctness of the rays");
  add_common(check);
  auto* states = app.add_subcommand("states", "Enumerate two-valued states");
  add_common(states);
  states->add_flag("--count-only", opt.count_only, "Print only the number of states");
  states->add_flag("--list", opt.list, "Print one bit string per state (atom labels sorted)");
  states->add_option("--threads", opt.threads, "Worker threads (0 = hardware concurrency)");
  auto* rules = app.add_subcommand("rules", "Derive one-zero and one-one rules");
  add_common(rules);
  auto* parity = app.add_subcommand("parity", "Look for a parity obstruction certificate");
  add_common(parity);
  auto* collapse = app.add_subcommand("collapse", "Infer atoms forced onto the same ray");
  add_common(collapse);
  auto* dual = app.add_subcommand("dual", "Tkadlec dual graph");
  add_common(dual);
  auto* dot = app.add_subcommand("dot", "Graphviz DOT output");
  add_common(dot);
  dot->add_option("--mode", opt.dot_mode, "Diagram kind")
      ->check(CLI::IsMember({"greechie-incidence", "tkadlec"}));
  auto* quantum = app.add_subcommand("quantum", "Quantum predictions against classical rules");
  add_common(quantum);
  quantum->add_option("--pair", opt.pair, "Single joint probability for atoms x,y");
  auto* star = app.add_subcommand("star", "Emit an n-star logic in .gls format");
  star->add_option("n", opt.star_dim, "Dimension (>= 3)")->required();
  star->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  star->add_option("--out", opt.out_path, "Write output to this path instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*star) {
      const auto logic = make_star(opt.star_dim);
      Output output(out, opt.out_path);
      if (opt.format == "json") {
        output.stream() << Json{{"command", "star"}, {"dimension", opt.star_dim},
                                {"gls", serialize_logic(logic)}}
                               .dump(2)
                        << "\n";
      } else {
        output.stream() << serialize_logic(logic);
      }
      return kExitOk;
    }
    if (*check) return run_files("check", opt, out, err, run_check);
    if (*states) {
      return run_files("states", opt, out, err, [&](const Logic& l) { return run_states(l, opt); });
    }
    if (*rules) {
      return run_files("rules", opt, out, err, [&](const Logic& l) { return run_rules(l, opt); });
    }
    if (*parity) return run_files("parity", opt, out, err, run_parity);
    if (*collapse) return run_files("collapse", opt, out, err, run_collapse);
    if (*dual) return run_files("dual", opt, out, err, run_dual);
    if (*dot) return run_files("dot", opt, out, err, [&](const Logic& l) { return run_dot(l, opt); });
    if (*quantum) {
      return run_files("quantum", opt, out, err, [&](const Logic& l) { return run_quantum(l, opt); });
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace greechie::cli
