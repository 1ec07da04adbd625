#include "greechie/gls.hpp"

#include "greechie/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace greechie {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct ComponentError {
  std::size_t offset;
  std::string message;
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool looks_irrational(std::string_view tok) {
  if (tok.find("sqrt") != std::string_view::npos) return true;
  if (tok.find("\xE2\x88\x9A") != std::string_view::npos) return true;  // U+221A
  for (std::size_t i = 0; i < tok.size(); ++i) {
    if (tok[i] != 'r') continue;
    std::size_t j = i + 1;
    while (j < tok.size() && is_digit(tok[j])) ++j;
    if (j > i + 1 && tok.substr(i + 1, j - i - 1) != "2") return true;
  }
  return false;
}

class ComponentReader {
 public:
  explicit ComponentReader(std::string_view tok) : tok_(tok) {}

  std::optional<Quad> read(ComponentError& err) {
    auto first = term(err);
    if (!first) return std::nullopt;
    Quad value = *first;
    if (pos_ == tok_.size()) return value;
    const char op = tok_[pos_];
    if (op != '+' && op != '-') return fail(err, "unexpected character '" + std::string(1, op) + "'");
    ++pos_;
    auto second = term(err);
    if (!second) return std::nullopt;
    if (pos_ != tok_.size()) {
      return fail(err, "trailing characters after component");
    }
    if (op == '+') {
      value += *second;
    } else {
      value -= *second;
    }
    return value;
  }

 private:
  std::optional<Quad> fail(ComponentError& err, std::string message) {
    err = {pos_, std::move(message)};
    return std::nullopt;
  }

  bool at_r2() const { return tok_.substr(pos_, 2) == "r2"; }

  std::optional<Quad> term(ComponentError& err) {
    bool negative = false;
    if (pos_ < tok_.size() && tok_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    Rational coefficient{1};
    if (at_r2()) {
      pos_ += 2;
      return Quad(Rational(0), negative ? Rational(-1) : Rational(1));
    }
    const std::size_t start = pos_;
    while (pos_ < tok_.size() && is_digit(tok_[pos_])) ++pos_;
    if (pos_ == start) return fail(err, "expected a number");
    boost::multiprecision::cpp_int num(std::string(tok_.substr(start, pos_ - start)));
    boost::multiprecision::cpp_int den(1);
    if (pos_ < tok_.size() && tok_[pos_] == '/') {
      ++pos_;
      const std::size_t dstart = pos_;
      while (pos_ < tok_.size() && is_digit(tok_[pos_])) ++pos_;
      if (pos_ == dstart) return fail(err, "expected a denominator");
      den = boost::multiprecision::cpp_int(std::string(tok_.substr(dstart, pos_ - dstart)));
      if (den == 0) {
        pos_ = dstart;
        return fail(err, "zero denominator");
      }
    }
    coefficient = Rational(num, den);
    if (negative) coefficient = -coefficient;
    if (at_r2()) {
      pos_ += 2;
      return Quad(Rational(0), coefficient);
    }
    return Quad(coefficient);
  }

  std::string_view tok_;
  std::size_t pos_ = 0;
};

std::optional<Quad> read_component(std::string_view tok, ComponentError& err) {
  if (looks_irrational(tok)) {
    err = {0, "irrational token '" + std::string(tok) + "' lies outside Q(sqrt 2)"};
    return std::nullopt;
  }
  ComponentReader reader(tok);
  auto q = reader.read(err);
  if (!q) err.message = "malformed component '" + std::string(tok) + "': " + err.message;
  return q;
}

std::vector<Token> split_line(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

struct PendingAtom {
  Atom atom;
  std::size_t line;
  std::size_t column;
};

class DocumentParser {
 public:
  Logic parse(std::string_view text) {
    if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no;
      last_line_ = line_no;
      parse_line(line_no, split_line(line));
      if (end == text.size()) break;
      start = end + 1;
      if (start == text.size()) break;
    }
    if (!dimension_) throw ParseError(last_line_, 1, "missing 'dim' declaration");
    for (const auto& p : atoms_) {
      if (!used_.count(p.atom.label)) {
        throw ParseError(p.line, p.column, "atom '" + p.atom.label + "' appears in no context");
      }
    }
    std::vector<Atom> atoms;
    atoms.reserve(atoms_.size());
    for (auto& p : atoms_) atoms.push_back(std::move(p.atom));
    try {
      return Logic(*dimension_, std::move(atoms), std::move(contexts_));
    } catch (const LogicError& e) {
      throw ParseError(last_line_, 1, e.what());
    }
  }

 private:
  void parse_line(std::size_t line, const std::vector<Token>& toks) {
    if (toks.empty()) return;
    const auto& kw = toks.front();
    if (kw.text == "dim") {
      parse_dim(line, toks);
    } else if (kw.text == "atom") {
      parse_atom(line, toks);
    } else if (kw.text == "context") {
      parse_context(line, toks);
    } else {
      throw ParseError(line, kw.column, "unknown token '" + std::string(kw.text) + "'");
    }
  }

  void parse_dim(std::size_t line, const std::vector<Token>& toks) {
    if (dimension_) throw ParseError(line, toks[0].column, "duplicate 'dim' declaration");
    if (!atoms_.empty() || !contexts_.empty()) {
      throw ParseError(line, toks[0].column, "'dim' must precede all declarations");
    }
    if (toks.size() != 2) throw ParseError(line, toks[0].column, "'dim' takes exactly one integer");
    const auto& t = toks[1];
    if (t.text.empty() || t.text.size() > 6 ||
        !std::all_of(t.text.begin(), t.text.end(), is_digit)) {
      throw ParseError(line, t.column, "invalid dimension '" + std::string(t.text) + "'");
    }
    const int d = std::stoi(std::string(t.text));
    if (d < 3) throw ParseError(line, t.column, "dimension must be at least 3");
    dimension_ = d;
  }

  void require_dim(std::size_t line, const Token& kw) const {
    if (!dimension_) {
      throw ParseError(line, kw.column, "'" + std::string(kw.text) + "' before 'dim' declaration");
    }
  }

  void parse_atom(std::size_t line, const std::vector<Token>& toks) {
    require_dim(line, toks[0]);
    if (toks.size() < 2) throw ParseError(line, toks[0].column, "'atom' requires a label");
    const auto& label_tok = toks[1];
    const std::string label(label_tok.text);
    if (labels_.count(label)) {
      throw ParseError(line, label_tok.column, "duplicate atom label '" + label + "'");
    }
    Atom atom{label, std::nullopt};
    const std::size_t ncomp = toks.size() - 2;
    if (ncomp != 0) {
      std::vector<Quad> comps;
      for (std::size_t i = 2; i < toks.size(); ++i) {
        ComponentError err;
        auto q = read_component(toks[i].text, err);
        if (!q) throw ParseError(line, toks[i].column + err.offset, err.message);
        comps.push_back(std::move(*q));
      }
      if (ncomp != static_cast<std::size_t>(*dimension_)) {
        throw ParseError(line, label_tok.column,
                         "atom '" + label + "' has " + std::to_string(ncomp) +
                             " components, expected " + std::to_string(*dimension_));
      }
      if (std::all_of(comps.begin(), comps.end(), [](const Quad& q) { return q.is_zero(); })) {
        throw ParseError(line, label_tok.column, "atom '" + label + "' has the zero vector");
      }
      Ray ray(std::move(comps));
      for (const auto& p : atoms_) {
        if (p.atom.ray && rays_collinear(*p.atom.ray, ray)) {
          throw ParseError(line, label_tok.column,
                           "duplicate ray: atom '" + label + "' is collinear with atom '" +
                               p.atom.label + "'");
        }
      }
      atom.ray = std::move(ray);
    }
    labels_.insert(label);
    atoms_.push_back({std::move(atom), line, label_tok.column});
  }

  void parse_context(std::size_t line, const std::vector<Token>& toks) {
    require_dim(line, toks[0]);
    if (toks.size() < 2) throw ParseError(line, toks[0].column, "'context' requires a label");
    const auto& label_tok = toks[1];
    const std::string label(label_tok.text);
    if (!context_labels_.insert(label).second) {
      throw ParseError(line, label_tok.column, "duplicate context label '" + label + "'");
    }
    Context ctx{label, {}};
    std::set<std::string> seen;
    for (std::size_t i = 2; i < toks.size(); ++i) {
      const std::string member(toks[i].text);
      if (!labels_.count(member)) {
        throw ParseError(line, toks[i].column,
                         "context '" + label + "' member '" + member + "' is undeclared");
      }
      if (!seen.insert(member).second) {
        throw ParseError(line, toks[i].column,
                         "context '" + label + "' lists '" + member + "' twice");
      }
      ctx.members.push_back(member);
    }
    if (ctx.members.size() < 2) {
      throw ParseError(line, label_tok.column, "context '" + label + "' needs at least 2 members");
    }
    if (ctx.members.size() > static_cast<std::size_t>(*dimension_)) {
      throw ParseError(line, toks[2 + *dimension_].column,
                       "context '" + label + "' is larger than dimension " +
                           std::to_string(*dimension_));
    }
    auto [it, inserted] = member_sets_.emplace(seen, label);
    if (!inserted) {
      throw ParseError(line, label_tok.column,
                       "duplicate context member set: '" + label + "' repeats '" + it->second +
                           "'");
    }
    for (const auto& m : ctx.members) used_.insert(m);
    contexts_.push_back(std::move(ctx));
  }

  std::optional<int> dimension_;
  std::vector<PendingAtom> atoms_;
  std::vector<Context> contexts_;
  std::set<std::string> labels_;
  std::set<std::string> context_labels_;
  std::set<std::string> used_;
  std::map<std::set<std::string>, std::string> member_sets_;
  std::size_t last_line_ = 1;
};

}  // namespace

Logic parse_logic(std::string_view text) { return DocumentParser{}.parse(text); }

Logic load_logic(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_logic(buf.str());
}

std::string serialize_logic(const Logic& logic) {
  std::string out = "dim " + std::to_string(logic.dimension()) + "\n";
  for (const auto& a : logic.atoms()) {
    out += "atom " + a.label;
    if (a.ray) {
      for (const auto& c : a.ray->components()) out += " " + c.to_token();
    }
    out += "\n";
  }
  for (const auto& c : logic.contexts()) {
    out += "context " + c.label;
    for (const auto& m : c.members) out += " " + m;
    out += "\n";
  }
  return out;
}

Quad parse_component(std::string_view token) {
  ComponentError err;
  auto q = read_component(token, err);
  if (!q) throw ParseError(1, 1 + err.offset, err.message);
  return *q;
}

}  // namespace greechie
