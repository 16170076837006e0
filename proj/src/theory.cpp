#include "normargue/theory.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "normargue/hohfeld.hpp"

namespace normargue {

const char* to_string(PremiseStrength s) {
  return s == PremiseStrength::Axiom ? "axiom" : "prem";
}

const char* to_string(RuleKind k) { return k == RuleKind::Strict ? "strict" : "defeasible"; }

const char* to_string(Ordering ordering) {
  switch (ordering) {
    case Ordering::Universal: return "universal";
    case Ordering::RuleBased: return "rule_based";
    case Ordering::PremiseBased: return "premise_based";
  }
  return "?";
}

std::optional<Ordering> ordering_from_string(std::string_view name) {
  for (auto o : {Ordering::Universal, Ordering::RuleBased, Ordering::PremiseBased}) {
    if (name == to_string(o)) return o;
  }
  return std::nullopt;
}

const Premise* Theory::find_premise(std::string_view id) const {
  auto it = std::find_if(premises.begin(), premises.end(), [&](const Premise& p) { return p.id == id; });
  return it == premises.end() ? nullptr : &*it;
}

const Rule* Theory::find_rule(std::string_view id) const {
  auto it = std::find_if(rules.begin(), rules.end(), [&](const Rule& r) { return r.id == id; });
  return it == rules.end() ? nullptr : &*it;
}

std::size_t Theory::generated_rule_count() const {
  return static_cast<std::size_t>(
      std::count_if(rules.begin(), rules.end(), [](const Rule& r) { return !r.scheme.empty(); }));
}

bool contrary(const Formula& f, const Formula& g, const Theory& t) {
  return contrary(f, g, t.contraries);
}

namespace {

// ── line scanning ───────────────────────────────────────────────────────────

struct Line {
  std::string_view text;  // comment stripped, right-trimmed
  std::size_t number;
  std::size_t indent;  // column offset of text within the raw line
};

std::string_view trim_left(std::string_view s, std::size_t* dropped = nullptr) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (dropped) *dropped += i;
  return s.substr(i);
}

std::string_view trim_right(std::string_view s) {
  std::size_t n = s.size();
  while (n > 0 && std::isspace(static_cast<unsigned char>(s[n - 1]))) --n;
  return s.substr(0, n);
}

std::string_view trim(std::string_view s) { return trim_right(trim_left(s)); }

std::string_view strip_comment(std::string_view s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '#' && (i == 0 || std::isspace(static_cast<unsigned char>(s[i - 1])))) {
      return s.substr(0, i);
    }
  }
  return s;
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty() || number == 1) {
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::size_t indent = 0;
    auto body = trim_right(trim_left(strip_comment(raw), &indent));
    if (!body.empty()) lines.push_back({body, number, indent});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
    ++number;
  }
  return lines;
}

// ── loader ──────────────────────────────────────────────────────────────────

class Loader {
 public:
  explicit Loader(const LoadOptions& options) : options_(options) {}

  Theory run(std::string_view text) {
    for (const auto& line : split_lines(text)) handle(line);
    if (options_.weak_mode) theory_.weak_mode = *options_.weak_mode;
    if (options_.max_depth) {
      if (*options_.max_depth < 1) {
        throw Error(ErrorKind::Syntax, "max_depth must be a positive integer");
      }
      theory_.max_depth = *options_.max_depth;
    }
    finish();
    return std::move(theory_);
  }

 private:
  [[noreturn]] void syntax(const Line& line, std::size_t column, const std::string& msg) const {
    SourceLocation where{line.number, line.indent + column + 1};
    throw Error(ErrorKind::Syntax, location(where) + msg, where);
  }

  static std::string location(const SourceLocation& where) {
    return "line " + std::to_string(where.line) + ":" + std::to_string(where.column) + ": ";
  }

  SourceLocation at(const Line& line, std::size_t column) const {
    return {line.number, line.indent + column + 1};
  }

  // `column` is the position of `text` within `line.text`.
  Formula formula(const Line& line, std::string_view text, std::size_t column) const {
    std::size_t lead = 0;
    auto body = trim_left(text, &lead);
    try {
      return parse_raw(trim_right(body));
    } catch (const SyntaxError& e) {
      SourceLocation where = at(line, column + lead + e.offset());
      throw Error(e.kind(), location(where) + e.what(), where);
    }
  }

  static bool is_word(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#';
    });
  }

  void handle(const Line& line) {
    std::string_view t = line.text;
    auto keyword_end = t.find_first_of(" \t:");
    std::string_view keyword = t.substr(0, keyword_end);
    if (keyword == "AGENTS") return agents(line);
    if (keyword == "PREMISE") return premise(line);
    if (keyword == "RULE") return rule(line);
    if (keyword == "CONTRARY") return contrary_decl(line);
    if (keyword == "SCHEME") return scheme(line);
    if (keyword == "POSITION") return position(line);
    if (keyword == "OPTION") return option(line);
    syntax(line, 0, "unknown declaration '" + std::string(keyword) + "'");
  }

  // Returns the text after the first ':' and its column; header receives the
  // words between the keyword and the colon.
  std::pair<std::string_view, std::size_t> split_header(const Line& line,
                                                        std::vector<std::string_view>& header) const {
    auto colon = line.text.find(':');
    if (colon == std::string_view::npos) syntax(line, line.text.size(), "expected ':'");
    std::string_view head = line.text.substr(0, colon);
    std::size_t pos = 0;
    while (pos < head.size()) {
      while (pos < head.size() && std::isspace(static_cast<unsigned char>(head[pos]))) ++pos;
      std::size_t start = pos;
      while (pos < head.size() && !std::isspace(static_cast<unsigned char>(head[pos]))) ++pos;
      if (pos > start) header.push_back(head.substr(start, pos - start));
    }
    return {line.text.substr(colon + 1), colon + 1};
  }

  void agents(const Line& line) {
    std::vector<std::string_view> header;
    auto [rest, column] = split_header(line, header);
    if (header.size() != 1) syntax(line, 0, "expected 'AGENTS: a, b, ...'");
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      auto comma = rest.find(',', pos);
      std::string_view item = rest.substr(pos, comma == std::string_view::npos ? rest.npos : comma - pos);
      std::size_t lead = 0;
      auto name = trim_right(trim_left(item, &lead));
      if (!name.empty()) {
        if (!std::regex_match(std::string(name), std::regex("[A-Za-z_][A-Za-z0-9_]*"))) {
          syntax(line, column + pos + lead, "invalid agent name '" + std::string(name) + "'");
        }
        if (std::find(theory_.agents.begin(), theory_.agents.end(), name) != theory_.agents.end()) {
          SourceLocation where = at(line, column + pos + lead);
          throw Error(ErrorKind::DuplicateId,
                      location(where) + "agent '" + std::string(name) + "' declared twice", where);
        }
        theory_.agents.emplace_back(name);
      } else if (comma != std::string_view::npos || pos > 0) {
        syntax(line, column + pos, "empty agent name");
      }
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }

  void premise(const Line& line) {
    std::vector<std::string_view> header;
    auto [rest, column] = split_header(line, header);
    if (header.size() != 3 || !is_word(header[2])) {
      syntax(line, 0, "expected 'PREMISE axiom|prem <id>: <formula>'");
    }
    PremiseStrength strength;
    if (header[1] == "axiom") {
      strength = PremiseStrength::Axiom;
    } else if (header[1] == "prem") {
      strength = PremiseStrength::Ordinary;
    } else {
      syntax(line, static_cast<std::size_t>(header[1].data() - line.text.data()),
             "premise strength must be 'axiom' or 'prem'");
    }
    add_premise({std::string(header[2]), formula(line, rest, column), strength, at(line, 0)});
  }

  void rule(const Line& line) {
    std::vector<std::string_view> header;
    auto [rest, column] = split_header(line, header);
    if (header.size() != 3 || !is_word(header[2])) {
      syntax(line, 0, "expected 'RULE strict|defeasible <id>: ...'");
    }
    RuleKind kind;
    std::string_view sep;
    std::string_view other;
    if (header[1] == "strict") {
      kind = RuleKind::Strict;
      sep = "|-";
      other = "|~";
    } else if (header[1] == "defeasible") {
      kind = RuleKind::Defeasible;
      sep = "|~";
      other = "|-";
    } else {
      syntax(line, static_cast<std::size_t>(header[1].data() - line.text.data()),
             "rule kind must be 'strict' or 'defeasible'");
    }
    auto arrow = rest.find(sep);
    if (arrow == std::string_view::npos) {
      auto wrong = rest.find(other);
      if (wrong != std::string_view::npos) {
        syntax(line, column + wrong,
               std::string(header[1]) + " rule uses '" + std::string(sep) + "', not '" +
                   std::string(other) + "'");
      }
      syntax(line, line.text.size(), "expected '" + std::string(sep) + "'");
    }
    std::vector<Formula> antecedents;
    std::string_view lhs = rest.substr(0, arrow);
    std::size_t pos = 0;
    while (true) {
      auto semi = lhs.find(';', pos);
      std::string_view item = lhs.substr(pos, semi == std::string_view::npos ? lhs.npos : semi - pos);
      if (trim(item).empty()) syntax(line, column + pos, "empty antecedent");
      antecedents.push_back(formula(line, item, column + pos));
      if (semi == std::string_view::npos) break;
      pos = semi + 1;
    }
    std::string_view rhs = rest.substr(arrow + 2);
    if (trim(rhs).empty()) syntax(line, column + arrow + 2, "empty consequent");
    add_rule(Rule{std::string(header[2]), std::move(antecedents),
                  formula(line, rhs, column + arrow + 2), kind, at(line, 0), {}});
  }

  void contrary_decl(const Line& line) {
    std::vector<std::string_view> header;
    auto [rest, column] = split_header(line, header);
    if (header.size() != 1) syntax(line, 0, "expected 'CONTRARY: <formula> ~ <formula>'");
    // First top-level '~' whose two sides both parse.
    int depth = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      char c = rest[i];
      if (c == '(' || c == '{' || c == '[') ++depth;
      if (c == ')' || c == '}' || c == ']') --depth;
      if (c != '~' || depth != 0) continue;
      auto left = trim(rest.substr(0, i));
      auto right = trim(rest.substr(i + 1));
      if (left.empty() || right.empty()) continue;
      try {
        Formula a = parse_raw(left);
        Formula b = parse_raw(right);
        contraries_.push_back({a, b, at(line, column)});
        return;
      } catch (const SyntaxError&) {
      }
    }
    syntax(line, column, "expected two formulas separated by '~'");
  }

  void scheme(const Line& line) {
    std::istringstream in{std::string(line.text)};
    std::string keyword, name, state, extra;
    in >> keyword >> name >> state;
    if (state != "on" && state != "off") syntax(line, 0, "expected 'SCHEME <name> on|off'");
    if (in >> extra) syntax(line, 0, "trailing input after SCHEME");
    bool on = state == "on";
    if (name == "fcp") {
      theory_.schemes.fcp = on;
    } else if (name == "owp") {
      theory_.schemes.owp = on;
    } else if (name == "weak_closure") {
      theory_.schemes.weak_closure = on;
    } else if (name == "k_truth") {
      theory_.schemes.k_truth = on;
    } else {
      syntax(line, 7, "unknown scheme '" + name + "'");
    }
  }

  void option(const Line& line) {
    std::istringstream in{std::string(line.text)};
    std::string keyword, name, value, extra;
    in >> keyword >> name >> value;
    if (value.empty()) syntax(line, 0, "expected 'OPTION <name> <value>'");
    if (in >> extra) syntax(line, 0, "trailing input after OPTION");
    if (name == "weak_mode") {
      if (value != "on" && value != "off") syntax(line, 0, "weak_mode takes on|off");
      theory_.weak_mode = value == "on";
    } else if (name == "max_depth") {
      int depth = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), depth);
      if (ec != std::errc() || ptr != value.data() + value.size() || depth < 1) {
        syntax(line, 0, "max_depth must be a positive integer");
      }
      theory_.max_depth = depth;
    } else if (name == "rebut" || name == "undermine" || name == "undercut") {
      if (name == "undercut" && value == "none") {
        theory_.defeat.undercut.reset();
        return;
      }
      auto ordering = ordering_from_string(value);
      if (!ordering) syntax(line, 0, "unknown ordering '" + value + "'");
      if (name == "rebut") theory_.defeat.rebut = *ordering;
      if (name == "undermine") theory_.defeat.undermine = *ordering;
      if (name == "undercut") theory_.defeat.undercut = *ordering;
    } else {
      syntax(line, 0, "unknown option '" + name + "'");
    }
  }

  void position(const Line& line) {
    static const std::regex head_re(
        R"(POSITION\s+([a-z_]+)\s*\(\s*([A-Za-z_][A-Za-z0-9_]*)\s*,\s*([A-Za-z_][A-Za-z0-9_]*)\s*\)\s*([A-Za-z0-9_#]*)\s*)");
    auto colon = line.text.find(':');
    if (colon == std::string_view::npos) syntax(line, line.text.size(), "expected ':'");
    std::string head(line.text.substr(0, colon));
    std::smatch m;
    if (!std::regex_match(head, m, head_re)) {
      syntax(line, 0, "expected 'POSITION <kind>(<holder>,<counterparty>) [<id>]: <formula>'");
    }
    auto kind = hohfeld::kind_from_string(m[1].str());
    if (!kind) syntax(line, 9, "unknown position kind '" + m[1].str() + "'");

    std::string_view body = line.text.substr(colon + 1);
    PremiseStrength strength = PremiseStrength::Axiom;
    auto trimmed = trim_right(body);
    auto last_space = trimmed.find_last_of(" \t");
    if (last_space != std::string_view::npos) {
      auto word = trimmed.substr(last_space + 1);
      if (word == "axiom" || word == "prem") {
        strength = word == "axiom" ? PremiseStrength::Axiom : PremiseStrength::Ordinary;
        body = trimmed.substr(0, last_space);
      }
    }
    std::string id = m[4].str();
    if (id.empty()) id = "position#" + std::to_string(++position_count_);

    hohfeld::NormativePosition pos{*kind, m[2].str(), m[3].str(), formula(line, body, colon + 1)};
    for (const auto& w : hohfeld::validate(pos)) {
      theory_.warnings.push_back(location(at(line, 0)) + w);
    }
    check_agent(pos.holder, at(line, 0));
    check_agent(pos.counterparty, at(line, 0));
    add_premise({id, hohfeld::to_formula(pos), strength, at(line, 0)});
  }

  void add_premise(Premise p) {
    claim_id(p.id, p.where);
    theory_.premises.push_back(std::move(p));
  }

  void add_rule(Rule r) {
    claim_id(r.id, r.where);
    theory_.rules.push_back(std::move(r));
  }

  void claim_id(const std::string& id, const SourceLocation& where) {
    if (!ids_.insert(id).second) {
      throw Error(ErrorKind::DuplicateId, location(where) + "duplicate id '" + id + "'", where);
    }
  }

  void check_agent(const AgentId& agent, const SourceLocation& where) const {
    if (std::find(theory_.agents.begin(), theory_.agents.end(), agent) == theory_.agents.end()) {
      throw Error(ErrorKind::UnknownAgent, location(where) + "undeclared agent '" + agent + "'", where);
    }
  }

  void check_formula(const Formula& f, const SourceLocation& where) const {
    for (const auto& agent : agents_of(f)) check_agent(agent, where);
    for (const auto& name : rule_atoms_of(f)) {
      if (is_scheme_rule_name(name)) continue;
      const Rule* r = theory_.find_rule(name);
      if (!r || r->kind != RuleKind::Defeasible) {
        throw Error(ErrorKind::DanglingRuleAtom,
                    location(where) + "@" + name + " does not name a defeasible rule", where);
      }
    }
  }

  static bool is_scheme_rule_name(const std::string& name) {
    static const std::regex re("(fcp|owp|weak_closure|k_truth)#[0-9]+");
    return std::regex_match(name, re);
  }

  void finish() {
    const bool weak = theory_.weak_mode;
    for (auto& p : theory_.premises) {
      check_formula(p.formula, p.where);
      p.formula = normalize(p.formula, weak);
    }
    for (auto& r : theory_.rules) {
      for (auto& a : r.antecedents) {
        check_formula(a, r.where);
        a = normalize(a, weak);
      }
      check_formula(r.consequent, r.where);
      r.consequent = normalize(r.consequent, weak);
    }
    for (const auto& c : contraries_) {
      check_formula(c.lhs, c.where);
      check_formula(c.rhs, c.where);
      theory_.contraries.add(normalize(c.lhs, weak), normalize(c.rhs, weak));
    }
  }

  struct RawContrary {
    Formula lhs;
    Formula rhs;
    SourceLocation where;
  };

  LoadOptions options_;
  Theory theory_;
  std::set<std::string> ids_;
  std::vector<RawContrary> contraries_;
  std::size_t position_count_ = 0;
};

}  // namespace

Theory load_theory(std::string_view text, const LoadOptions& options) {
  return Loader(options).run(text);
}

Theory load_theory_file(const std::filesystem::path& path, const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_theory(buf.str(), options);
}

void check_rule_atoms(const Theory& t) {
  auto check = [&](const Formula& f, const SourceLocation& where) {
    for (const auto& name : rule_atoms_of(f)) {
      const Rule* r = t.find_rule(name);
      if (!r || r->kind != RuleKind::Defeasible) {
        throw Error(ErrorKind::DanglingRuleAtom,
                    "line " + std::to_string(where.line) + ": @" + name +
                        " does not name a defeasible rule",
                    where);
      }
    }
  };
  for (const auto& p : t.premises) check(p.formula, p.where);
  for (const auto& r : t.rules) {
    for (const auto& a : r.antecedents) check(a, r.where);
    check(r.consequent, r.where);
  }
  for (const auto& [a, b] : t.contraries.pairs()) {
    check(a, {});
    check(b, {});
  }
}

}  // namespace normargue
