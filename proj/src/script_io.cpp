#include "mcg/rewrite.hpp"

#include <charconv>
#include <sstream>

namespace mcg {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

std::size_t to_size(int line, std::string_view s, const char* what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ScriptParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

Word to_word(int line, std::string_view s) {
  try {
    return parse_word(trim(s));
  } catch (const std::exception& e) {
    throw ScriptParseError(line, e.what());
  }
}

Constraint parse_constraint(int line, std::string_view s) {
  Constraint c;
  if (s.empty() || (s[0] != 'g' && s[0] != 'n' && s[0] != 'N'))
    throw ScriptParseError(line, "constraint must start with g, n or N: '" + std::string(s) + "'");
  c.var = s[0];
  std::size_t k = 1;
  while (k < s.size() && std::string_view("<>=!").find(s[k]) != std::string_view::npos) ++k;
  c.op = std::string(s.substr(1, k - 1));
  if (c.op != ">=" && c.op != "<=" && c.op != "==" && c.op != "!=" && c.op != ">" && c.op != "<")
    throw ScriptParseError(line, "bad comparison in '" + std::string(s) + "'");
  auto rest = s.substr(k);
  auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), c.value);
  if (ec != std::errc() || p != rest.data() + rest.size())
    throw ScriptParseError(line, "bad bound in '" + std::string(s) + "'");
  return c;
}

Step parse_step(int line, std::string_view text) {
  Step s;
  s.line = line;
  if (auto arrow = text.find("=>"); arrow != std::string_view::npos) {
    s.expected = to_word(line, text.substr(arrow + 2));
    text = trim(text.substr(0, arrow));
  }
  std::string_view repl;
  bool has_repl = false;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    repl = text.substr(colon + 1);
    has_repl = true;
    text = trim(text.substr(0, colon));
  }
  const auto t = split_ws(text);
  const std::string_view op = t.at(0);
  auto need = [&](bool ok, const char* msg) {
    if (!ok) throw ScriptParseError(line, msg);
  };
  need(!has_repl || op == "apply", "':' is only valid in a relator apply step");
  if (op == "cancel") {
    need(t.size() == 2, "usage: cancel POS");
    s.kind = Step::Kind::FreeCancel;
    s.pos = to_size(line, t[1], "position");
  } else if (op == "insert") {
    need(t.size() == 3, "usage: insert POS LETTER");
    s.kind = Step::Kind::FreeInsert;
    s.pos = to_size(line, t[1], "position");
    const Word w = to_word(line, t[2]);
    need(w.size() == 1, "insert takes a single letter");
    s.letter = w[0];
  } else if (op == "apply") {
    need(t.size() >= 3, "usage: apply NAME POS fwd|bwd, apply NAME POS rel LEN : WORD, or apply NAME * => WORD");
    s.kind = Step::Kind::Apply;
    s.name = std::string(t[1]);
    if (t[2] == "*") {
      need(t.size() == 3 && s.expected.has_value(), "search apply needs '=> WORD'");
      s.search = true;
    } else {
      s.pos = to_size(line, t[2], "position");
      need(t.size() >= 4, "missing direction");
      if (t[3] == "fwd" && t.size() == 4) s.dir = Step::Direction::Forward;
      else if (t[3] == "bwd" && t.size() == 4) s.dir = Step::Direction::Backward;
      else if (t[3] == "rel" && t.size() == 5 && has_repl) {
        s.dir = Step::Direction::Relator;
        s.length = to_size(line, t[4], "length");
        s.replacement = to_word(line, repl);
      } else {
        throw ScriptParseError(line, "direction must be fwd, bwd or 'rel LEN : WORD'");
      }
    }
  } else if (op == "braid") {
    need(t.size() <= 2, "usage: braid [BUDGET] => WORD");
    need(s.expected.has_value(), "braid needs '=> WORD'");
    s.kind = Step::Kind::AutoBraid;
    if (t.size() == 2) s.budget = to_size(line, t[1], "budget");
    need(s.budget > 0, "braid budget must be positive");
  } else if (op == "free") {
    need(t.size() == 1 && s.expected.has_value(), "usage: free => WORD");
    s.kind = Step::Kind::FreeEqual;
  } else {
    throw ScriptParseError(line, "unknown step '" + std::string(op) + "'");
  }
  return s;
}

}  // namespace

std::vector<DerivationScript> parse_scripts(std::string_view text) {
  std::vector<DerivationScript> out;
  std::optional<DerivationScript> cur;
  bool header = false, has_claim = false;
  int line_no = 0;
  std::size_t at = 0;
  while (at <= text.size()) {
    std::size_t nl = text.find('\n', at);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(at, nl - at);
    at = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto t = split_ws(line);
    if (!header) {
      if (t.size() != 2 || t[0] != "mcg-script") throw ScriptParseError(line_no, "expected 'mcg-script 1' header");
      if (t[1] != "1") throw ScriptParseError(line_no, "unsupported script version " + std::string(t[1]));
      header = true;
      continue;
    }
    if (!cur) {
      if (t[0] != "script" || t.size() != 2) throw ScriptParseError(line_no, "expected 'script NAME'");
      cur.emplace();
      cur->name = std::string(t[1]);
      has_claim = false;
      continue;
    }
    if (t[0] == "require") {
      for (std::size_t k = 1; k < t.size(); ++k) cur->require.push_back(parse_constraint(line_no, t[k]));
    } else if (t[0] == "uses") {
      for (std::size_t k = 1; k < t.size(); ++k) cur->uses.emplace_back(t[k]);
    } else if (t[0] == "claim") {
      const auto body = trim(line.substr(5));
      const auto eq = body.find('=');
      if (eq == std::string_view::npos || body.find('=', eq + 1) != std::string_view::npos)
        throw ScriptParseError(line_no, "claim must read 'LHS = RHS'");
      cur->claim.name = cur->name;
      cur->claim.kind = RelationKind::Derived;
      cur->claim.lhs = to_word(line_no, body.substr(0, eq));
      cur->claim.rhs = to_word(line_no, body.substr(eq + 1));
      has_claim = true;
    } else if (t[0] == "end") {
      if (!has_claim) throw ScriptParseError(line_no, "script '" + cur->name + "' has no claim");
      out.push_back(std::move(*cur));
      cur.reset();
    } else {
      if (!has_claim) throw ScriptParseError(line_no, "steps must follow the claim");
      cur->steps.push_back(parse_step(line_no, line));
    }
  }
  if (!header) throw ScriptParseError(line_no, "empty script file");
  if (cur) throw ScriptParseError(line_no, "script '" + cur->name + "' is missing 'end'");
  return out;
}

std::string format_step(const Step& s) {
  std::ostringstream os;
  switch (s.kind) {
    case Step::Kind::FreeCancel: os << "cancel " << s.pos; break;
    case Step::Kind::FreeInsert: os << "insert " << s.pos << ' ' << format_word({s.letter}); break;
    case Step::Kind::Apply:
      os << "apply " << s.name << ' ';
      if (s.search) {
        os << '*';
      } else {
        os << s.pos << ' ';
        switch (s.dir) {
          case Step::Direction::Forward: os << "fwd"; break;
          case Step::Direction::Backward: os << "bwd"; break;
          case Step::Direction::Relator: os << "rel " << s.length << " : " << format_word(s.replacement); break;
        }
      }
      break;
    case Step::Kind::AutoBraid:
      os << "braid";
      if (s.budget != kDefaultBraidBudget) os << ' ' << s.budget;
      break;
    case Step::Kind::FreeEqual: os << "free"; break;
  }
  if (s.expected) os << " => " << format_word(*s.expected);
  return os.str();
}

std::string format_script(const DerivationScript& s) {
  std::ostringstream os;
  os << "script " << s.name << '\n';
  if (!s.require.empty()) {
    os << "require";
    for (const auto& c : s.require) os << ' ' << c.var << c.op << c.value;
    os << '\n';
  }
  if (!s.uses.empty()) {
    os << "uses";
    for (const auto& u : s.uses) os << ' ' << u;
    os << '\n';
  }
  os << "claim " << format_word(s.claim.lhs) << " = " << format_word(s.claim.rhs) << '\n';
  for (const auto& st : s.steps) os << "  " << format_step(st) << '\n';
  os << "end\n";
  return os.str();
}

std::string format_scripts(const std::vector<DerivationScript>& v) {
  std::string out = "mcg-script 1\n";
  for (const auto& s : v) out += '\n' + format_script(s);
  return out;
}

}  // namespace mcg
