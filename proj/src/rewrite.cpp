#include "mcg/rewrite.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <deque>
#include <memory>
#include <set>
#include <unordered_map>

namespace mcg {

bool constraints_hold(const std::vector<Constraint>& cs, const Signature& sig) {
  for (const auto& c : cs) {
    const int v = c.var == 'g' ? sig.g : c.var == 'n' ? sig.n : sig.N;
    bool ok = false;
    if (c.op == ">=") ok = v >= c.value;
    else if (c.op == "<=") ok = v <= c.value;
    else if (c.op == "==") ok = v == c.value;
    else if (c.op == "!=") ok = v != c.value;
    else if (c.op == ">") ok = v > c.value;
    else if (c.op == "<") ok = v < c.value;
    if (!ok) return false;
  }
  return true;
}

Library::Insert Library::insert(const Equation& e) {
  if (auto it = index_.find(e.name); it != index_.end()) {
    const Equation& old = eqs_[it->second];
    return old.lhs == e.lhs && old.rhs == e.rhs ? Insert::Unchanged : Insert::Conflict;
  }
  index_.emplace(e.name, eqs_.size());
  eqs_.push_back(e);
  return Insert::Added;
}

const Equation* Library::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &eqs_[it->second];
}

std::string_view to_string(CheckError e) {
  switch (e) {
    case CheckError::None: return "None";
    case CheckError::StepMismatch: return "StepMismatch";
    case CheckError::UnresolvedName: return "UnresolvedName";
    case CheckError::BudgetExceeded: return "BudgetExceeded";
    case CheckError::ConstraintUnsatisfied: return "ConstraintUnsatisfied";
    case CheckError::InvalidStep: return "InvalidStep";
    case CheckError::Conflict: return "Conflict";
  }
  return "?";
}

namespace {

Word relator_of(const Equation& e) { return cyclic_reduce(concat(e.lhs, inverse(e.rhs))); }

bool legal_substitution(const Equation& e, const Word& u, const Word& t) {
  const Word r = relator_of(e);
  const Word q = cyclic_reduce(concat(u, inverse(t)));
  return is_rotation(q, r) || is_rotation(q, inverse(r));
}

Word slice(const Word& w, std::size_t from, std::size_t len) {
  return Word(w.begin() + from, w.begin() + from + len);
}

Word splice(const Word& w, std::size_t pos, std::size_t len, const Word& t) {
  Word out(w.begin(), w.begin() + pos);
  out.insert(out.end(), t.begin(), t.end());
  out.insert(out.end(), w.begin() + pos + len, w.end());
  return out;
}

bool matches_at(const Word& w, std::size_t pos, const Word& u) {
  return pos + u.size() <= w.size() && std::equal(u.begin(), u.end(), w.begin() + pos);
}

// Cancels turning w into reduce(w), as (position, left letter) pairs in order.
std::vector<std::pair<std::size_t, Letter>> cancel_sequence(Word w) {
  std::vector<std::pair<std::size_t, Letter>> seq;
  std::size_t i = 0;
  while (i + 1 < w.size()) {
    if (w[i].gen == w[i + 1].gen && w[i].exp == -w[i + 1].exp) {
      seq.emplace_back(i, w[i]);
      w.erase(w.begin() + i, w.begin() + i + 2);
      if (i > 0) --i;
    } else {
      ++i;
    }
  }
  return seq;
}

// Primitive steps from `from` to `to`, two words with the same free reduction.
std::vector<Step> free_path(const Word& from, const Word& to) {
  std::vector<Step> out;
  for (auto [p, l] : cancel_sequence(from)) {
    Step s;
    s.kind = Step::Kind::FreeCancel;
    s.pos = p;
    out.push_back(s);
  }
  auto up = cancel_sequence(to);
  for (auto it = up.rbegin(); it != up.rend(); ++it) {
    Step s;
    s.kind = Step::Kind::FreeInsert;
    s.pos = it->first;
    s.letter = it->second;
    out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------------------
// Braid search.

using Code = char16_t;
using CWord = std::u16string;
constexpr std::size_t kMaxBraidWord = 255;
using Bits = std::bitset<kMaxBraidWord + 1>;

class BraidSystem {
public:
  explicit BraidSystem(const Presentation& pres) {
    for (std::size_t i = 0; i < pres.generators.size(); ++i) index_[pres.generators[i]] = int(i);
    G_ = int(pres.generators.size());
    dep_.assign(std::size_t(G_) * G_, 1);
    name_.assign(std::size_t(G_) * G_, std::string());
    for (const auto& e : pres.relations) {
      if (e.kind != RelationKind::Braid) continue;
      if (e.lhs.size() == 2 && e.rhs.size() == 2 && e.lhs[0] == e.rhs[1] && e.lhs[1] == e.rhs[0] &&
          e.lhs[0].exp == 1 && e.lhs[1].exp == 1) {
        const int x = gen_index(e.lhs[0].gen), y = gen_index(e.lhs[1].gen);
        if (x < 0 || y < 0 || x == y) continue;
        dep_[x * G_ + y] = dep_[y * G_ + x] = 0;
        name_[x * G_ + y] = name_[y * G_ + x] = e.name;
      } else if (e.lhs.size() == 3 && e.rhs.size() == 3) {
        const Letter X = e.lhs[0], Y = e.lhs[1];
        if (!(e.lhs[2] == X && e.rhs[0] == Y && e.rhs[1] == X && e.rhs[2] == Y && X.exp == 1 && Y.exp == 1)) continue;
        const int x = gen_index(X.gen), y = gen_index(Y.gen);
        if (x < 0 || y < 0 || x == y) continue;
        name_[x * G_ + y] = name_[y * G_ + x] = e.name;
        add_braid_rules(x, y, e.name);
      }
    }
    trie_.resize(1);
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      int node = 0;
      for (Code c : rules_[r].u) {
        auto it = trie_[node].next.find(c);
        if (it == trie_[node].next.end()) {
          trie_.push_back({});
          it = trie_[node].next.emplace(c, int(trie_.size() - 1)).first;
        }
        node = it->second;
      }
      trie_[node].rules.push_back(r);
    }
  }

  struct Rule {
    CWord u, t;
    std::string name;
  };

  int gen_index(const CurveId& c) const {
    auto it = index_.find(c);
    return it == index_.end() ? -1 : it->second;
  }
  bool encode(const Word& w, CWord& out) const {
    out.clear();
    for (const auto& l : w) {
      const int g = gen_index(l.gen);
      if (g < 0) return false;
      out.push_back(Code(2 * g + (l.exp < 0 ? 1 : 0)));
    }
    return true;
  }
  Word decode(const CWord& w, const Presentation& pres) const {
    Word out;
    for (Code c : w) out.push_back(letter(c, pres));
    return out;
  }
  static Letter letter(Code c, const Presentation& pres) { return {pres.generators[c / 2], c % 2 ? -1 : 1}; }
  static Code inv(Code c) { return Code(c ^ 1); }

  bool dep(Code a, Code b) const { return dep_[std::size_t(a / 2) * G_ + b / 2]; }
  const std::string& pair_name(Code a, Code b) const { return name_[std::size_t(a / 2) * G_ + b / 2]; }
  const std::vector<Rule>& rules() const { return rules_; }
  // Prefix tree over rule left sides.
  struct TrieNode {
    std::map<Code, int> next;
    std::vector<std::size_t> rules;
  };
  const std::vector<TrieNode>& trie() const { return trie_; }

  // Lexicographic normal form of the trace.
  CWord canonical(const CWord& w) const {
    const std::size_t n = w.size();
    std::array<std::uint8_t, kMaxBraidWord + 1> indeg{};
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint8_t* row = &dep_[std::size_t(w[j] / 2) * G_];
      int c = 0;
      for (std::size_t i = 0; i < j; ++i) c += row[w[i] / 2];
      indeg[j] = std::uint8_t(c);
    }
    std::array<bool, kMaxBraidWord + 1> done{};
    CWord out;
    out.resize(n);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t i = 0; i < n; ++i)
        if (!done[i] && indeg[i] == 0 && (best == n || w[i] < w[best])) best = i;
      done[best] = true;
      out[step] = w[best];
      const std::uint8_t* row = &dep_[std::size_t(w[best] / 2) * G_];
      for (std::size_t j = best + 1; j < n; ++j)
        if (row[w[j] / 2]) --indeg[j];
    }
    return out;
  }

private:
  void add_braid_rules(int x, int y, const std::string& name) {
    const Code X = Code(2 * x), Y = Code(2 * y);
    const CWord r{X, Y, X, inv(Y), inv(X), inv(Y)};
    CWord ri;
    for (auto it = r.rbegin(); it != r.rend(); ++it) ri.push_back(inv(*it));
    for (const CWord& base : {r, ri})
      for (std::size_t s = 0; s < base.size(); ++s) {
        const CWord rho = base.substr(s) + base.substr(0, s);
        for (std::size_t L = 3; L <= rho.size(); ++L) {
          CWord u = rho.substr(0, L), t;
          for (std::size_t k = rho.size(); k > L; --k) t.push_back(inv(rho[k - 1]));
          if (rule_keys_.insert(u + u'|' + t).second) rules_.push_back({u, t, name});
        }
      }
  }

  std::map<CurveId, int> index_;
  int G_ = 0;
  std::vector<std::uint8_t> dep_;
  std::vector<std::string> name_;
  std::vector<Rule> rules_;
  std::set<CWord> rule_keys_;
  std::vector<TrieNode> trie_;
};

// A move on a canonical word: the chain S (increasing positions) is replaced by t.
struct Move {
  int rule = -1;  // -1: free cancellation of S = {p, q}
  std::vector<std::uint8_t> S;
};

struct Layout {
  CWord before;  // D S R with S contiguous
  CWord after;   // D t R
  std::size_t at = 0;
};

class BraidSearch {
public:
  BraidSearch(const BraidSystem& sys, const Presentation& pres) : sys_(sys), pres_(pres) {}

  template <class F>
  void neighbors(const CWord& w, F&& emit) const {
    const std::size_t n = w.size();
    std::vector<Bits> succ(n), pred(n);
    for (std::size_t i = n; i-- > 0;)
      for (std::size_t j = i + 1; j < n; ++j)
        if (sys_.dep(w[i], w[j])) {
          succ[i].set(j);
          succ[i] |= succ[j];
        }
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (succ[i].test(j)) pred[j].set(i);

    auto convex = [&](std::size_t first, std::size_t last, const Bits& S) {
      return ((succ[first] & pred[last]) & ~S).none();
    };

    for (std::size_t p = 0; p < n; ++p) {
      // free cancellation
      for (std::size_t q = p + 1; q < n; ++q) {
        if (w[q] != BraidSystem::inv(w[p])) continue;
        Bits S;
        S.set(p);
        S.set(q);
        if (succ[p].test(q) && convex(p, q, S)) emit(Move{-1, {std::uint8_t(p), std::uint8_t(q)}}, S, pred, CWord());
      }
      const auto& root = sys_.trie()[0].next;
      if (auto it = root.find(w[p]); it != root.end()) {
        std::vector<std::uint8_t> chain{std::uint8_t(p)};
        Bits S;
        S.set(p);
        extend(w, it->second, chain, S, succ, pred, convex, emit);
      }
    }
  }

  CWord apply(const CWord& w, const Move& m, Layout* layout = nullptr) const {
    const std::size_t n = w.size();
    std::vector<Bits> pred(n);
    std::vector<Bits> succ(n);
    for (std::size_t i = n; i-- > 0;)
      for (std::size_t j = i + 1; j < n; ++j)
        if (sys_.dep(w[i], w[j])) {
          succ[i].set(j);
          succ[i] |= succ[j];
        }
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (succ[i].test(j)) pred[j].set(i);
    Bits S;
    for (auto s : m.S) S.set(s);
    const CWord t = m.rule < 0 ? CWord() : sys_.rules()[m.rule].t;
    return build(w, m, S, pred, t, layout);
  }

  CWord build(const CWord& w, const Move& m, const Bits& S, const std::vector<Bits>& pred, const CWord& t,
              Layout* layout) const {
    Bits D;
    for (auto s : m.S) D |= pred[s];
    D &= ~S;
    CWord d, rest, sw;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (D.test(i)) d.push_back(w[i]);
      else if (!S.test(i)) rest.push_back(w[i]);
    }
    for (auto s : m.S) sw.push_back(w[s]);
    if (layout) {
      layout->before = d + sw + rest;
      layout->after = d + t + rest;
      layout->at = d.size();
    }
    return sys_.canonical(d + t + rest);
  }

private:
  template <class Convex, class F>
  void extend(const CWord& w, int node, std::vector<std::uint8_t>& chain, Bits& S, const std::vector<Bits>& succ,
              const std::vector<Bits>& pred, Convex&& convex, F&& emit) const {
    const auto& nd = sys_.trie()[node];
    for (std::size_t r : nd.rules) emit(Move{int(r), chain}, S, pred, sys_.rules()[r].t);
    if (nd.next.empty()) return;
    const std::size_t last = chain.back();
    for (std::size_t q = last + 1; q < w.size(); ++q) {
      if (!succ[last].test(q)) continue;
      auto it = nd.next.find(w[q]);
      if (it == nd.next.end()) continue;
      S.set(q);
      if (convex(chain.front(), q, S)) {
        chain.push_back(std::uint8_t(q));
        extend(w, it->second, chain, S, succ, pred, convex, emit);
        chain.pop_back();
      }
      S.reset(q);
    }
  }

  const BraidSystem& sys_;
  const Presentation& pres_;
};

struct Node {
  CWord parent;
  Move move;
  bool root = false;
};

}  // namespace

namespace {

// Adjacent commutations turning a into b (trace-equivalent words).
std::vector<Step> permutation_steps(const BraidSystem& sys, const Presentation& pres, CWord a, const CWord& b) {
  std::vector<Step> out;
  for (std::size_t idx = 0; idx < b.size(); ++idx) {
    std::size_t j = idx;
    while (j < a.size() && a[j] != b[idx]) ++j;
    if (j == a.size()) throw std::logic_error("braid path reconstruction: words are not trace-equivalent");
    for (; j > idx; --j) {
      if (sys.dep(a[j - 1], a[j])) throw std::logic_error("braid path reconstruction: dependent swap");
      Step s;
      s.kind = Step::Kind::Apply;
      s.name = sys.pair_name(a[j - 1], a[j]);
      s.dir = Step::Direction::Relator;
      s.pos = j - 1;
      s.length = 2;
      s.replacement = {BraidSystem::letter(a[j], pres), BraidSystem::letter(a[j - 1], pres)};
      out.push_back(std::move(s));
      std::swap(a[j - 1], a[j]);
    }
  }
  return out;
}

void append(std::vector<Step>& out, std::vector<Step> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

// Steps realising one move forward (from `w` to its image) or backward (from the image to `w`).
std::vector<Step> move_steps(const BraidSystem& sys, const BraidSearch& search, const Presentation& pres,
                             const CWord& w, const Move& m, bool backward) {
  Layout lay;
  const CWord image = search.apply(w, m, &lay);
  std::vector<Step> out;
  const CWord u = lay.before.substr(lay.at, m.S.size());
  const CWord t = lay.after.substr(lay.at, lay.after.size() - lay.before.size() + m.S.size());
  Step sub;
  if (m.rule < 0) {
    if (backward) {
      sub.kind = Step::Kind::FreeInsert;
      sub.pos = lay.at;
      sub.letter = BraidSystem::letter(u[0], pres);
    } else {
      sub.kind = Step::Kind::FreeCancel;
      sub.pos = lay.at;
    }
  } else {
    sub.kind = Step::Kind::Apply;
    sub.name = sys.rules()[m.rule].name;
    sub.dir = Step::Direction::Relator;
    sub.pos = lay.at;
    sub.length = backward ? t.size() : u.size();
    sub.replacement = sys.decode(backward ? u : t, pres);
  }
  if (!backward) {
    append(out, permutation_steps(sys, pres, w, lay.before));
    out.push_back(sub);
    append(out, permutation_steps(sys, pres, lay.after, image));
  } else {
    append(out, permutation_steps(sys, pres, image, lay.after));
    out.push_back(sub);
    append(out, permutation_steps(sys, pres, lay.before, w));
  }
  return out;
}

}  // namespace

BridgeResult auto_braid_bridge(const Presentation& pres, const Word& from, const Word& to, std::size_t budget) {
  BridgeResult res;
  // rule construction dominates short searches; keep the last one
  thread_local std::optional<Presentation> cached_pres;
  thread_local std::unique_ptr<BraidSystem> cached_sys;
  if (!cached_sys || !(*cached_pres == pres)) {
    cached_sys = std::make_unique<BraidSystem>(pres);
    cached_pres = pres;
  }
  const BraidSystem& sys = *cached_sys;
  const BraidSearch search(sys, pres);
  CWord a, b;
  if (!sys.encode(from, a) || !sys.encode(to, b)) return res;
  if (a.size() > kMaxBraidWord || b.size() > kMaxBraidWord) return res;
  const CWord ca = sys.canonical(a), cb = sys.canonical(b);

  std::unordered_map<CWord, Node> seen[2];
  std::deque<CWord> frontier[2];
  seen[0][ca] = Node{{}, {}, true};
  seen[1][cb] = Node{{}, {}, true};
  frontier[0].push_back(ca);
  frontier[1].push_back(cb);
  std::optional<CWord> meet;
  if (ca == cb) meet = ca;

  while (!meet && (!frontier[0].empty() || !frontier[1].empty())) {
    int side = frontier[0].empty() ? 1 : frontier[1].empty() ? 0 : (frontier[0].size() <= frontier[1].size() ? 0 : 1);
    std::deque<CWord> layer;
    layer.swap(frontier[side]);
    for (const CWord& w : layer) {
      search.neighbors(w, [&](const Move& m, const Bits& S, const std::vector<Bits>& pred, const CWord& t) {
        if (meet) return;
        CWord next = search.build(w, m, S, pred, t, nullptr);
        if (seen[side].count(next)) return;
        seen[side][next] = Node{w, m, false};
        if (seen[1 - side].count(next)) {
          meet = next;
          return;
        }
        frontier[side].push_back(std::move(next));
      });
      if (meet) break;
      if (seen[0].size() + seen[1].size() > budget) {
        res.budget_exhausted = true;
        res.visited = seen[0].size() + seen[1].size();
        return res;
      }
    }
  }
  res.visited = seen[0].size() + seen[1].size();
  if (!meet) return res;

  // forward half: ca -> meet
  std::vector<std::pair<CWord, Move>> fwd;
  for (CWord w = *meet; !seen[0].at(w).root;) {
    const Node& nd = seen[0].at(w);
    fwd.emplace_back(nd.parent, nd.move);
    w = nd.parent;
  }
  std::reverse(fwd.begin(), fwd.end());
  std::vector<Step> steps = permutation_steps(sys, pres, a, ca);
  for (const auto& [w, m] : fwd) append(steps, move_steps(sys, search, pres, w, m, false));
  std::size_t moves = fwd.size();
  // backward half: meet -> cb
  for (CWord w = *meet; !seen[1].at(w).root;) {
    const Node& nd = seen[1].at(w);
    append(steps, move_steps(sys, search, pres, nd.parent, nd.move, true));
    w = nd.parent;
    ++moves;
  }
  append(steps, permutation_steps(sys, pres, cb, b));
  res.steps = std::move(steps);
  res.moves = moves;
  return res;
}

// ---------------------------------------------------------------------------------------
// Script checking.

namespace {

struct Env {
  const Presentation& pres;
  std::map<std::string, const Equation*, std::less<>> eqs;

  const Equation* find(std::string_view n) const {
    auto it = eqs.find(n);
    return it == eqs.end() ? nullptr : it->second;
  }
};

struct StepFailure {
  CheckError error;
  std::string message;
};

// Executes a primitive step; returns an error message on failure.
std::optional<StepFailure> run_primitive(const Env& env, Word& cur, const Step& s) {
  switch (s.kind) {
    case Step::Kind::FreeCancel:
      if (s.pos + 1 >= cur.size() || !(cur[s.pos + 1] == cur[s.pos].inverse()))
        return StepFailure{CheckError::StepMismatch, "no cancelling pair at position " + std::to_string(s.pos)};
      cur.erase(cur.begin() + s.pos, cur.begin() + s.pos + 2);
      return std::nullopt;
    case Step::Kind::FreeInsert:
      if (s.pos > cur.size())
        return StepFailure{CheckError::StepMismatch, "insert position " + std::to_string(s.pos) + " out of range"};
      cur.insert(cur.begin() + s.pos, {s.letter, s.letter.inverse()});
      return std::nullopt;
    case Step::Kind::Apply: {
      const Equation* e = env.find(s.name);
      if (!e) return StepFailure{CheckError::UnresolvedName, "unknown relation or lemma '" + s.name + "'"};
      switch (s.dir) {
        case Step::Direction::Forward:
          if (!matches_at(cur, s.pos, e->lhs))
            return StepFailure{CheckError::StepMismatch,
                               "left side of " + s.name + " not found at position " + std::to_string(s.pos)};
          cur = splice(cur, s.pos, e->lhs.size(), e->rhs);
          return std::nullopt;
        case Step::Direction::Backward:
          if (!matches_at(cur, s.pos, e->rhs))
            return StepFailure{CheckError::StepMismatch,
                               "right side of " + s.name + " not found at position " + std::to_string(s.pos)};
          cur = splice(cur, s.pos, e->rhs.size(), e->lhs);
          return std::nullopt;
        case Step::Direction::Relator:
          if (s.pos + s.length > cur.size())
            return StepFailure{CheckError::StepMismatch, "substitution range out of bounds"};
          if (!legal_substitution(*e, slice(cur, s.pos, s.length), s.replacement))
            return StepFailure{CheckError::StepMismatch,
                               "'" + format_word(slice(cur, s.pos, s.length)) + "' -> '" + format_word(s.replacement) +
                                   "' is not an instance of " + s.name};
          cur = splice(cur, s.pos, s.length, s.replacement);
          return std::nullopt;
      }
      return std::nullopt;
    }
    default: return StepFailure{CheckError::InvalidStep, "not a primitive step"};
  }
}

std::optional<Step> search_application(const Equation& e, const std::string& name, const Word& cur,
                                       const Word& expected) {
  const Word target = reduce(expected);
  auto hits = [&](std::size_t p, std::size_t len, const Word& t) { return reduce(splice(cur, p, len, t)) == target; };
  for (std::size_t p = 0; p <= cur.size(); ++p) {
    if (matches_at(cur, p, e.lhs) && hits(p, e.lhs.size(), e.rhs)) {
      Step s;
      s.kind = Step::Kind::Apply;
      s.name = name;
      s.dir = Step::Direction::Forward;
      s.pos = p;
      return s;
    }
    if (matches_at(cur, p, e.rhs) && hits(p, e.rhs.size(), e.lhs)) {
      Step s;
      s.kind = Step::Kind::Apply;
      s.name = name;
      s.dir = Step::Direction::Backward;
      s.pos = p;
      return s;
    }
  }
  const Word r = relator_of(e);
  if (r.empty()) return std::nullopt;
  const std::size_t m = r.size();
  for (const Word& base : {r, inverse(r)})
    for (std::size_t rot = 0; rot < m; ++rot) {
      Word rho(base.begin() + rot, base.end());
      rho.insert(rho.end(), base.begin(), base.begin() + rot);
      for (std::size_t p = 0; p <= cur.size(); ++p)
        for (std::size_t L = 0; L <= m && p + L <= cur.size(); ++L) {
          if (L > 0 && !(cur[p + L - 1] == rho[L - 1])) break;
          const Word t = inverse(Word(rho.begin() + L, rho.end()));
          if (hits(p, L, t)) {
            Step s;
            s.kind = Step::Kind::Apply;
            s.name = name;
            s.dir = Step::Direction::Relator;
            s.pos = p;
            s.length = L;
            s.replacement = t;
            return s;
          }
        }
    }
  return std::nullopt;
}

bool known_generators(const Presentation& pres, const Word& w) {
  for (const auto& l : w)
    if (std::find(pres.generators.begin(), pres.generators.end(), l.gen) == pres.generators.end()) return false;
  return true;
}

}  // namespace

CheckResult check_script(const Presentation& pres, Library& library, const DerivationScript& script,
                         const CheckOptions& opts) {
  CheckResult res;
  auto fail = [&](CheckError e, std::size_t idx, std::string msg) {
    res.ok = false;
    res.error = e;
    res.step_index = idx;
    res.message = script.name + ": " + std::move(msg);
    return res;
  };

  if (!constraints_hold(script.require, pres.signature))
    return fail(CheckError::ConstraintUnsatisfied, 0, "signature does not satisfy the script constraints");

  Env env{pres, {}};
  for (const auto& e : pres.relations) env.eqs[e.name] = &e;
  for (const auto& dep : script.uses) {
    const Equation* e = library.find(dep);
    if (!e) return fail(CheckError::UnresolvedName, 0, "dependency '" + dep + "' is not proven");
    env.eqs[dep] = e;
  }
  if (!known_generators(pres, script.claim.lhs) || !known_generators(pres, script.claim.rhs))
    return fail(CheckError::UnresolvedName, 0, "claim uses a generator outside the presentation");

  Word cur = script.claim.lhs;
  auto record = [&](const Step& s) {
    if (opts.record_expansion) res.expanded.push_back(s);
  };

  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const Step& s = script.steps[i];
    if (s.expected && !known_generators(pres, *s.expected))
      return fail(CheckError::UnresolvedName, i, "expected word uses a generator outside the presentation");
    switch (s.kind) {
      case Step::Kind::FreeCancel:
      case Step::Kind::FreeInsert:
        if (auto f = run_primitive(env, cur, s)) return fail(f->error, i, f->message);
        record(s);
        break;
      case Step::Kind::Apply: {
        Step prim = s;
        if (s.search) {
          const Equation* e = env.find(s.name);
          if (!e) return fail(CheckError::UnresolvedName, i, "unknown relation or lemma '" + s.name + "'");
          if (!s.expected) return fail(CheckError::InvalidStep, i, "'apply " + s.name + " *' needs an expected word");
          auto found = search_application(*e, s.name, cur, *s.expected);
          if (!found) {
            res.expected = *s.expected;
            res.actual = cur;
            return fail(CheckError::StepMismatch, i,
                        "no application of " + s.name + " turns '" + format_word(cur) + "' into '" +
                            format_word(*s.expected) + "'");
          }
          prim = *found;
        }
        prim.expected.reset();
        if (auto f = run_primitive(env, cur, prim)) return fail(f->error, i, f->message);
        record(prim);
        break;
      }
      case Step::Kind::AutoBraid: {
        if (!s.expected) return fail(CheckError::InvalidStep, i, "braid step needs an expected word");
        for (const auto& p : free_path(cur, reduce(cur))) {
          if (auto f = run_primitive(env, cur, p)) return fail(f->error, i, f->message);
          record(p);
        }
        auto br = auto_braid_bridge(pres, cur, reduce(*s.expected), s.budget);
        if (!br.steps) {
          res.expected = *s.expected;
          res.actual = cur;
          if (br.budget_exhausted)
            return fail(CheckError::BudgetExceeded, i,
                        "braid search budget " + std::to_string(s.budget) + " exhausted between '" + format_word(cur) +
                            "' and '" + format_word(*s.expected) + "'");
          return fail(CheckError::StepMismatch, i,
                      "no braid bridge from '" + format_word(cur) + "' to '" + format_word(*s.expected) + "'");
        }
        for (const auto& p : *br.steps) {
          if (auto f = run_primitive(env, cur, p)) return fail(f->error, i, "bridge replay failed: " + f->message);
          record(p);
        }
        break;
      }
      case Step::Kind::FreeEqual:
        if (!s.expected) return fail(CheckError::InvalidStep, i, "free step needs an expected word");
        break;
    }
    if (s.expected) {
      if (reduce(cur) != reduce(*s.expected)) {
        res.expected = *s.expected;
        res.actual = cur;
        return fail(CheckError::StepMismatch, i,
                    "expected '" + format_word(*s.expected) + "', got '" + format_word(cur) + "'");
      }
      if (cur != *s.expected) {
        for (const auto& p : free_path(cur, *s.expected)) {
          if (auto f = run_primitive(env, cur, p)) return fail(f->error, i, f->message);
          record(p);
        }
      }
    }
  }

  if (reduce(cur) != reduce(script.claim.rhs)) {
    res.expected = script.claim.rhs;
    res.actual = cur;
    return fail(CheckError::StepMismatch, script.steps.size(),
                "final word '" + format_word(cur) + "' differs from claimed '" + format_word(script.claim.rhs) + "'");
  }
  Equation proven = script.claim;
  proven.name = script.name;
  proven.kind = RelationKind::Derived;
  if (library.insert(proven) == Library::Insert::Conflict)
    return fail(CheckError::Conflict, script.steps.size(), "library already holds a different claim with this name");
  res.ok = true;
  return res;
}

Report verify_library(const CurveConfiguration& cfg, const Library& library) {
  Report rep;
  rep.title = "library cross-check";
  const HomologyOracle oracle(cfg);
  for (const auto& e : library.equations()) rep.add(e.name, oracle.check_equation(e));
  return rep;
}

}  // namespace mcg
