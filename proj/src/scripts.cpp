#include "mcg/scripts.hpp"

#include <functional>
#include <regex>
#include <set>
#include <stdexcept>

namespace mcg {

namespace {

int eval_index(std::string_view e, const std::map<char, int>& vars) {
  int total = 0, sign = 1;
  std::size_t i = 0;
  while (i < e.size()) {
    if (e[i] == '+' || e[i] == '-') {
      sign = e[i] == '-' ? -1 : 1;
      ++i;
      continue;
    }
    int coef = 0;
    bool digits = false;
    while (i < e.size() && std::isdigit(static_cast<unsigned char>(e[i]))) {
      coef = coef * 10 + (e[i] - '0');
      digits = true;
      ++i;
    }
    if (i < e.size() && std::isalpha(static_cast<unsigned char>(e[i]))) {
      auto it = vars.find(e[i]);
      if (it == vars.end()) throw std::invalid_argument("unbound template variable " + std::string(1, e[i]));
      total += sign * (digits ? coef : 1) * it->second;
      ++i;
    } else {
      total += sign * coef;
    }
    sign = 1;
  }
  return total;
}

std::string substitute_indices(std::string_view line, const std::map<char, int>& vars) {
  std::string out;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] != '@') {
      out += line[i];
      continue;
    }
    if (i + 1 < line.size() && line[i + 1] == '(') {
      const auto close = line.find(')', i);
      out += std::to_string(eval_index(line.substr(i + 2, close - i - 2), vars));
      i = close;
    } else {
      out += std::to_string(eval_index(line.substr(i + 1, 1), vars));
      ++i;
    }
  }
  return out;
}

std::string substitute_macros(std::string_view line, const std::map<std::string, Word>& macros) {
  std::string out;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] != '$') {
      out += line[i];
      continue;
    }
    std::size_t e = i + 1;
    while (e < line.size() && (std::isalnum(static_cast<unsigned char>(line[e])) || line[e] == '_')) ++e;
    const std::string name(line.substr(i + 1, e - i - 1));
    auto it = macros.find(name);
    if (it == macros.end()) throw std::invalid_argument("unknown macro $" + name);
    Word w = it->second;
    int k = 1;
    if (e < line.size() && line[e] == '^') {
      std::size_t d = e + 1;
      k = 0;
      while (d < line.size() && std::isdigit(static_cast<unsigned char>(line[d]))) k = k * 10 + (line[d++] - '0');
      e = d;
    }
    if (e < line.size() && line[e] == '\'') {
      w = inverse(w);
      ++e;
    }
    Word p;
    for (int r = 0; r < k; ++r) p.insert(p.end(), w.begin(), w.end());
    out += ' ' + (p.empty() ? std::string() : format_word(p)) + ' ';
    i = e - 1;
  }
  return out;
}

// Innermost brackets first; no reduction, so positions stay literal.
std::string expand_brackets(std::string s) {
  for (;;) {
    const auto close = s.find(']');
    if (close == std::string::npos) return s;
    const auto open = s.rfind('[', close);
    if (open == std::string::npos) throw std::invalid_argument("unbalanced ']'");
    const std::string inner = s.substr(open + 1, close - open - 1);
    const auto bar = inner.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("conjugation needs '[W | X]'");
    const Word w = parse_word(inner.substr(0, bar)), x = parse_word(inner.substr(bar + 1));
    Word c = concat({w, x, inverse(w)});
    if (w.empty() && x.empty()) c.clear();
    std::string repl = ' ' + (c.empty() ? std::string() : format_word(c)) + ' ';
    s = s.substr(0, open) + repl + s.substr(close + 1);
  }
}

std::string expand_words(std::string line, const std::map<std::string, Word>& macros) {
  return expand_brackets(substitute_macros(line, macros));
}

}  // namespace

std::string expand_script_template(std::string_view text, const std::map<char, int>& vars) {
  std::map<std::string, Word> macros;
  std::string out;
  std::size_t at = 0;
  while (at <= text.size()) {
    std::size_t nl = text.find('\n', at);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line = substitute_indices(text.substr(at, nl - at), vars);
    // c_{l,l} is the trivial element
    static const std::regex trivial_c(R"((^|\s)c(\d+)_\2'?(?=\s|$))");
    line = std::regex_replace(line, trivial_c, "$1");
    at = nl + 1;
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line.compare(first, 4, "let ") == 0) {
      const auto eq = line.find('=');
      std::string name = line.substr(first + 4, eq - first - 4);
      name.erase(name.find_last_not_of(" \t") + 1);
      macros[name] = parse_word(expand_words(line.substr(eq + 1), macros));
      out += '\n';
      continue;
    }
    // macros and brackets only touch word positions, never names or the script header
    if (line.find('$') != std::string::npos || line.find('[') != std::string::npos) {
      const auto arrow = line.find("=>");
      const auto colon = line.find(':');
      if (first != std::string::npos && line.compare(first, 6, "claim ") == 0) {
        line = line.substr(0, first + 6) + expand_words(line.substr(first + 6), macros);
      } else if (arrow != std::string::npos) {
        std::string head = line.substr(0, arrow);
        if (colon != std::string::npos && colon < arrow)
          head = head.substr(0, colon + 1) + expand_words(head.substr(colon + 1), macros);
        line = head + "=> " + expand_words(line.substr(arrow + 2), macros);
      } else if (colon != std::string::npos) {
        line = line.substr(0, colon + 1) + expand_words(line.substr(colon + 1), macros);
      }
    }
    out += line;
    out += '\n';
  }
  return out;
}

namespace {

struct Family {
  const char* vars;  // index variables, e.g. "ijk"; empty for a single instance
  std::function<bool(const Signature&, const std::map<char, int>&)> admit;
  const char* text;
};

bool non_constant(const std::map<char, int>& v) {
  const int i = v.at('i'), j = v.at('j'), k = v.at('k');
  return !(i == j && j == k);
}

// ---------------------------------------------------------------------------------------
// Script texts. Each begins with "script NAME" and ends with "end"; the file header is added
// on expansion.

const char* const kStarComm = R"(
script star_comm_@i_@j
claim a@i b a@i a@j b = b a@i a@j b a@j
  braid => b a@i b a@j b
  braid => b a@i a@j b a@j
end
)";

const char* const kStarProd = R"(
script star_prod_@i_@j_@k
let X1 = a@i a@j
let X2 = b $X1 b
let X3 = a@k $X2 a@k
claim $X1 $X2 $X3 = a@i a@j a@k b a@i a@j a@k b a@i a@j a@k b
  braid => $X1 $X3 $X2
  braid => a@i a@j a@k b a@i a@j b a@k b a@i a@j b
  braid => a@i a@j a@k b a@i a@j a@k b a@k a@i a@j b
  braid => a@i a@j a@k b a@i a@j a@k b a@i a@j a@k b
end
)";

const char* const kStarCentral = R"(
script star_xc_@i_@j_@k
let X1 = a@i a@j
let X2 = b $X1 b
let X3 = a@k $X2 a@k
claim $X2 $X3 = $X3 $X2
  braid => b $X1 $X3 b
  braid => b $X3 $X1 b
  braid => $X3 $X2
end
)";

const char* const kStarPow = R"(
script star_pow_@i_@j
let X1 = a@i a@j
let X2 = b $X1 b
claim a@i a@i a@j b a@i a@i a@j b a@i a@i a@j b = a@i b a@j a@i b a@j a@i b a@j a@i b a@j
  braid => a@i a@j a@i b a@i a@j a@i b a@i a@j a@i b
  braid => $X1 $X2 a@i $X2 a@i
  braid => $X1 $X2 $X1 $X2
  braid => a@i b a@j b a@i b a@j b a@i b a@j b
  braid => a@i b a@j a@i b a@i a@j b a@i a@j b a@j
  braid => a@i b a@j a@i b a@j a@i b a@j a@i b a@j
end
)";

const char* const kStarSq = R"(
script star_sq_@i_@j
uses star_prod_@i_@j_@j
let X1 = a@i a@j
let X2 = b $X1 b
claim a@i a@j a@j b a@i a@j a@j b a@i a@j a@j b = $X1^2 $X2^2
  apply star_prod_@i_@j_@j * => $X1 $X2 a@j $X2 a@j
  braid => $X1 $X2 $X2 $X1
  braid => $X1^2 $X2^2
end
)";

const char* const kLantern = R"(
script L_{@i,@j,@k}
uses star_prod_@i_@k_@j star_sq_@i_@k
let X1 = a@i a@k
let X = b a@i a@k b
let X3 = a@j $X a@j
let P = a@i a@j a@k b
let Q = a@i a@k a@j b
let R = a@i a@k a@k b
claim a@i c@i_@j c@j_@k a@k = c@i_@k a@j $X a@j $X'
  apply E_{@i,@j,@k} * => a@i $P^3 c@k_@i' a@k
  braid => a@i $Q^3 c@k_@i' a@k
  apply star_prod_@i_@k_@j * => a@i $X1 $X $X3 c@k_@i' a@k
  braid => a@i c@k_@i' $X1 $X $X3 a@k
  apply E_{@i,@k,@k} * => a@i $R^3' c@i_@k $X1 $X $X3 a@k
  apply star_sq_@i_@k * => a@i $X^2' $X1^2' c@i_@k $X1 $X $X3 a@k
  braid => a@i c@i_@k $X^2' $X1^2' $X1 $X $X3 a@k
  braid => a@i c@i_@k $X' $X1' $X3 a@k
  braid => c@i_@k a@i $X' $X1' $X3 a@k
  braid => c@i_@k $X' a@k $X1' $X3 a@k
  free => c@i_@k $X' a@i' a@j $X a@j a@k
  braid => c@i_@k $X' a@j a@i' $X a@j a@k
  braid => c@i_@k $X' a@j $X a@k' a@j a@k
  braid => c@i_@k $X' a@j $X a@j
  braid => c@i_@k a@j $X a@j $X'
end
)";

const char* const kConjugateA = R"(
script ak_@h_@k
require g>=2
uses L_{@(2h),@k,@(2h-1)} star_xc_@(2h)_@(2h-1)_@k
let W = b a@(2h) b@h a@(2h-1) b
let Z = c@(2h)_@(2h-1)' a@(2h) c@(2h)_@k
let X = b a@(2h) a@(2h-1) b
let Y = b a@(2h-1) a@(2h) b
let T = a@(2h-1)' c@k_@(2h-1)'
let V = a@k $X a@k $X'
let U = $X' a@k $X a@k
claim [ $W $Z | b@h ] = a@k
  apply L_{@(2h),@k,@(2h-1)} * => $W $V $T b@h $Z' $W'
  apply star_xc_@(2h)_@(2h-1)_@k * => $W $U $T b@h $Z' $W'
  apply L_{@(2h),@k,@(2h-1)} * => $W $U $T b@h $T' $V' $W'
  apply star_xc_@(2h)_@(2h-1)_@k * => [ $W $U $T | b@h ]
  braid => [ $W $Y' a@k $Y | b@h ]
  braid => [ b b@h' a@(2h) b@h a@k b a@k' b@h' | a@(2h) ]
  braid => [ b a@k b@h' a@(2h) a@(2h)' | b ]
  braid => a@k
end
)";

const char* const kStarReverse = R"(
script star_rev_@i_@j_@k
let P = a@i a@j a@k b
let Q = b a@k a@j a@i
claim $Q^3 = $P^3
  braid => b $P^3 b'
  apply E_{@i,@j,@k} * => b c@i_@j c@j_@k c@k_@i b'
  braid => c@i_@j c@j_@k c@k_@i
  apply E_{@i,@j,@k} * => $P^3
end
)";

const char* const kTheta = R"(
script psi_theta
require g>=2
uses star_pow_1_2
let V = a2 b a1 a1 b a2
let R = a1 a1 a2 b
let S = a1 b a2
claim [ b1 $V b1 | c1_2 ] = c2_1
  braid => [ b1 $V c1_2' | b1 ]
  apply E_{1,1,2} * => b1 $V c2_1 $R^3' b1 c1_2 $V' b1'
  apply E_{1,1,2} * => [ b1 $V c2_1 $R^3' | b1 ]
  braid => [ b1 $V $R^3' c2_1 | b1 ]
  apply star_pow_1_2 * => b1 $V $S^4' c2_1 b1 c2_1' $R^3 $V' b1'
  apply star_pow_1_2 * => [ b1 $V $S^4' c2_1 | b1 ]
  braid => b1 b' a1' b' a1' b' a1' c2_1 b1 c2_1' $S^4 $V' b1'
  braid => [ b1 b' a1' b' a1' b' a1' c2_1 | b1 ]
  braid => c2_1
end
)";

// h = b2 a4 c41^-1 b2^-1 b a2 a1 b b1 c12 a2 b1 carries the lantern L_{1,2,4} to the image of
// relation III.
const char* const kConjugatorH = R"(
script h_a1
require g>=3
let H = b2 a4 c4_1' b2' b a2 a1 b b1 c1_2 a2 b1
claim [ $H | a1 ] = a2
  braid => [ b2 a4 c4_1' b2' b a2 a1 a1' | b ]
  braid => [ b2 a4 c4_1' b2' b b' | a2 ]
  braid => a2
end

script h_c12
require g>=3
let H = b2 a4 c4_1' b2' b a2 a1 b b1 c1_2 a2 b1
claim [ $H | c1_2 ] = a1
  braid => [ b2 a4 c4_1' b2' b a2 a1 b b1 c1_2 a2 c1_2' | b1 ]
  braid => [ b2 a4 c4_1' b2' b a2 a1 b b1 b1' | a2 ]
  braid => [ b2 a4 c4_1' b2' b a2 a1 a2' | b ]
  braid => [ b2 a4 c4_1' b2' b b' | a1 ]
  braid => a1
end

script h_a4
require g>=3
uses star_rev_1_2_4
let H = b2 a4 c4_1' b2' b a2 a1 b b1 c1_2 a2 b1
let G = b2' b a2 a1 b
let P = a1 a2 a4 b
let Q = b a4 a2 a1
let L = b2 c2_4 a1' a2' b' a1' a2' a4' b' a1' a2' a4' b' b2' b a2 a1 a4'
let M = b2 c2_4 a1' a2' b' a1' a2' a4' b' a4' b2' a4'
claim [ $H | a4 ] = c2_4
  braid => [ b2 a4 c4_1' $G | a4 ]
  apply E_{1,2,4} * => b2 a4 $P^3' c1_2 c2_4 $G a4 $G' c4_1 a4' b2'
  apply E_{1,2,4} * => [ b2 a4 $P^3' c1_2 c2_4 $G | a4 ]
  apply star_rev_1_2_4 * => b2 a4 $Q^3' c1_2 c2_4 $G a4 $G' c2_4' c1_2' $P^3 a4' b2'
  apply star_rev_1_2_4 * => [ b2 a4 $Q^3' c1_2 c2_4 $G | a4 ]
  braid => [ b2 c2_4 a1' a2' b' a1' a2' a4' b' a1' a2' a4' b' $G | a4 ]
  braid => [ $L | b ]
  braid => $M b $L'
  braid => [ $M | b ]
  braid => [ b2 c2_4 a1' a2' b' a1' a2' b' a4' b' b2' b | a4 ]
  braid => [ b2 c2_4 a1' a2' b' a1' a2' b' a4' a4 | b2 ]
  braid => [ b2 c2_4 | b2 ]
  braid => c2_4
end

script h_a2
require g>=3
let H = b2 a4 c4_1' b2' b a2 a1 b b1 c1_2 a2 b1
claim [ $H | a2 ] = c1_2
  braid => [ b2 a4 c4_1' b2' b a2 a1 b b1 c1_2 a2 a2' | b1 ]
  braid => [ b2 a4 c4_1' b2' b a2 a1 b b1 b1' | c1_2 ]
  braid => c1_2
end

script h_b
require g>=3
let H = b2 a4 c4_1' b2' b a2 a1 b b1 c1_2 a2 b1
claim [ $H | b ] = b1
  braid => [ b2 a4 c4_1' b2' b a2 a1 b b1 b' | a2 ]
  braid => [ b2 a4 c4_1' b2' b a2 a2' | b1 ]
  braid => b1
end

script h_m
require g>=3
uses h_a1 h_a4 h_a2 h_b
let H = b2 a4 c4_1' b2' b a2 a1 b b1 c1_2 a2 b1
let X = b a1 a4 b
claim [ $H $X' | a2 ] = [ b1' a2' c2_4' b1' | c1_2 ]
  free => [ $H | b' ] [ $H | a4' ] [ $H | a1' ] [ $H | b' ] [ $H | a2 ] [ $H | b ] [ $H | a1 ] [ $H | a4 ] [ $H | b ]
  apply h_b * => b1' [ $H | a4' ] [ $H | a1' ] [ $H | b' ] [ $H | a2 ] [ $H | b ] [ $H | a1 ] [ $H | a4 ] [ $H | b ]
  apply h_a4 * => b1' c2_4' [ $H | a1' ] [ $H | b' ] [ $H | a2 ] [ $H | b ] [ $H | a1 ] [ $H | a4 ] [ $H | b ]
  apply h_a1 * => b1' c2_4' a2' [ $H | b' ] [ $H | a2 ] [ $H | b ] [ $H | a1 ] [ $H | a4 ] [ $H | b ]
  apply h_b * => b1' c2_4' a2' b1' [ $H | a2 ] [ $H | b ] [ $H | a1 ] [ $H | a4 ] [ $H | b ]
  apply h_a2 * => b1' c2_4' a2' b1' c1_2 [ $H | b ] [ $H | a1 ] [ $H | a4 ] [ $H | b ]
  apply h_b * => b1' c2_4' a2' b1' c1_2 b1 [ $H | a1 ] [ $H | a4 ] [ $H | b ]
  apply h_a1 * => b1' c2_4' a2' b1' c1_2 b1 a2 [ $H | a4 ] [ $H | b ]
  apply h_a4 * => b1' c2_4' a2' b1' c1_2 b1 a2 c2_4 [ $H | b ]
  apply h_b * => b1' c2_4' a2' b1' c1_2 b1 a2 c2_4 b1
  braid => [ b1' a2' c2_4' b1' | c1_2 ]
end
)";


// Kernel generators x0 = a1 a_N^-1, x1 = b(x0), x_i = a_i(x1), written as y(x) = y x y^-1.
const char* const kKernelFixed = R"(
script x0_b
let X0 = a1 a@m'
claim [ b | $X0 ] = b $X0 b'
end

script x0_binv
let X0 = a1 a@m'
let X1 = [ b | $X0 ]
claim [ b' | $X0 ] = $X0 $X1' $X0
  braid => a1 b a@m b' b a1' b' a@m'
  braid => $X0 $X1' $X0
end

script x0_c12
let X0 = a1 a@m'
claim [ c1_2 | $X0 ] = $X0
  braid => $X0
end

script x1_a1
let X0 = a1 a@m'
let X1 = [ b | $X0 ]
claim [ a1 | $X1 ] = $X1 $X0'
  braid => b a1 b a@m' b' a1'
  braid => $X1 $X0'
end

script x1_a1inv
let X0 = a1 a@m'
let X1 = [ b | $X0 ]
claim [ a1' | $X1 ] = $X1 $X0
  braid => b a1 b' a@m' b' a1
  braid => $X1 $X0
end

script x1_aN
let X0 = a1 a@m'
let X1 = [ b | $X0 ]
claim [ a@m | $X1 ] = $X0' $X1
  braid => a@m b a1 b' a@m' b'
  braid => $X0' $X1
end

script x1_aNinv
let X0 = a1 a@m'
let X1 = [ b | $X0 ]
claim [ a@m' | $X1 ] = $X0 $X1
  braid => a@m' b a1 b a@m' b'
  braid => $X0 $X1
end

script x1_binv
let X0 = a1 a@m'
claim [ b' | [ b | $X0 ] ] = $X0
  free => $X0
end

script x1_b
let X0 = a1 a@m'
let X1 = [ b | $X0 ]
claim [ b | $X1 ] = $X1 $X0' $X1
  braid => b b a@m' b' b a1 b' b'
  braid => $X1 $X0' $X1
end

script x1_c12
let X1 = [ b | a1 a@m' ]
claim [ c1_2 | $X1 ] = $X1
  braid => $X1
end
)";

const char* const kKernelA = R"(
script x0_a@i
let X0 = a1 a@m'
claim [ a@i | $X0 ] = $X0
  braid => $X0
end

script x0_a@i_inv
let X0 = a1 a@m'
claim [ a@i' | $X0 ] = $X0
  braid => $X0
end
)";

const char* const kKernelAi = R"(
script x1_a@i
let X1 = [ b | a1 a@m' ]
claim [ a@i | $X1 ] = a@i $X1 a@i'
end

script x1_a@i_inv
uses x0_binv
let X0 = a1 a@m'
let X1 = [ b | $X0 ]
let Xi = [ a@i | $X1 ]
claim $X1 $Xi' $X1 = [ a@i' | $X1 ]
  braid => b $X0 a@i b a@i' $X0' a@i b' a@i' $X0 b'
  braid => b a@i $X0 b $X0' b' $X0 a@i' b'
  apply x0_binv * => b a@i b' $X0 b a@i' b'
  braid => [ a@i' b a@i | $X0 ]
  braid => [ a@i' | $X1 ]
end
)";

const char* const kKernelH = R"(
script x0_b@h
let X0 = a1 a@m'
claim [ b@h | $X0 ] = $X0
  braid => $X0
end

script x1_b@h
let X1 = [ b | a1 a@m' ]
claim [ b@h | $X1 ] = $X1
  braid => $X1
end
)";

const char* const kKernelC = R"(
script x0_c@(2h)_@(2h+2)
let X0 = a1 a@m'
claim [ c@(2h)_@(2h+2) | $X0 ] = $X0
  braid => $X0
end

script x1_c@(2h)_@(2h+2)
let X1 = [ b | a1 a@m' ]
claim [ c@(2h)_@(2h+2) | $X1 ] = $X1
  braid => $X1
end
)";

const std::vector<Family>& families() {
  static const std::vector<Family> fs = {
      {"ij", [](const Signature&, const std::map<char, int>& v) { return v.at('i') != v.at('j'); }, kStarComm},
      {"ijk", [](const Signature&, const std::map<char, int>& v) { return non_constant(v); }, kStarProd},
      {"ijk", [](const Signature&, const std::map<char, int>& v) { return non_constant(v); }, kStarCentral},
      {"ij", [](const Signature&, const std::map<char, int>& v) { return v.at('i') != v.at('j'); }, kStarPow},
      {"ij", [](const Signature&, const std::map<char, int>& v) { return v.at('i') != v.at('j'); }, kStarSq},
      {"ijk",
       [](const Signature& sig, const std::map<char, int>& v) {
         return v.at('i') != v.at('k') && is_good_triple(sig, v.at('i'), v.at('j'), v.at('k'));
       },
       kLantern},
      {"hk",
       [](const Signature&, const std::map<char, int>& v) {
         return v.at('k') != 2 * v.at('h') - 1 && v.at('k') != 2 * v.at('h');
       },
       kConjugateA},
      {"ijk", [](const Signature& sig, const std::map<char, int>& v) {
         return v.at('i') == 1 && v.at('j') == 2 && v.at('k') == 4 && sig.N >= 4;
       }, kStarReverse},
      {"", [](const Signature&, const std::map<char, int>&) { return true; }, kTheta},
      {"", [](const Signature&, const std::map<char, int>&) { return true; }, kConjugatorH},
      {"m", [](const Signature& sig, const std::map<char, int>& v) { return sig.N >= 2 && v.at('m') == sig.N; },
       kKernelFixed},
      {"mi", [](const Signature& sig, const std::map<char, int>& v) { return sig.N >= 2 && v.at('m') == sig.N; },
       kKernelA},
      {"mi",
       [](const Signature& sig, const std::map<char, int>& v) {
         const int i = v.at('i');
         return sig.N >= 2 && v.at('m') == sig.N && (i == 2 || (i >= 2 * sig.g && i < sig.N));
       },
       kKernelAi},
      {"mh",
       [](const Signature& sig, const std::map<char, int>& v) {
         return sig.N >= 2 && v.at('m') == sig.N && 2 * v.at('h') != sig.N;
       },
       kKernelH},
      {"mh",
       [](const Signature& sig, const std::map<char, int>& v) {
         return sig.N >= 2 && v.at('m') == sig.N && v.at('h') <= sig.g - 2;
       },
       kKernelC},
  };
  return fs;
}

int range_of(const Signature& sig, char var) { return var == 'h' ? sig.g - 1 : sig.N; }

void instantiate(const Signature& sig, const Family& f, std::size_t depth, std::map<char, int>& vars,
                 std::string& out) {
  const std::string_view vs(f.vars);
  if (depth == vs.size()) {
    if (f.admit(sig, vars)) out += expand_script_template(f.text, vars);
    return;
  }
  for (int x = 1; x <= range_of(sig, vs[depth]); ++x) {
    vars[vs[depth]] = x;
    instantiate(sig, f, depth + 1, vars, out);
  }
  vars.erase(vs[depth]);
}

}  // namespace

std::vector<DerivationScript> shipped_scripts(const Signature& sig) {
  std::string text = "mcg-script 1\n";
  for (const auto& f : families()) {
    std::map<char, int> vars;
    instantiate(sig, f, 0, vars, text);
  }
  std::vector<DerivationScript> out;
  std::set<std::string> proven;
  for (auto& s : parse_scripts(text)) {
    if (!constraints_hold(s.require, sig)) continue;
    bool deps = true;
    for (const auto& d : s.uses) deps = deps && proven.count(d);
    if (!deps) continue;
    proven.insert(s.name);
    out.push_back(std::move(s));
  }
  return out;
}

ReplayOutcome replay_scripts(const Presentation& pres, const std::vector<DerivationScript>& scripts,
                             Library library) {
  ReplayOutcome out;
  out.library = std::move(library);
  out.report.title = "script replay";
  for (const auto& s : scripts) {
    CheckResult r = check_script(pres, out.library, s);
    out.report.add(s.name, r.ok, r.ok ? std::string() : std::string(to_string(r.error)) + ": " + r.message);
    out.results.push_back(std::move(r));
  }
  return out;
}

}  // namespace mcg
