#include <eqknot/parse.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <vector>

namespace eqknot {

namespace {

enum class Tok { Int, T, G, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  size_t pos;
  std::string text;  // digits for Int
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, i, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    Tok k;
    switch (c) {
      case 't': k = Tok::T; break;
      case 'g': k = Tok::G; break;
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, i, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

// Raw two-variable table; g-exponents unreduced until conversion.
using Table = std::map<std::pair<long, long>, Int>;

void tbl_add(Table& a, const std::pair<long, long>& k, const Int& c) {
  auto it = a.find(k);
  if (it == a.end()) {
    if (!is_zero(c)) a.emplace(k, c);
    return;
  }
  it->second += c;
  if (is_zero(it->second)) a.erase(it);
}

Table tbl_mul(const Table& a, const Table& b) {
  Table r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b)
      tbl_add(r, {ka.first + kb.first, ka.second + kb.second}, Int(ca * cb));
  return r;
}

Table tbl_neg(const Table& a) {
  Table r;
  for (const auto& [k, c] : a) r.emplace(k, Int(-c));
  return r;
}

Table tbl_pow(Table base, unsigned long n) {
  Table r;
  r.emplace(std::make_pair(0L, 0L), Int(1));
  while (n) {
    if (n & 1) r = tbl_mul(r, base);
    n >>= 1;
    if (n) base = tbl_mul(base, base);
  }
  return r;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : toks_(tokenize(s)) {}

  Table parse() {
    Table r = expr();
    expect_end();
    return r;
  }

  std::optional<size_t> first_g_pos;

 private:
  std::vector<Token> toks_;
  size_t i_ = 0;

  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }
  bool at(Tok k) const { return peek().kind == k; }

  void expect_end() {
    if (!at(Tok::End)) throw ParseError(peek().pos, "unexpected trailing input");
  }

  Table expr() {
    int sign = 1;
    if (at(Tok::Plus)) {
      take();
    } else if (at(Tok::Minus)) {
      take();
      sign = -1;
    }
    Table acc = term();
    if (sign < 0) acc = tbl_neg(acc);
    while (at(Tok::Plus) || at(Tok::Minus)) {
      bool minus = take().kind == Tok::Minus;
      Table t = term();
      if (minus) t = tbl_neg(t);
      for (const auto& [k, c] : t) tbl_add(acc, k, c);
    }
    return acc;
  }

  bool starts_factor() const {
    switch (peek().kind) {
      case Tok::Int:
      case Tok::T:
      case Tok::G:
      case Tok::LParen: return true;
      default: return false;
    }
  }

  Table term() {
    Table acc = factor();
    for (;;) {
      if (at(Tok::Star)) {
        take();
        if (!starts_factor()) throw ParseError(peek().pos, "expected factor after '*'");
        acc = tbl_mul(acc, factor());
      } else if (starts_factor()) {
        acc = tbl_mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  Table factor() {
    auto [base, var] = this->base();
    if (!at(Tok::Caret)) return base;
    size_t caret_pos = take().pos;
    bool negexp = false;
    if (at(Tok::Minus)) {
      take();
      negexp = true;
    }
    if (!at(Tok::Int)) throw ParseError(peek().pos, "expected integer exponent after '^'");
    Token e = take();
    long n;
    try {
      n = std::stol(e.text);
    } catch (const std::exception&) {
      throw ParseError(e.pos, "exponent out of range");
    }
    if (negexp) {
      if (var == 0) throw ParseError(caret_pos, "negative exponent requires a bare variable base");
      Table r;
      r.emplace(std::make_pair(var == 'g' ? -n : 0L, var == 't' ? -n : 0L), Int(1));
      return r;
    }
    return tbl_pow(base, static_cast<unsigned long>(n));
  }

  // Returns the table and a marker: 't'/'g' if the base was a bare variable.
  std::pair<Table, char> base() {
    if (at(Tok::Int)) {
      Token t = take();
      Table r;
      Int v(t.text);
      if (!is_zero(v)) r.emplace(std::make_pair(0L, 0L), v);
      return {r, 0};
    }
    if (at(Tok::T)) {
      take();
      Table r;
      r.emplace(std::make_pair(0L, 1L), Int(1));
      return {r, 't'};
    }
    if (at(Tok::G)) {
      Token t = take();
      if (!first_g_pos) first_g_pos = t.pos;
      Table r;
      r.emplace(std::make_pair(1L, 0L), Int(1));
      return {r, 'g'};
    }
    if (at(Tok::LParen)) {
      take();
      Table r = expr();
      if (!at(Tok::RParen)) throw ParseError(peek().pos, "expected ')'");
      take();
      return {r, 0};
    }
    throw ParseError(peek().pos, "expected a number, 't', 'g', or '('");
  }
};

}  // namespace

ZPoly parse_poly(std::string_view s) {
  Parser p(s);
  Table t = p.parse();
  for (const auto& [k, c] : t)
    if (k.first != 0)
      throw ParseError(p.first_g_pos.value_or(0), "variable g not allowed in a plain polynomial");
  ZPoly r;
  for (const auto& [k, c] : t) r.set_coeff(k.second, c);
  return r;
}

GroupRingPoly parse_poly2(std::string_view s, long q) {
  if (q < 1) throw precondition_error("parse_poly2: q must be >= 1");
  Parser p(s);
  Table t = p.parse();
  GroupRingPoly r(q);
  for (const auto& [k, c] : t) r.add_to_coeff(k.first, k.second, c);
  return r;
}

std::pair<ZPoly, ZPoly> parse_ratio(std::string_view s) {
  int depth = 0;
  std::optional<size_t> slash;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == '/' && depth == 0) {
      if (slash) throw ParseError(i, "more than one top-level '/'");
      slash = i;
    }
  }
  if (!slash) return {parse_poly(s), ZPoly::one()};
  ZPoly num = parse_poly(s.substr(0, *slash));
  ZPoly den;
  try {
    den = parse_poly(s.substr(*slash + 1));
  } catch (ParseError& e) {
    throw ParseError(e.pos + *slash + 1, "in denominator: " + std::string(e.what()));
  }
  return {num, den};
}

namespace {

void append_coeff(std::string& s, const Int& c, bool lead, bool with_var) {
  Int a = abs_int(c);
  if (lead) {
    if (sgn_of(c) < 0) s += "-";
  } else {
    s += sgn_of(c) < 0 ? "-" : "+";
  }
  if (!with_var || a != 1) {
    s += a.get_str();
    if (with_var) s += "*";
  }
}

void append_var(std::string& s, char v, long e) {
  if (e == 0) return;
  s += v;
  if (e != 1) s += "^" + std::to_string(e);
}

}  // namespace

std::string format_poly(const ZPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    append_coeff(s, it->second, s.empty(), it->first != 0);
    append_var(s, 't', it->first);
  }
  return s;
}

std::string format_poly2(const GroupRingPoly& p) {
  if (p.is_zero()) return "0";
  // sort terms by t descending, then g ascending
  std::vector<std::pair<std::pair<long, long>, Int>> ts;  // ((−t, g), coeff)
  for (const auto& [k, c] : p.terms()) ts.push_back({{-k.second, k.first}, c});
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string s;
  for (const auto& [k, c] : ts) {
    long tj = -k.first, gi = k.second;
    bool with_var = gi != 0 || tj != 0;
    append_coeff(s, c, s.empty(), with_var);
    if (gi != 0) {
      append_var(s, 'g', gi);
      if (tj != 0) s += "*";
    }
    append_var(s, 't', tj);
  }
  return s;
}

}  // namespace eqknot
