#include "rpphilb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace rpphilb {

namespace {

int kind_rank(VarId::Kind k) noexcept { return static_cast<int>(k); }

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

Monomial multiply_monomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t p = 0, q = 0;
  while (p < a.size() || q < b.size()) {
    if (q == b.size() || (p < a.size() && a[p].first < b[q].first)) {
      out.push_back(a[p++]);
    } else if (p == a.size() || b[q].first < a[p].first) {
      out.push_back(b[q++]);
    } else {
      out.emplace_back(a[p].first, a[p].second + b[q].second);
      ++p;
      ++q;
    }
  }
  return out;
}

}  // namespace

std::strong_ordering operator<=>(const VarId& u, const VarId& v) noexcept {
  if (auto c = kind_rank(u.kind) <=> kind_rank(v.kind); c != 0) return c;
  if (auto c = u.j <=> v.j; c != 0) return c;
  if (auto c = u.i <=> v.i; c != 0) return c;
  return u.k <=> v.k;
}

std::string to_string(const VarId& v) {
  auto idx3 = [&](char name) {
    return std::string(1, name) + "_" + std::to_string(v.i) + "_" + std::to_string(v.j) + "_" + std::to_string(v.k);
  };
  switch (v.kind) {
    case VarId::Kind::X: return "x";
    case VarId::Kind::A: return idx3('a');
    case VarId::Kind::B: return idx3('b');
    case VarId::Kind::C: return idx3('c');
    case VarId::Kind::L: return "L";
    case VarId::Kind::Q: return "q_" + std::to_string(v.i) + "_" + std::to_string(v.j);
  }
  return "?";
}

std::optional<VarId> parse_var(std::string_view s) {
  if (s == "x") return VarId::x();
  if (s == "L") return VarId::lefschetz();
  if (s.size() < 3 || s[1] != '_') return std::nullopt;
  std::vector<int> idx;
  std::size_t pos = 2;
  while (pos <= s.size()) {
    std::size_t end = s.find('_', pos);
    if (end == std::string_view::npos) end = s.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + end, value);
    if (ec != std::errc() || ptr != s.data() + end || end == pos || value < 0) return std::nullopt;
    idx.push_back(value);
    pos = end + 1;
  }
  switch (s[0]) {
    case 'a':
      if (idx.size() == 3) return VarId::a(idx[0], idx[1], idx[2]);
      break;
    case 'b':
      if (idx.size() == 3) return VarId::b(idx[0], idx[1], idx[2]);
      break;
    case 'c':
      if (idx.size() == 3) return VarId::c(idx[0], idx[1], idx[2]);
      break;
    case 'q':
      if (idx.size() == 2) return VarId::q({idx[0], idx[1]});
      break;
    default: break;
  }
  return std::nullopt;
}

std::uint32_t total_degree(const Monomial& m) noexcept {
  std::uint32_t d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
    if (a[k].first != b[k].first) return a[k].first < b[k].first;
    if (a[k].second != b[k].second) return a[k].second > b[k].second;
  }
  return a.size() > b.size();
}

SparsePoly::SparsePoly(Integer constant) {
  if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
}

SparsePoly SparsePoly::var(VarId v, std::uint32_t exponent) {
  if (exponent == 0) return SparsePoly(1);
  return monomial({{v, exponent}}, 1);
}

SparsePoly SparsePoly::monomial(Monomial m, Integer coeff) {
  SparsePoly p;
  std::erase_if(m, [](const auto& t) { return t.second == 0; });
  std::sort(m.begin(), m.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  p.add_term(m, coeff);
  return p;
}

void SparsePoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool SparsePoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Integer SparsePoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Integer(0) : it->second;
}

std::set<VarId> SparsePoly::variables() const {
  std::set<VarId> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) out.insert(v);
  return out;
}

bool SparsePoly::contains(VarId v) const { return degree_in(v) > 0; }

std::uint32_t SparsePoly::degree_in(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [w, e] : m)
      if (w == v) d = std::max(d, e);
  return d;
}

SparsePoly SparsePoly::coefficient(VarId v, std::uint32_t e) const {
  SparsePoly out;
  for (const auto& [m, c] : terms_) {
    std::uint32_t found = 0;
    Monomial rest;
    for (const auto& t : m) {
      if (t.first == v)
        found = t.second;
      else
        rest.push_back(t);
    }
    if (found == e) out.add_term(rest, c);
  }
  return out;
}

std::uint32_t SparsePoly::total_degree() const {
  return terms_.empty() ? 0 : rpphilb::total_degree(terms_.begin()->first);
}

Integer SparsePoly::content() const {
  Integer g = 0;
  for (const auto& [m, c] : terms_) g = gcd(g, abs_value(c));
  return g;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) { return *this = *this * o; }

SparsePoly SparsePoly::operator-() const {
  SparsePoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply_monomials(ma, mb), ca * cb);
  return out;
}

SparsePoly pow(const SparsePoly& p, std::uint32_t e) {
  SparsePoly result(1), base(p);
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

SparsePoly divide_exact(const SparsePoly& p, const Integer& d) {
  if (d == 0) throw Error(ErrorCode::InvalidInput, "division by zero");
  SparsePoly out;
  for (const auto& [m, c] : p.terms()) {
    if (c % d != 0) throw Error(ErrorCode::InvalidInput, "coefficient not divisible");
    out += SparsePoly::monomial(m, c / d);
  }
  return out;
}

DivMod divmod_in(const SparsePoly& f, const SparsePoly& g, VarId var) {
  const std::uint32_t dg = g.degree_in(var);
  if (g.coefficient(var, dg) != SparsePoly(1))
    throw Error(ErrorCode::NonMonicDivisor, "divisor is not monic in " + to_string(var), to_string(g));
  DivMod out{SparsePoly(), f};
  for (;;) {
    const std::uint32_t d = out.remainder.degree_in(var);
    if (out.remainder.is_zero() || d < dg) break;
    const SparsePoly t = out.remainder.coefficient(var, d) * SparsePoly::var(var, d - dg);
    out.quotient += t;
    out.remainder -= t * g;
  }
  return out;
}

std::optional<int> weighted_degree(const SparsePoly& p, const Grading& grading) {
  std::optional<int> degree;
  for (const auto& [m, c] : p.terms()) {
    int d = 0;
    for (const auto& [v, e] : m) {
      auto it = grading.find(v);
      if (it == grading.end()) throw Error(ErrorCode::InvalidInput, "variable has no degree", to_string(v));
      d += it->second * static_cast<int>(e);
    }
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree.value_or(0);
}

SparsePoly linear_part(const SparsePoly& p) {
  SparsePoly out;
  for (const auto& [m, c] : p.terms())
    if (total_degree(m) == 1) out += SparsePoly::monomial(m, c);
  return out;
}

SparsePoly substitute(const SparsePoly& p, VarId v, const SparsePoly& replacement) {
  const std::uint32_t d = p.degree_in(v);
  if (d == 0) return p;
  std::vector<SparsePoly> powers{SparsePoly(1)};
  for (std::uint32_t e = 1; e <= d; ++e) powers.push_back(powers.back() * replacement);
  SparsePoly out;
  for (std::uint32_t e = 0; e <= d; ++e) {
    const SparsePoly c = p.coefficient(v, e);
    if (!c.is_zero()) out += c * powers[e];
  }
  return out;
}

SparsePoly evaluate(const SparsePoly& p, const std::map<VarId, Integer>& values) {
  SparsePoly out;
  for (const auto& [m, c] : p.terms()) {
    Integer coeff = c;
    Monomial rest;
    for (const auto& [v, e] : m) {
      auto it = values.find(v);
      if (it == values.end())
        rest.emplace_back(v, e);
      else
        coeff *= boost::multiprecision::pow(it->second, e);
    }
    out += SparsePoly::monomial(std::move(rest), coeff);
  }
  return out;
}

std::string to_string(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    const Integer a = abs_value(c);
    bool need_star = false;
    if (a != 1 || m.empty()) {
      s += a.str();
      need_star = true;
    }
    for (const auto& [v, e] : m) {
      if (need_star) s += '*';
      s += to_string(v);
      if (e > 1) s += '^' + std::to_string(e);
      need_star = true;
    }
  }
  return s;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SparsePoly parse() {
    SparsePoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_), std::string(text_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  SparsePoly expr() {
    SparsePoly acc;
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  SparsePoly term() {
    SparsePoly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  SparsePoly factor() {
    SparsePoly base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::uint32_t e = 0;
      auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, e);
      if (start == pos_ || ec != std::errc()) fail("expected an exponent");
      base = pow(base, e);
    }
    return base;
  }

  SparsePoly primary() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      SparsePoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    const char ch = text_[pos_];
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return SparsePoly(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      auto v = parse_var(name);
      if (!v) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return SparsePoly::var(*v);
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace rpphilb
