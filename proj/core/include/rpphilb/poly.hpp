#pragma once

// Sparse multivariate polynomials with arbitrary precision integer coefficients.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rpphilb/diagram.hpp"
#include "rpphilb/error.hpp"

namespace rpphilb {

// Variables: the polynomial variable x, coefficient names a/b/c indexed by a box and a degree,
// the Lefschetz symbol L and the series variables q indexed by a box.
struct VarId {
  enum class Kind : std::uint8_t { X, A, B, C, L, Q };
  Kind kind = Kind::X;
  int i = 0, j = 0, k = 0;

  static VarId x() { return {Kind::X, 0, 0, 0}; }
  static VarId a(int i, int j, int k) { return {Kind::A, i, j, k}; }
  static VarId b(int i, int j, int k) { return {Kind::B, i, j, k}; }
  static VarId c(int i, int j, int k) { return {Kind::C, i, j, k}; }
  static VarId lefschetz() { return {Kind::L, 0, 0, 0}; }
  static VarId q(Box box) { return {Kind::Q, box.i, box.j, 0}; }

  friend bool operator==(const VarId&, const VarId&) = default;
};

// Canonical order: x, then a, b, c each by (j, i, k), then L, then q row-major.
std::strong_ordering operator<=>(const VarId& u, const VarId& v) noexcept;

std::string to_string(const VarId& v);
// Accepts x, L, a_i_j_k, b_i_j_k, c_i_j_k, q_i_j.
std::optional<VarId> parse_var(std::string_view s);

// Sorted by variable, exponents positive.
using Monomial = std::vector<std::pair<VarId, std::uint32_t>>;

std::uint32_t total_degree(const Monomial& m) noexcept;

// Graded lexicographic: higher total degree first, then the larger exponent of the first
// variable (in canonical order) where the monomials differ.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

using Grading = std::map<VarId, int>;

class SparsePoly {
 public:
  using Terms = std::map<Monomial, Integer, TermOrder>;

  SparsePoly() = default;
  SparsePoly(Integer constant);  // NOLINT: integers are polynomials
  SparsePoly(int constant) : SparsePoly(Integer(constant)) {}  // NOLINT
  static SparsePoly var(VarId v, std::uint32_t exponent = 1);
  static SparsePoly monomial(Monomial m, Integer coeff);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_constant() const noexcept;
  // Constant term (zero if absent).
  Integer constant_term() const;

  std::set<VarId> variables() const;
  bool contains(VarId v) const;
  std::uint32_t degree_in(VarId v) const;
  // Coefficient of v^e, a polynomial in the remaining variables.
  SparsePoly coefficient(VarId v, std::uint32_t e) const;
  // Maximal total degree; zero for the zero polynomial.
  std::uint32_t total_degree() const;
  // Gcd of the coefficients, zero for the zero polynomial.
  Integer content() const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o);
  SparsePoly operator-() const;
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  void add_term(const Monomial& m, const Integer& c);
  Terms terms_;
};

SparsePoly pow(const SparsePoly& p, std::uint32_t e);
// Exact division of every coefficient; throws InvalidInput when d does not divide them.
SparsePoly divide_exact(const SparsePoly& p, const Integer& d);

struct DivMod {
  SparsePoly quotient;
  SparsePoly remainder;
};
// Division by a polynomial monic in `var`, over the ring of the remaining variables.
DivMod divmod_in(const SparsePoly& f, const SparsePoly& g, VarId var);
inline DivMod divmod_in_x(const SparsePoly& f, const SparsePoly& g) { return divmod_in(f, g, VarId::x()); }

// Common weighted degree of all terms, or nullopt when inhomogeneous. Variables missing from the
// grading are an error. The zero polynomial has degree 0.
std::optional<int> weighted_degree(const SparsePoly& p, const Grading& grading);

// Terms of total degree exactly one.
SparsePoly linear_part(const SparsePoly& p);
SparsePoly substitute(const SparsePoly& p, VarId v, const SparsePoly& replacement);
// Replace every listed variable by an integer.
SparsePoly evaluate(const SparsePoly& p, const std::map<VarId, Integer>& values);

// Text form using + - * ^, terms in canonical order, e.g. "a_0_1_2 - a_0_0_1*a_0_1_1 + 2".
std::string to_string(const SparsePoly& p);
// Parses sums of products of integers, variables, powers and parenthesised subexpressions.
SparsePoly parse_poly(std::string_view text);

}  // namespace rpphilb
