#include "rpphilb/pointcount.hpp"

#include <functional>
#include <optional>
#include <string>

namespace rpphilb {

PrimeField::PrimeField(int p, int max_prime) : p_(p) {
  bool prime = p >= 2;
  for (int d = 2; prime && d * d <= p; ++d) prime = p % d != 0;
  if (!prime) throw Error(ErrorCode::NonprimeModulus, "modulus must be prime", std::to_string(p));
  if (p > max_prime)
    throw Error(ErrorCode::BudgetExceeded, "prime exceeds the cap " + std::to_string(max_prime), std::to_string(p));
}

bool divides(const PrimeField& f, const MonicPoly& d, const MonicPoly& n) {
  if (d.degree() > n.degree()) return false;
  const int p = f.p();
  std::vector<int> r(n.coeffs);
  r.push_back(1);
  std::vector<int> g(d.coeffs);
  g.push_back(1);
  for (std::size_t top = r.size(); top-- >= g.size();) {
    const int c = r[top];
    if (c == 0) continue;
    const std::size_t shift = top - (g.size() - 1);
    for (std::size_t k = 0; k < g.size(); ++k) r[shift + k] = ((r[shift + k] - c * g[k]) % p + p) % p;
  }
  for (std::size_t k = 0; k + 1 < g.size(); ++k)
    if (r[k] != 0) return false;
  return true;
}

Integer count_points(const Rpp& n, const PrimeField& field, const Limits& limits) {
  const int p = field.p();
  const auto& boxes = n.diagram().boxes();
  Integer naive = 1;
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    naive *= boost::multiprecision::pow(Integer(p), static_cast<unsigned>(n[k]));
    if (naive > limits.budget)
      throw Error(ErrorCode::BudgetExceeded,
                  "point count needs more than " + std::to_string(limits.budget) + " candidate tuples");
  }

  std::vector<MonicPoly> chosen(boxes.size());
  Integer count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == boxes.size()) {
      ++count;
      return;
    }
    const Box b = boxes[k];
    std::optional<std::size_t> left, up;
    if (b.i > 0) left = k - 1;
    if (b.j > 0) up = n.diagram().index_of({b.i, b.j - 1});
    MonicPoly& poly = chosen[k];
    poly.coeffs.assign(static_cast<std::size_t>(n[k]), 0);
    // Odometer over all coefficient vectors.
    for (;;) {
      if ((!left || divides(field, chosen[*left], poly)) && (!up || divides(field, chosen[*up], poly))) rec(k + 1);
      std::size_t c = 0;
      while (c < poly.coeffs.size() && poly.coeffs[c] == p - 1) poly.coeffs[c++] = 0;
      if (c == poly.coeffs.size()) break;
      ++poly.coeffs[c];
    }
  };
  rec(0);
  return count;
}

Integer evaluate_motive(const SparsePoly& coefficient, const Integer& p) {
  for (const VarId& v : coefficient.variables())
    if (!(v == VarId::lefschetz()))
      throw Error(ErrorCode::InvalidInput, "motive must be a polynomial in L", to_string(coefficient));
  return evaluate(coefficient, {{VarId::lefschetz(), p}}).constant_term();
}

}  // namespace rpphilb
