#include "rpphilb/linalg.hpp"

namespace rpphilb {

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

void make_primitive_row(IntMatrix& a, std::size_t r) {
  Integer g = 0;
  for (std::size_t c = 0; c < a.cols(); ++c) g = gcd(g, abs_value(a(r, c)));
  if (g > 1)
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) /= g;
}

}  // namespace

Echelon echelon(const IntMatrix& m) {
  Echelon e{m, {}, {}};
  IntMatrix& a = e.matrix;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) {
      e.free_cols.push_back(col);
      continue;
    }
    if (p != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    if (a(row, col) < 0)
      for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) = -a(row, c);
    make_primitive_row(a, row);
    // Clear the column above and below with integer row operations.
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Integer f = a(r, col), d = a(row, col);
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = d * a(r, c) - f * a(row, c);
      make_primitive_row(a, r);
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

std::size_t rank(const IntMatrix& m) { return echelon(m).pivot_cols.size(); }

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  const Echelon e = echelon(m);
  Integer l = 1;
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) l = lcm(l, e.matrix(r, e.pivot_cols[r]));
  std::vector<IntVector> out;
  for (std::size_t f : e.free_cols) {
    IntVector v(m.cols(), Integer(0));
    v[f] = l;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
      v[e.pivot_cols[r]] = -(l / e.matrix(r, e.pivot_cols[r])) * e.matrix(r, f);
    out.push_back(normalize(std::move(v)));
  }
  return out;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, abs_value(x));
  return g;
}

IntVector normalize(IntVector v) {
  const Integer g = content(v);
  if (g == 0) return v;
  Integer sign = 1;
  for (const auto& x : v)
    if (x != 0) {
      sign = x < 0 ? -1 : 1;
      break;
    }
  for (auto& x : v) x = x / g * sign;
  return v;
}

IntVector multiply(const IntMatrix& m, const IntVector& v) {
  if (v.size() != m.cols()) throw Error(ErrorCode::InvalidInput, "vector length does not match the matrix");
  IntVector out(m.rows(), Integer(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace rpphilb
