#include "rpphilb/series.hpp"

#include <algorithm>
#include <numeric>

#include "rpphilb/rpp.hpp"

namespace rpphilb {

namespace {

Value total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), Value{0}); }

Integer binomial(Value n, Value k) {
  Integer r = 1;
  for (Value t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

}  // namespace

Curve parse_curve(std::string_view name) {
  if (name == "A1") return Curve::A1;
  if (name == "P1") return Curve::P1;
  throw Error(ErrorCode::UnsupportedCurve, "supported curves are A1 and P1", std::string(name));
}

std::string_view to_string(Curve c) noexcept { return c == Curve::A1 ? "A1" : "P1"; }

std::size_t num_series_vars(const YoungDiagram& diagram, SeriesVariables mode) {
  switch (mode) {
    case SeriesVariables::PerBox: return diagram.size();
    case SeriesVariables::Single: return 1;
    case SeriesVariables::Diagonal: return static_cast<std::size_t>(diagram.num_cols() + diagram.num_rows() - 1);
  }
  return 0;
}

Exponents project(const YoungDiagram& diagram, SeriesVariables mode, const Exponents& per_box) {
  if (per_box.size() != diagram.size())
    throw Error(ErrorCode::DiagramMismatch, "exponent vector does not match the diagram");
  if (mode == SeriesVariables::PerBox) return per_box;
  Exponents out(num_series_vars(diagram, mode), 0);
  for (std::size_t k = 0; k < per_box.size(); ++k) {
    const Box b = diagram.boxes()[k];
    const std::size_t slot =
        mode == SeriesVariables::Single ? 0 : static_cast<std::size_t>(b.i - b.j + diagram.num_rows() - 1);
    out[slot] += per_box[k];
  }
  return out;
}

TruncatedSeries::TruncatedSeries(YoungDiagram diagram, SeriesVariables mode, Value max_size)
    : diagram_(std::move(diagram)), mode_(mode), max_size_(max_size), num_vars_(num_series_vars(diagram_, mode)) {
  if (max_size_ < 0) throw Error(ErrorCode::InvalidInput, "truncation size must be nonnegative");
}

TruncatedSeries TruncatedSeries::one(YoungDiagram diagram, SeriesVariables mode, Value max_size) {
  TruncatedSeries s(std::move(diagram), mode, max_size);
  s.add_term(Exponents(s.num_vars_, 0), SparsePoly(1));
  return s;
}

SparsePoly TruncatedSeries::coefficient(const Exponents& e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? SparsePoly() : it->second;
}

void TruncatedSeries::add_term(const Exponents& e, const SparsePoly& c) {
  if (e.size() != num_vars_) throw Error(ErrorCode::InvalidInput, "exponent vector has the wrong length");
  if (total(e) > max_size_ || c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void TruncatedSeries::require_compatible(const TruncatedSeries& o) const {
  if (!(diagram_ == o.diagram_) || mode_ != o.mode_ || max_size_ != o.max_size_)
    throw Error(ErrorCode::DiagramMismatch, "series live in different rings");
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
  require_compatible(o);
  TruncatedSeries out(diagram_, mode_, max_size_);
  for (const auto& [ea, ca] : coeffs_) {
    const Value sa = total(ea);
    for (const auto& [eb, cb] : o.coeffs_) {
      if (sa + total(eb) > max_size_) continue;
      Exponents e(ea);
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return *this = std::move(out);
}

Exponents hook_variable(const YoungDiagram& diagram, Box b) {
  Exponents e(diagram.size(), 0);
  for (Box c : diagram.hook(b)) e[diagram.index_of(c)] = 1;
  return e;
}

TruncatedSeries factor_power(const YoungDiagram& diagram, SeriesVariables mode, Value max_size, const Exponents& v,
                             const SparsePoly& w, Value m) {
  const Value step = total(v);
  if (step <= 0) throw Error(ErrorCode::InvalidInput, "series factor needs a nonzero exponent vector");
  if (m == 0) return TruncatedSeries::one(diagram, mode, max_size);
  TruncatedSeries s(diagram, mode, max_size);
  const Value top = m > 0 ? max_size / step : std::min(-m, max_size / step);
  SparsePoly wk(1);
  for (Value k = 0; k <= top; ++k) {
    Exponents e(v);
    for (auto& x : e) x *= k;
    // (1 - wt)^(-m) is a negative binomial series for m > 0 and a finite binomial sum for m < 0.
    const Integer c = m > 0 ? binomial(m + k - 1, k) : binomial(-m, k) * (k % 2 ? -1 : 1);
    s.add_term(e, SparsePoly(c) * wk);
    wk *= w;
  }
  return s;
}

TruncatedSeries geometric_inverse(const YoungDiagram& diagram, SeriesVariables mode, Value max_size,
                                  const Exponents& v, const SparsePoly& w) {
  return factor_power(diagram, mode, max_size, v, w, 1);
}

TruncatedSeries rpp_series_bruteforce(const YoungDiagram& diagram, Value max_size, SeriesVariables mode) {
  TruncatedSeries s(diagram, mode, max_size);
  for (const Rpp& n : enumerate_rpps(diagram, max_size)) s.add_term(project(diagram, mode, n.values()), SparsePoly(1));
  return s;
}

namespace {

TruncatedSeries hook_power_product(const YoungDiagram& diagram, Value max_size, SeriesVariables mode,
                                   const SparsePoly& w, Value m) {
  TruncatedSeries s = TruncatedSeries::one(diagram, mode, max_size);
  for (Box b : diagram.boxes())
    s *= factor_power(diagram, mode, max_size, project(diagram, mode, hook_variable(diagram, b)), w, m);
  return s;
}

}  // namespace

TruncatedSeries hook_product(const YoungDiagram& diagram, Value max_size, SeriesVariables mode) {
  return hook_power_product(diagram, max_size, mode, SparsePoly(1), 1);
}

TruncatedSeries motivic_series(const YoungDiagram& diagram, Curve curve, Value max_size, SeriesVariables mode) {
  const SparsePoly lef = SparsePoly::var(VarId::lefschetz());
  TruncatedSeries s = hook_power_product(diagram, max_size, mode, lef, 1);
  if (curve == Curve::P1) s *= hook_power_product(diagram, max_size, mode, SparsePoly(1), 1);
  return s;
}

TruncatedSeries euler_series(const YoungDiagram& diagram, Value chi, Value max_size, SeriesVariables mode) {
  return hook_power_product(diagram, max_size, mode, SparsePoly(1), chi);
}

TruncatedSeries specialize_lefschetz(const TruncatedSeries& s, const Integer& value) {
  TruncatedSeries out(s.diagram(), s.mode(), s.max_size());
  const std::map<VarId, Integer> at{{VarId::lefschetz(), value}};
  for (const auto& [e, c] : s.coefficients()) out.add_term(e, evaluate(c, at));
  return out;
}

}  // namespace rpphilb
