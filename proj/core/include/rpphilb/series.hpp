#pragma once

// Truncated generating series over RPPs of a fixed shape, with coefficients polynomial in L.
//
// The series variables come in three flavours: one q per box, a single q counting |n|, or one
// variable per diagonal i - j (the trace grading). Truncation is always by total degree, which is
// |n| in every flavour.

#include <map>
#include <string_view>
#include <vector>

#include "rpphilb/diagram.hpp"
#include "rpphilb/poly.hpp"

namespace rpphilb {

enum class SeriesVariables { PerBox, Single, Diagonal };
enum class Curve { A1, P1 };

// Accepts "A1" and "P1"; anything else is UnsupportedCurve.
Curve parse_curve(std::string_view name);
std::string_view to_string(Curve c) noexcept;

using Exponents = std::vector<Value>;

std::size_t num_series_vars(const YoungDiagram& diagram, SeriesVariables mode);
// Maps a per-box exponent vector to the chosen variable flavour.
Exponents project(const YoungDiagram& diagram, SeriesVariables mode, const Exponents& per_box);

class TruncatedSeries {
 public:
  using Coefficients = std::map<Exponents, SparsePoly>;

  TruncatedSeries(YoungDiagram diagram, SeriesVariables mode, Value max_size);
  static TruncatedSeries one(YoungDiagram diagram, SeriesVariables mode, Value max_size);

  const YoungDiagram& diagram() const noexcept { return diagram_; }
  SeriesVariables mode() const noexcept { return mode_; }
  Value max_size() const noexcept { return max_size_; }
  std::size_t num_vars() const noexcept { return num_vars_; }
  const Coefficients& coefficients() const noexcept { return coeffs_; }

  // Zero when absent or beyond the truncation.
  SparsePoly coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const SparsePoly& c);

  TruncatedSeries& operator*=(const TruncatedSeries& o);
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.diagram_ == b.diagram_ && a.mode_ == b.mode_ && a.max_size_ == b.max_size_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void require_compatible(const TruncatedSeries& o) const;

  YoungDiagram diagram_;
  SeriesVariables mode_;
  Value max_size_;
  std::size_t num_vars_;
  Coefficients coeffs_;
};

// 0/1 per-box exponent vector of the hook of b.
Exponents hook_variable(const YoungDiagram& diagram, Box b);

// (1 - w q^v)^(-m) for any integer m, truncated; v is in the series' own variables.
TruncatedSeries factor_power(const YoungDiagram& diagram, SeriesVariables mode, Value max_size, const Exponents& v,
                             const SparsePoly& w, Value m);
// sum_k w^k q^(k v).
TruncatedSeries geometric_inverse(const YoungDiagram& diagram, SeriesVariables mode, Value max_size,
                                  const Exponents& v, const SparsePoly& w);

// Sum of q^n over all RPPs with |n| <= max_size.
TruncatedSeries rpp_series_bruteforce(const YoungDiagram& diagram, Value max_size,
                                      SeriesVariables mode = SeriesVariables::PerBox);
// Product over boxes of (1 - p_box)^(-1).
TruncatedSeries hook_product(const YoungDiagram& diagram, Value max_size,
                             SeriesVariables mode = SeriesVariables::PerBox);
// Product over boxes of zeta_C(p_box): (1 - L t)^(-1) for A1, ((1 - t)(1 - L t))^(-1) for P1.
TruncatedSeries motivic_series(const YoungDiagram& diagram, Curve curve, Value max_size,
                               SeriesVariables mode = SeriesVariables::PerBox);
// Product over boxes of (1 - p_box)^(-chi).
TruncatedSeries euler_series(const YoungDiagram& diagram, Value chi, Value max_size,
                             SeriesVariables mode = SeriesVariables::PerBox);

// Replace L by an integer in every coefficient.
TruncatedSeries specialize_lefschetz(const TruncatedSeries& s, const Integer& value);

}  // namespace rpphilb
