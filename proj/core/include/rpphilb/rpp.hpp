#pragma once

// Reverse plane partitions and the factorisation theory of the monoid they form under addition.

#include <cstddef>
#include <optional>
#include <vector>

#include "rpphilb/diagram.hpp"

namespace rpphilb {

// An integer label per box of a diagram, row-major.
class Filling {
 public:
  Filling(YoungDiagram diagram, std::vector<Value> values);
  static Filling zero(const YoungDiagram& diagram);

  const YoungDiagram& diagram() const noexcept { return diagram_; }
  const std::vector<Value>& values() const noexcept { return values_; }

  // Zero outside the diagram.
  Value at(Box b) const noexcept;
  Value operator[](std::size_t k) const { return values_[k]; }
  Value size() const noexcept;

  bool is_nonnegative() const noexcept;
  bool is_monotone() const noexcept;

  friend bool operator==(const Filling& a, const Filling& b) = default;

 private:
  YoungDiagram diagram_;
  std::vector<Value> values_;
};

// A nonnegative filling nondecreasing along rows and columns.
class Rpp {
 public:
  explicit Rpp(Filling filling);
  Rpp(YoungDiagram diagram, std::vector<Value> values);
  static Rpp zero(const YoungDiagram& diagram);

  const Filling& filling() const noexcept { return filling_; }
  const YoungDiagram& diagram() const noexcept { return filling_.diagram(); }
  const std::vector<Value>& values() const noexcept { return filling_.values(); }
  Value at(Box b) const noexcept { return filling_.at(b); }
  Value operator[](std::size_t k) const { return filling_[k]; }
  Value size() const noexcept { return filling_.size(); }
  bool is_zero() const noexcept;

  friend bool operator==(const Rpp& a, const Rpp& b) = default;

 private:
  Filling filling_;
};

Rpp add(const Rpp& a, const Rpp& b);
Rpp scale(const Rpp& a, Value k);
// a - b when the difference is again a reverse plane partition.
std::optional<Rpp> try_subtract(const Rpp& a, const Rpp& b);

// Mixed second difference, zero-extended outside the diagram.
Filling derivative(const Rpp& n);
// Sum of the derivative; checked against the socle/subsocle formula.
Value weight(const Rpp& n);
Value weight_from_socle(const Rpp& n);

// The indicator of a nonempty connected upper set: the irreducible elements of the monoid.
class Indicator {
 public:
  explicit Indicator(UpperSet set);

  const UpperSet& upper_set() const noexcept { return set_; }
  const Rpp& rpp() const noexcept { return rpp_; }
  // True when the upper set has a unique minimal box.
  bool has_unique_minimum() const;

  friend bool operator==(const Indicator& a, const Indicator& b) { return a.set_ == b.set_; }

 private:
  UpperSet set_;
  Rpp rpp_;
};

// Canonical order: descending lexicographic on the row-major 0/1 vector.
bool canonical_before(const Indicator& a, const Indicator& b);

std::vector<Indicator> indicators(const YoungDiagram& diagram, std::size_t max_boxes = Limits{}.max_boxes);
bool is_indicator(const Rpp& n);

struct FactorTerm {
  Indicator indicator;
  Value multiplicity;
};

// A multiset of indicators summing to a target; terms are in canonical indicator order and all
// multiplicities are positive.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<FactorTerm> terms);

  const std::vector<FactorTerm>& terms() const noexcept { return terms_; }
  std::size_t support_size() const noexcept { return terms_.size(); }
  Value length() const noexcept;
  Value multiplicity(const Indicator& ind) const noexcept;
  // Sum of multiplicity * indicator. Needs a diagram when the factorisation is empty.
  Rpp reconstruct(const YoungDiagram& diagram) const;

  friend bool operator==(const Factorization& a, const Factorization& b);

 private:
  std::vector<FactorTerm> terms_;
};

// Level-set factorisation. Throws ZeroInput on the zero RPP.
Factorization standard_factorization(const Rpp& n);
// Factorisation by principal upper sets; present iff the derivative is nonnegative.
std::optional<Factorization> complete_factorization(const Rpp& n);
// Every factorisation, duplicate free, in depth-first order over the canonical indicator list.
std::vector<Factorization> all_factorizations(const Rpp& n, const Limits& limits = {});

// All RPPs of the given shape with size at most max_size, in lexicographic row-major order.
std::vector<Rpp> enumerate_rpps(const YoungDiagram& diagram, Value max_size);

}  // namespace rpphilb
