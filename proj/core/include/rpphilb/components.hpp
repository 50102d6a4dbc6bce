#pragma once

// Irreducible components of the double nested Hilbert scheme of a curve. Components are indexed
// by factorisations; their geometry is read off from integer relations among the indicators.

#include <optional>
#include <utility>
#include <vector>

#include "rpphilb/linalg.hpp"
#include "rpphilb/rpp.hpp"

namespace rpphilb {

// A relation among the support of a factorisation. Entry k belongs to terms()[k].
struct RelationCheck {
  bool holds = false;
  std::optional<IntVector> witness;
};

struct ComponentReport {
  Factorization factorization;
  Value dimension = 0;
  bool smooth = false;
  bool bijective_on_points = false;
  bool differential_injective = false;
  // Over the support of the factorisation, in term order.
  std::optional<IntVector> relation_witness;
  // Exponents of the product of symmetric powers normalising the component.
  std::vector<std::pair<Indicator, Value>> normalization;
};

Value component_dimension(const Rpp& n);
// Socle-peeling recursion, independent of the derivative.
Value dimension_recursive(const Rpp& n);

// Columns are the indicators of the support, rows are the boxes.
IntMatrix support_matrix(const Factorization& t);

// Injective iff the support indicators are linearly independent. The witness is a primitive
// kernel vector.
RelationCheck differential_injective(const Factorization& t);

// Bijective iff no nonzero integer relation m has |m_k| <= n_k on the support. The witness has
// minimal L1 norm, ties broken lexicographically. Throws SearchTooLarge when the box over the
// free coordinates has more than limits.budget points.
RelationCheck bijective_on_points(const Factorization& t, const Limits& limits = {});

ComponentReport report(const Rpp& n, const Factorization& t, const Limits& limits = {});
std::vector<ComponentReport> classify(const Rpp& n, const Limits& limits = {});

}  // namespace rpphilb
