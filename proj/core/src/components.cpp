#include "rpphilb/components.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rpphilb {

Value component_dimension(const Rpp& n) {
  const Value w = weight(n);
  if (w != dimension_recursive(n)) throw std::logic_error("component_dimension: recursion disagrees with weight");
  return w;
}

Value dimension_recursive(const Rpp& n) {
  // Column label vectors; column i has length equal to its height.
  std::vector<std::vector<Value>> cols;
  for (int i = 0; i < n.diagram().num_cols(); ++i) {
    cols.emplace_back();
    for (int j = 0; j < n.diagram().height(i); ++j) cols.back().push_back(n.at({i, j}));
  }

  Value acc = 0;
  for (;;) {
    // Socle boxes sit at the bottom of each column that is strictly taller than its right
    // neighbour; listed left to right.
    std::vector<std::pair<std::size_t, std::size_t>> socle;
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (i + 1 == cols.size() || cols[i + 1].size() < cols[i].size()) socle.emplace_back(i, cols[i].size() - 1);

    if (socle.size() == 1) return acc + cols[socle[0].first][socle[0].second];

    const auto [i1, j1] = socle[0];
    if (i1 > 0) {
      cols.erase(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(i1));
      continue;
    }
    const std::size_t j2 = socle[1].second;
    acc += cols[0][j1] - cols[0][j2];
    cols[0].resize(j2 + 1);
  }
}

IntMatrix support_matrix(const Factorization& t) {
  const auto& terms = t.terms();
  if (terms.empty()) return IntMatrix();
  const std::size_t boxes = terms.front().indicator.rpp().values().size();
  IntMatrix m(boxes, terms.size());
  for (std::size_t c = 0; c < terms.size(); ++c)
    for (std::size_t r = 0; r < boxes; ++r) m(r, c) = terms[c].indicator.rpp()[r];
  return m;
}

RelationCheck differential_injective(const Factorization& t) {
  auto basis = kernel_basis(support_matrix(t));
  if (basis.empty()) return {true, std::nullopt};
  return {false, std::move(basis.front())};
}

namespace {

Integer l1_norm(const IntVector& v) {
  Integer s = 0;
  for (const auto& x : v) s += x < 0 ? Integer(-x) : x;
  return s;
}

bool better_witness(const IntVector& a, const IntVector& b) {
  const Integer na = l1_norm(a), nb = l1_norm(b);
  if (na != nb) return na < nb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

RelationCheck bijective_on_points(const Factorization& t, const Limits& limits) {
  const auto& terms = t.terms();
  if (terms.empty()) return {true, std::nullopt};
  const Echelon e = echelon(support_matrix(t));
  if (e.free_cols.empty()) return {true, std::nullopt};

  // Every relation is determined by its free coordinates, so scanning the box over them is
  // exhaustive.
  std::uint64_t points = 1;
  for (std::size_t f : e.free_cols) {
    const auto side = static_cast<std::uint64_t>(2 * terms[f].multiplicity + 1);
    if (points > limits.budget / side)
      throw Error(ErrorCode::SearchTooLarge, "relation search box exceeds the budget of " +
                                                 std::to_string(limits.budget) + " points");
    points *= side;
  }

  const std::size_t s = terms.size();
  std::vector<Value> free_values(e.free_cols.size());
  for (std::size_t k = 0; k < free_values.size(); ++k) free_values[k] = -terms[e.free_cols[k]].multiplicity;

  std::optional<IntVector> best;
  for (;;) {
    bool nonzero = std::any_of(free_values.begin(), free_values.end(), [](Value v) { return v != 0; });
    if (nonzero) {
      IntVector m(s, Integer(0));
      for (std::size_t k = 0; k < free_values.size(); ++k) m[e.free_cols[k]] = free_values[k];
      bool ok = true;
      for (std::size_t r = 0; r < e.pivot_cols.size() && ok; ++r) {
        Integer acc = 0;
        for (std::size_t k = 0; k < free_values.size(); ++k) acc += e.matrix(r, e.free_cols[k]) * free_values[k];
        const Integer& d = e.matrix(r, e.pivot_cols[r]);
        if (acc % d != 0) {
          ok = false;
          break;
        }
        const Integer x = -acc / d;
        const Integer bound = terms[e.pivot_cols[r]].multiplicity;
        if (x > bound || x < -bound) ok = false;
        m[e.pivot_cols[r]] = x;
      }
      if (ok) {
        m = normalize(std::move(m));
        if (!best || better_witness(m, *best)) best = std::move(m);
      }
    }
    std::size_t k = 0;
    while (k < free_values.size() && free_values[k] == terms[e.free_cols[k]].multiplicity) {
      free_values[k] = -terms[e.free_cols[k]].multiplicity;
      ++k;
    }
    if (k == free_values.size()) break;
    ++free_values[k];
  }
  if (best) return {false, std::move(best)};
  return {true, std::nullopt};
}

ComponentReport report(const Rpp& n, const Factorization& t, const Limits& limits) {
  ComponentReport r;
  r.factorization = t;
  r.dimension = component_dimension(n);
  auto diff = differential_injective(t);
  auto bij = bijective_on_points(t, limits);
  r.differential_injective = diff.holds;
  r.bijective_on_points = bij.holds;
  r.smooth = diff.holds;
  if (!bij.holds)
    r.relation_witness = std::move(bij.witness);
  else if (!diff.holds)
    r.relation_witness = std::move(diff.witness);
  for (const auto& term : t.terms()) r.normalization.emplace_back(term.indicator, term.multiplicity);
  return r;
}

std::vector<ComponentReport> classify(const Rpp& n, const Limits& limits) {
  std::vector<ComponentReport> out;
  for (const auto& t : all_factorizations(n, limits)) out.push_back(report(n, t, limits));
  return out;
}

}  // namespace rpphilb
