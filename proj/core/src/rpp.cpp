#include "rpphilb/rpp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace rpphilb {

Filling::Filling(YoungDiagram diagram, std::vector<Value> values)
    : diagram_(std::move(diagram)), values_(std::move(values)) {
  if (values_.size() != diagram_.size())
    throw Error(ErrorCode::DiagramMismatch, "filling has " + std::to_string(values_.size()) +
                                                " values for " + std::to_string(diagram_.size()) + " boxes");
}

Filling Filling::zero(const YoungDiagram& diagram) { return Filling(diagram, std::vector<Value>(diagram.size(), 0)); }

Value Filling::at(Box b) const noexcept {
  auto k = diagram_.find(b);
  return k ? values_[*k] : 0;
}

Value Filling::size() const noexcept {
  Value s = 0;
  for (Value v : values_) s += v;
  return s;
}

bool Filling::is_nonnegative() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](Value v) { return v >= 0; });
}

bool Filling::is_monotone() const noexcept {
  const auto& boxes = diagram_.boxes();
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const Box b = boxes[k];
    if (b.i > 0 && at({b.i - 1, b.j}) > values_[k]) return false;
    if (b.j > 0 && at({b.i, b.j - 1}) > values_[k]) return false;
  }
  return true;
}

Rpp::Rpp(Filling filling) : filling_(std::move(filling)) {
  if (!filling_.is_nonnegative()) throw Error(ErrorCode::InvalidInput, "reverse plane partitions are nonnegative");
  if (!filling_.is_monotone())
    throw Error(ErrorCode::InvalidInput, "reverse plane partitions are nondecreasing along rows and columns");
}

Rpp::Rpp(YoungDiagram diagram, std::vector<Value> values) : Rpp(Filling(std::move(diagram), std::move(values))) {}

Rpp Rpp::zero(const YoungDiagram& diagram) { return Rpp(Filling::zero(diagram)); }

bool Rpp::is_zero() const noexcept {
  return std::all_of(values().begin(), values().end(), [](Value v) { return v == 0; });
}

namespace {

void require_same_shape(const YoungDiagram& a, const YoungDiagram& b) {
  if (!(a == b)) throw Error(ErrorCode::DiagramMismatch, "operands have different shapes");
}

}  // namespace

Rpp add(const Rpp& a, const Rpp& b) {
  require_same_shape(a.diagram(), b.diagram());
  std::vector<Value> v(a.values());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] += b[k];
  return Rpp(a.diagram(), std::move(v));
}

Rpp scale(const Rpp& a, Value k) {
  if (k < 0) throw Error(ErrorCode::InvalidInput, "scaling factor must be nonnegative");
  std::vector<Value> v(a.values());
  for (Value& x : v) x *= k;
  return Rpp(a.diagram(), std::move(v));
}

std::optional<Rpp> try_subtract(const Rpp& a, const Rpp& b) {
  require_same_shape(a.diagram(), b.diagram());
  std::vector<Value> v(a.values());
  for (std::size_t k = 0; k < v.size(); ++k) {
    v[k] -= b[k];
    if (v[k] < 0) return std::nullopt;
  }
  Filling f(a.diagram(), std::move(v));
  if (!f.is_monotone()) return std::nullopt;
  return Rpp(std::move(f));
}

Filling derivative(const Rpp& n) {
  const auto& boxes = n.diagram().boxes();
  std::vector<Value> d(boxes.size());
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const Box b = boxes[k];
    d[k] = n[k] - n.at({b.i - 1, b.j}) - n.at({b.i, b.j - 1}) + n.at({b.i - 1, b.j - 1});
  }
  return Filling(n.diagram(), std::move(d));
}

Value weight_from_socle(const Rpp& n) {
  Value w = 0;
  for (Box b : n.diagram().socle()) w += n.at(b);
  for (Box b : n.diagram().subsocle()) w -= n.at(b);
  return w;
}

Value weight(const Rpp& n) {
  const Value w = derivative(n).size();
  if (w != weight_from_socle(n)) throw std::logic_error("weight: derivative and socle formulas disagree");
  return w;
}

Indicator::Indicator(UpperSet set) : set_(std::move(set)), rpp_(Rpp::zero(set_.diagram())) {
  if (set_.empty()) throw Error(ErrorCode::InvalidInput, "indicator of an empty upper set");
  if (!set_.connected()) throw Error(ErrorCode::InvalidInput, "indicator of a disconnected upper set");
  std::vector<Value> v(set_.members().size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = set_.members()[k] ? 1 : 0;
  rpp_ = Rpp(set_.diagram(), std::move(v));
}

bool Indicator::has_unique_minimum() const {
  int minima = 0;
  for (Box b : set_.boxes())
    if (!set_.contains({b.i - 1, b.j}) && !set_.contains({b.i, b.j - 1})) ++minima;
  return minima == 1;
}

bool canonical_before(const Indicator& a, const Indicator& b) {
  const auto& x = a.upper_set().members();
  const auto& y = b.upper_set().members();
  // Descending lexicographic: the first differing position decides, a 1 comes first.
  for (std::size_t k = 0; k < std::min(x.size(), y.size()); ++k)
    if (x[k] != y[k]) return x[k];
  return false;
}

std::vector<Indicator> indicators(const YoungDiagram& diagram, std::size_t max_boxes) {
  std::vector<Indicator> out;
  for (auto& u : enumerate_upper_sets(diagram, true, true, max_boxes)) out.emplace_back(std::move(u));
  std::sort(out.begin(), out.end(), canonical_before);
  return out;
}

bool is_indicator(const Rpp& n) { return weight(n) == 1; }

Factorization::Factorization(std::vector<FactorTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const FactorTerm& a, const FactorTerm& b) { return canonical_before(a.indicator, b.indicator); });
  for (auto& t : terms) {
    if (t.multiplicity < 0) throw Error(ErrorCode::InvalidInput, "negative multiplicity in a factorisation");
    if (t.multiplicity == 0) continue;
    if (!terms_.empty() && terms_.back().indicator == t.indicator)
      terms_.back().multiplicity += t.multiplicity;
    else
      terms_.push_back(std::move(t));
  }
}

Value Factorization::length() const noexcept {
  Value s = 0;
  for (const auto& t : terms_) s += t.multiplicity;
  return s;
}

Value Factorization::multiplicity(const Indicator& ind) const noexcept {
  for (const auto& t : terms_)
    if (t.indicator == ind) return t.multiplicity;
  return 0;
}

Rpp Factorization::reconstruct(const YoungDiagram& diagram) const {
  Rpp acc = Rpp::zero(diagram);
  for (const auto& t : terms_) acc = add(acc, scale(t.indicator.rpp(), t.multiplicity));
  return acc;
}

bool operator==(const Factorization& a, const Factorization& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (!(a.terms_[k].indicator == b.terms_[k].indicator) ||
        a.terms_[k].multiplicity != b.terms_[k].multiplicity)
      return false;
  return true;
}

Factorization standard_factorization(const Rpp& n) {
  if (n.is_zero()) throw Error(ErrorCode::ZeroInput, "the standard factorisation needs a nonzero RPP");
  std::set<Value> levels(n.values().begin(), n.values().end());
  std::vector<FactorTerm> terms;
  Value previous = 0;
  for (Value k : levels) {
    if (k == 0) continue;
    std::vector<bool> members(n.values().size());
    for (std::size_t b = 0; b < members.size(); ++b) members[b] = n[b] >= k;
    for (auto& part : connected_parts(UpperSet(n.diagram(), std::move(members))))
      terms.push_back({Indicator(std::move(part)), k - previous});
    previous = k;
  }
  return Factorization(std::move(terms));
}

std::optional<Factorization> complete_factorization(const Rpp& n) {
  const Filling d = derivative(n);
  if (!d.is_nonnegative()) return std::nullopt;
  const YoungDiagram& lambda = n.diagram();
  std::vector<FactorTerm> terms;
  for (std::size_t k = 0; k < d.values().size(); ++k) {
    if (d[k] == 0) continue;
    const Box m = lambda.boxes()[k];
    std::vector<bool> members(lambda.size());
    for (std::size_t b = 0; b < members.size(); ++b) members[b] = partial_order_leq(m, lambda.boxes()[b]);
    terms.push_back({Indicator(UpperSet(lambda, std::move(members))), d[k]});
  }
  return Factorization(std::move(terms));
}

std::vector<Factorization> all_factorizations(const Rpp& n, const Limits& limits) {
  const Value w = weight(n);
  if (w > limits.max_weight)
    throw Error(ErrorCode::SearchTooLarge,
                "weight " + std::to_string(w) + " exceeds the cap " + std::to_string(limits.max_weight));
  const auto inds = indicators(n.diagram(), limits.max_boxes);
  if (inds.size() > limits.max_indicators)
    throw Error(ErrorCode::SearchTooLarge, std::to_string(inds.size()) + " indicators exceed the cap " +
                                               std::to_string(limits.max_indicators));

  std::vector<Factorization> out;
  std::vector<Value> counts(inds.size(), 0);
  // Indices along a branch never decrease, so every multiset is reached exactly once.
  std::function<void(const Rpp&, std::size_t)> rec = [&](const Rpp& rest, std::size_t start) {
    if (rest.is_zero()) {
      std::vector<FactorTerm> terms;
      for (std::size_t k = 0; k < inds.size(); ++k)
        if (counts[k]) terms.push_back({inds[k], counts[k]});
      out.emplace_back(std::move(terms));
      return;
    }
    for (std::size_t k = start; k < inds.size(); ++k) {
      auto next = try_subtract(rest, inds[k].rpp());
      if (!next) continue;
      ++counts[k];
      rec(*next, k);
      --counts[k];
    }
  };
  rec(n, 0);
  return out;
}

std::vector<Rpp> enumerate_rpps(const YoungDiagram& diagram, Value max_size) {
  if (max_size < 0) throw Error(ErrorCode::InvalidInput, "max_size must be nonnegative");
  const auto& boxes = diagram.boxes();
  std::vector<Value> v(boxes.size(), 0);
  std::vector<Rpp> out;
  std::function<void(std::size_t, Value)> rec = [&](std::size_t k, Value budget) {
    if (k == boxes.size()) {
      out.emplace_back(diagram, v);
      return;
    }
    const Box b = boxes[k];
    Value lo = 0;
    if (b.i > 0) lo = std::max(lo, v[k - 1]);
    if (b.j > 0) lo = std::max(lo, v[diagram.index_of({b.i, b.j - 1})]);
    for (Value x = lo; x <= budget; ++x) {
      v[k] = x;
      rec(k + 1, budget - x);
    }
    v[k] = 0;
  };
  rec(0, max_size);
  return out;
}

}  // namespace rpphilb
