#include "rpphilb/equations.hpp"

#include <algorithm>
#include <stdexcept>

#include "rpphilb/linalg.hpp"

namespace rpphilb {

namespace {

std::string box_name(int i, int j) { return "Z_" + std::to_string(i) + "_" + std::to_string(j); }

// Coefficients of x^(d-1), ..., x^0.
void push_coefficients(const SparsePoly& p, std::uint32_t d, IdealPresentation& ideal) {
  for (std::uint32_t e = d; e-- > 0;) ideal.generators.push_back(p.coefficient(VarId::x(), e));
}

// Content one, leading coefficient positive.
SparsePoly normalized(const SparsePoly& p) {
  if (p.is_zero()) return p;
  SparsePoly q = divide_exact(p, p.content());
  if (q.terms().begin()->second < 0) q = -q;
  return q;
}

IntMatrix linear_matrix(const std::vector<SparsePoly>& gens, const std::vector<VarId>& vars) {
  IntMatrix m(gens.size(), vars.size());
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (std::size_t c = 0; c < vars.size(); ++c) {
      const auto it = gens[r].terms().find(Monomial{{vars[c], 1}});
      if (it != gens[r].terms().end()) m(r, c) = it->second;
    }
  return m;
}

}  // namespace

AmbientSummary ambient_and_bundle(const Rpp& n) {
  AmbientSummary s;
  s.dim_ambient = n.at({0, 0});
  for (Box b : n.diagram().boxes()) {
    if (b.i >= 1) s.dim_ambient += n.at(b) - n.at({b.i - 1, b.j});
    if (b.j >= 1) s.dim_ambient += n.at(b) - n.at({b.i, b.j - 1});
    if (b.i >= 1 && b.j >= 1) s.rank_bundle += n.at(b) - n.at({b.i - 1, b.j - 1});
  }
  s.expected_dim = s.dim_ambient - s.rank_bundle;
  if (s.expected_dim != weight(n)) throw std::logic_error("ambient_and_bundle: expected dimension differs from weight");
  return s;
}

SparsePoly universal_poly(VarId::Kind kind, Box box, Value degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidInput, "negative polynomial degree");
  const auto d = static_cast<std::uint32_t>(degree);
  SparsePoly p = SparsePoly::var(VarId::x(), d);
  for (std::uint32_t k = 1; k <= d; ++k)
    p += SparsePoly::var(VarId{kind, box.i, box.j, static_cast<int>(k)}) * SparsePoly::var(VarId::x(), d - k);
  return p;
}

IdealPresentation type_i_ideal(const Rpp& n) {
  IdealPresentation ideal;
  for (Box b : n.diagram().boxes())
    for (int k = 1; k <= n.at(b); ++k) {
      ideal.ambient_vars.push_back(VarId::a(b.i, b.j, k));
      ideal.grading[ideal.ambient_vars.back()] = k;
    }
  std::sort(ideal.ambient_vars.begin(), ideal.ambient_vars.end());

  for (Box b : n.diagram().boxes()) {
    const SparsePoly p = universal_poly(VarId::Kind::A, b, n.at(b));
    for (Box d : {Box{b.i - 1, b.j}, Box{b.i, b.j - 1}}) {
      if (d.i < 0 || d.j < 0 || n.at(d) == 0) continue;
      const auto deg = static_cast<std::uint32_t>(n.at(d));
      const SparsePoly r = divmod_in_x(p, universal_poly(VarId::Kind::A, d, n.at(d))).remainder;
      push_coefficients(r, deg, ideal);
      ideal.groups.push_back({box_name(d.i, d.j) + " < " + box_name(b.i, b.j), b, deg});
    }
  }
  return ideal;
}

Value type_i_conditions(const Rpp& n) {
  Value total = 0;
  for (Box b : n.diagram().boxes()) total += n.at({b.i - 1, b.j}) + n.at({b.i, b.j - 1}) - n.at({b.i - 1, b.j - 1});
  return total;
}

IdealPresentation type_ii_ideal(const Rpp& n, bool minimal_border) {
  IdealPresentation ideal;
  auto lower = [&](int i, int j) {  // L_ij, 1 outside the diagram
    if (i < 0 || j < 0) return SparsePoly(1);
    return universal_poly(VarId::Kind::B, {i, j}, n.at({i, j}) - n.at({i - 1, j}));
  };
  auto upper = [&](int i, int j) {  // U_ij, 1 outside the diagram
    if (i < 0 || j < 0) return SparsePoly(1);
    return universal_poly(VarId::Kind::C, {i, j}, n.at({i, j}) - n.at({i, j - 1}));
  };

  for (Box b : n.diagram().boxes()) {
    const bool keep_b = !minimal_border || b.i >= 1 || b.j == 0;
    const bool keep_c = !minimal_border || b.j >= 1;
    if (keep_b)
      for (int k = 1; k <= n.at(b) - n.at({b.i - 1, b.j}); ++k) ideal.ambient_vars.push_back(VarId::b(b.i, b.j, k));
    if (keep_c)
      for (int k = 1; k <= n.at(b) - n.at({b.i, b.j - 1}); ++k) ideal.ambient_vars.push_back(VarId::c(b.i, b.j, k));
  }
  std::sort(ideal.ambient_vars.begin(), ideal.ambient_vars.end());
  for (const VarId& v : ideal.ambient_vars) ideal.grading[v] = v.k;

  for (Box b : n.diagram().boxes()) {
    if (minimal_border && (b.i == 0 || b.j == 0)) continue;
    const Value d = n.at(b) - n.at({b.i - 1, b.j - 1});
    if (d == 0) continue;
    const SparsePoly diff = lower(b.i, b.j) * upper(b.i - 1, b.j) - upper(b.i, b.j) * lower(b.i, b.j - 1);
    push_coefficients(diff, static_cast<std::uint32_t>(d), ideal);
    ideal.groups.push_back({"square " + box_name(b.i, b.j), b, static_cast<std::size_t>(d)});
  }
  return ideal;
}

bool check_grading(const IdealPresentation& ideal) {
  return std::all_of(ideal.generators.begin(), ideal.generators.end(),
                     [&](const SparsePoly& g) { return weighted_degree(g, ideal.grading).has_value(); });
}

TangentEmbedding tangent_embedding(const IdealPresentation& ideal) {
  if (!check_grading(ideal)) throw Error(ErrorCode::InvalidInput, "tangent embedding needs a homogeneous ideal");

  TangentEmbedding out;
  out.tangent_dim = ideal.ambient_vars.size() - rank(linear_matrix(ideal.generators, ideal.ambient_vars));

  // Generators are kept with content one and positive leading coefficient, so equal generators
  // up to a unit are literally equal and only one copy is kept.
  std::vector<SparsePoly> gens;
  for (const auto& g : ideal.generators) {
    SparsePoly s = normalized(g);
    if (!s.is_zero() && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(std::move(s));
  }

  std::vector<VarId> order(ideal.ambient_vars);
  std::stable_sort(order.begin(), order.end(),
                   [&](const VarId& u, const VarId& v) { return ideal.grading.at(u) < ideal.grading.at(v); });

  for (;;) {
    const bool has_linear = std::any_of(gens.begin(), gens.end(), [](const SparsePoly& g) {
      return !linear_part(g).is_zero();
    });
    if (!has_linear) break;

    std::optional<std::pair<VarId, std::size_t>> pivot;
    for (const VarId& v : order) {
      for (std::size_t k = 0; k < gens.size() && !pivot; ++k) {
        if (gens[k].degree_in(v) != 1) continue;
        const SparsePoly c = gens[k].coefficient(v, 1);
        if (c == SparsePoly(1) || c == SparsePoly(-1)) pivot = {v, k};
      }
      if (pivot) break;
    }
    if (!pivot)
      throw Error(ErrorCode::NoEliminableVariable,
                  "linear parts remain but no variable occurs with a unit coefficient and only linearly");

    const auto [v, k] = *pivot;
    // g = c*v + h with c = +-1, so v = -c*h = v - c*g.
    const SparsePoly g = gens[k];
    const SparsePoly replacement = SparsePoly::var(v) - g.coefficient(v, 1) * g;
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<SparsePoly> next;
    for (const auto& h : gens) {
      SparsePoly s = normalized(substitute(h, v, replacement));
      if (!s.is_zero() && std::find(next.begin(), next.end(), s) == next.end()) next.push_back(std::move(s));
    }
    gens = std::move(next);
    out.eliminated.push_back(v);
    std::erase(order, v);
  }

  if (ideal.ambient_vars.size() - out.eliminated.size() != out.tangent_dim)
    throw std::logic_error("tangent_embedding: eliminated variables disagree with the linear rank");

  for (const VarId& v : ideal.ambient_vars)
    if (std::find(out.eliminated.begin(), out.eliminated.end(), v) == out.eliminated.end()) {
      out.reduced.ambient_vars.push_back(v);
      out.reduced.grading[v] = ideal.grading.at(v);
    }
  out.reduced.generators = gens;
  for (const auto& g : gens) out.degrees.push_back(*weighted_degree(g, ideal.grading));
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

}  // namespace rpphilb
