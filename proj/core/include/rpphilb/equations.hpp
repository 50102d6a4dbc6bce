#pragma once

// Local equations of the double nested Hilbert scheme of the affine line.
//
// Type I: one monic polynomial P_ij of degree n_ij per box with coefficients a(i,j,k); adjacent
// polynomials must divide each other. Type II: one monic polynomial per edge, L_ij of degree
// n_ij - n_{i-1,j} (coefficients b) and U_ij of degree n_ij - n_{i,j-1} (coefficients c); the two
// ways round each square must agree, L_ij U_{i-1,j} = U_ij L_{i,j-1}.

#include <string>
#include <vector>

#include "rpphilb/poly.hpp"
#include "rpphilb/rpp.hpp"

namespace rpphilb {

struct AmbientSummary {
  Value dim_ambient = 0;
  Value rank_bundle = 0;
  Value expected_dim = 0;
};

struct GeneratorGroup {
  std::string label;
  Box box;
  std::size_t size = 0;
};

struct IdealPresentation {
  std::vector<VarId> ambient_vars;  // canonical order
  std::vector<SparsePoly> generators;
  Grading grading;
  // Consecutive runs of generators; sizes add up to generators.size().
  std::vector<GeneratorGroup> groups;
};

AmbientSummary ambient_and_bundle(const Rpp& n);

// Universal polynomial x^d + sum_k coeff(k) x^(d-k) for the given coefficient kind and box.
SparsePoly universal_poly(VarId::Kind kind, Box box, Value degree);

IdealPresentation type_i_ideal(const Rpp& n);
// Number of independent conditions, sum over boxes of n_{i-1,j} + n_{i,j-1} - n_{i-1,j-1}.
Value type_i_conditions(const Rpp& n);

// With minimal_border the variables are those of the smooth ambient space: the row-0 edge
// polynomials L_{i,0}, the column-0 edge polynomials U_{0,j} for j >= 1 and everything interior.
// Only boxes with i, j >= 1 contribute generators.
IdealPresentation type_ii_ideal(const Rpp& n, bool minimal_border = false);

bool check_grading(const IdealPresentation& ideal);

struct TangentEmbedding {
  std::size_t tangent_dim = 0;
  std::vector<VarId> eliminated;  // in elimination order
  IdealPresentation reduced;
  std::vector<int> degrees;  // weighted degrees of the surviving generators, sorted
};

// Repeatedly solves a generator for a variable that occurs in it only linearly with coefficient
// +-1, picking the variable of smallest weighted degree (then canonical order) and the first
// generator that qualifies. Generators equal up to sign are merged. Throws NoEliminableVariable
// when linear parts remain but no such variable exists, and InvalidInput on an inhomogeneous
// ideal.
TangentEmbedding tangent_embedding(const IdealPresentation& ideal);

}  // namespace rpphilb
