#pragma once

// Points of the double nested Hilbert scheme of the affine line over a prime field, counted by
// brute force: lambda-shaped arrays of monic polynomials with P_{i-1,j} | P_ij and P_{i,j-1} | P_ij.

#include <cstdint>
#include <vector>

#include "rpphilb/poly.hpp"
#include "rpphilb/rpp.hpp"

namespace rpphilb {

class PrimeField {
 public:
  // Throws NonprimeModulus for p < 2 or composite p, BudgetExceeded above the configured cap.
  explicit PrimeField(int p, int max_prime = Limits{}.max_prime);
  int p() const noexcept { return p_; }

 private:
  int p_;
};

// Monic polynomial over F_p; coefficients low degree first, the leading 1 implicit.
struct MonicPoly {
  std::vector<int> coeffs;
  std::size_t degree() const noexcept { return coeffs.size(); }
};

bool divides(const PrimeField& f, const MonicPoly& d, const MonicPoly& n);

// Throws BudgetExceeded when prod p^(n_box) exceeds limits.budget.
Integer count_points(const Rpp& n, const PrimeField& field, const Limits& limits = {});

// Value of a polynomial in L at L = p. Throws InvalidInput on any other variable.
Integer evaluate_motive(const SparsePoly& coefficient, const Integer& p);

}  // namespace rpphilb
