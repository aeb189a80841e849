#pragma once

#include <span>
#include <vector>

#include "majorana/types.hpp"

namespace majorana {

// Polynomials are coefficient lists in ascending powers: p[0] + p[1] z + ...

Complex evaluate_polynomial(std::span<const Complex> ascending, Complex z);

/// Taylor coefficients a_t = P^(t)(center) / t! for t = 0 .. count-1.
std::vector<Complex> taylor_coefficients(std::span<const Complex> ascending, Complex center, int count);

/// Sum over i of |p_i| C(i, t) |center|^(i-t): the scale of the rounding error
/// committed when evaluating the t-th Taylor coefficient at center.
double taylor_error_scale(std::span<const Complex> ascending, Complex center, int t);

/// All roots of a polynomial whose highest listed coefficient is nonzero,
/// as eigenvalues of the balanced companion matrix.
std::vector<Complex> companion_roots(std::span<const Complex> ascending);

}  // namespace majorana
