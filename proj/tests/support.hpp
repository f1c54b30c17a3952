#pragma once

#include <random>
#include <string>
#include <vector>

#include "schubert/io.hpp"
#include "schubert/verify.hpp"

namespace schubert::testing {

// Text form used by RatFunc::to_string, e.g. "(n.1.3·n.1.4 + n.1.4·n.3.4) / n.3.4".
inline RatFunc rf(const std::string &s) { return parse_ratfunc(s); }
inline RatFunc n(int a, int b) { return RatFunc::var({a, b}); }

// Random sparse polynomial in the variables n_{1,2}..n_{1+vars,...} with small coefficients.
MultiPoly random_poly(std::mt19937_64 &rng, int max_terms, int max_degree);
// Numerator over a random monomial, or over a random polynomial when `poly_den`.
RatFunc random_ratfunc(std::mt19937_64 &rng, bool poly_den);
RFMatrix random_matrix(std::mt19937_64 &rng, int size, double zero_fraction, bool poly_den);
EvalPoint random_point(std::mt19937_64 &rng);
// g = N·H·N⁻ with random unit upper N, unit lower N⁻ and nonzero diagonal H,
// entries over monomial denominators. The factors are returned for comparison.
Udl<RatFunc> random_udl_factors(std::mt19937_64 &rng, int size);
const std::vector<VarId> &random_vars();

// Σ_σ sgn(σ) Π a_{i,σ(i)} over all permutations.
RatFunc leibniz_determinant(const RFMatrix &a);

// P(A → B) by enumerating every path of every origin-destination pair and
// keeping the bijections whose paths share no cell.
MultiPoly brute_force_path_sum(const PatternMatrix &m, const CellSet &A, const CellSet &B);
std::size_t brute_force_family_count(const PatternMatrix &m, const CellSet &A, const CellSet &B);

// Count of results with the given status whose id starts with `prefix`.
long count(const std::vector<CheckResult> &results, const std::string &prefix, Status s);

} // namespace schubert::testing
