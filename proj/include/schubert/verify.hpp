#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "schubert/birational.hpp"
#include "schubert/check.hpp"

namespace schubert {

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::string fault;        // check id whose comparisons are perturbed, for failure-path tests
    int jacobian_points = 5;  // evaluation points per permutation when r >= 5
    int symbolic_jacobian_max_r = 4;
};

enum class Family { Theorem, Propositions, Lemmas, Cross };

std::string to_string(Family f);
std::optional<Family> parse_family(const std::string &s);
inline const std::vector<Family> kAllFamilies = {Family::Theorem, Family::Propositions, Family::Lemmas, Family::Cross};

// Per-permutation generator: the same (seed, π) always yields the same points.
std::mt19937_64 permutation_rng(std::uint64_t seed, const Permutation &p);
// Nonzero rationals with numerator and denominator bounded by 10^4 in absolute value.
EvalPoint random_eval_point(const std::vector<VarId> &vars, std::mt19937_64 &rng);

// UDL of wu: superdiagonal reciprocal sums, the partition they induce, the
// diagonal formula, the Jacobian, the R_L + R_1 + R_2 split and denominators.
std::vector<CheckResult> check_theorem(const Analysis &a, const VerifyOptions &opt = {});
// Every block size in scope is checked; the others are recorded as out_of_scope.
std::vector<CheckResult> check_propositions(const Analysis &a, const VerifyOptions &opt = {});
std::vector<CheckResult> check_lemmas(const Analysis &a, const VerifyOptions &opt = {});
// Path map against the determinant-shift map: Laurent terms up to sign, then exact.
std::vector<CheckResult> check_cross_algorithm(const Analysis &a, const VerifyOptions &opt = {});

std::vector<CheckResult> verify_permutation(const Permutation &p, const VerifyOptions &opt = {},
                                            const std::vector<Family> &families = kAllFamilies);

struct Tally {
    long pass = 0;
    long fail = 0;
    long out_of_scope = 0;
    long total() const { return pass + fail + out_of_scope; }
};

struct SweepOptions {
    int r = 3;
    std::optional<std::size_t> sample;  // nullopt enumerates all of S_r
    unsigned jobs = 1;
    VerifyOptions verify;
    std::vector<Family> families = kAllFamilies;
};

struct SweepReport {
    int r = 0;
    std::string mode;  // "full" or "sample(n)"
    std::uint64_t seed = 1;
    std::size_t permutations = 0;
    double seconds = 0;
    Tally totals;
    std::map<std::string, Tally> by_check;
    std::vector<CheckResult> failures;  // sorted by permutation, then check id
    bool ok() const { return totals.fail == 0; }
};

// n distinct permutations drawn deterministically; all of S_r when n >= r!.
std::vector<Permutation> sample_permutations(int r, std::size_t n, std::uint64_t seed);

SweepReport sweep(const SweepOptions &opt);
SweepReport summarize(int r, const std::string &mode, std::uint64_t seed, std::size_t permutations,
                      std::vector<CheckResult> results, double seconds);

// Reruns the check named in a witness on its permutation and returns the
// results for the same instance.
std::vector<CheckResult> replay(const std::string &witness_json, const VerifyOptions &opt = {});

} // namespace schubert
