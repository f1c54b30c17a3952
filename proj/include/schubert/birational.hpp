#pragma once

#include <map>
#include <string>
#include <vector>

#include "schubert/check.hpp"
#include "schubert/matrix.hpp"
#include "schubert/paths.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

using VarMap = std::map<VarId, RatFunc>;

enum class Algorithm { Paths, Detsimp };

std::string to_string(Algorithm a);

struct Components {
    RatFunc RL, R1, R2;
};

struct BirationalMap {
    Permutation perm;
    VarMap images;                            // u_α for every free variable
    std::map<VarId, Components> components;   // filled by r_paths only
    Algorithm algorithm = Algorithm::Paths;
    std::map<VarId, int> eps;                 // filled by r_detsimp only
};

// u_α = (−1)^{|D|−1} P(O → D) / Π_{1_μ ∈ D} ρ(1_μ), with the split by first step.
BirationalMap r_paths(const PatternMatrix &m);
BirationalMap r_paths(PathEngine &engine);

// Zero → 0, One → 1, Var(α) → images[α].
RFMatrix substitute(const PatternMatrix &m, const VarMap &images);
RFMatrix substitute(const PatternMatrix &m, const BirationalMap &map);

struct DetsimpSnapshot {
    VarId shifted;  // the variable just processed
    VarMap x;       // every entry after that shift
};

struct DetsimpResult {
    std::vector<DetsimpSnapshot> step1;
    VarMap x;                 // after the shifts
    VarMap y;                 // after the rescaling
    std::map<VarId, int> eps; // read off the superdiagonal of the UDL of wy
    BirationalMap u;          // y with n_α ↦ ε_α n_α
};

struct DetsimpError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

DetsimpResult r_detsimp(const PatternMatrix &m);

// Replaces each n_α by n_α·up_α/down_α in one pass.
RatFunc rescale_variables(const RatFunc &f, const std::map<VarId, std::pair<Monomial, Monomial>> &scale);

// Everything one permutation's checks share.
struct Analysis {
    explicit Analysis(const Permutation &p);

    PatternMatrix m;
    mutable PathEngine engine;
    BirationalMap map;
    RFMatrix wu;

    int r() const { return m.r(); }
    // n_{π(k),c} as it appears in wn: the symbol for a Var, 1 for a One, 0 otherwise.
    RatFunc n_at(int row, int col) const;
    const Components &comp(VarId v) const { return map.components.at(v); }
};

// Product of ρ over a set of Ones.
RatFunc rho_product(const PatternMatrix &m, const CellSet &ones);

// Lemma-level identities relating R_L on w and R on w̃; one result per variable with b < r.
void r_components_tilde_check(const Analysis &a, CheckSink &sink);

} // namespace schubert
