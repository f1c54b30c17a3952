#pragma once

#include "schubert/birational.hpp"

namespace schubert {

// Identity checks for the path-polynomial and column-operation lemmas. Each
// function records one result per instance satisfying the hypotheses, or one
// out_of_scope result per check id when no instance exists.

// u − n_{π(a),r}·u_{π(a−1),b} against R_L + R_1, and R_2 against the variable above.
void verify_rowop_lemma(const Analysis &a, CheckSink &sink);

// P_1 split by the upward origins of O_1; the up-set identities it relies on;
// the resulting R_1 formula.
void verify_p1_expansion(const Analysis &a, CheckSink &sink);

// First-step and alternating expansions of P_L over decomposable destination sets.
void verify_pl_expansions(const Analysis &a, CheckSink &sink);

// P_L on w against P on the reduced element, with matching family counts.
void verify_pl_tilde(const Analysis &a, CheckSink &sink);

// The Q_j(l) summation identity, the set equalities behind it, the D2
// expansion, Q_j(π(d)) = R_1 and the column-operation role per entry type.
void verify_column_lemmas(const Analysis &a, CheckSink &sink);

void verify_all_lemmas(const Analysis &a, CheckSink &sink);

} // namespace schubert
