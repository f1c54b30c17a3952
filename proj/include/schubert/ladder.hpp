#pragma once

#include <map>
#include <utility>
#include <vector>

#include "schubert/birational.hpp"

namespace schubert {

// The lower-right blocks of wu of size i and their row/column reductions.
// Row labels k refer to rows of wn; columns of the reduced matrices are
// r-i+1..r-1 in order.
struct BlockLadder {
    int i = 0;
    int s = 0;                // r-i+s is the highest row of T with a nonzero entry in column r
    std::vector<int> T_rows;  // r-i+1..r
    std::vector<int> F_rows;  // r-i, r-i+2..r
    std::vector<int> Tp_rows; // rows of T' and T^L
    std::vector<int> Fp_rows; // rows of F' and F^L
    RFMatrix T, F;
    RFMatrix T_prime, F_prime;
    RFMatrix T_L, F_L;
    std::map<std::pair<int, int>, RatFunc> Q; // (j, l) -> Q_j(l), r-i+1 <= j < l <= r-1
    RFMatrix M_col;
};

// 1 <= i <= r-1 and the bottom row of T_i avoids the 1 in row r.
bool ladder_in_scope(const PatternMatrix &m, int i);

// x'_k(b) and x^L_k(b) for k != π⁻¹(r), b < r.
RatFunc x_prime_entry(const Analysis &a, int k, int b);
RatFunc x_L_entry(const Analysis &a, int k, int b);

// Q_j(l) from the signed P_L* sum over D0_{j,l}; needs n_{π(r),j} free.
RatFunc q_jl(const Analysis &a, int j, int l);

// Throws std::invalid_argument when i is out of scope.
BlockLadder block_ladder(const Analysis &a, int i);

// Determinant identities for T_i and F_i, the row-reduction corollary per row,
// and T'M = T^L, F'M = F^L.
void verify_rowcolop(const Analysis &a, const BlockLadder &l, CheckSink &sink);

} // namespace schubert
