#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "schubert/poly.hpp"

namespace schubert {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// π in one-line notation with 1-based images; w_{i,j} = 1 iff j = π(i).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int r);
    // Space-separated images, e.g. "2 4 3 1".
    static Permutation parse(const std::string &text);

    int r() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_.at(i - 1); }
    int inv(int j) const { return inv_.at(j - 1); }
    Permutation inverse() const { return Permutation(inv_); }
    const std::vector<int> &images() const { return img_; }
    int length() const;

    std::string to_string() const;
    auto operator<=>(const Permutation &o) const { return img_ <=> o.img_; }
    bool operator==(const Permutation &o) const { return img_ == o.img_; }

private:
    std::vector<int> img_;
    std::vector<int> inv_;
};

Permutation inverse(const Permutation &p);

// {(i,j) : i < j, π⁻¹(i) > π⁻¹(j)} in ascending (a,b) order.
std::vector<VarId> inversion_set(const Permutation &p);

std::vector<Permutation> all_permutations(int r);

struct CellRef {
    int row = 0;
    int col = 0;
    auto operator<=>(const CellRef &) const = default;
};

struct CellKind {
    enum Kind { Zero, One, Var };
    Kind kind = Zero;
    int j = 0;   // column label of a One
    VarId v{};   // label of a Var
    bool nonzero() const { return kind != Zero; }
};

// The symbolic matrix wn.
class PatternMatrix {
public:
    PatternMatrix() = default;
    explicit PatternMatrix(Permutation p);

    int r() const { return perm_.r(); }
    const Permutation &perm() const { return perm_; }
    const CellKind &at(int row, int col) const { return cells_[(row - 1) * r() + (col - 1)]; }
    const CellKind &at(CellRef c) const { return at(c.row, c.col); }
    bool nonzero(CellRef c) const { return at(c).nonzero(); }
    bool is_var(CellRef c) const { return at(c).kind == CellKind::Var; }
    bool is_one(CellRef c) const { return at(c).kind == CellKind::One; }
    bool has_var(VarId v) const;

    CellRef one_pos(int j) const { return {perm_.inv(j), j}; }
    CellRef var_pos(VarId v) const { return {perm_.inv(v.a), v.b}; }
    const std::vector<VarId> &vars() const { return vars_; }

    std::string to_string() const;

private:
    Permutation perm_;
    std::vector<CellKind> cells_;
    std::vector<VarId> vars_;
};

PatternMatrix pattern_matrix(const Permutation &p);

// Rightmost nonzero cell in the row of 1_j.
CellRef gamma(const PatternMatrix &m, int j);
// Product of the Vars in the row of 1_j.
Monomial rho(const PatternMatrix &m, int j);

struct PatternRegion {
    int row_top, row_bottom, col_left, col_right;
    bool contains(CellRef c) const
    {
        return c.row >= row_top && c.row <= row_bottom && c.col >= col_left && c.col <= col_right;
    }
};

PatternRegion submatrix_M(const PatternMatrix &m, VarId v);

using CellSet = std::vector<CellRef>; // sorted by (row, col)

struct SelectorSets {
    CellSet D;
    CellSet O;
    CellSet O1;
    CellSet D1;
    CellRef bottom_origin;
    CellRef top_destination;
};

SelectorSets selector_sets(const PatternMatrix &m, VarId v);

// Elements in or above / in or below row k.
CellSet rows_up_to(const CellSet &s, int k);
CellSet rows_from(const CellSet &s, int k);
// Ones of s equal to 1_l or strictly above and to the right of it.
CellSet northeast_of(const PatternMatrix &m, const CellSet &ones, int l);
CellSet set_union(const CellSet &a, const CellSet &b);
CellSet set_minus(const CellSet &a, const CellSet &b);
CellSet set_intersection(const CellSet &a, const CellSet &b);
bool set_contains(const CellSet &s, CellRef c);
// γ applied to each One of the set.
CellSet gamma_of(const PatternMatrix &m, const CellSet &ones);
// Product of ρ over a set of Ones.
Monomial rho_of(const PatternMatrix &m, const CellSet &ones);

struct DirectionalSubsets {
    CellSet O_up, O_down, D_up, D_down, D_ne;
};

// D_ne is taken with respect to the One in row k.
DirectionalSubsets directional_subsets(const PatternMatrix &m, VarId v, int k);

struct IndexedSets {
    CellSet D0_jl;
    CellSet D2_jlk;
    CellSet O2_jlk;
    int eps2 = 0;
};

// D^{(0)}_{j,l} = D_1(n_{π(r),j}) ∩ D_↗,l(n_{π(r),j}).
CellSet d0_set(const PatternMatrix &m, int j, int l);
IndexedSets indexed_sets(const PatternMatrix &m, int j, int l, int k);

struct WTilde {
    PatternMatrix m_tilde;
    // Labels are preserved, so the map is the identity on (a,b).
    std::vector<VarId> var_map;
};

WTilde reduce_w_tilde(const PatternMatrix &m);

} // namespace schubert
