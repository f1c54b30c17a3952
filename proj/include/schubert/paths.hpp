#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "schubert/poly.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

// Cells from origin to destination; each step goes to the nearest nonzero cell
// above or to the left.
using Path = std::vector<CellRef>;

struct PathFamily {
    std::vector<Path> paths;                              // one per origin, origins ascending
    std::vector<std::pair<CellRef, CellRef>> origin_map;  // origin -> destination
    Monomial u;
};

struct FamilyProduct {
    const PathFamily *left;
    const PathFamily *right;
    Monomial u;
};

struct ProductCollections {
    std::vector<FamilyProduct> all;
    std::vector<FamilyProduct> intersecting;
};

struct FamilyPartition {
    std::vector<PathFamily> PL, P1, P2;
};

struct PartitionSums {
    MultiPoly PL, P1, P2;
    MultiPoly total() const { return PL + P1 + P2; }
};

// Enumerates path families on one pattern, caching single-pair path lists.
// Instances are not shared between threads.
class PathEngine {
public:
    explicit PathEngine(const PatternMatrix &m);

    const PatternMatrix &pattern() const { return m_; }
    const std::vector<Path> &paths_between(CellRef from, CellRef to);
    std::vector<PathFamily> disjoint_families(const CellSet &A, const CellSet &B);

    MultiPoly path_sum_P(const CellSet &A, const CellSet &B);
    MultiPoly path_sum_PL(const CellSet &A, const CellSet &B);
    // Accepts A = B = ∅ (value 1); otherwise A ∩ B = ∅ and |A| = |B| ≥ 1.
    MultiPoly path_sum_PL_star(const CellSet &A, const CellSet &B);

    FamilyPartition partition_families(VarId v);
    PartitionSums partition_sums(VarId v);

    // Extensions where the cell-overlap and squared-variable tests disagreed.
    long divergences() const { return divergences_; }

private:
    struct PathInfo {
        std::uint64_t cells;  // occupied cells
        std::uint64_t vars;   // occupied Var cells
        Monomial u;
        int first_step;       // 0 none, 1 left, 2 up
    };
    struct Entry {
        std::vector<Path> paths;
        std::vector<PathInfo> info;
    };
    using Visitor = std::function<void(const std::vector<int> &sigma, const std::vector<const PathInfo *> &chosen,
                                       const std::vector<int> &index)>;

    const Entry &entry(CellRef from, CellRef to);
    void enumerate(const CellSet &A, const CellSet &B, const Visitor &visit);
    std::uint64_t bit(CellRef c) const;
    bool left_only(const CellSet &A, const std::vector<const PathInfo *> &chosen) const;

    PatternMatrix m_;
    std::map<std::pair<CellRef, CellRef>, Entry> cache_;
    long divergences_ = 0;
};

std::vector<Path> paths_between(const PatternMatrix &m, CellRef from, CellRef to);
std::vector<PathFamily> disjoint_families(const PatternMatrix &m, const CellSet &A, const CellSet &B);
Monomial u_of(const PatternMatrix &m, const PathFamily &f);
MultiPoly path_sum_P(const PatternMatrix &m, const CellSet &A, const CellSet &B);
MultiPoly path_sum_PL(const PatternMatrix &m, const CellSet &A, const CellSet &B);
MultiPoly path_sum_PL_star(const PatternMatrix &m, const CellSet &A, const CellSet &B);
FamilyPartition partition_families(const PatternMatrix &m, VarId v);
ProductCollections family_product(const std::vector<PathFamily> &f1, const std::vector<PathFamily> &f2);
// True when some path of f1 shares a cell with some path of f2.
bool families_intersect(const PathFamily &f1, const PathFamily &f2);

} // namespace schubert
