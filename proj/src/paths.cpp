#include "schubert/paths.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace schubert {

namespace {

struct MonomialHash {
    std::size_t operator()(const Monomial &m) const { return m.hash(); }
};

class Accumulator {
public:
    void add(const Monomial &m) { ++counts_[m]; }
    MultiPoly poly() const
    {
        std::vector<Term> terms;
        terms.reserve(counts_.size());
        for (auto &[m, c] : counts_)
            terms.push_back({m, Integer(c)});
        return MultiPoly::from_terms(std::move(terms));
    }

private:
    std::unordered_map<Monomial, long, MonomialHash> counts_;
};

} // namespace

PathEngine::PathEngine(const PatternMatrix &m) : m_(m) {}

std::uint64_t PathEngine::bit(CellRef c) const
{
    return std::uint64_t{1} << ((c.row - 1) * m_.r() + (c.col - 1));
}

const PathEngine::Entry &PathEngine::entry(CellRef from, CellRef to)
{
    auto key = std::make_pair(from, to);
    auto it = cache_.find(key);
    if (it != cache_.end())
        return it->second;
    if (!m_.nonzero(from) || !m_.nonzero(to))
        throw std::invalid_argument("path endpoints must be nonzero cells");

    Entry e;
    Path cur{from};
    auto dfs = [&](auto &self, CellRef c) -> void {
        if (c == to) {
            e.paths.push_back(cur);
            return;
        }
        for (int col = c.col - 1; col >= to.col; --col) {
            if (m_.nonzero({c.row, col})) {
                cur.push_back({c.row, col});
                self(self, {c.row, col});
                cur.pop_back();
                break;
            }
        }
        for (int row = c.row - 1; row >= to.row; --row) {
            if (m_.nonzero({row, c.col})) {
                cur.push_back({row, c.col});
                self(self, {row, c.col});
                cur.pop_back();
                break;
            }
        }
    };
    if (from.row >= to.row && from.col >= to.col)
        dfs(dfs, from);

    for (const Path &p : e.paths) {
        PathInfo info{0, 0, {}, 0};
        for (CellRef c : p) {
            info.cells |= bit(c);
            if (m_.is_var(c)) {
                info.vars |= bit(c);
                info.u *= Monomial::var(m_.at(c).v);
            }
        }
        if (p.size() > 1)
            info.first_step = p[1].row == p[0].row ? 1 : 2;
        e.info.push_back(info);
    }
    return cache_.emplace(key, std::move(e)).first->second;
}

const std::vector<Path> &PathEngine::paths_between(CellRef from, CellRef to) { return entry(from, to).paths; }

void PathEngine::enumerate(const CellSet &A, const CellSet &B, const Visitor &visit)
{
    if (A.size() != B.size())
        throw std::invalid_argument("origin and destination sets differ in size");
    const int k = static_cast<int>(A.size());
    std::vector<int> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    if (k == 0) {
        visit(sigma, {}, {});
        return;
    }
    std::vector<const Entry *> entries(k);
    std::vector<const PathInfo *> chosen(k);
    std::vector<int> index(k);
    do {
        bool reachable = true;
        for (int i = 0; i < k && reachable; ++i) {
            entries[i] = &entry(A[i], B[sigma[i]]);
            reachable = !entries[i]->paths.empty();
        }
        if (!reachable)
            continue;
        auto rec = [&](auto &self, int i, std::uint64_t cells, std::uint64_t vars) -> void {
            if (i == k) {
                visit(sigma, chosen, index);
                return;
            }
            const Entry &e = *entries[i];
            for (std::size_t p = 0; p < e.info.size(); ++p) {
                const PathInfo &info = e.info[p];
                bool cell_clash = (cells & info.cells) != 0;
                bool var_clash = (vars & info.vars) != 0;
                if (cell_clash != var_clash)
                    ++divergences_;
                if (cell_clash)
                    continue;
                chosen[i] = &info;
                index[i] = static_cast<int>(p);
                self(self, i + 1, cells | info.cells, vars | info.vars);
            }
        };
        rec(rec, 0, 0, 0);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

std::vector<PathFamily> PathEngine::disjoint_families(const CellSet &A, const CellSet &B)
{
    std::vector<PathFamily> out;
    enumerate(A, B, [&](const std::vector<int> &sigma, const std::vector<const PathInfo *> &chosen,
                        const std::vector<int> &index) {
        PathFamily f;
        for (std::size_t i = 0; i < A.size(); ++i) {
            f.paths.push_back(entry(A[i], B[sigma[i]]).paths[index[i]]);
            f.origin_map.emplace_back(A[i], B[sigma[i]]);
            f.u *= chosen[i]->u;
        }
        out.push_back(std::move(f));
    });
    return out;
}

bool PathEngine::left_only(const CellSet &A, const std::vector<const PathInfo *> &chosen) const
{
    for (std::size_t i = 0; i < A.size(); ++i)
        if (A[i].col == m_.r() && chosen[i]->first_step == 2)
            return false;
    return true;
}

MultiPoly PathEngine::path_sum_P(const CellSet &A, const CellSet &B)
{
    Accumulator acc;
    enumerate(A, B, [&](const std::vector<int> &, const std::vector<const PathInfo *> &chosen, const std::vector<int> &) {
        Monomial u;
        for (auto *c : chosen)
            u *= c->u;
        acc.add(u);
    });
    return acc.poly();
}

MultiPoly PathEngine::path_sum_PL(const CellSet &A, const CellSet &B)
{
    Accumulator acc;
    enumerate(A, B, [&](const std::vector<int> &, const std::vector<const PathInfo *> &chosen, const std::vector<int> &) {
        if (!left_only(A, chosen))
            return;
        Monomial u;
        for (auto *c : chosen)
            u *= c->u;
        acc.add(u);
    });
    return acc.poly();
}

MultiPoly PathEngine::path_sum_PL_star(const CellSet &A, const CellSet &B)
{
    if (A.empty() && B.empty())
        return MultiPoly(1L);
    if (A.empty() || B.empty() || A.size() != B.size())
        throw std::invalid_argument("P_L* needs |A| = |B|, with A = B = ∅ as the only empty case");
    if (!set_intersection(A, B).empty())
        throw std::invalid_argument("P_L* needs disjoint A and B");
    return path_sum_PL(A, B);
}

FamilyPartition PathEngine::partition_families(VarId v)
{
    SelectorSets s = selector_sets(m_, v);
    std::size_t bottom = std::find(s.O.begin(), s.O.end(), s.bottom_origin) - s.O.begin();
    FamilyPartition out;
    for (PathFamily &f : disjoint_families(s.O, s.D)) {
        bool left = true;
        for (std::size_t i = 0; i < f.paths.size(); ++i) {
            const Path &p = f.paths[i];
            if (p.size() > 1 && p[0].col == m_.r() && p[1].col == p[0].col)
                left = false;
        }
        if (left) {
            out.PL.push_back(std::move(f));
            continue;
        }
        const Path &p = f.paths[bottom];
        if (p.size() < 2)
            throw std::logic_error("bottom origin with a length-0 path");
        (p[1].row == p[0].row ? out.P1 : out.P2).push_back(std::move(f));
    }
    return out;
}

PartitionSums PathEngine::partition_sums(VarId v)
{
    SelectorSets s = selector_sets(m_, v);
    const std::size_t bottom = std::find(s.O.begin(), s.O.end(), s.bottom_origin) - s.O.begin();
    Accumulator pl, p1, p2;
    enumerate(s.O, s.D, [&](const std::vector<int> &, const std::vector<const PathInfo *> &chosen, const std::vector<int> &) {
        Monomial u;
        for (auto *c : chosen)
            u *= c->u;
        if (left_only(s.O, chosen))
            pl.add(u);
        else if (chosen[bottom]->first_step == 1)
            p1.add(u);
        else if (chosen[bottom]->first_step == 2)
            p2.add(u);
        else
            throw std::logic_error("bottom origin with a length-0 path");
    });
    return {pl.poly(), p1.poly(), p2.poly()};
}

std::vector<Path> paths_between(const PatternMatrix &m, CellRef from, CellRef to)
{
    return PathEngine(m).paths_between(from, to);
}

std::vector<PathFamily> disjoint_families(const PatternMatrix &m, const CellSet &A, const CellSet &B)
{
    return PathEngine(m).disjoint_families(A, B);
}

Monomial u_of(const PatternMatrix &m, const PathFamily &f)
{
    Monomial u;
    for (const Path &p : f.paths)
        for (CellRef c : p)
            if (m.is_var(c))
                u *= Monomial::var(m.at(c).v);
    return u;
}

MultiPoly path_sum_P(const PatternMatrix &m, const CellSet &A, const CellSet &B) { return PathEngine(m).path_sum_P(A, B); }

MultiPoly path_sum_PL(const PatternMatrix &m, const CellSet &A, const CellSet &B) { return PathEngine(m).path_sum_PL(A, B); }

MultiPoly path_sum_PL_star(const PatternMatrix &m, const CellSet &A, const CellSet &B)
{
    return PathEngine(m).path_sum_PL_star(A, B);
}

FamilyPartition partition_families(const PatternMatrix &m, VarId v) { return PathEngine(m).partition_families(v); }

bool families_intersect(const PathFamily &f1, const PathFamily &f2)
{
    std::vector<CellRef> a, b;
    for (const Path &p : f1.paths)
        a.insert(a.end(), p.begin(), p.end());
    for (const Path &p : f2.paths)
        b.insert(b.end(), p.begin(), p.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return !set_intersection(a, b).empty();
}

ProductCollections family_product(const std::vector<PathFamily> &f1, const std::vector<PathFamily> &f2)
{
    ProductCollections out;
    for (const PathFamily &x : f1)
        for (const PathFamily &y : f2) {
            FamilyProduct fp{&x, &y, x.u * y.u};
            out.all.push_back(fp);
            if (families_intersect(x, y))
                out.intersecting.push_back(fp);
        }
    return out;
}

} // namespace schubert
