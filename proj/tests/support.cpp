#include "support.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace schubert::testing {

const std::vector<VarId> &random_vars()
{
    static const std::vector<VarId> vars = {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}};
    return vars;
}

MultiPoly random_poly(std::mt19937_64 &rng, int max_terms, int max_degree)
{
    const auto &vars = random_vars();
    std::uniform_int_distribution<int> nterms(1, max_terms), deg(0, max_degree), var(0, int(vars.size()) - 1),
        coef(-5, 5);
    std::vector<Term> terms;
    for (int t = nterms(rng); t > 0; --t) {
        Monomial m;
        for (int d = deg(rng); d > 0; --d)
            m *= Monomial::var(vars[var(rng)]);
        int c = coef(rng);
        terms.push_back({m, c == 0 ? 1 : c});
    }
    return MultiPoly::from_terms(std::move(terms));
}

RatFunc random_ratfunc(std::mt19937_64 &rng, bool poly_den)
{
    MultiPoly num = random_poly(rng, 3, 2);
    if (num.is_zero())
        num = MultiPoly(1L);
    if (poly_den) {
        MultiPoly den = random_poly(rng, 2, 1);
        if (den.is_zero())
            den = MultiPoly(1L);
        return RatFunc(num, den);
    }
    MultiPoly den = random_poly(rng, 1, 2);
    return RatFunc(num, den.is_zero() ? MultiPoly(1L) : MultiPoly(den.leading().m));
}

RFMatrix random_matrix(std::mt19937_64 &rng, int size, double zero_fraction, bool poly_den)
{
    std::bernoulli_distribution zero(zero_fraction);
    RFMatrix a(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            a(i, j) = zero(rng) ? RatFunc() : random_ratfunc(rng, poly_den);
    return a;
}

EvalPoint random_point(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> v(-20, 20);
    EvalPoint p;
    for (VarId id : random_vars()) {
        int x = 0;
        while (x == 0)
            x = v(rng);
        Rational q(x, 1 + std::abs(v(rng)) % 7);
        q.canonicalize();
        p.set(id, q);
    }
    return p;
}

Udl<RatFunc> random_udl_factors(std::mt19937_64 &rng, int size)
{
    std::bernoulli_distribution zero(0.3);
    Udl<RatFunc> f{RFMatrix::Identity(size, size), RFMatrix::Zero(size, size), RFMatrix::Identity(size, size)};
    for (int i = 0; i < size; ++i) {
        f.h(i, i) = random_ratfunc(rng, false);
        for (int j = i + 1; j < size; ++j) {
            if (!zero(rng))
                f.n(i, j) = random_ratfunc(rng, false);
            if (!zero(rng))
                f.n_minus(j, i) = random_ratfunc(rng, false);
        }
    }
    return f;
}

RatFunc leibniz_determinant(const RFMatrix &a)
{
    // Scale row i by the product of its denominators so the expansion stays polynomial.
    const int n = int(a.rows());
    PolyMatrix p(n, n);
    MultiPoly scale(1L);
    for (int i = 0; i < n; ++i) {
        MultiPoly row(1L);
        for (int j = 0; j < n; ++j)
            row *= a(i, j).den();
        scale *= row;
        for (int j = 0; j < n; ++j) {
            MultiPoly others(1L);
            for (int k = 0; k < n; ++k)
                if (k != j)
                    others *= a(i, k).den();
            p(i, j) = a(i, j).num() * others;
        }
    }
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    MultiPoly sum;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                inversions += sigma[i] > sigma[j];
        MultiPoly term(1L);
        for (int i = 0; i < n && !term.is_zero(); ++i)
            term *= p(i, sigma[i]);
        if (inversions % 2)
            sum -= term;
        else
            sum += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return RatFunc(sum, scale);
}

namespace {

// Every path from `from` to `to`, each step moving to the closest nonzero cell
// directly above or directly to the left.
void paths_between(const PatternMatrix &m, CellRef from, CellRef to, std::vector<CellRef> &cur,
                   std::vector<std::vector<CellRef>> &out)
{
    cur.push_back(from);
    if (from == to) {
        out.push_back(cur);
    } else {
        for (int row = from.row - 1; row >= 1; --row)
            if (m.nonzero({row, from.col})) {
                if (row >= to.row)
                    paths_between(m, {row, from.col}, to, cur, out);
                break;
            }
        for (int col = from.col - 1; col >= 1; --col)
            if (m.nonzero({from.row, col})) {
                if (col >= to.col)
                    paths_between(m, {from.row, col}, to, cur, out);
                break;
            }
    }
    cur.pop_back();
}

template <class F> void for_each_family(const PatternMatrix &m, const CellSet &A, const CellSet &B, F &&visit)
{
    const std::size_t k = A.size();
    std::vector<std::size_t> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        std::vector<std::vector<std::vector<CellRef>>> choices(k);
        bool empty = false;
        for (std::size_t i = 0; i < k && !empty; ++i) {
            std::vector<CellRef> cur;
            paths_between(m, A[i], B[sigma[i]], cur, choices[i]);
            empty = choices[i].empty();
        }
        if (empty)
            continue;
        std::vector<std::size_t> pick(k, 0);
        std::function<void(std::size_t, std::vector<CellRef> &)> rec = [&](std::size_t i, std::vector<CellRef> &used) {
            if (i == k) {
                visit(used);
                return;
            }
            for (const auto &p : choices[i]) {
                bool clash = false;
                for (CellRef c : p)
                    clash = clash || std::find(used.begin(), used.end(), c) != used.end();
                if (clash)
                    continue;
                used.insert(used.end(), p.begin(), p.end());
                rec(i + 1, used);
                used.resize(used.size() - p.size());
            }
        };
        std::vector<CellRef> used;
        rec(0, used);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

} // namespace

MultiPoly brute_force_path_sum(const PatternMatrix &m, const CellSet &A, const CellSet &B)
{
    MultiPoly sum;
    for_each_family(m, A, B, [&](const std::vector<CellRef> &cells) {
        Monomial u;
        for (CellRef c : cells)
            if (m.is_var(c))
                u *= Monomial::var(m.at(c).v);
        sum += MultiPoly(u);
    });
    return sum;
}

std::size_t brute_force_family_count(const PatternMatrix &m, const CellSet &A, const CellSet &B)
{
    std::size_t n = 0;
    for_each_family(m, A, B, [&](const std::vector<CellRef> &) { ++n; });
    return n;
}

long count(const std::vector<CheckResult> &results, const std::string &prefix, Status s)
{
    return std::count_if(results.begin(), results.end(),
                         [&](const CheckResult &c) { return c.status == s && c.check_id.rfind(prefix, 0) == 0; });
}

} // namespace schubert::testing
