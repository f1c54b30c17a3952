#include "schubert/birational.hpp"

namespace schubert {

namespace {

struct ScaledTerm {
    Integer c;
    Monomial up;
    Monomial down;
};

std::vector<ScaledTerm> scale_terms(const MultiPoly &p, const std::map<VarId, std::pair<Monomial, Monomial>> &scale)
{
    std::vector<ScaledTerm> out;
    for (const Term &t : p.terms()) {
        ScaledTerm s{t.c, t.m, Monomial()};
        for (auto [v, e] : t.m.factors()) {
            auto it = scale.find(v);
            if (it == scale.end())
                continue;
            s.up *= it->second.first.pow(e);
            s.down *= it->second.second.pow(e);
        }
        out.push_back(std::move(s));
    }
    return out;
}

MultiPoly collect(const std::vector<ScaledTerm> &terms, const Monomial &common)
{
    std::vector<Term> out;
    for (const ScaledTerm &s : terms)
        out.push_back({s.up * (common / s.down), s.c});
    return MultiPoly::from_terms(std::move(out));
}

MultiPoly block_determinant(const PatternMatrix &m, int top, int bottom, const std::vector<int> &cols)
{
    PolyMatrix blk(bottom - top + 1, cols.size());
    for (int i = top; i <= bottom; ++i)
        for (int jj = 0; jj < int(cols.size()); ++jj) {
            const int j = cols[jj];
            const CellKind &c = m.at(i, j);
            blk(i - top, jj) = c.kind == CellKind::Var   ? MultiPoly::var(c.v)
                                     : c.kind == CellKind::One ? MultiPoly(1L)
                                                               : MultiPoly();
        }
    return determinant(blk);
}

} // namespace

RatFunc rescale_variables(const RatFunc &f, const std::map<VarId, std::pair<Monomial, Monomial>> &scale)
{
    auto num = scale_terms(f.num(), scale);
    auto den = scale_terms(f.den(), scale);
    Monomial common;
    for (const auto &s : num)
        common = lcm(common, s.down);
    for (const auto &s : den)
        common = lcm(common, s.down);
    return RatFunc(collect(num, common), collect(den, common));
}

DetsimpResult r_detsimp(const PatternMatrix &m)
{
    const int r = m.r();
    DetsimpResult out;
    VarMap &x = out.x;
    for (VarId v : m.vars())
        x[v] = RatFunc::var(v);

    std::vector<VarId> done;
    for (int p = r; p >= 1; --p) {
        for (int b = 1; b <= r; ++b) {
            const CellKind &c = m.at(p, b);
            if (c.kind != CellKind::Var)
                continue;
            const VarId v = c.v;
            // Skip columns whose 1 lies below row p: they vanish on rows ≤ p.
            std::vector<int> cols;
            for (int j = b; j <= r; ++j)
                if (m.perm().inv(j) <= p)
                    cols.push_back(j);
            auto parts = block_determinant(m, p - int(cols.size()) + 1, p, cols).coefficients_in(v);
            if (parts.size() != 2 || parts[1].is_zero())
                throw DetsimpError("block determinant of " + to_string(v) + " is not of the form a·n + b with a ≠ 0");
            RatFunc shift = RatFunc::var(v) - RatFunc(parts[0], parts[1]);
            for (VarId d : done)
                x[d] = x[d].substitute(v, shift);
            x[v] = shift;
            done.push_back(v);
            out.step1.push_back({v, x});
        }
    }

    std::map<VarId, std::pair<Monomial, Monomial>> scale;
    for (VarId v : m.vars()) {
        CellRef pos = m.var_pos(v);
        Monomial up, down;
        for (int j = pos.col + 1; j <= r; ++j)
            if (m.is_var({pos.row, j}))
                up *= Monomial::var(m.at(pos.row, j).v);
        for (int i = 1; i < pos.row; ++i)
            if (m.is_var({i, pos.col}))
                up *= Monomial::var(m.at(i, pos.col).v);
        CellRef top = m.one_pos(v.b);
        for (int j = top.col + 1; j <= r; ++j)
            if (m.is_var({top.row, j}))
                down *= Monomial::var(m.at(top.row, j).v);
        scale[v] = {up, down};
    }
    for (VarId v : m.vars())
        out.y[v] = rescale_variables(x.at(v), scale);

    Udl<RatFunc> udl;
    try {
        udl = udl_decompose(substitute(m, out.y));
    } catch (const NotInOpenCell &e) {
        throw DetsimpError(std::string("wy is not in the open cell: ") + e.what());
    }
    std::vector<LaurentTerm> terms;
    for (int i = 0; i + 1 < r; ++i) {
        if (!laurent_terms(udl.n(i, i + 1), terms))
            throw DetsimpError("superdiagonal of wy has a non-monomial denominator");
        for (const LaurentTerm &t : terms) {
            auto f = t.down.factors();
            if (!t.up.is_one() || f.size() != 1 || f[0].second != 1 || abs(t.c) != 1)
                throw DetsimpError("superdiagonal of wy is not a signed reciprocal sum");
            if (!out.eps.emplace(f[0].first, t.c > 0 ? 1 : -1).second)
                throw DetsimpError("variable " + to_string(f[0].first) + " repeats on the superdiagonal");
        }
    }
    if (out.eps.size() != m.vars().size())
        throw DetsimpError("superdiagonal of wy misses a variable");

    out.u.perm = m.perm();
    out.u.algorithm = Algorithm::Detsimp;
    out.u.eps = out.eps;
    for (VarId v : m.vars()) {
        RatFunc f = out.y.at(v);
        for (auto [w, e] : out.eps)
            if (e < 0)
                f = f.flip_sign(w);
        out.u.images[v] = f;
    }
    return out;
}

} // namespace schubert
