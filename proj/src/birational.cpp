#include "schubert/birational.hpp"

namespace schubert {

std::string to_string(Algorithm a) { return a == Algorithm::Paths ? "paths" : "detsimp"; }

RatFunc rho_product(const PatternMatrix &m, const CellSet &ones) { return RatFunc::monomial(rho_of(m, ones)); }

BirationalMap r_paths(const PatternMatrix &m)
{
    PathEngine engine(m);
    return r_paths(engine);
}

BirationalMap r_paths(PathEngine &engine)
{
    const PatternMatrix &m = engine.pattern();
    BirationalMap out;
    out.perm = m.perm();
    out.algorithm = Algorithm::Paths;
    for (VarId v : m.vars()) {
        SelectorSets s = selector_sets(m, v);
        const long sign = (s.D.size() - 1) % 2 ? -1 : 1;
        const RatFunc den = rho_product(m, s.D) * RatFunc(sign);
        PartitionSums parts = engine.partition_sums(v);
        out.components[v] = {RatFunc(parts.PL) / den, RatFunc(parts.P1) / den, RatFunc(parts.P2) / den};
        out.images[v] = RatFunc(engine.path_sum_P(s.O, s.D)) / den;
    }
    return out;
}

RFMatrix substitute(const PatternMatrix &m, const VarMap &images)
{
    const int r = m.r();
    RFMatrix out = RFMatrix::Zero(r, r);
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) {
            const CellKind &c = m.at(i, j);
            if (c.kind == CellKind::One)
                out(i - 1, j - 1) = RatFunc(1L);
            else if (c.kind == CellKind::Var)
                out(i - 1, j - 1) = images.at(c.v);
        }
    return out;
}

RFMatrix substitute(const PatternMatrix &m, const BirationalMap &map) { return substitute(m, map.images); }

Analysis::Analysis(const Permutation &p) : m(p), engine(m), map(r_paths(engine)), wu(substitute(m, map)) {}

RatFunc Analysis::n_at(int row, int col) const
{
    const CellKind &c = m.at(row, col);
    if (c.kind == CellKind::Var)
        return RatFunc::var(c.v);
    return RatFunc(c.kind == CellKind::One ? 1L : 0L);
}

void r_components_tilde_check(const Analysis &a, CheckSink &sink)
{
    const PatternMatrix &m = a.m;
    const int r = m.r();
    if (r < 3)
        return;
    WTilde t = reduce_w_tilde(m);
    BirationalMap tilde = r_paths(t.m_tilde);
    const int pr = m.perm().inv(r);
    for (VarId v : m.vars()) {
        if (v.b == r)
            continue;
        const int pa = m.perm().inv(v.a), pb = m.perm().inv(v.b);
        const RatFunc &rt = tilde.images.at(v);
        RatFunc expected;
        std::string which;
        if (pa < pr) {
            expected = rt;
            which = "above";
        } else if (pb < pr) {
            expected = -RatFunc::var({v.a, r}) * rt;
            which = "straddle";
        } else {
            expected = RatFunc::var({v.a, r}) / RatFunc::var({v.b, r}) * rt;
            which = "below";
        }
        sink.equal("cor.RL_tilde", to_string(v) + " case=" + which, a.comp(v).RL, expected);
    }
}

} // namespace schubert
