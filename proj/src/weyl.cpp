#include "schubert/weyl.hpp"

#include <algorithm>
#include <sstream>

namespace schubert {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images))
{
    const int r = static_cast<int>(img_.size());
    if (r < 1 || r > kMaxRank)
        throw std::invalid_argument("permutation size must be in 1.." + std::to_string(kMaxRank));
    inv_.assign(r, 0);
    for (int i = 0; i < r; ++i) {
        int v = img_[i];
        if (v < 1 || v > r || inv_[v - 1] != 0)
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(r));
        inv_[v - 1] = i + 1;
    }
}

Permutation Permutation::identity(int r)
{
    std::vector<int> img(r);
    for (int i = 0; i < r; ++i)
        img[i] = i + 1;
    return Permutation(std::move(img));
}

Permutation Permutation::parse(const std::string &text)
{
    std::istringstream in(text);
    std::string tok;
    std::vector<int> img;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception &) {
            throw ParseError("bad permutation token '" + tok + "'");
        }
        if (used != tok.size())
            throw ParseError("bad permutation token '" + tok + "'");
        img.push_back(v);
    }
    if (img.empty())
        throw ParseError("empty permutation");
    try {
        return Permutation(std::move(img));
    } catch (const std::invalid_argument &e) {
        throw ParseError(std::string(e.what()) + " in '" + text + "'");
    }
}

int Permutation::length() const
{
    int n = 0;
    for (int i = 0; i < r(); ++i)
        for (int j = i + 1; j < r(); ++j)
            n += img_[i] > img_[j];
    return n;
}

std::string Permutation::to_string() const
{
    std::string s;
    for (int v : img_) {
        if (!s.empty())
            s += ' ';
        s += std::to_string(v);
    }
    return s;
}

Permutation inverse(const Permutation &p) { return p.inverse(); }

std::vector<VarId> inversion_set(const Permutation &p)
{
    std::vector<VarId> out;
    for (int i = 1; i <= p.r(); ++i)
        for (int j = i + 1; j <= p.r(); ++j)
            if (p.inv(i) > p.inv(j))
                out.push_back({i, j});
    return out;
}

std::vector<Permutation> all_permutations(int r)
{
    std::vector<int> img(r);
    for (int i = 0; i < r; ++i)
        img[i] = i + 1;
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

PatternMatrix::PatternMatrix(Permutation p) : perm_(std::move(p))
{
    const int n = perm_.r();
    cells_.assign(n * n, CellKind{});
    for (int i = 1; i <= n; ++i)
        cells_[(i - 1) * n + (perm_(i) - 1)] = CellKind{CellKind::One, perm_(i), {}};
    vars_ = inversion_set(perm_);
    for (VarId v : vars_) {
        CellRef c = var_pos(v);
        cells_[(c.row - 1) * n + (c.col - 1)] = CellKind{CellKind::Var, 0, v};
    }
}

bool PatternMatrix::has_var(VarId v) const
{
    if (v.a < 1 || v.a >= v.b || v.b > r())
        return false;
    return at(var_pos(v)).kind == CellKind::Var;
}

std::string PatternMatrix::to_string() const
{
    std::string s;
    for (int i = 1; i <= r(); ++i) {
        for (int j = 1; j <= r(); ++j) {
            const CellKind &c = at(i, j);
            std::string e = c.kind == CellKind::Zero  ? "0"
                            : c.kind == CellKind::One ? "1_" + std::to_string(c.j)
                                                      : schubert::to_string(c.v);
            s += (j > 1 ? "\t" : "") + e;
        }
        s += '\n';
    }
    return s;
}

PatternMatrix pattern_matrix(const Permutation &p) { return PatternMatrix(p); }

CellRef gamma(const PatternMatrix &m, int j)
{
    int row = m.perm().inv(j);
    for (int c = m.r(); c >= 1; --c)
        if (m.at(row, c).nonzero())
            return {row, c};
    throw std::logic_error("row without a One");
}

Monomial rho(const PatternMatrix &m, int j)
{
    int row = m.perm().inv(j);
    Monomial out;
    for (int c = 1; c <= m.r(); ++c)
        if (m.at(row, c).kind == CellKind::Var)
            out *= Monomial::var(m.at(row, c).v);
    return out;
}

PatternRegion submatrix_M(const PatternMatrix &m, VarId v)
{
    if (!m.has_var(v))
        throw std::invalid_argument(to_string(v) + " is not a free variable of this pattern");
    return {m.perm().inv(v.b), m.perm().inv(v.a), v.b, m.r()};
}

SelectorSets selector_sets(const PatternMatrix &m, VarId v)
{
    PatternRegion reg = submatrix_M(m, v);
    SelectorSets s;
    s.top_destination = m.one_pos(v.b);
    s.bottom_origin = gamma(m, v.a);
    s.O.push_back(s.bottom_origin);
    for (int j = v.b; j <= m.r(); ++j) {
        CellRef c = m.one_pos(j);
        if (!reg.contains(c))
            continue;
        s.D.push_back(c);
        if (j != v.b)
            s.O.push_back(gamma(m, j));
    }
    std::sort(s.D.begin(), s.D.end());
    std::sort(s.O.begin(), s.O.end());
    const int r = m.r();
    for (CellRef o : s.O) {
        if (o.col != r || o.row >= s.bottom_origin.row || o.row < 2)
            continue;
        CellRef above{o.row - 1, r};
        if (m.is_var(above) && !set_contains(s.O, above)) {
            s.O1.push_back(o);
            s.D1.push_back(m.one_pos(m.perm()(o.row)));
        }
    }
    std::sort(s.D1.begin(), s.D1.end());
    return s;
}

CellSet rows_up_to(const CellSet &s, int k)
{
    CellSet out;
    for (CellRef c : s)
        if (c.row <= k)
            out.push_back(c);
    return out;
}

CellSet rows_from(const CellSet &s, int k)
{
    CellSet out;
    for (CellRef c : s)
        if (c.row >= k)
            out.push_back(c);
    return out;
}

CellSet northeast_of(const PatternMatrix &m, const CellSet &ones, int l)
{
    CellRef ref = m.one_pos(l);
    CellSet out;
    for (CellRef c : ones)
        if (c == ref || (c.row < ref.row && c.col > ref.col))
            out.push_back(c);
    return out;
}

CellSet set_union(const CellSet &a, const CellSet &b)
{
    CellSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

CellSet set_minus(const CellSet &a, const CellSet &b)
{
    CellSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

CellSet set_intersection(const CellSet &a, const CellSet &b)
{
    CellSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const CellSet &s, CellRef c) { return std::binary_search(s.begin(), s.end(), c); }

CellSet gamma_of(const PatternMatrix &m, const CellSet &ones)
{
    CellSet out;
    for (CellRef c : ones)
        out.push_back(gamma(m, m.at(c).j));
    std::sort(out.begin(), out.end());
    return out;
}

Monomial rho_of(const PatternMatrix &m, const CellSet &ones)
{
    Monomial out;
    for (CellRef c : ones)
        out *= rho(m, m.at(c).j);
    return out;
}

DirectionalSubsets directional_subsets(const PatternMatrix &m, VarId v, int k)
{
    if (k < 1 || k > m.r())
        throw std::invalid_argument("row index out of range");
    SelectorSets s = selector_sets(m, v);
    return {rows_up_to(s.O, k), rows_from(s.O, k), rows_up_to(s.D, k), rows_from(s.D, k),
            northeast_of(m, s.D, m.perm()(k))};
}

namespace {

VarId bottom_var(const PatternMatrix &m, int j)
{
    VarId v{m.perm()(m.r()), j};
    if (!m.has_var(v))
        throw std::invalid_argument("n_{π(r)," + std::to_string(j) + "} is not a free variable");
    return v;
}

} // namespace

CellSet d0_set(const PatternMatrix &m, int j, int l)
{
    SelectorSets s = selector_sets(m, bottom_var(m, j));
    return set_intersection(s.D1, northeast_of(m, s.D, l));
}

IndexedSets indexed_sets(const PatternMatrix &m, int j, int l, int k)
{
    const int r = m.r();
    SelectorSets s = selector_sets(m, bottom_var(m, j));
    IndexedSets out;
    out.D0_jl = set_intersection(s.D1, northeast_of(m, s.D, l));
    VarId nlr{l, r}, nkr{m.perm()(k), r};
    if (!m.has_var(nlr) || !m.has_var(nkr))
        throw std::invalid_argument("D2/O2 need n_{l,r} and n_{π(k),r} to be free variables");
    CellSet ne = set_minus(northeast_of(m, s.D, l), {m.one_pos(l)});
    out.D2_jlk = set_intersection(ne, rows_from(s.D, k));
    CellSet o2 = set_union({m.var_pos(nlr)}, gamma_of(m, out.D2_jlk));
    out.O2_jlk = set_minus(o2, {m.var_pos(nkr)});
    out.eps2 = static_cast<int>(out.D2_jlk.size());
    return out;
}

WTilde reduce_w_tilde(const PatternMatrix &m)
{
    const int r = m.r();
    if (r < 2)
        throw std::invalid_argument("reduction needs r >= 2");
    std::vector<int> img;
    for (int i = 1; i <= r; ++i)
        if (m.perm()(i) != r)
            img.push_back(m.perm()(i));
    WTilde out{PatternMatrix(Permutation(img)), {}};
    out.var_map = out.m_tilde.vars();
    return out;
}

} // namespace schubert
