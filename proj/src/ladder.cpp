#include "schubert/ladder.hpp"

#include <stdexcept>
#include <string>

namespace schubert {

namespace {

RatFunc wu_at(const Analysis &a, int row, int col)
{
    if (row < 1 || row > a.r())
        return RatFunc();
    return a.wu(row - 1, col - 1);
}

RatFunc det(const RFMatrix &m) { return m.rows() == 0 ? RatFunc(1L) : determinant(m); }

RatFunc sign(long e) { return RatFunc(e % 2 ? -1L : 1L); }

RFMatrix rows_of(const Analysis &a, const std::vector<int> &rows, int first_col, int last_col, bool left)
{
    RFMatrix out(rows.size(), last_col - first_col + 1);
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (int b = first_col; b <= last_col; ++b)
            out(k, b - first_col) = left ? x_L_entry(a, rows[k], b) : x_prime_entry(a, rows[k], b);
    return out;
}

RFMatrix block(const Analysis &a, const std::vector<int> &rows, int first_col)
{
    const int r = a.r();
    RFMatrix out(rows.size(), r - first_col + 1);
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (int b = first_col; b <= r; ++b)
            out(k, b - first_col) = wu_at(a, rows[k], b);
    return out;
}

} // namespace

bool ladder_in_scope(const PatternMatrix &m, int i)
{
    const int r = m.r();
    return i >= 1 && i <= r - 1 && r - i + 1 > m.perm()(r);
}

RatFunc x_prime_entry(const Analysis &a, int k, int b)
{
    const CellKind &c = a.m.at(k, b);
    if (c.kind == CellKind::Var)
        return a.comp(c.v).RL + a.comp(c.v).R1;
    if (c.kind == CellKind::Zero && k >= 2 && a.m.nonzero({k - 1, b}))
        return -a.n_at(k, a.r()) * wu_at(a, k - 1, b);
    return wu_at(a, k, b);
}

RatFunc x_L_entry(const Analysis &a, int k, int b)
{
    const CellKind &c = a.m.at(k, b);
    if (c.kind == CellKind::Var)
        return a.comp(c.v).RL;
    return wu_at(a, k, b);
}

RatFunc q_jl(const Analysis &a, int j, int l)
{
    const PatternMatrix &m = a.m;
    const int r = m.r();
    RatFunc sum;
    for (CellRef one : d0_set(m, j, l)) {
        const int k = one.row;
        IndexedSets s = indexed_sets(m, j, l, k);
        RatFunc term = a.n_at(k, r) * wu_at(a, k - 1, j) * RatFunc(a.engine.path_sum_PL_star(s.O2_jlk, s.D2_jlk)) /
                       rho_product(m, s.D2_jlk);
        sum += s.eps2 % 2 ? -term : term;
    }
    return sum;
}

BlockLadder block_ladder(const Analysis &a, int i)
{
    const PatternMatrix &m = a.m;
    const int r = m.r();
    if (!ladder_in_scope(m, i))
        throw std::invalid_argument("block size " + std::to_string(i) + " is out of scope");
    const int top = r - i + 1;
    const int pr = m.perm().inv(r);

    BlockLadder l;
    l.i = i;
    for (int k = top; k <= r; ++k)
        l.T_rows.push_back(k);
    l.F_rows.push_back(top - 1);
    for (int k = top + 1; k <= r; ++k)
        l.F_rows.push_back(k);
    for (int k = top; k <= r; ++k)
        if (!wu_at(a, k, r).is_zero()) {
            l.s = k - r + i;
            break;
        }

    if (top > pr) {
        for (int k = top + 1; k <= r; ++k)
            l.Tp_rows.push_back(k);
        l.Fp_rows.push_back(top);
        for (int k = top + 2; k <= r; ++k)
            l.Fp_rows.push_back(k);
    } else {
        for (int k = top; k <= r; ++k)
            if (k != pr)
                l.Tp_rows.push_back(k);
        l.Fp_rows.push_back(top - 1);
        for (int k = top == pr ? top + 2 : top + 1; k <= r; ++k)
            if (k != pr)
                l.Fp_rows.push_back(k);
    }

    if (i == 1)
        l.Fp_rows.clear();

    l.T = block(a, l.T_rows, top);
    l.F = block(a, l.F_rows, top);
    l.T_prime = rows_of(a, l.Tp_rows, top, r - 1, false);
    l.F_prime = rows_of(a, l.Fp_rows, top, r - 1, false);
    l.T_L = rows_of(a, l.Tp_rows, top, r - 1, true);
    l.F_L = rows_of(a, l.Fp_rows, top, r - 1, true);

    RFMatrix unit = RFMatrix::Identity(i - 1, i - 1);
    for (int j = top; j <= r - 2; ++j)
        for (int c = j + 1; c <= r - 1; ++c) {
            RatFunc q = q_jl(a, j, c);
            l.Q[{j, c}] = q;
            unit(c - top, j - top) = -q;
        }
    l.M_col = unit_lower_inverse(unit);
    return l;
}

void verify_rowcolop(const Analysis &a, const BlockLadder &l, CheckSink &sink)
{
    const PatternMatrix &m = a.m;
    const int r = m.r();
    const int i = l.i;
    const int top = r - i + 1;
    const int pr = m.perm().inv(r);
    const std::string inst = "i=" + std::to_string(i);

    const RatFunc detT = det(l.T), detF = det(l.F);
    const RatFunc u_s = wu_at(a, r - i + l.s, r);
    const RatFunc u_next = top + 1 <= r ? wu_at(a, top + 1, r) : RatFunc();
    const RatFunc n_top = a.n_at(top, r);

    auto f_formula = [&](const RatFunc &detFx) {
        if (top > pr)
            return detT / n_top - sign(i) / n_top * u_next * detFx;
        if (top == pr)
            return sign(i) * u_next * detFx;
        return sign(r - pr) * detFx;
    };
    const std::string fcase = top > pr ? " case=below" : top == pr ? " case=at" : " case=above";

    sink.equal("prop.rowop.T", inst, detT, sign(l.s + i) * u_s * det(l.T_prime));
    sink.equal("prop.rowop.F", inst + fcase, detF, f_formula(det(l.F_prime)));
    sink.equal("prop.rowcol.T", inst, detT, sign(l.s + i) * u_s * det(l.T_L));
    sink.equal("prop.rowcol.F", inst + fcase, detF, f_formula(det(l.F_L)));

    RFMatrix TM = multiply(l.T_prime, l.M_col), FM = multiply(l.F_prime, l.M_col);
    for (Eigen::Index p = 0; p < TM.rows(); ++p)
        for (Eigen::Index c = 0; c < TM.cols(); ++c)
            sink.equal("prop.colop.T", inst + " row=" + std::to_string(l.Tp_rows[p]) + " col=" + std::to_string(top + c),
                       TM(p, c), l.T_L(p, c));
    for (Eigen::Index p = 0; p < FM.rows(); ++p)
        for (Eigen::Index c = 0; c < FM.cols(); ++c)
            sink.equal("prop.colop.F", inst + " row=" + std::to_string(l.Fp_rows[p]) + " col=" + std::to_string(top + c),
                       FM(p, c), l.F_L(p, c));

    for (int k = top - 1; k <= r; ++k) {
        if (k == pr)
            continue;
        const std::string ki = inst + " k=" + std::to_string(k);
        const RatFunc n = a.n_at(k, r);
        for (int b = top; b <= r; ++b) {
            RatFunc lhs = wu_at(a, k, b) - n * wu_at(a, k - 1, b);
            RatFunc rhs = b < r ? x_prime_entry(a, k, b) : RatFunc();
            sink.equal("cor.rowop", ki + " b=" + std::to_string(b), lhs, rhs);
        }
        if (i >= 2)
            sink.equal("lem.colop.last_column", ki, x_prime_entry(a, k, r - 1), x_L_entry(a, k, r - 1));
    }

    for (const auto &[jl, q] : l.Q)
        if (d0_set(m, jl.first, jl.second).empty())
            sink.truth("lem.colop.q_zero", inst + " j=" + std::to_string(jl.first) + " l=" + std::to_string(jl.second),
                       q.is_zero(), "Q_j(l) = " + q.to_string());
}

} // namespace schubert
