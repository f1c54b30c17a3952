#include "schubert/matrix.hpp"

namespace schubert {

namespace {

// Multiplies a row by a common denominator; returns that denominator.
MultiPoly clear_row(const RFMatrix &a, Eigen::Index i, PolyMatrix &out)
{
    const Eigen::Index n = a.cols();
    bool monomial = true;
    for (Eigen::Index j = 0; j < n; ++j)
        monomial = monomial && a(i, j).den().is_monomial();
    if (monomial) {
        Monomial m;
        Integer c = 1;
        for (Eigen::Index j = 0; j < n; ++j) {
            const Term &d = a(i, j).den().leading();
            m = lcm(m, d.m);
            mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), d.c.get_mpz_t());
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            const Term &d = a(i, j).den().leading();
            out(i, j) = a(i, j).num().mul_term(m / d.m, c / d.c);
        }
        return MultiPoly(m, c);
    }
    std::vector<MultiPoly> dens;
    for (Eigen::Index j = 0; j < n; ++j) {
        const MultiPoly &d = a(i, j).den();
        bool seen = false;
        for (auto &x : dens)
            seen = seen || x == d;
        if (!seen)
            dens.push_back(d);
    }
    MultiPoly mult(1L);
    for (auto &d : dens)
        mult *= d;
    for (Eigen::Index j = 0; j < n; ++j)
        out(i, j) = a(i, j).num() * exact_quotient(mult, a(i, j).den());
    return mult;
}

} // namespace

template <> RatFunc determinant<RatFunc>(const RFMatrix &a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const Eigen::Index n = a.rows();
    if (n == 0)
        return RatFunc(1L);
    PolyMatrix p(n, n);
    MultiPoly scale(1L);
    for (Eigen::Index i = 0; i < n; ++i)
        scale *= clear_row(a, i, p);
    return RatFunc(determinant(p), scale);
}

QMatrix evaluate(const RFMatrix &m, const EvalPoint &p)
{
    QMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j).evaluate(p);
    return out;
}

RFMatrix jacobian_matrix(const std::map<VarId, RatFunc> &map, const std::vector<VarId> &order)
{
    const Eigen::Index k = static_cast<Eigen::Index>(order.size());
    RFMatrix jac(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        auto it = map.find(order[i]);
        if (it == map.end())
            throw std::invalid_argument("map has no image for " + to_string(order[i]));
        for (Eigen::Index j = 0; j < k; ++j)
            jac(i, j) = it->second.derivative(order[j]);
    }
    return jac;
}

RatFunc jacobian_det(const std::map<VarId, RatFunc> &map, const std::vector<VarId> &order)
{
    return determinant(jacobian_matrix(map, order));
}

} // namespace schubert
