#pragma once

#include <bit>
#include <map>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "schubert/ratfunc.hpp"

namespace Eigen {

template <> struct NumTraits<schubert::RatFunc> : GenericNumTraits<schubert::RatFunc> {
    using Real = schubert::RatFunc;
    using NonInteger = schubert::RatFunc;
    using Literal = schubert::RatFunc;
    using Nested = schubert::RatFunc;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 100,
        MulCost = 100,
    };
};

template <> struct NumTraits<schubert::MultiPoly> : GenericNumTraits<schubert::MultiPoly> {
    using Real = schubert::MultiPoly;
    using NonInteger = schubert::MultiPoly;
    using Literal = schubert::MultiPoly;
    using Nested = schubert::MultiPoly;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 100,
        MulCost = 100,
    };
};

template <> struct NumTraits<schubert::Rational> : GenericNumTraits<schubert::Rational> {
    using Real = schubert::Rational;
    using NonInteger = schubert::Rational;
    using Literal = schubert::Rational;
    using Nested = schubert::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 10,
        MulCost = 10,
    };
};

} // namespace Eigen

namespace schubert {

template <class Scalar> using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using RFMatrix = Matrix<RatFunc>;
using PolyMatrix = Matrix<MultiPoly>;
using QMatrix = Matrix<Rational>;

struct NotInOpenCell : std::domain_error {
    using std::domain_error::domain_error;
};

// Exact quotient in the scalar ring; the division is known to be exact.
inline Rational exact_quotient(const Rational &a, const Rational &b) { return a / b; }
inline RatFunc exact_quotient(const RatFunc &a, const RatFunc &b) { return a / b; }
inline MultiPoly exact_quotient(const MultiPoly &a, const MultiPoly &b)
{
    auto q = divide_exact(a, b);
    if (!q)
        throw std::logic_error("inexact division in fraction-free elimination");
    return *q;
}

inline bool scalar_is_zero(const Rational &x) { return x == 0; }
inline bool scalar_is_zero(const RatFunc &x) { return x.is_zero(); }
inline bool scalar_is_zero(const MultiPoly &x) { return x.is_zero(); }

// Fraction-free elimination over an integral domain. Pivots run from the
// bottom-right corner, so intermediate pivots are trailing principal minors.
template <class Scalar> Scalar bareiss_determinant(Matrix<Scalar> a)
{
    const Eigen::Index n = a.rows();
    if (n != a.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0)
        return Scalar(1L);
    bool negate = false;
    Scalar prev(1L);
    for (Eigen::Index k = n - 1; k > 0; --k) {
        if (scalar_is_zero(a(k, k))) {
            Eigen::Index p = -1;
            for (Eigen::Index i = k - 1; i >= 0; --i)
                if (!scalar_is_zero(a(i, k))) {
                    p = i;
                    break;
                }
            if (p < 0)
                return Scalar(0L);
            a.row(p).swap(a.row(k));
            negate = !negate;
        }
        for (Eigen::Index i = 0; i < k; ++i) {
            for (Eigen::Index j = 0; j < k; ++j) {
                Scalar t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = exact_quotient(t, prev);
            }
        }
        prev = a(k, k);
    }
    Scalar d = a(0, 0);
    return negate ? Scalar(-d) : d;
}

// Laplace expansion along rows with minors memoized by column subset.
template <class Scalar> Scalar cofactor_determinant(const Matrix<Scalar> &a)
{
    const int n = static_cast<int>(a.rows());
    if (n != a.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0)
        return Scalar(1L);
    if (n > 24)
        throw std::invalid_argument("cofactor expansion limited to 24 columns");
    // memo[mask] = det of rows n-popcount(mask).. over columns in mask.
    std::map<unsigned, Scalar> memo;
    auto rec = [&](auto &self, unsigned mask) -> Scalar {
        int used = std::popcount(mask);
        if (used == 0)
            return Scalar(1L);
        auto it = memo.find(mask);
        if (it != memo.end())
            return it->second;
        int row = n - used;
        Scalar sum(0L);
        int pos = 0;
        for (int c = 0; c < n; ++c) {
            if (!(mask >> c & 1))
                continue;
            if (!scalar_is_zero(a(row, c))) {
                Scalar minor = self(self, mask & ~(1u << c));
                if (!scalar_is_zero(minor)) {
                    Scalar term = a(row, c) * minor;
                    if (pos % 2)
                        sum -= term;
                    else
                        sum += term;
                }
            }
            ++pos;
        }
        memo.emplace(mask, sum);
        return sum;
    };
    return rec(rec, (1u << n) - 1);
}

template <class Scalar> double zero_fraction(const Matrix<Scalar> &a)
{
    if (a.size() == 0)
        return 0.0;
    Eigen::Index z = 0;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            z += scalar_is_zero(a(i, j));
    return static_cast<double>(z) / static_cast<double>(a.size());
}

// Generic exact determinant; cofactor expansion up to 5x5 or when more than
// half the entries are zero, Bareiss otherwise. Bareiss pays for exact
// division, which dominates on small dense matrices of large polynomials.
template <class Scalar> Scalar determinant(const Matrix<Scalar> &a)
{
    if (a.rows() <= 24 && (a.rows() <= 5 || zero_fraction(a) > 0.5))
        return cofactor_determinant(a);
    return bareiss_determinant(a);
}

// Rows are cleared of denominators, then the polynomial matrix is reduced.
template <> RatFunc determinant<RatFunc>(const RFMatrix &a);

template <class Scalar> struct Udl {
    Matrix<Scalar> n;       // unit upper triangular
    Matrix<Scalar> h;       // diagonal
    Matrix<Scalar> n_minus; // unit lower triangular
};

// g = n·h·n_minus by elimination from the bottom-right corner; pivot k equals
// det(g_{>=k}) / det(g_{>k}).
template <class Scalar> Udl<Scalar> udl_decompose(const Matrix<Scalar> &g)
{
    const Eigen::Index r = g.rows();
    if (r != g.cols())
        throw std::invalid_argument("UDL of a non-square matrix");
    Matrix<Scalar> s = g;
    Udl<Scalar> out{Matrix<Scalar>::Identity(r, r), Matrix<Scalar>::Zero(r, r), Matrix<Scalar>::Identity(r, r)};
    for (Eigen::Index k = r - 1; k >= 0; --k) {
        const Scalar pivot = s(k, k);
        if (scalar_is_zero(pivot))
            throw NotInOpenCell("trailing minor vanishes at index " + std::to_string(k + 1));
        out.h(k, k) = pivot;
        for (Eigen::Index i = 0; i < k; ++i) {
            if (!scalar_is_zero(s(i, k)))
                out.n(i, k) = s(i, k) / pivot;
            if (!scalar_is_zero(s(k, i)))
                out.n_minus(k, i) = s(k, i) / pivot;
        }
        for (Eigen::Index i = 0; i < k; ++i) {
            if (scalar_is_zero(out.n(i, k)))
                continue;
            for (Eigen::Index j = 0; j < k; ++j)
                if (!scalar_is_zero(s(k, j)))
                    s(i, j) -= out.n(i, k) * s(k, j);
        }
    }
    return out;
}

// Matrix product written out so sparse symbolic entries skip zero terms.
template <class Scalar> Matrix<Scalar> multiply(const Matrix<Scalar> &a, const Matrix<Scalar> &b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product shape mismatch");
    Matrix<Scalar> c = Matrix<Scalar>::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            if (scalar_is_zero(a(i, k)))
                continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j)
                if (!scalar_is_zero(b(k, j)))
                    c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <class Scalar> bool equal(const Matrix<Scalar> &a, const Matrix<Scalar> &b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j)))
                return false;
    return true;
}

// Inverse of a unit lower-triangular matrix by forward substitution.
template <class Scalar> Matrix<Scalar> unit_lower_inverse(const Matrix<Scalar> &l)
{
    const Eigen::Index n = l.rows();
    Matrix<Scalar> inv = Matrix<Scalar>::Identity(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = j + 1; i < n; ++i) {
            Scalar acc(0L);
            for (Eigen::Index k = j; k < i; ++k)
                if (!scalar_is_zero(l(i, k)) && !scalar_is_zero(inv(k, j)))
                    acc += l(i, k) * inv(k, j);
            inv(i, j) = -acc;
        }
    return inv;
}

QMatrix evaluate(const RFMatrix &m, const EvalPoint &p);

// det(∂u_β/∂n_α) with rows indexed by β and columns by α, both in `order`.
RatFunc jacobian_det(const std::map<VarId, RatFunc> &map, const std::vector<VarId> &order);
RFMatrix jacobian_matrix(const std::map<VarId, RatFunc> &map, const std::vector<VarId> &order);

} // namespace schubert
