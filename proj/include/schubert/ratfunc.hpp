#pragma once

#include <stdexcept>
#include <string>

#include "schubert/poly.hpp"

namespace schubert {

struct PoleAtPoint : std::domain_error {
    using std::domain_error::domain_error;
};

// Quotient num/den of polynomials. Normalization removes the joint integer
// content and the joint monomial content, cancels den's non-monomial part when
// it divides num, and makes den's leading coefficient positive. This is not a
// canonical form in general; equality cross-multiplies.
class RatFunc {
public:
    RatFunc() : den_(1L) {}
    RatFunc(long c) : num_(c), den_(1L) {}
    RatFunc(const Integer &c) : num_(c), den_(1L) {}
    RatFunc(const Rational &q);
    RatFunc(MultiPoly num) : num_(std::move(num)), den_(1L) {}
    RatFunc(MultiPoly num, MultiPoly den);
    static RatFunc var(VarId v) { return RatFunc(MultiPoly::var(v)); }
    static RatFunc monomial(const Monomial &m, const Integer &c = 1) { return RatFunc(MultiPoly(m, c)); }

    const MultiPoly &num() const { return num_; }
    const MultiPoly &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool has_monomial_den() const { return den_.is_monomial(); }
    // A single signed term c·m / d·m'.
    bool is_laurent_monomial() const { return num_.is_monomial() && den_.is_monomial(); }

    RatFunc operator-() const;
    RatFunc &operator+=(const RatFunc &o);
    RatFunc &operator-=(const RatFunc &o);
    RatFunc &operator*=(const RatFunc &o);
    RatFunc &operator/=(const RatFunc &o);
    friend RatFunc operator+(RatFunc x, const RatFunc &y) { return x += y; }
    friend RatFunc operator-(RatFunc x, const RatFunc &y) { return x -= y; }
    friend RatFunc operator*(RatFunc x, const RatFunc &y) { return x *= y; }
    friend RatFunc operator/(RatFunc x, const RatFunc &y) { return x /= y; }
    RatFunc inverse() const;
    RatFunc pow(int k) const;

    friend bool operator==(const RatFunc &x, const RatFunc &y);

    RatFunc derivative(VarId v) const;
    Rational evaluate(const EvalPoint &p) const;
    // Replaces n_v by s everywhere.
    RatFunc substitute(VarId v, const RatFunc &s) const;
    RatFunc flip_sign(VarId v) const;
    bool depends_on(VarId v) const { return num_.depends_on(v) || den_.depends_on(v); }

    std::string to_string() const;

private:
    void normalize();

    MultiPoly num_;
    MultiPoly den_;
};

RatFunc derivative(const RatFunc &f, VarId v);
Rational evaluate(const RatFunc &f, const EvalPoint &p);

// Expands f, whose denominator must be a single term, as sum of c·m/m' with
// m, m' coprime. Returns false when the denominator is not a monomial.
struct LaurentTerm {
    Rational c;
    Monomial up;
    Monomial down;
};
bool laurent_terms(const RatFunc &f, std::vector<LaurentTerm> &out);

} // namespace schubert
