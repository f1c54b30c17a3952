#include "schubert/ratfunc.hpp"

#include <algorithm>

namespace schubert {

namespace {

// Strips integer content, monomial content and sign from a nonzero polynomial.
MultiPoly primitive_part(const MultiPoly &p)
{
    Integer c = p.content();
    if (p.leading().c < 0)
        c = -c;
    return p.divide_term(p.monomial_content(), c);
}

Integer lcm(const Integer &x, const Integer &y)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return r;
}

} // namespace

RatFunc::RatFunc(const Rational &q) : num_(Integer(q.get_num())), den_(Integer(q.get_den())) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den))
{
    normalize();
}

void RatFunc::normalize()
{
    if (den_.is_zero())
        throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = MultiPoly(1L);
        return;
    }
    if (den_.is_constant() && den_.leading().c == 1)
        return;

    if (!den_.is_monomial()) {
        MultiPoly q = primitive_part(den_);
        if (!q.is_constant()) {
            if (auto quot = divide_exact(num_, q)) {
                num_ = std::move(*quot);
                den_ = *divide_exact(den_, q);
            } else if (!num_.is_monomial()) {
                MultiPoly pn = primitive_part(num_);
                if (auto back = divide_exact(q, pn)) {
                    num_ = *divide_exact(num_, pn);
                    den_ = *divide_exact(den_, pn);
                }
            }
        }
    }

    Integer g = num_.content();
    Integer gd = den_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gd.get_mpz_t());
    Monomial gm = gcd(num_.monomial_content(), den_.monomial_content());
    if (den_.leading().c < 0)
        g = -g;
    if (g != 1 || !gm.is_one()) {
        num_ = num_.divide_term(gm, g);
        den_ = den_.divide_term(gm, g);
    }
}

RatFunc RatFunc::operator-() const
{
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc &RatFunc::operator+=(const RatFunc &o)
{
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else if (den_.is_monomial() && o.den_.is_monomial()) {
        const Term &a = den_.leading();
        const Term &b = o.den_.leading();
        Monomial m = lcm(a.m, b.m);
        Integer c = lcm(a.c, b.c);
        num_ = num_.mul_term(m / a.m, c / a.c) + o.num_.mul_term(m / b.m, c / b.c);
        den_ = MultiPoly(m, c);
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RatFunc &RatFunc::operator-=(const RatFunc &o) { return *this += -o; }

RatFunc &RatFunc::operator*=(const RatFunc &o)
{
    if (is_zero() || o.is_zero()) {
        *this = RatFunc();
        return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFunc RatFunc::inverse() const
{
    if (is_zero())
        throw std::domain_error("division by the zero rational function");
    return RatFunc(den_, num_);
}

RatFunc &RatFunc::operator/=(const RatFunc &o) { return *this *= o.inverse(); }

RatFunc RatFunc::pow(int k) const
{
    if (k < 0)
        return inverse().pow(-k);
    return RatFunc(num_.pow(k), den_.pow(k));
}

bool operator==(const RatFunc &x, const RatFunc &y)
{
    if (x.den_ == y.den_)
        return x.num_ == y.num_;
    if (x.is_zero() || y.is_zero())
        return false;
    return x.num_ * y.den_ == y.num_ * x.den_;
}

RatFunc RatFunc::derivative(VarId v) const
{
    MultiPoly dn = num_.derivative(v);
    if (!den_.depends_on(v))
        return RatFunc(dn, den_);
    MultiPoly dd = den_.derivative(v);
    return RatFunc(dn * den_ - num_ * dd, den_ * den_);
}

Rational RatFunc::evaluate(const EvalPoint &p) const
{
    Rational d = den_.evaluate(p);
    if (d == 0)
        throw PoleAtPoint("denominator vanishes at evaluation point: " + den_.to_string());
    return num_.evaluate(p) / d;
}

namespace {

// Homogenizes p(v -> sn/sd) as (poly, K) with p(sn/sd) = poly / sd^K.
std::pair<MultiPoly, int> substitute_poly(const MultiPoly &p, VarId v, const MultiPoly &sn, const MultiPoly &sd)
{
    auto parts = p.coefficients_in(v);
    int K = static_cast<int>(parts.size()) - 1;
    MultiPoly acc;
    for (int k = 0; k <= K; ++k)
        if (!parts[k].is_zero())
            acc += parts[k] * sn.pow(k) * sd.pow(K - k);
    return {acc, K};
}

} // namespace

RatFunc RatFunc::substitute(VarId v, const RatFunc &s) const
{
    if (!depends_on(v))
        return *this;
    auto [n, kn] = substitute_poly(num_, v, s.num(), s.den());
    auto [d, kd] = substitute_poly(den_, v, s.num(), s.den());
    if (kd >= kn)
        return RatFunc(n * s.den().pow(kd - kn), d);
    return RatFunc(n, d * s.den().pow(kn - kd));
}

RatFunc RatFunc::flip_sign(VarId v) const { return RatFunc(num_.flip_sign(v), den_.flip_sign(v)); }

std::string RatFunc::to_string() const
{
    auto wrap = [](const MultiPoly &p) {
        return p.size() > 1 ? "(" + p.to_string() + ")" : p.to_string();
    };
    if (den_.is_constant() && den_.leading().c == 1)
        return num_.to_string();
    return wrap(num_) + " / " + wrap(den_);
}

RatFunc derivative(const RatFunc &f, VarId v) { return f.derivative(v); }

Rational evaluate(const RatFunc &f, const EvalPoint &p) { return f.evaluate(p); }

bool laurent_terms(const RatFunc &f, std::vector<LaurentTerm> &out)
{
    out.clear();
    if (!f.den().is_monomial())
        return false;
    const Term &d = f.den().leading();
    for (auto &t : f.num().terms()) {
        Monomial g = gcd(t.m, d.m);
        Rational c(t.c, d.c);
        c.canonicalize();
        out.push_back({c, t.m / g, d.m / g});
    }
    return true;
}

} // namespace schubert
