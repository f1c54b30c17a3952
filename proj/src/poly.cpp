#include "schubert/poly.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace schubert {

int var_index(VarId v)
{
    if (v.a < 1 || v.a >= v.b || v.b > kMaxRank)
        throw std::out_of_range("variable label out of range: " + to_string(v));
    // Rows a' < a contribute (kMaxRank - a') slots each.
    int base = (v.a - 1) * kMaxRank - (v.a - 1) * v.a / 2;
    return base + (v.b - v.a - 1);
}

VarId var_at(int index)
{
    for (int a = 1; a < kMaxRank; ++a) {
        int width = kMaxRank - a;
        if (index < width)
            return {a, a + 1 + index};
        index -= width;
    }
    throw std::out_of_range("variable index out of range");
}

std::string to_string(VarId v)
{
    return "n." + std::to_string(v.a) + "." + std::to_string(v.b);
}

std::optional<VarId> parse_var(const std::string &s)
{
    int a = 0, b = 0;
    char tail = 0;
    if (std::sscanf(s.c_str(), "n.%d.%d%c", &a, &b, &tail) != 2)
        return std::nullopt;
    if (a < 1 || a >= b || b > kMaxRank)
        return std::nullopt;
    return VarId{a, b};
}

// ---- Monomial ----

Monomial Monomial::var(VarId v, int exp)
{
    Monomial m;
    m.set(var_index(v), exp);
    return m;
}

void Monomial::set(int index, int exp)
{
    if (exp < 0 || exp > 255)
        throw std::overflow_error("monomial exponent out of range");
    deg_ = static_cast<std::uint16_t>(deg_ - e_[index] + exp);
    e_[index] = static_cast<std::uint8_t>(exp);
}

bool Monomial::squarefree() const
{
    return std::all_of(e_.begin(), e_.end(), [](std::uint8_t x) { return x <= 1; });
}

Monomial &Monomial::operator*=(const Monomial &o)
{
    for (int i = 0; i < kMaxVars; ++i) {
        int s = e_[i] + o.e_[i];
        if (s > 255)
            throw std::overflow_error("monomial exponent out of range");
        e_[i] = static_cast<std::uint8_t>(s);
    }
    deg_ = static_cast<std::uint16_t>(deg_ + o.deg_);
    return *this;
}

Monomial Monomial::operator*(const Monomial &o) const
{
    Monomial r = *this;
    r *= o;
    return r;
}

bool Monomial::divides(const Monomial &o) const
{
    if (deg_ > o.deg_)
        return false;
    for (int i = 0; i < kMaxVars; ++i)
        if (e_[i] > o.e_[i])
            return false;
    return true;
}

Monomial Monomial::operator/(const Monomial &o) const
{
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
        if (o.e_[i] > e_[i])
            throw std::domain_error("monomial division is not exact");
        r.e_[i] = static_cast<std::uint8_t>(e_[i] - o.e_[i]);
    }
    r.deg_ = static_cast<std::uint16_t>(deg_ - o.deg_);
    return r;
}

Monomial Monomial::pow(int k) const
{
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i)
        if (e_[i])
            r.set(i, e_[i] * k);
    return r;
}

Monomial gcd(const Monomial &x, const Monomial &y)
{
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i)
        r.e_[i] = std::min(x.e_[i], y.e_[i]);
    int d = 0;
    for (auto v : r.e_)
        d += v;
    r.deg_ = static_cast<std::uint16_t>(d);
    return r;
}

Monomial lcm(const Monomial &x, const Monomial &y)
{
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i)
        r.e_[i] = std::max(x.e_[i], y.e_[i]);
    int d = 0;
    for (auto v : r.e_)
        d += v;
    r.deg_ = static_cast<std::uint16_t>(d);
    return r;
}

std::vector<std::pair<VarId, int>> Monomial::factors() const
{
    std::vector<std::pair<VarId, int>> out;
    for (int i = 0; i < kMaxVars; ++i)
        if (e_[i])
            out.emplace_back(var_at(i), e_[i]);
    return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial &o) const
{
    if (deg_ != o.deg_)
        return deg_ <=> o.deg_;
    for (int i = 0; i < kMaxVars; ++i)
        if (e_[i] != o.e_[i])
            return e_[i] <=> o.e_[i];
    return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const
{
    std::size_t h = 1469598103934665603ull;
    for (auto v : e_) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return h;
}

std::string Monomial::to_string() const
{
    std::string s;
    for (auto [v, k] : factors()) {
        if (!s.empty())
            s += "·";
        s += schubert::to_string(v);
        if (k > 1)
            s += "^" + std::to_string(k);
    }
    return s.empty() ? "1" : s;
}

// ---- MultiPoly ----

namespace {

bool term_greater(const Term &x, const Term &y) { return x.m > y.m; }

// Merges two descending term lists, with y scaled by sign.
std::vector<Term> merge(const std::vector<Term> &x, const std::vector<Term> &y, bool subtract)
{
    std::vector<Term> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].m > y[j].m)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].m > x[i].m) {
            out.push_back(y[j++]);
            if (subtract)
                out.back().c = -out.back().c;
        } else {
            Integer c = subtract ? Integer(x[i].c - y[j].c) : Integer(x[i].c + y[j].c);
            if (c != 0)
                out.push_back({x[i].m, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

MultiPoly::MultiPoly(long c)
{
    if (c != 0)
        t_.push_back({Monomial(), Integer(c)});
}

MultiPoly::MultiPoly(const Integer &c)
{
    if (c != 0)
        t_.push_back({Monomial(), c});
}

MultiPoly::MultiPoly(const Monomial &m, const Integer &c)
{
    if (c != 0)
        t_.push_back({m, c});
}

MultiPoly MultiPoly::var(VarId v) { return MultiPoly(Monomial::var(v)); }

MultiPoly MultiPoly::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), term_greater);
    MultiPoly p;
    for (auto &t : terms) {
        if (!p.t_.empty() && p.t_.back().m == t.m) {
            p.t_.back().c += t.c;
            if (p.t_.back().c == 0)
                p.t_.pop_back();
        } else if (t.c != 0) {
            p.t_.push_back(std::move(t));
        }
    }
    return p;
}

Integer MultiPoly::constant_value() const
{
    if (!is_constant())
        throw std::domain_error("polynomial is not constant");
    return t_.empty() ? Integer(0) : t_[0].c;
}

int MultiPoly::degree() const
{
    int d = -1;
    for (auto &t : t_)
        d = std::max(d, t.m.degree());
    return d;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto &t : r.t_)
        t.c = -t.c;
    return r;
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o)
{
    if (o.t_.empty())
        return *this;
    t_ = merge(t_, o.t_, false);
    return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o)
{
    if (o.t_.empty())
        return *this;
    t_ = merge(t_, o.t_, true);
    return *this;
}

MultiPoly MultiPoly::mul_term(const Monomial &m, const Integer &c) const
{
    MultiPoly r;
    if (c == 0)
        return r;
    r.t_.reserve(t_.size());
    for (auto &t : t_)
        r.t_.push_back({t.m * m, t.c * c});
    return r;
}

MultiPoly operator*(const MultiPoly &x, const MultiPoly &y)
{
    if (x.t_.empty() || y.t_.empty())
        return {};
    const MultiPoly &big = x.t_.size() >= y.t_.size() ? x : y;
    const MultiPoly &small = x.t_.size() >= y.t_.size() ? y : x;
    // Each row big * term is already sorted; merge rows pairwise.
    std::vector<std::vector<Term>> rows;
    rows.reserve(small.t_.size());
    for (auto &t : small.t_)
        rows.push_back(big.mul_term(t.m, t.c).t_);
    while (rows.size() > 1) {
        std::vector<std::vector<Term>> next;
        next.reserve((rows.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < rows.size(); i += 2)
            next.push_back(merge(rows[i], rows[i + 1], false));
        if (rows.size() % 2)
            next.push_back(std::move(rows.back()));
        rows = std::move(next);
    }
    MultiPoly r;
    r.t_ = std::move(rows[0]);
    return r;
}

MultiPoly &MultiPoly::operator*=(const MultiPoly &o)
{
    *this = *this * o;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned k) const
{
    MultiPoly result(1L), base = *this;
    while (k) {
        if (k & 1)
            result *= base;
        k >>= 1;
        if (k)
            base *= base;
    }
    return result;
}

Integer MultiPoly::content() const
{
    Integer g = 0;
    for (auto &t : t_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

Monomial MultiPoly::monomial_content() const
{
    if (t_.empty())
        return {};
    Monomial g = t_[0].m;
    for (std::size_t i = 1; i < t_.size() && !g.is_one(); ++i)
        g = gcd(g, t_[i].m);
    return g;
}

MultiPoly MultiPoly::divide_term(const Monomial &m, const Integer &c) const
{
    MultiPoly r;
    r.t_.reserve(t_.size());
    for (auto &t : t_) {
        Integer q;
        if (!mpz_divisible_p(t.c.get_mpz_t(), c.get_mpz_t()))
            throw std::domain_error("coefficient division is not exact");
        mpz_divexact(q.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
        r.t_.push_back({t.m / m, std::move(q)});
    }
    return r;
}

MultiPoly MultiPoly::derivative(VarId v) const
{
    int idx = var_index(v);
    std::vector<Term> out;
    Monomial mv = Monomial::var(v);
    for (auto &t : t_) {
        int k = t.m.exponent_at(idx);
        if (k == 0)
            continue;
        out.push_back({t.m / mv, t.c * k});
    }
    // Removing one power of v can reorder terms.
    return from_terms(std::move(out));
}

Rational MultiPoly::evaluate(const EvalPoint &p) const
{
    Rational sum = 0;
    for (auto &t : t_) {
        Rational term = t.c;
        for (auto [v, k] : t.m.factors()) {
            Rational x;
            mpz_pow_ui(x.get_num_mpz_t(), p.at(v).get_num_mpz_t(), k);
            mpz_pow_ui(x.get_den_mpz_t(), p.at(v).get_den_mpz_t(), k);
            term *= x;
        }
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::flip_sign(VarId v) const
{
    MultiPoly r = *this;
    int idx = var_index(v);
    for (auto &t : r.t_)
        if (t.m.exponent_at(idx) % 2)
            t.c = -t.c;
    return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(VarId v) const
{
    int idx = var_index(v);
    std::vector<std::vector<Term>> parts;
    for (auto &t : t_) {
        int k = t.m.exponent_at(idx);
        if (static_cast<int>(parts.size()) <= k)
            parts.resize(k + 1);
        parts[k].push_back({t.m / Monomial::var(v, k), t.c});
    }
    std::vector<MultiPoly> out;
    for (auto &p : parts)
        out.push_back(from_terms(std::move(p)));
    return out;
}

bool MultiPoly::depends_on(VarId v) const
{
    int idx = var_index(v);
    return std::any_of(t_.begin(), t_.end(), [&](const Term &t) { return t.m.exponent_at(idx) > 0; });
}

bool MultiPoly::operator==(const MultiPoly &o) const
{
    if (t_.size() != o.t_.size())
        return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
        if (!(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c)
            return false;
    return true;
}

std::string MultiPoly::to_string() const
{
    if (t_.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < t_.size(); ++i) {
        const Term &t = t_[i];
        bool neg = t.c < 0;
        Integer mag = abs(t.c);
        if (i == 0)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (t.m.is_one()) {
            s += mag.get_str();
        } else {
            if (mag != 1)
                s += mag.get_str() + "·";
            s += t.m.to_string();
        }
    }
    return s;
}

std::optional<MultiPoly> divide_exact(const MultiPoly &p, const MultiPoly &q)
{
    if (q.is_zero())
        throw std::domain_error("division by the zero polynomial");
    if (p.is_zero())
        return MultiPoly();
    const Term &lq = q.leading();
    if (q.is_monomial()) {
        for (auto &t : p.terms())
            if (!lq.m.divides(t.m) || !mpz_divisible_p(t.c.get_mpz_t(), lq.c.get_mpz_t()))
                return std::nullopt;
        return p.divide_term(lq.m, lq.c);
    }
    // A quotient needs degree(p) >= degree(q) in every variable; cheap rejection.
    if (p.degree() < q.degree())
        return std::nullopt;
    std::vector<Term> quot;
    MultiPoly rem = p;
    while (!rem.is_zero()) {
        const Term &lr = rem.leading();
        if (!lq.m.divides(lr.m) || !mpz_divisible_p(lr.c.get_mpz_t(), lq.c.get_mpz_t()))
            return std::nullopt;
        Integer c;
        mpz_divexact(c.get_mpz_t(), lr.c.get_mpz_t(), lq.c.get_mpz_t());
        Monomial m = lr.m / lq.m;
        rem -= q.mul_term(m, c);
        quot.push_back({m, std::move(c)});
    }
    return MultiPoly::from_terms(std::move(quot));
}

// ---- EvalPoint ----

void EvalPoint::set(VarId v, const Rational &x)
{
    int i = var_index(v);
    val_[i] = x;
    val_[i].canonicalize();
    has_[i] = true;
}

const Rational &EvalPoint::at(VarId v) const { return at_index(var_index(v)); }

const Rational &EvalPoint::at_index(int index) const
{
    if (!has_[index])
        throw std::out_of_range("no value assigned to " + to_string(var_at(index)));
    return val_[index];
}

} // namespace schubert
