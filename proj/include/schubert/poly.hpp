#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace schubert {

// Largest matrix size supported by the dense exponent vectors.
inline constexpr int kMaxRank = 8;
inline constexpr int kMaxVars = kMaxRank * (kMaxRank - 1) / 2;

using Integer = mpz_class;
using Rational = mpq_class;

// Label of the free variable n_{a,b}, 1-based, a < b.
struct VarId {
    int a = 0;
    int b = 0;
    auto operator<=>(const VarId &) const = default;
};

// Position of v in the ascending (a,b) order.
int var_index(VarId v);
VarId var_at(int index);
std::string to_string(VarId v);
std::optional<VarId> parse_var(const std::string &s);

class Monomial {
public:
    Monomial() = default;
    static Monomial var(VarId v, int exp = 1);

    int exponent(VarId v) const { return e_[var_index(v)]; }
    int exponent_at(int index) const { return e_[index]; }
    int degree() const { return deg_; }
    bool is_one() const { return deg_ == 0; }
    bool squarefree() const;

    Monomial operator*(const Monomial &o) const;
    Monomial &operator*=(const Monomial &o);
    bool divides(const Monomial &o) const;
    // Requires divides(o) for *this == o * result.
    Monomial operator/(const Monomial &o) const;
    Monomial pow(int k) const;

    friend Monomial gcd(const Monomial &x, const Monomial &y);
    friend Monomial lcm(const Monomial &x, const Monomial &y);

    // Variables with nonzero exponent, ascending.
    std::vector<std::pair<VarId, int>> factors() const;

    bool operator==(const Monomial &o) const { return deg_ == o.deg_ && e_ == o.e_; }
    // Graded lex: total degree first, then the exponent of the smallest variable.
    std::strong_ordering operator<=>(const Monomial &o) const;

    std::size_t hash() const;
    std::string to_string() const;

private:
    void set(int index, int exp);

    std::array<std::uint8_t, kMaxVars> e_{};
    std::uint16_t deg_ = 0;
};

struct Term {
    Monomial m;
    Integer c;
};

class EvalPoint;

// Sparse polynomial; terms are kept strictly descending in the monomial order.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(long c);
    MultiPoly(const Integer &c);
    MultiPoly(const Monomial &m, const Integer &c = 1);
    static MultiPoly var(VarId v);
    // Takes terms in any order; merges duplicates and drops zeros.
    static MultiPoly from_terms(std::vector<Term> terms);

    const std::vector<Term> &terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
    bool is_monomial() const { return t_.size() == 1; }
    const Term &leading() const { return t_.front(); }
    Integer constant_value() const;
    int degree() const;

    MultiPoly operator-() const;
    MultiPoly &operator+=(const MultiPoly &o);
    MultiPoly &operator-=(const MultiPoly &o);
    MultiPoly &operator*=(const MultiPoly &o);
    friend MultiPoly operator+(MultiPoly x, const MultiPoly &y) { return x += y; }
    friend MultiPoly operator-(MultiPoly x, const MultiPoly &y) { return x -= y; }
    friend MultiPoly operator*(const MultiPoly &x, const MultiPoly &y);
    MultiPoly mul_term(const Monomial &m, const Integer &c) const;
    MultiPoly pow(unsigned k) const;

    // gcd of the coefficients, nonnegative.
    Integer content() const;
    // gcd of the monomials; one for the zero polynomial.
    Monomial monomial_content() const;
    // Exact division by a constant and a monomial; both must divide every term.
    MultiPoly divide_term(const Monomial &m, const Integer &c) const;

    MultiPoly derivative(VarId v) const;
    Rational evaluate(const EvalPoint &p) const;
    // Multiplies each term by sign^(exponent of v) for sign flips n_v -> -n_v.
    MultiPoly flip_sign(VarId v) const;
    // Coefficients of powers of v: result[k] multiplies v^k.
    std::vector<MultiPoly> coefficients_in(VarId v) const;
    bool depends_on(VarId v) const;

    bool operator==(const MultiPoly &o) const;
    std::string to_string() const;

private:
    std::vector<Term> t_;
};

// q | p as polynomials over Z; nullopt when the division is not exact.
std::optional<MultiPoly> divide_exact(const MultiPoly &p, const MultiPoly &q);

// Sparse assignment of nonzero-or-zero rationals to variables.
class EvalPoint {
public:
    void set(VarId v, const Rational &x);
    bool has(VarId v) const { return has_[var_index(v)]; }
    const Rational &at(VarId v) const;
    const Rational &at_index(int index) const;

private:
    std::array<Rational, kMaxVars> val_{};
    std::array<bool, kMaxVars> has_{};
};

} // namespace schubert
