#pragma once

/* Exact scalar arithmetic: arbitrary-precision integers and rationals
 * (GMP) plus real quadratic numbers (a + b*sqrt(d))/c kept in a canonical
 * normal form. All comparisons are decided exactly, never through floats.
 */

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>

#include "seminf/errors.hpp"

namespace seminf {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Floor division (round toward minus infinity).
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int fmod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Floor of sqrt(a), a >= 0.
inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw math_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int floor_rat(const Rat& q) { return fdiv(q.get_num(), q.get_den()); }

// Strictly positive probable-prime test is exact for the sizes used here.
inline bool is_prime(const Int& p) {
    return p > 1 && mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

// Splits n > 0 as s^2 * f with f squarefree. Trial division; inputs at the
// scale of this library are tiny, but guard against pathological radicands.
std::pair<Int, Int> split_square(const Int& n);

/* A real quadratic irrational (a + b*sqrt(d)) / c in normal form:
 *   c > 0, gcd(a, b, c) = 1, d > 1 squarefree, b != 0.
 * b == 0 never occurs here; such values collapse to Rat at the
 * OrderedValue construction layer.
 */
class Quad {
  public:
    Quad(Int a, Int b, Int c, Int d);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    // -1, 0, +1; exact, via cross-multiplied square comparisons.
    int sign() const;
    Int floor() const;

    Quad operator-() const;
    Quad add_rat(const Rat& r) const;
    Quad mul_rat(const Rat& r) const;        // r != 0
    Quad add(const Quad& o) const;           // same d; may throw if result is rational
    Quad mul(const Quad& o) const;           // same d; may throw if result is rational
    Quad reciprocal() const;

    // Rational and surd components: a/c and (b/c) (coefficient of sqrt(d)).
    Rat rat_part() const { return make_rat(a_, c_); }
    Rat surd_coeff() const { return make_rat(b_, c_); }

    bool operator==(const Quad& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }

    std::string str() const;

    // Builders that may collapse to a rational (b == 0 or d a perfect square).
    // Returns the rational value when it collapses, otherwise nullopt and
    // fills quad_out.
    static std::optional<Rat> make(Int a, Int b, Int c, Int d, Quad& quad_out);

  private:
    Int a_, b_, c_, d_;
    void normalize();
};

std::string rat_str(const Rat& q);

} // namespace seminf
