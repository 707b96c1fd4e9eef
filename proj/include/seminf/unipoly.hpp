#pragma once

/* Dense univariate polynomials over Z and the subresultant machinery on
 * (Z[x])[y] used by the intersection-number oracle: pseudo-division,
 * primitive-PRS gcd, and the resultant with respect to y.
 */

#include <vector>

#include "seminf/numbers.hpp"
#include "seminf/poly.hpp"

namespace seminf {

struct UniPoly {
    std::vector<Int> c;  // little-endian, no trailing zeros

    UniPoly() = default;
    explicit UniPoly(Int constant);

    static UniPoly zero() { return UniPoly(); }
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const Int& lc() const;

    void normalize();  // strip trailing zeros

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly mul_int(const Int& k) const;
    bool operator==(const UniPoly& o) const { return c == o.c; }

    Int content() const;          // gcd of coefficients, 0 for zero
    UniPoly primitive_part() const;

    // Exact division; throws math_error if not divisible.
    static UniPoly divexact(const UniPoly& a, const UniPoly& b);
};

// gcd in Z[x] via the primitive PRS (up to sign; content handled).
UniPoly unipoly_gcd(const UniPoly& a, const UniPoly& b);

// A polynomial in y with Z[x] coefficients, index = y-degree.
using YPoly = std::vector<UniPoly>;

YPoly to_ypoly(const BivariatePolynomial& f);  // clears rational denominators
long ydeg(const YPoly& f);

// Resultant with respect to y of two nonzero elements of (Z[x])[y],
// computed by the subresultant pseudo-remainder sequence. Returns the zero
// polynomial exactly when the inputs share a factor of positive y-degree.
UniPoly resultant_y(YPoly A, YPoly B);

// True when f and g share a non-constant factor (in y or in the x-content).
bool have_common_factor(const BivariatePolynomial& f, const BivariatePolynomial& g);

} // namespace seminf
