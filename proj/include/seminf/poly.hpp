#pragma once

/* Sparse bivariate polynomials over Q, with the small expression grammar
 * used by the CLI: rational literals, x, y, + - * ^ and parentheses.
 */

#include <map>
#include <string>
#include <utility>

#include "seminf/numbers.hpp"

namespace seminf {

class BivariatePolynomial {
  public:
    using Exponents = std::pair<long, long>;  // (x-degree, y-degree)

    BivariatePolynomial() = default;

    static BivariatePolynomial constant(const Rat& c);
    static BivariatePolynomial variable_x() { return monomial(1, 0, Rat(1)); }
    static BivariatePolynomial variable_y() { return monomial(0, 1, Rat(1)); }
    static BivariatePolynomial monomial(long xdeg, long ydeg, Rat coeff);

    bool is_zero() const { return terms_.empty(); }
    long total_degree() const;  // -1 for the zero polynomial
    long degree_x() const;
    long degree_y() const;
    Rat coeff(long xdeg, long ydeg) const;
    const std::map<Exponents, Rat>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    BivariatePolynomial operator+(const BivariatePolynomial& o) const;
    BivariatePolynomial operator-(const BivariatePolynomial& o) const;
    BivariatePolynomial operator-() const;
    BivariatePolynomial operator*(const BivariatePolynomial& o) const;
    BivariatePolynomial pow(unsigned long e) const;
    BivariatePolynomial scaled(const Rat& c) const;

    bool operator==(const BivariatePolynomial& o) const { return terms_ == o.terms_; }

    // Division in y by a divisor whose leading y-coefficient is the constant 1.
    // Returns (quotient, remainder) with deg_y(remainder) < deg_y(divisor).
    static std::pair<BivariatePolynomial, BivariatePolynomial> divmod_y(
        const BivariatePolynomial& f, const BivariatePolynomial& divisor);

    // Lowest common denominator of the coefficients.
    Int denominator_lcm() const;

    // Canonical rendering: terms by descending total degree, then y-degree.
    std::string str() const;

  private:
    std::map<Exponents, Rat> terms_;  // nonzero coefficients only
    void add_term(long xdeg, long ydeg, const Rat& c);
};

// Parses the expression grammar; reports the byte position of errors.
BivariatePolynomial parse_poly(const std::string& text);

} // namespace seminf
