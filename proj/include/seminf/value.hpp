#pragma once

/* OrderedValue: one exact element of the value groups this library works
 * over -- Z, Z^2 with the lexicographic order, Q, or a real quadratic
 * field Q(sqrt(d)). Values are immutable; all operations are pure.
 *
 * The scalar kinds form a tower Integer < Rational < Quadratic and mix
 * freely (the result takes the wider kind). LexPair never mixes with
 * scalars, and quadratics over different radicands never mix.
 */

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "seminf/numbers.hpp"

namespace seminf {

enum class ValueKind { Integer, LexPair, Rational, Quadratic };

struct LexPair {
    Int first, second;
    bool operator==(const LexPair&) const = default;
};

class OrderedValue {
  public:
    OrderedValue() : payload_(Int(0)) {}

    static OrderedValue integer(Int v) { return OrderedValue(std::move(v)); }
    static OrderedValue lex(Int a, Int b) { return OrderedValue(LexPair{std::move(a), std::move(b)}); }
    static OrderedValue rational(Rat v);          // collapses to Integer when integral? no: stays Rational
    static OrderedValue quadratic(Int a, Int b, Int c, Int d); // collapses to Rational when b = 0 / d square

    ValueKind kind() const;
    bool is_scalar() const { return kind() != ValueKind::LexPair; }

    const Int& as_int() const;
    const LexPair& as_lex() const;
    const Rat& as_rat() const;
    const Quad& as_quad() const;

    // Scalar view as a rational; throws on LexPair/Quadratic.
    Rat to_rat() const;

    OrderedValue operator+(const OrderedValue& o) const;
    OrderedValue operator-(const OrderedValue& o) const;
    OrderedValue operator-() const;
    OrderedValue mul_nat(const Int& n) const;   // n >= 0
    OrderedValue mul_int(const Int& n) const;

    int sign() const;                            // -1 / 0 / +1 in the group order
    std::strong_ordering operator<=>(const OrderedValue& o) const;
    bool operator==(const OrderedValue& o) const { return (*this <=> o) == 0; }
    bool operator<(const OrderedValue& o) const { return (*this <=> o) < 0; }
    bool operator<=(const OrderedValue& o) const { return (*this <=> o) <= 0; }
    bool operator>(const OrderedValue& o) const { return (*this <=> o) > 0; }
    bool operator>=(const OrderedValue& o) const { return (*this <=> o) >= 0; }

    bool is_zero() const { return sign() == 0; }

    std::string str() const;

  private:
    explicit OrderedValue(Int v) : payload_(std::move(v)) {}
    explicit OrderedValue(LexPair v) : payload_(std::move(v)) {}
    explicit OrderedValue(Rat v) : payload_(std::move(v)) {}
    explicit OrderedValue(Quad v) : payload_(std::move(v)) {}

    std::variant<Int, LexPair, Rat, Quad> payload_;

    friend OrderedValue scalar_add(const OrderedValue&, const OrderedValue&, int sign);
};

// Parses "42", "-7", "3/4", "(a,b)" into an OrderedValue (Integer, Rational, LexPair).
OrderedValue parse_value(const std::string& text);

} // namespace seminf
