#pragma once

/* Generalized Euclidean algorithm and continued fractions over the value
 * groups: Z, Q, Z^2 (lexicographic), and real quadratic fields.
 *
 * A ContinuedFraction is a digit list <a1; a2, ..., at> plus a tail marker:
 *   Terminated -- the remainder chain reached zero,
 *   Infinity   -- a lex-pair division hit a non-Archimedean step
 *                 (positive first coordinate divided by a zero one),
 *   Surd       -- the complete quotient became n + rho with n a nonnegative
 *                 integer and rho a positive pure surd; n is emitted as the
 *                 last digit and rho stored as the tail.
 *
 * Canonical form: a terminated fraction never ends with digit 1 when it has
 * at least two digits (<..., a, 1> is rewritten to <..., a+1>), so equality
 * of fractions is equality of values.
 */

#include <optional>
#include <string>
#include <vector>

#include "seminf/value.hpp"

namespace seminf {

enum class CfTail { Terminated, Infinity, Surd };

class ContinuedFraction {
  public:
    ContinuedFraction(std::vector<Int> digits, CfTail tail,
                      std::optional<Quad> surd = std::nullopt);

    const std::vector<Int>& digits() const { return digits_; }
    CfTail tail() const { return tail_; }
    const Quad& surd() const;

    bool operator==(const ContinuedFraction& o) const;

    // "<3;2>", "<20;1,inf>", "<1;3,2,sqrt(2)>"
    std::string str() const;

  private:
    std::vector<Int> digits_;
    CfTail tail_;
    std::optional<Quad> surd_;
};

// Repeated Euclidean division of numerator by denominator in the group
// order. Numerator must be >= 0 and denominator > 0. The digit budget only
// matters for quadratic inputs whose expansion neither terminates nor
// reaches a pure-surd tail; running out raises budget_error.
ContinuedFraction cf_expand(const OrderedValue& numerator,
                            const OrderedValue& denominator,
                            std::size_t digit_budget = 128);

// Exact value of a non-Infinity fraction as (numerator, denominator):
// a coprime integer pair for Terminated tails, (quadratic, 1) for surd tails.
std::pair<OrderedValue, OrderedValue> cf_fold(const ContinuedFraction& cf);

// The pair recurrence y_i = a_{t-i} y_{i-1} + y_{i-2}, y_{-1} = (0,1),
// y_0 = (1,0); returns (y_{t-2}, y_{t-3}). Requires t >= 2.
struct CfRecurrence {
    std::pair<Int, Int> ab;        // y_{t-2}
    std::pair<Int, Int> ab_prime;  // y_{t-3}
};
CfRecurrence cf_recurrence(const std::vector<Int>& digits);

// One generalized division step m = q*e + r with 0 <= r < e in the group
// order. Returns nullopt when no natural quotient exists (the lex-pair
// "infinite quotient" case).
struct DivisionStep {
    Int quotient;
    OrderedValue remainder;
};
std::optional<DivisionStep> euclid_step(const OrderedValue& m, const OrderedValue& e);

// Digit stream of the plain continued fraction of ratio (no surd-tail
// stopping rule); used by the cluster walk for irrational ratios.
std::vector<Int> cf_digits_plain(const OrderedValue& numerator,
                                 const OrderedValue& denominator,
                                 std::size_t count);

} // namespace seminf
