#pragma once

/* Finitely generated sub-semigroups of the ordered value groups.
 *
 * Membership answers always carry evidence: a coefficient vector for yes,
 * a short certificate string for no. Searches that cannot certify either
 * way within their budget raise budget_error instead of guessing.
 */

#include <optional>
#include <string>
#include <vector>

#include "seminf/value.hpp"

namespace seminf {

class GeneratedSemigroup {
  public:
    explicit GeneratedSemigroup(std::vector<OrderedValue> generators);

    const std::vector<OrderedValue>& generators() const { return gens_; }
    ValueKind kind() const { return kind_; }

  private:
    std::vector<OrderedValue> gens_;
    ValueKind kind_;  // widest scalar kind, or LexPair
};

struct MemberResult {
    bool member = false;
    std::vector<Int> coefficients;  // aligned with generators(); empty for "no"
    std::string certificate;        // why (for either outcome)
};

MemberResult member(const GeneratedSemigroup& s, const OrderedValue& v,
                    std::size_t budget = 1 << 22);

// Exactly the members in [lo, hi], sorted by the group order.
// Throws math_error when the window provably contains infinitely many
// members (possible for lex-pair semigroups).
std::vector<OrderedValue> enumerate(const GeneratedSemigroup& s,
                                    const OrderedValue& lo, const OrderedValue& hi,
                                    std::size_t budget = 1 << 22);

// Exhaustive expansion { sum s_i g_i : sum s_i <= budget }, deduplicated and
// sorted. value_cap (same kind) prunes sums that exceeded it -- only sound
// for semigroups with nonnegative generators, which the caller asserts by
// passing it.
std::vector<OrderedValue> brute_force_generate(const std::vector<OrderedValue>& generators,
                                               unsigned budget,
                                               const OrderedValue* value_cap = nullptr,
                                               std::size_t node_budget = 1 << 24);

// Conductor and Frobenius number of <gens>, gens positive with gcd 1;
// nullopt when gcd != 1.
std::optional<std::pair<Int, Int>> conductor_frobenius(const std::vector<Int>& gens);

} // namespace seminf
