#pragma once

/* Delta-sequences for the five types of plane valuations at infinity.
 *
 * The integer core delta_0..delta_g (conditions (1)(2)(3) of the
 * Abhyankar-Moh semigroup theorem) underlies every type:
 *   A -- core + one more integer delta_{g+1} <= n_g delta_g,
 *   B -- the core lifted to Z^2 with final generator (-1, delta_0^2),
 *   C -- the core transported to Z^2-lex through the continued fraction
 *        of its last m/e pair,
 *   D -- a normalized rational prefix closed by a quadratic irrational,
 *        certified by witness cores for two rational approximants,
 *   E -- an infinite normalized sequence given by a finitely-described
 *        rule, validated prefix by prefix.
 */

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <variant>
#include <vector>

#include "seminf/contfrac.hpp"
#include "seminf/value.hpp"

namespace seminf {

struct DeltaCore {
    std::vector<Int> entries;  // delta_0..delta_g, g >= 1
    std::size_t g() const { return entries.size() - 1; }
    bool operator==(const DeltaCore&) const = default;
};

struct CoreReport {
    std::vector<Int> d;  // d_1..d_{g+1}
    std::vector<Int> n;  // n_1..n_g
    bool cond1 = false, cond2 = false, cond3 = false;
    long first_fail = -1;  // index of the first failing instance, -1 if none
    std::string detail;
    bool ok() const { return cond1 && cond2 && cond3; }
};

// Conditions (1) gcd chain, (2) n_i delta_i in <delta_0..delta_{i-1}>,
// (3) strict degree bounds. Entries must be positive and at least two.
CoreReport validate_core(const std::vector<Int>& entries);

struct DerivedInvariants {
    bool divides_case = false;  // (delta_0 - delta_1) | delta_0
    std::vector<Int> d, n;
    std::vector<std::pair<Int, Int>> em_pairs;      // (m_l, e_l)
    std::vector<Int> beta;                          // maximal contact values
    std::optional<std::pair<Int, Int>> euclid_tail; // terminal division step of the last pair
};
DerivedInvariants derived_invariants(const DeltaCore& core);

// Entry-wise division by delta_1.
std::vector<Rat> normalize(const DeltaCore& core);

// Clears denominators and divides by the content: the unique candidate
// integer model of a normalized sequence (condition (1) forces content 1).
DeltaCore denormalize_primitive(const std::vector<Rat>& normalized);

// n_i delta_i = sum_{j<i} a_ij delta_j with 0 <= a_ij < n_j for j >= 1;
// returns (a_i0, ..., a_{i,i-1}). 1 <= i <= g.
std::vector<Int> expansion_digits(const DeltaCore& core, std::size_t i);

enum class SeqType { A, B, C, D, E };

struct TypeA {
    DeltaCore core;
    Int last;  // delta_{g+1}
};

struct TypeB {
    DeltaCore core;
};

struct TypeC {
    DeltaCore core;
    std::vector<LexPair> entries;
    // construction data, kept for reports and tests
    std::vector<Int> cf_digits;
    std::pair<Int, Int> ab, ab_prime;  // y_{t-2}, y_{t-3}
    Int scale;                         // A a_t + B
    bool small_case = false;
    std::optional<Int> j, n1;          // divides-flavour small case parameters
};

struct TypeD {
    std::vector<Rat> prefix;  // delta_0..delta_{g-1}, normalized; empty iff degenerate {tau, 1}
    Quad last;
    std::vector<Rat> approximants;    // at least two, each certified below
    std::vector<DeltaCore> witnesses; // aligned with approximants
    bool degenerate() const { return prefix.empty(); }
};

struct TypeE {
    enum class Rule { Geometric, Explicit };
    Rule rule = Rule::Geometric;
    Rat head0;               // geometric: delta_0 (head is {head0, 1})
    Rat ratio;               // geometric: delta_i = ratio^(i-1) for i >= 2
    std::vector<Rat> entries;  // explicit rule
    std::shared_ptr<struct TypeECache> cache;
};

struct PrefixCertificate {
    DeltaCore witness;
    CoreReport report;
};

struct TypeECache {
    std::mutex lock;
    std::map<std::size_t, PrefixCertificate> certified;
};

class DeltaSequence {
  public:
    explicit DeltaSequence(TypeA v) : payload_(std::move(v)) {}
    explicit DeltaSequence(TypeB v) : payload_(std::move(v)) {}
    explicit DeltaSequence(TypeC v) : payload_(std::move(v)) {}
    explicit DeltaSequence(TypeD v) : payload_(std::move(v)) {}
    explicit DeltaSequence(TypeE v) : payload_(std::move(v)) {}

    SeqType type() const { return static_cast<SeqType>(payload_.index()); }
    const TypeA& a() const { return std::get<TypeA>(payload_); }
    const TypeB& b() const { return std::get<TypeB>(payload_); }
    const TypeC& c() const { return std::get<TypeC>(payload_); }
    const TypeD& d() const { return std::get<TypeD>(payload_); }
    const TypeE& e() const { return std::get<TypeE>(payload_); }

  private:
    std::variant<TypeA, TypeB, TypeC, TypeD, TypeE> payload_;
};

DeltaSequence build_type_a(DeltaCore core, Int last);
DeltaSequence build_type_b(DeltaCore core);

// Main clause: g >= 2 when delta_0 - delta_1 does not divide delta_0,
// g >= 3 when it does. Smaller cores go through build_type_c_small.
DeltaSequence build_type_c(DeltaCore core);

// Degenerate clauses for 2-entry (non-divides) and 3-entry (divides) cores.
// j and n1, when given, are validated against delta_0/(delta_0 - delta_1)
// and delta_0/gcd(delta_0, delta_1).
DeltaSequence build_type_c_small(DeltaCore core,
                                 std::optional<Int> j = std::nullopt,
                                 std::optional<Int> n1 = std::nullopt);

// Dispatches between the main and small type-C clauses on core size.
DeltaSequence build_type_c_any(DeltaCore core);

// prefix = normalization of a valid core truncated before its last entry
// (so prefix[1] == 1); last must be a positive quadratic irrational below
// n_{g-1} * prefix.back(). Witness cores are synthesized from continued
// fraction convergents when fewer than two approximants are supplied.
DeltaSequence build_type_d(std::vector<Rat> prefix, const OrderedValue& last,
                           std::vector<Rat> supplied_approximants = {});

// The closing clause {tau, 1}, tau > 1 irrational.
DeltaSequence build_type_d_degenerate(const OrderedValue& tau);

DeltaSequence type_e_geometric(Rat head0, Rat ratio);
DeltaSequence type_e_explicit(std::vector<Rat> entries);

// delta_0..delta_j of a type-E sequence.
std::vector<Rat> materialize_prefix(const DeltaSequence& seq, std::size_t j);

// Finds the integer rescaling of delta_0..delta_j and validates it,
// caching the certificate. Safe to call concurrently; idempotent.
PrefixCertificate validate_prefix(const DeltaSequence& seq, std::size_t j);

// Witness machinery shared with the cluster builder: witness cores whose
// last-pair walk agrees with the limit walk for at least `digit_goal` digits.
struct TypeDWitness {
    Rat approximant;
    DeltaCore core;
    std::size_t agreed_digits;
};
std::vector<TypeDWitness> type_d_witnesses(const TypeD& data, std::size_t min_count,
                                           std::size_t digit_goal,
                                           const std::vector<Rat>& supplied);

struct Classification {
    SeqType tag;
    std::string rationale;
};
Classification classify(const DeltaSequence& seq);

struct RatioCheck {
    bool consistent;
    Rat ratio;  // beta_0 / beta'_0
};
// Checks delta_i / delta'_i = beta_0 / beta'_0 on the shared interior indices.
RatioCheck ratio_check(const DeltaCore& core, const DeltaCore& shorter);

// p = 0 or a prime not dividing gcd(delta_0, delta_1).
bool char_condition(const DeltaCore& core, const Int& p);

// Generators of the semigroup at infinity in the sequence's value group.
// depth materializes type-E prefixes (ignored for other types).
std::vector<OrderedValue> sequence_generators(const DeltaSequence& seq, std::size_t depth = 8);

// Well-ordering of the spanned semigroup: false exactly when some generator
// is negative in the group order (type B always; type A iff delta_{g+1} < 0).
bool is_well_ordered(const DeltaSequence& seq);

// (m_l, e_l) pairs in the sequence's own scale; the last pair of a type-D
// sequence has a quadratic m. Type E takes the witness core at `depth`.
struct EmPair {
    OrderedValue m, e;
};
std::vector<EmPair> sequence_em_pairs(const DeltaSequence& seq, std::size_t depth = 4);

// Number of trailing free points of a type-A sequence: n_g delta_g - delta_{g+1}.
Int trailing_free_count(const DeltaSequence& seq);

} // namespace seminf
