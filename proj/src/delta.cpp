#include "seminf/delta.hpp"

#include <algorithm>
#include <sstream>

#include "seminf/semigroup.hpp"

namespace seminf {

namespace {

std::string join_ints(const std::vector<Int>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        s += xs[i].get_str();
        if (i + 1 < xs.size()) s += ",";
    }
    return s + "}";
}

// terminal division step (m_t, e_t) with e_t | m_t of the plain Euclid walk
std::pair<Int, Int> euclid_terminal_step(Int m, Int e) {
    while (true) {
        Int r = fmod(m, e);
        if (r == 0) return {m, e};
        m = e;
        e = r;
    }
}

std::optional<OrderedValue> euclid_final_divisor(OrderedValue m, OrderedValue e,
                                                 std::size_t cap = 4096) {
    for (std::size_t i = 0; i < cap; ++i) {
        auto st = euclid_step(m, e);
        if (!st) return std::nullopt;
        if (st->remainder.is_zero()) return e;
        m = e;
        e = st->remainder;
    }
    throw math_error("pair walk did not terminate");
}

std::vector<EmPair> em_pairs_generic(const std::vector<OrderedValue>& en,
                                     const std::vector<Int>& n, bool divides) {
    const std::size_t g = en.size() - 1;
    std::vector<OrderedValue> ms;
    if (!divides) {
        ms.push_back(en[0]);
        for (std::size_t i = 1; i + 1 <= g; ++i)
            ms.push_back(en[i].mul_int(n[i - 1]) - en[i + 1]);
    } else if (g >= 2) {
        ms.push_back(en[0] + en[1].mul_int(n[0]) - en[2]);
        for (std::size_t i = 1; i + 2 <= g; ++i)
            ms.push_back(en[i + 1].mul_int(n[i]) - en[i + 2]);
    }
    std::vector<EmPair> out;
    if (ms.empty()) return out;
    OrderedValue e = en[0] - en[1];
    for (std::size_t l = 0; l < ms.size(); ++l) {
        out.push_back({ms[l], e});
        if (l + 1 < ms.size()) {
            auto nxt = euclid_final_divisor(ms[l], e);
            if (!nxt) throw math_error("interior pair walk did not terminate");
            e = *nxt;
        }
    }
    return out;
}

} // namespace

CoreReport validate_core(const std::vector<Int>& entries) {
    if (entries.size() < 2)
        throw math_error("delta-sequence core needs at least two entries");
    for (const Int& x : entries)
        if (x <= 0) throw math_error("core entries must be positive");

    const std::size_t g = entries.size() - 1;
    CoreReport rep;
    rep.d.reserve(g + 1);
    Int d = entries[0];
    rep.d.push_back(d);  // d_1
    for (std::size_t i = 1; i <= g; ++i) {
        Int nd = gcd(d, entries[i]);
        rep.d.push_back(nd);  // d_{i+1}
        rep.n.push_back(d / nd);
        d = nd;
    }

    auto fail = [&](long idx, const std::string& why) {
        if (rep.first_fail < 0) {
            rep.first_fail = idx;
            rep.detail = why;
        }
    };

    rep.cond1 = true;
    if (rep.d.back() != 1) {
        rep.cond1 = false;
        fail(static_cast<long>(g), "condition (1): d_{g+1} = " + rep.d.back().get_str() + " != 1");
    }
    for (std::size_t i = 0; i < rep.n.size(); ++i)
        if (rep.n[i] <= 1) {
            rep.cond1 = false;
            fail(static_cast<long>(i + 1), "condition (1): n_" + std::to_string(i + 1) + " = 1");
            break;
        }

    rep.cond3 = true;
    if (!(entries[0] > entries[1])) {
        rep.cond3 = false;
        fail(1, "condition (3): delta_0 > delta_1 fails");
    }
    for (std::size_t i = 2; i <= g && rep.cond3; ++i)
        if (!(entries[i] < entries[i - 1] * rep.n[i - 2])) {
            rep.cond3 = false;
            fail(static_cast<long>(i), "condition (3): delta_" + std::to_string(i) +
                                           " >= n_" + std::to_string(i - 1) + " delta_" +
                                           std::to_string(i - 1));
        }

    rep.cond2 = true;
    for (std::size_t i = 1; i <= g && rep.cond2; ++i) {
        std::vector<OrderedValue> gens;
        for (std::size_t k = 0; k < i; ++k) gens.push_back(OrderedValue::integer(entries[k]));
        GeneratedSemigroup s(gens);
        Int target = rep.n[i - 1] * entries[i];
        if (!member(s, OrderedValue::integer(target)).member) {
            rep.cond2 = false;
            fail(static_cast<long>(i), "condition (2): n_" + std::to_string(i) + " delta_" +
                                           std::to_string(i) + " = " + target.get_str() +
                                           " is not in " + join_ints({entries.begin(), entries.begin() + static_cast<long>(i)}));
        }
    }
    return rep;
}

DerivedInvariants derived_invariants(const DeltaCore& core) {
    CoreReport rep = validate_core(core.entries);
    if (!rep.ok()) throw math_error("invalid core: " + rep.detail);
    const auto& dl = core.entries;
    const std::size_t g = core.g();

    DerivedInvariants inv;
    inv.d = rep.d;
    inv.n = rep.n;
    Int head = dl[0] - dl[1];
    inv.divides_case = (dl[0] % head == 0);

    if (!inv.divides_case) {
        inv.em_pairs.emplace_back(dl[0], head);
        for (std::size_t i = 1; i + 1 <= g; ++i)
            inv.em_pairs.emplace_back(rep.n[i - 1] * dl[i] - dl[i + 1], rep.d[i]);  // e_i = d_{i+1}
        inv.beta.push_back(head);
        inv.beta.push_back(dl[0]);
        for (std::size_t i = 2; i <= g; ++i)
            inv.beta.push_back(dl[0] * dl[0] / rep.d[i - 1] - dl[i]);
    } else {
        if (g >= 2) {
            inv.em_pairs.emplace_back(dl[0] + rep.n[0] * dl[1] - dl[2], rep.d[1]);  // e_0 = d_2
            for (std::size_t i = 1; i + 2 <= g; ++i)
                inv.em_pairs.emplace_back(rep.n[i] * dl[i + 1] - dl[i + 2], rep.d[i + 1]);
        }
        inv.beta.push_back(head);
        for (std::size_t i = 2; i <= g; ++i)
            inv.beta.push_back(dl[0] * dl[0] / rep.d[i - 1] - dl[i]);
    }
    if (!inv.em_pairs.empty())
        inv.euclid_tail = euclid_terminal_step(inv.em_pairs.back().first,
                                               inv.em_pairs.back().second);
    return inv;
}

std::vector<Rat> normalize(const DeltaCore& core) {
    std::vector<Rat> out;
    out.reserve(core.entries.size());
    for (const Int& x : core.entries) out.push_back(make_rat(x, core.entries[1]));
    return out;
}

DeltaCore denormalize_primitive(const std::vector<Rat>& normalized) {
    if (normalized.size() < 2) throw math_error("need at least two entries");
    std::vector<Rat> xs = normalized;
    for (Rat& r : xs) {
        r.canonicalize();
        if (r <= 0) throw math_error("entries must be positive");
    }
    Int L(1);
    for (const Rat& r : xs) L = lcm(L, r.get_den());
    std::vector<Int> ints;
    ints.reserve(xs.size());
    Int content(0);
    for (const Rat& r : xs) {
        Int v = r.get_num() * (L / r.get_den());
        content = gcd(content, v);
        ints.push_back(v);
    }
    for (Int& v : ints) v /= content;
    return DeltaCore{std::move(ints)};
}

std::vector<Int> expansion_digits(const DeltaCore& core, std::size_t i) {
    CoreReport rep = validate_core(core.entries);
    if (!rep.ok()) throw math_error("invalid core: " + rep.detail);
    if (i < 1 || i > core.g()) throw math_error("expansion index out of range");
    const auto& dl = core.entries;

    Int T = rep.n[i - 1] * dl[i];
    std::vector<Int> digits(i, Int(0));
    for (std::size_t j = i - 1; j >= 1; --j) {
        const Int& d_next = rep.d[j];  // d_{j+1}
        const Int& nj = rep.n[j - 1];  // n_j
        if (T % d_next != 0) throw math_error("expansion step lost divisibility");
        Int lhs = T / d_next;
        Int base = dl[j] / d_next;  // coprime to n_j
        Int inv;
        if (!mpz_invert(inv.get_mpz_t(), base.get_mpz_t(), nj.get_mpz_t()))
            throw math_error("expansion base not invertible");
        digits[j] = fmod(lhs * inv, nj);
        T -= digits[j] * dl[j];
    }
    if (T < 0 || T % dl[0] != 0)
        throw math_error("expansion has no nonnegative leading digit");
    digits[0] = T / dl[0];
    return digits;
}

// ---------------------------------------------------------------------------

DeltaSequence build_type_a(DeltaCore core, Int last) {
    CoreReport rep = validate_core(core.entries);
    if (!rep.ok()) throw math_error("invalid core: " + rep.detail);
    Int bound = rep.n.back() * core.entries.back();
    if (last > bound)
        throw math_error("delta_{g+1} = " + last.get_str() + " exceeds n_g delta_g = " +
                         bound.get_str());
    return DeltaSequence(TypeA{std::move(core), std::move(last)});
}

DeltaSequence build_type_b(DeltaCore core) {
    CoreReport rep = validate_core(core.entries);
    if (!rep.ok()) throw math_error("invalid core: " + rep.detail);
    return DeltaSequence(TypeB{std::move(core)});
}

namespace {

// y_{t-1} = a_1 y_{t-2} + y_{t-3}
std::pair<Int, Int> top_recurrence(const CfRecurrence& rec, const Int& a1) {
    return {a1 * rec.ab.first + rec.ab_prime.first, a1 * rec.ab.second + rec.ab_prime.second};
}

} // namespace

DeltaSequence build_type_c(DeltaCore core) {
    CoreReport rep = validate_core(core.entries);
    if (!rep.ok()) throw math_error("invalid core: " + rep.detail);
    DerivedInvariants inv = derived_invariants(core);
    const std::size_t g = core.g();
    if (inv.divides_case ? (g < 3) : (g < 2))
        throw math_error("core too short for the main type-C clause; use the small-case builder");

    auto [m, e] = inv.em_pairs.back();
    ContinuedFraction cf = cf_expand(OrderedValue::integer(m), OrderedValue::integer(e));
    const auto& a = cf.digits();
    if (a.size() < 2 || a.back() < 2)
        throw math_error("continued fraction of the last pair is too short for the transport");
    CfRecurrence rec = cf_recurrence(a);
    const Int& at = a.back();
    Int scale = rec.ab.first * at + rec.ab.second;

    TypeC data;
    data.core = core;
    data.cf_digits = a;
    data.ab = rec.ab;
    data.ab_prime = rec.ab_prime;
    data.scale = scale;
    for (std::size_t i = 0; i + 1 <= g; ++i) {
        if (core.entries[i] % scale != 0)
            throw math_error("transport scale " + scale.get_str() + " does not divide delta_" +
                             std::to_string(i));
        Int q = core.entries[i] / scale;
        data.entries.push_back(LexPair{q * rec.ab.first, q * rec.ab.second});
    }
    Int num = core.entries[g] + rec.ab_prime.first * at + rec.ab_prime.second;
    if (num % scale != 0)
        throw math_error("transport scale does not divide the last numerator");
    Int q = num / scale;
    data.entries.push_back(LexPair{q * rec.ab.first - rec.ab_prime.first,
                                   q * rec.ab.second - rec.ab_prime.second});
    return DeltaSequence(std::move(data));
}

DeltaSequence build_type_c_small(DeltaCore core, std::optional<Int> j, std::optional<Int> n1) {
    CoreReport rep = validate_core(core.entries);
    if (!rep.ok()) throw math_error("invalid core: " + rep.detail);
    DerivedInvariants inv = derived_invariants(core);

    TypeC data;
    data.core = core;
    data.small_case = true;

    if (core.entries.size() == 2) {
        if (inv.divides_case)
            throw math_error("the 2-entry small case needs a non-divides core");
        if (j || n1)
            throw math_error("j and n1 belong to the 3-entry small case");
        auto [m, e] = inv.em_pairs[0];
        ContinuedFraction cf = cf_expand(OrderedValue::integer(m), OrderedValue::integer(e));
        CfRecurrence rec = cf_recurrence(cf.digits());
        auto top = top_recurrence(rec, cf.digits().front());
        data.cf_digits = cf.digits();
        data.ab = rec.ab;
        data.ab_prime = rec.ab_prime;
        data.scale = rec.ab.first * cf.digits().back() + rec.ab.second;
        data.entries.push_back(LexPair{top.first, top.second});
        data.entries.push_back(LexPair{top.first - rec.ab.first, top.second - rec.ab.second});
        return DeltaSequence(std::move(data));
    }
    if (core.entries.size() == 3) {
        if (!inv.divides_case)
            throw math_error("the 3-entry small case needs a divides core");
        Int jj = core.entries[0] / (core.entries[0] - core.entries[1]);
        Int nn1 = rep.n[0];
        if (j && *j != jj)
            throw math_error("j = " + j->get_str() + " disagrees with delta_0/(delta_0-delta_1) = " +
                             jj.get_str());
        if (n1 && *n1 != nn1)
            throw math_error("n1 disagrees with delta_0/gcd(delta_0,delta_1)");
        data.j = jj;
        data.n1 = nn1;
        auto [m, e] = inv.em_pairs[0];
        ContinuedFraction cf = cf_expand(OrderedValue::integer(m), OrderedValue::integer(e));
        CfRecurrence rec = cf_recurrence(cf.digits());
        auto top = top_recurrence(rec, cf.digits().front());
        data.cf_digits = cf.digits();
        data.ab = rec.ab;
        data.ab_prime = rec.ab_prime;
        data.scale = rec.ab.first * cf.digits().back() + rec.ab.second;
        LexPair d0{jj * rec.ab.first, jj * rec.ab.second};
        LexPair d1{d0.first - rec.ab.first, d0.second - rec.ab.second};
        LexPair d2{d0.first + nn1 * d1.first - top.first, d0.second + nn1 * d1.second - top.second};
        data.entries = {d0, d1, d2};
        return DeltaSequence(std::move(data));
    }
    throw math_error("the small-case builder takes 2- or 3-entry cores");
}

DeltaSequence build_type_c_any(DeltaCore core) {
    DerivedInvariants inv = derived_invariants(core);
    const std::size_t g = core.g();
    if (inv.divides_case ? (g < 3) : (g < 2)) return build_type_c_small(std::move(core));
    return build_type_c(std::move(core));
}

// ---------------------------------------------------------------------------

namespace {

// Exact x/y over the scalar tower; collapse-aware.
OrderedValue value_div(const OrderedValue& x, const OrderedValue& y) {
    if (y.is_zero()) throw math_error("division by zero");
    if (x.kind() != ValueKind::Quadratic && y.kind() != ValueKind::Quadratic)
        return OrderedValue::rational(Rat(x.to_rat() / y.to_rat()));
    if (x.kind() == ValueKind::Quadratic && y.kind() != ValueKind::Quadratic) {
        Quad q = x.as_quad().mul_rat(Rat(1) / y.to_rat());
        return OrderedValue::quadratic(q.a(), q.b(), q.c(), q.d());
    }
    const Quad& d = y.as_quad();
    // 1/y = conj(y) * c / (a^2 - b^2 d); then multiply by x componentwise
    if (x.kind() != ValueKind::Quadratic) {
        if (x.sign() == 0) return OrderedValue::integer(0);
        Quad inv = d.reciprocal();
        Quad q = inv.mul_rat(x.to_rat());
        return OrderedValue::quadratic(q.a(), q.b(), q.c(), q.d());
    }
    const Quad& nq = x.as_quad();
    if (nq.d() != d.d()) throw kind_error("incommensurable surds");
    // x * conj(y) has components; denominator a^2 - b^2 d is rational
    Int ca = nq.a() * d.a() - nq.b() * d.b() * d.d();
    Int cb = nq.b() * d.a() - nq.a() * d.b();
    Int cc = nq.c() * (d.a() * d.a() - d.b() * d.b() * d.d());
    // multiply by d.c(): x/y = (x * conj(y) * c_y) / (a^2 - b^2 d)
    return OrderedValue::quadratic(ca * d.c(), cb * d.c(), cc, d.d());
}

std::vector<OrderedValue> d_entries(const TypeD& data) {
    std::vector<OrderedValue> en;
    if (data.degenerate()) {
        en.push_back(OrderedValue::quadratic(data.last.a(), data.last.b(), data.last.c(),
                                             data.last.d()));
        en.push_back(OrderedValue::integer(1));
        return en;
    }
    for (const Rat& r : data.prefix) en.push_back(OrderedValue::rational(r));
    en.push_back(OrderedValue::quadratic(data.last.a(), data.last.b(), data.last.c(),
                                         data.last.d()));
    return en;
}

bool d_divides_case(const TypeD& data) {
    if (data.degenerate()) return false;  // the head ratio is handled below
    Rat head = data.prefix[0] - data.prefix[1];
    Rat ratio = data.prefix[0] / head;
    return ratio.get_den() == 1;
}

std::vector<Int> d_nlist(const TypeD& data) {
    if (data.degenerate()) return {};
    DeltaCore pc = denormalize_primitive(data.prefix);
    CoreReport rep = validate_core(pc.entries);
    if (!rep.ok()) throw math_error("type-D prefix does not rescale to a valid core: " + rep.detail);
    return rep.n;
}

std::vector<EmPair> d_em_pairs(const TypeD& data) {
    return em_pairs_generic(d_entries(data), d_nlist(data), d_divides_case(data));
}

} // namespace

// Witness cores from convergents of the last-pair ratio. Candidates whose
// rescaled core fails validation are skipped. Supplied approximants are
// checked strictly and kept in front.
std::vector<TypeDWitness> type_d_witnesses(const TypeD& shape, std::size_t min_count,
                                           std::size_t digit_goal,
                                           const std::vector<Rat>& supplied) {
    auto pairs = d_em_pairs(shape);
    if (pairs.empty()) throw math_error("type-D data yields no pairs");
    const EmPair& lastpair = pairs.back();
    OrderedValue ratio = value_div(lastpair.m, lastpair.e);
    if (ratio.kind() != ValueKind::Quadratic)
        throw math_error("last-pair ratio is rational; not a type-D limit");
    std::vector<Int> true_digits = cf_digits_plain(ratio, OrderedValue::integer(1),
                                                   digit_goal + 48);

    // candidate normalized-last-entry from a rational approximation r of the ratio
    auto approximant_from_ratio = [&](const Rat& r) -> std::optional<Rat> {
        if (shape.degenerate()) {
            if (r <= 1) return std::nullopt;
            return Rat(r / (r - 1));  // tau with tau/(tau-1) = r
        }
        // delta_g = B - r * e_last where B = n_{g-1} delta_{g-1}
        auto nl = d_nlist(shape);
        Rat bound = Rat(nl.back()) * shape.prefix.back();
        Rat q = bound - r * lastpair.e.to_rat();
        if (q <= 0) return std::nullopt;
        return q;
    };

    auto witness_digits = [&](const DeltaCore& core) -> std::size_t {
        DerivedInvariants winv = derived_invariants(core);
        if (winv.em_pairs.size() != pairs.size()) return 0;
        ContinuedFraction cf = cf_expand(OrderedValue::integer(winv.em_pairs.back().first),
                                         OrderedValue::integer(winv.em_pairs.back().second));
        std::size_t k = 0;
        while (k < cf.digits().size() && k < true_digits.size() &&
               cf.digits()[k] == true_digits[k])
            ++k;
        return k;
    };

    auto try_candidate = [&](const Rat& q) -> std::optional<TypeDWitness> {
        if (q <= 0) return std::nullopt;
        std::vector<Rat> cand;
        if (shape.degenerate())
            cand = {q, Rat(1)};
        else {
            cand = shape.prefix;
            cand.push_back(q);
        }
        DeltaCore core;
        try {
            core = denormalize_primitive(cand);
        } catch (const error&) {
            return std::nullopt;
        }
        CoreReport rep = validate_core(core.entries);
        if (!rep.ok()) return std::nullopt;
        return TypeDWitness{q, std::move(core), 0};
    };

    std::vector<TypeDWitness> out;
    for (const Rat& q : supplied) {
        auto w = try_candidate(q);
        if (!w)
            throw math_error("supplied approximant " + rat_str(q) +
                             " does not extend the prefix to a valid core");
        w->agreed_digits = witness_digits(w->core);
        out.push_back(std::move(*w));
    }

    std::size_t best = 0;
    for (const auto& w : out) best = std::max(best, w.agreed_digits);
    for (std::size_t k = 1; k <= true_digits.size(); ++k) {
        if (out.size() >= min_count && best >= digit_goal) break;
        std::vector<Int> prefix_digits(true_digits.begin(),
                                       true_digits.begin() + static_cast<long>(k));
        ContinuedFraction conv(prefix_digits, CfTail::Terminated);
        auto [p, qden] = cf_fold(conv);
        Rat rho = make_rat(p.as_int(), qden.as_int());
        auto cand = approximant_from_ratio(rho);
        if (!cand) continue;
        bool dup = false;
        for (const auto& w : out) dup |= (w.approximant == *cand);
        if (dup) continue;
        auto w = try_candidate(*cand);
        if (!w) continue;
        w->agreed_digits = witness_digits(w->core);
        best = std::max(best, w->agreed_digits);
        out.push_back(std::move(*w));
    }
    if (out.size() < min_count)
        throw math_error("no valid witness cores found for the type-D data");
    if (best < digit_goal)
        throw budget_error("witness synthesis could not cover the requested walk depth");
    return out;
}

DeltaSequence build_type_d(std::vector<Rat> prefix, const OrderedValue& last,
                           std::vector<Rat> supplied_approximants) {
    if (last.kind() != ValueKind::Quadratic)
        throw math_error("the last entry of a type-D sequence must be a quadratic irrational");
    if (prefix.size() < 2)
        throw math_error("type-D prefix needs at least two entries (or use the degenerate form)");
    for (Rat& r : prefix) r.canonicalize();
    if (prefix[1] != 1)
        throw math_error("type-D prefix must be normalized (second entry 1)");
    const Quad& tau = last.as_quad();
    if (tau.sign() <= 0) throw math_error("last entry must be positive");

    DeltaCore pc = denormalize_primitive(prefix);
    CoreReport rep = validate_core(pc.entries);
    if (!rep.ok())
        throw math_error("type-D prefix does not rescale to a valid core: " + rep.detail);
    // condition (3) bound in the normalized scale
    Rat bound = Rat(rep.n.back()) * prefix.back();
    if (!(last < OrderedValue::rational(bound)))
        throw math_error("last entry violates the bound n_{g-1} delta_{g-1}");

    TypeD data{std::move(prefix), tau, {}, {}};
    auto witnesses = type_d_witnesses(data, std::max<std::size_t>(2, supplied_approximants.size()),
                                      0, supplied_approximants);
    if (witnesses.size() < 2) throw math_error("need at least two witness approximants");
    for (auto& w : witnesses) {
        data.approximants.push_back(w.approximant);
        data.witnesses.push_back(std::move(w.core));
    }
    return DeltaSequence(std::move(data));
}

DeltaSequence build_type_d_degenerate(const OrderedValue& tau) {
    if (tau.kind() != ValueKind::Quadratic)
        throw math_error("tau must be a quadratic irrational");
    const Quad& t = tau.as_quad();
    if (!(tau > OrderedValue::integer(1))) throw math_error("tau must exceed 1");
    TypeD data{{}, t, {}, {}};
    auto witnesses = type_d_witnesses(data, 2, 0, {});
    for (auto& w : witnesses) {
        data.approximants.push_back(w.approximant);
        data.witnesses.push_back(std::move(w.core));
    }
    return DeltaSequence(std::move(data));
}

DeltaSequence type_e_geometric(Rat head0, Rat ratio) {
    head0.canonicalize();
    ratio.canonicalize();
    if (head0 <= 1) throw math_error("geometric head must exceed 1");
    if (ratio <= 1) throw math_error("geometric ratio must exceed 1");
    TypeE e;
    e.rule = TypeE::Rule::Geometric;
    e.head0 = std::move(head0);
    e.ratio = std::move(ratio);
    e.cache = std::make_shared<TypeECache>();
    return DeltaSequence(std::move(e));
}

DeltaSequence type_e_explicit(std::vector<Rat> entries) {
    if (entries.size() < 2) throw math_error("explicit rule needs at least two entries");
    for (Rat& r : entries) r.canonicalize();
    TypeE e;
    e.rule = TypeE::Rule::Explicit;
    e.entries = std::move(entries);
    e.cache = std::make_shared<TypeECache>();
    return DeltaSequence(std::move(e));
}

std::vector<Rat> materialize_prefix(const DeltaSequence& seq, std::size_t j) {
    const TypeE& e = seq.e();
    std::vector<Rat> out;
    if (e.rule == TypeE::Rule::Explicit) {
        if (j >= e.entries.size())
            throw math_error("explicit rule has only " + std::to_string(e.entries.size()) +
                             " entries");
        out.assign(e.entries.begin(), e.entries.begin() + static_cast<long>(j) + 1);
        return out;
    }
    out.push_back(e.head0);
    if (j >= 1) out.push_back(Rat(1));
    Rat p(1);
    for (std::size_t i = 2; i <= j; ++i) {
        p *= e.ratio;
        out.push_back(p);
    }
    return out;
}

PrefixCertificate validate_prefix(const DeltaSequence& seq, std::size_t j) {
    const TypeE& e = seq.e();
    if (j < 1) throw math_error("prefix must have at least two entries");
    {
        std::lock_guard<std::mutex> guard(e.cache->lock);
        auto it = e.cache->certified.find(j);
        if (it != e.cache->certified.end()) return it->second;
    }
    std::vector<Rat> prefix = materialize_prefix(seq, j);
    DeltaCore core = denormalize_primitive(prefix);
    CoreReport rep = validate_core(core.entries);
    PrefixCertificate cert{std::move(core), std::move(rep)};
    {
        std::lock_guard<std::mutex> guard(e.cache->lock);
        e.cache->certified.emplace(j, cert);
    }
    return cert;
}

// ---------------------------------------------------------------------------

Classification classify(const DeltaSequence& seq) {
    switch (seq.type()) {
        case SeqType::A:
            return {SeqType::A, "finite integer sequence: core satisfies (1)(2)(3) and "
                                "delta_{g+1} <= n_g delta_g"};
        case SeqType::B:
            return {SeqType::B, "Z^2 sequence (0,delta*_0..g) closed by (-1, delta*_0^2)"};
        case SeqType::C:
            return {SeqType::C, seq.c().small_case
                                    ? "Z^2-lex sequence from the degenerate small clause"
                                    : "Z^2-lex transport of a core through the continued "
                                      "fraction of its last pair"};
        case SeqType::D:
            return {SeqType::D, seq.d().degenerate()
                                    ? "degenerate pair {tau, 1} with tau > 1 irrational"
                                    : "rational prefix closed by a quadratic irrational with "
                                      "witness cores"};
        default:
            return {SeqType::E, "infinite normalized sequence; prefixes validate as rescaled "
                                "cores"};
    }
}

RatioCheck ratio_check(const DeltaCore& core, const DeltaCore& shorter) {
    CoreReport r1 = validate_core(core.entries);
    CoreReport r2 = validate_core(shorter.entries);
    if (!r1.ok() || !r2.ok()) throw math_error("ratio check needs valid cores");
    const std::size_t s = core.g(), sp = shorter.g();
    if (sp > s) throw math_error("second core must not be longer");
    Int b0 = core.entries[0] - core.entries[1];
    Int b0p = shorter.entries[0] - shorter.entries[1];
    Rat ratio = make_rat(b0, b0p);
    // shared interior indices; a 2-entry second core still pins index 1
    std::size_t upto = std::max<std::size_t>(1, sp - 1);
    bool ok = true;
    for (std::size_t i = 1; i <= upto && ok; ++i)
        ok = (core.entries[i] * b0p == shorter.entries[i] * b0);
    return {ok, ratio};
}

bool char_condition(const DeltaCore& core, const Int& p) {
    CoreReport rep = validate_core(core.entries);
    if (!rep.ok()) throw math_error("invalid core: " + rep.detail);
    if (p == 0) return true;
    if (!is_prime(p)) throw math_error("characteristic must be zero or prime");
    return gcd(core.entries[0], core.entries[1]) % p != 0;
}

std::vector<OrderedValue> sequence_generators(const DeltaSequence& seq, std::size_t depth) {
    std::vector<OrderedValue> out;
    switch (seq.type()) {
        case SeqType::A: {
            for (const Int& x : seq.a().core.entries) out.push_back(OrderedValue::integer(x));
            out.push_back(OrderedValue::integer(seq.a().last));
            return out;
        }
        case SeqType::B: {
            const auto& c = seq.b().core.entries;
            for (const Int& x : c) out.push_back(OrderedValue::lex(0, x));
            out.push_back(OrderedValue::lex(-1, c[0] * c[0]));
            return out;
        }
        case SeqType::C: {
            for (const LexPair& p : seq.c().entries)
                out.push_back(OrderedValue::lex(p.first, p.second));
            return out;
        }
        case SeqType::D: {
            for (const auto& v : d_entries(seq.d())) out.push_back(v);
            return out;
        }
        default: {
            for (const Rat& r : materialize_prefix(seq, depth))
                out.push_back(OrderedValue::rational(r));
            return out;
        }
    }
}

bool is_well_ordered(const DeltaSequence& seq) {
    switch (seq.type()) {
        case SeqType::A:
            return seq.a().last >= 0;
        case SeqType::B:
            return false;  // the generator (-1, delta_0^2) is negative
        case SeqType::C: {
            OrderedValue zero = OrderedValue::lex(0, 0);
            for (const LexPair& p : seq.c().entries)
                if (OrderedValue::lex(p.first, p.second) < zero) return false;
            return true;
        }
        default:
            return true;  // positive real generators
    }
}

std::vector<EmPair> sequence_em_pairs(const DeltaSequence& seq, std::size_t depth) {
    auto from_core = [](const DeltaCore& core) {
        DerivedInvariants inv = derived_invariants(core);
        std::vector<EmPair> out;
        for (const auto& [m, e] : inv.em_pairs)
            out.push_back({OrderedValue::integer(m), OrderedValue::integer(e)});
        return out;
    };
    switch (seq.type()) {
        case SeqType::A:
            return from_core(seq.a().core);
        case SeqType::B:
            return from_core(seq.b().core);
        case SeqType::C: {
            DerivedInvariants binv = derived_invariants(seq.c().core);
            std::vector<OrderedValue> en;
            for (const LexPair& p : seq.c().entries)
                en.push_back(OrderedValue::lex(p.first, p.second));
            return em_pairs_generic(en, binv.n, binv.divides_case);
        }
        case SeqType::D:
            return d_em_pairs(seq.d());
        default: {
            PrefixCertificate cert = validate_prefix(seq, depth);
            if (!cert.report.ok())
                throw math_error("type-E prefix is invalid: " + cert.report.detail);
            return from_core(cert.witness);
        }
    }
}

Int trailing_free_count(const DeltaSequence& seq) {
    if (seq.type() != SeqType::A) throw math_error("trailing free count is a type-A notion");
    CoreReport rep = validate_core(seq.a().core.entries);
    return rep.n.back() * seq.a().core.entries.back() - seq.a().last;
}

} // namespace seminf
