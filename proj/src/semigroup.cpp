#include "seminf/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace seminf {

namespace {

long to_long_checked(const Int& v, const char* what) {
    if (!v.fits_slong_p()) throw budget_error(std::string(what) + " exceeds the dense-table range");
    return v.get_si();
}

// Dense coin-problem table for positive generators with gcd 1.
// parent[v] = index of the generator last used to reach v, -2 at zero, -1 unreachable.
struct DenseTable {
    std::vector<long> gens;  // positive, gcd 1
    std::vector<int> parent{};
    long gmin = 0;

    explicit DenseTable(std::vector<long> g) : gens(std::move(g)) {
        gmin = *std::min_element(gens.begin(), gens.end());
    }

    void extend(long upto, std::size_t budget) {
        if (upto < 0) return;
        if (static_cast<std::size_t>(upto) + 1 > budget)
            throw budget_error("membership table budget exhausted");
        long old = static_cast<long>(parent.size());
        if (old > upto) return;
        parent.resize(static_cast<std::size_t>(upto) + 1, -1);
        if (old == 0) {
            parent[0] = -2;
            old = 1;
        }
        for (long v = old; v <= upto; ++v)
            for (std::size_t gi = 0; gi < gens.size(); ++gi)
                if (v >= gens[gi] && parent[static_cast<std::size_t>(v - gens[gi])] != -1) {
                    parent[static_cast<std::size_t>(v)] = static_cast<int>(gi);
                    break;
                }
    }

    bool reachable(long v) const {
        return v >= 0 && v < static_cast<long>(parent.size()) &&
               parent[static_cast<std::size_t>(v)] != -1;
    }

    // coefficient vector over this table's generator list
    std::vector<long> witness(long v) const {
        std::vector<long> c(gens.size(), 0);
        while (v > 0) {
            int gi = parent[static_cast<std::size_t>(v)];
            c[static_cast<std::size_t>(gi)] += 1;
            v -= gens[static_cast<std::size_t>(gi)];
        }
        return c;
    }

    // least c with [c, c+gmin) fully reachable inside the current table
    std::optional<long> conductor_in_table() const {
        long run = 0;
        for (long v = 0; v < static_cast<long>(parent.size()); ++v) {
            if (parent[static_cast<std::size_t>(v)] != -1) {
                if (++run >= gmin) return v - gmin + 1;
            } else
                run = 0;
        }
        return std::nullopt;
    }

    long conductor(std::size_t budget) {
        Int first_guess = Int(2) * gmin * *std::max_element(gens.begin(), gens.end()) + gmin + 1;
        long guess = to_long_checked(first_guess, "conductor search bound");
        while (true) {
            extend(guess, budget);
            if (auto c = conductor_in_table()) return *c;
            guess *= 2;  // extend() enforces the budget
        }
    }
};

struct ScaledPositive {
    // original generator indices and their scaled values (positive, gcd 1)
    std::vector<std::size_t> index;
    Int gcd_all;  // gcd of the selected original generators
    DenseTable table;
};

// Builds the gcd-reduced dense machinery for the positive generators listed
// in `index` (values[i] > 0 required).
ScaledPositive make_scaled(const std::vector<Int>& values, std::vector<std::size_t> index) {
    Int g(0);
    for (auto i : index) g = gcd(g, values[i]);
    std::vector<long> scaled;
    scaled.reserve(index.size());
    for (auto i : index) scaled.push_back(to_long_checked(values[i] / g, "generator"));
    return ScaledPositive{std::move(index), g, DenseTable(std::move(scaled))};
}

MemberResult yes(std::vector<Int> coeffs, std::string note) {
    return MemberResult{true, std::move(coeffs), std::move(note)};
}

MemberResult no(std::string note) { return MemberResult{false, {}, std::move(note)}; }

// Membership of v in the semigroup generated by `values` (integers, any
// signs), with coefficients reported against the full index range.
MemberResult int_member(const std::vector<Int>& values, const Int& v, std::size_t budget) {
    const std::size_t n = values.size();
    if (v == 0) return yes(std::vector<Int>(n, 0), "zero is the empty combination");

    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < n; ++i) {
        if (values[i] > 0) pos.push_back(i);
        if (values[i] < 0) neg.push_back(i);
    }
    if (pos.empty() && neg.empty()) return no("all generators are zero");

    // one-sided cases reduce to the positive coin problem
    auto one_sided = [&](const std::vector<std::size_t>& side, bool negate) -> MemberResult {
        Int target = negate ? Int(-v) : v;
        if (target < 0) return no("value lies on the wrong side of zero");
        std::vector<Int> vals = values;
        if (negate)
            for (auto& x : vals) x = -x;
        auto sp = make_scaled(vals, side);
        if (target % sp.gcd_all != 0)
            return no("value is not a multiple of gcd " + sp.gcd_all.get_str());
        Int scaled = target / sp.gcd_all;
        long t = to_long_checked(scaled, "value");
        long cond = sp.table.conductor(budget);
        long probe = t;
        Int extra_min(0);
        if (t >= cond + sp.table.gmin) {
            // fold the bulk onto the generator of minimal scaled value
            probe = cond + static_cast<long>((t - cond) % sp.table.gmin);
            extra_min = Int(t - probe) / sp.table.gmin;
        }
        sp.table.extend(probe, budget);
        if (!sp.table.reachable(probe)) return no("no representation (decided by table up to the conductor)");
        auto w = sp.table.witness(probe);
        std::vector<Int> coeffs(n, 0);
        for (std::size_t k = 0; k < sp.index.size(); ++k) coeffs[sp.index[k]] = w[k];
        if (extra_min != 0) {
            std::size_t argmin = 0;
            for (std::size_t k = 1; k < sp.table.gens.size(); ++k)
                if (sp.table.gens[k] < sp.table.gens[argmin]) argmin = k;
            coeffs[sp.index[argmin]] += extra_min;
        }
        return yes(std::move(coeffs), "coin-problem table");
    };

    if (neg.empty()) return one_sided(pos, false);
    if (pos.empty()) return one_sided(neg, true);

    // both signs: v in S  iff  exists w in SN with v + w in SP, where
    // SN is generated by the |negative| generators and SP by the positive.
    std::vector<Int> absvals = values;
    for (auto& x : absvals) x = abs(x);
    auto sp = make_scaled(absvals, pos);
    auto sn = make_scaled(absvals, neg);
    Int dP = sp.gcd_all, dN = sn.gcd_all;
    Int d = gcd(dP, dN);
    if (v % d != 0) return no("value is not a multiple of gcd " + d.get_str());

    long condP = sp.table.conductor(budget);  // scaled units
    long condN = sn.table.conductor(budget);
    Int condP_u = Int(condP) * dP;  // original units
    Int condN_u = Int(condN) * dN;
    Int L = lcm(dP, dN);
    Int W = condN_u + condP_u + (v < 0 ? Int(-v) : Int(0)) + L;
    long wmax = to_long_checked(W / dN, "search window");
    sn.table.extend(wmax, budget);
    Int need_hi = (W + v) / dP + 1;
    sp.table.extend(to_long_checked(need_hi, "search window"), budget);
    for (long ws = 0; ws <= wmax; ++ws) {
        if (!sn.table.reachable(ws)) continue;
        Int w_u = Int(ws) * dN;
        Int target = v + w_u;
        if (target < 0 || target % dP != 0) continue;
        long ts = to_long_checked(target / dP, "value");
        if (!sp.table.reachable(ts)) continue;
        auto wp = sp.table.witness(ts);
        auto wn = sn.table.witness(ws);
        std::vector<Int> coeffs(n, 0);
        for (std::size_t k = 0; k < sp.index.size(); ++k) coeffs[sp.index[k]] = wp[k];
        for (std::size_t k = 0; k < sn.index.size(); ++k) coeffs[sn.index[k]] = wn[k];
        return yes(std::move(coeffs), "split into positive and negative parts");
    }
    std::ostringstream os;
    os << "no representation with negative-part total in [0, " << W << "]"
       << " (certified bound)";
    return no(os.str());
}

// ---- rational reduction ----------------------------------------------------

Int denominator_lcm(const std::vector<Rat>& xs) {
    Int L(1);
    for (const auto& x : xs) L = lcm(L, x.get_den());
    return L;
}

MemberResult rat_member(const std::vector<Rat>& gens, const Rat& v, std::size_t budget) {
    std::vector<Rat> all = gens;
    all.push_back(v);
    Int L = denominator_lcm(all);
    std::vector<Int> ints;
    ints.reserve(gens.size());
    for (const auto& g : gens) ints.push_back(Int(g.get_num() * (L / g.get_den())));
    Rat sv = v * Rat(L);
    return int_member(ints, sv.get_num(), budget);
}

// ---- lex pairs --------------------------------------------------------------

MemberResult lex_member(const std::vector<OrderedValue>& gens, const LexPair& v,
                        std::size_t budget) {
    const std::size_t n = gens.size();
    std::vector<std::size_t> zero_first, nonzero_first;
    for (std::size_t i = 0; i < n; ++i) {
        if (gens[i].as_lex().first == 0)
            zero_first.push_back(i);
        else
            nonzero_first.push_back(i);
    }
    std::vector<Int> seconds(n);
    for (std::size_t i = 0; i < n; ++i) seconds[i] = gens[i].as_lex().second;

    auto finish_with_seconds = [&](std::vector<Int> coeffs, const Int& rem) -> MemberResult {
        if (zero_first.empty()) {
            if (rem == 0) return yes(std::move(coeffs), "first coordinates decide");
            return no("second coordinate mismatch");
        }
        std::vector<Int> zvals;
        for (auto i : zero_first) zvals.push_back(seconds[i]);
        auto sub = int_member(zvals, rem, budget);
        if (!sub.member) return no("second coordinate: " + sub.certificate);
        for (std::size_t k = 0; k < zero_first.size(); ++k)
            coeffs[zero_first[k]] += sub.coefficients[k];
        return yes(std::move(coeffs), "first coordinates, then the zero-column semigroup");
    };

    if (nonzero_first.empty()) {
        if (v.first != 0) return no("no generator carries a nonzero first coordinate");
        return finish_with_seconds(std::vector<Int>(n, 0), v.second);
    }
    if (nonzero_first.size() == 1) {
        std::size_t fi = nonzero_first[0];
        const LexPair& f = gens[fi].as_lex();
        if (v.first % f.first != 0) return no("first coordinate not a multiple");
        Int s = v.first / f.first;
        if (s < 0) return no("first coordinate needs a negative multiple");
        std::vector<Int> coeffs(n, 0);
        coeffs[fi] = s;
        return finish_with_seconds(std::move(coeffs), Int(v.second - s * f.second));
    }

    // several generators with nonzero first coordinate
    bool all_pos = true, all_neg = true;
    for (auto i : nonzero_first) {
        if (gens[i].as_lex().first > 0) all_neg = false;
        if (gens[i].as_lex().first < 0) all_pos = false;
    }
    if (all_pos || all_neg) {
        Int tgt = all_pos ? v.first : Int(-v.first);
        if (tgt < 0) return no("first coordinate has the wrong sign");
        // bounded enumeration of first-coordinate solutions
        std::size_t nodes = 0;
        std::vector<Int> stack(nonzero_first.size(), 0);
        MemberResult found = no("");
        bool have = false;
        std::function<void(std::size_t, Int)> rec = [&](std::size_t k, Int rem) {
            if (have) return;
            if (++nodes > budget) throw budget_error("lex membership enumeration budget exhausted");
            if (k == nonzero_first.size()) {
                if (rem != 0) return;
                Int second(0);
                std::vector<Int> coeffs(n, 0);
                for (std::size_t j = 0; j < nonzero_first.size(); ++j) {
                    coeffs[nonzero_first[j]] = stack[j];
                    second += stack[j] * seconds[nonzero_first[j]];
                }
                auto res = finish_with_seconds(std::move(coeffs), Int(v.second - second));
                if (res.member) {
                    found = std::move(res);
                    have = true;
                }
                return;
            }
            Int a = abs(gens[nonzero_first[k]].as_lex().first);
            Int maxs = rem / a;
            for (Int s = 0; s <= maxs; ++s) {
                stack[k] = s;
                rec(k + 1, Int(rem - s * a));
                if (have) return;
            }
            stack[k] = 0;
        };
        rec(0, tgt);
        if (have) return found;
        return no("no first-coordinate representation (complete enumeration)");
    }

    // mixed signs among first coordinates: budgeted total-coefficient search
    std::size_t nodes = 0;
    std::vector<Int> coeffs(n, 0);
    OrderedValue target = OrderedValue::lex(v.first, v.second);
    std::function<MemberResult(std::size_t, OrderedValue)> rec2 =
        [&](std::size_t k, OrderedValue acc) -> MemberResult {
        if (++nodes > budget)
            throw budget_error("lex membership search budget exhausted (mixed-sign first coordinates)");
        if (k == n) {
            if (acc == target) return yes(coeffs, "bounded search");
            return no("");
        }
        OrderedValue cur = acc;
        for (Int s = 0; s <= 64; ++s) {  // per-generator cap inside the budgeted search
            if (s > 0) cur = cur + gens[k];
            coeffs[k] = s;
            auto r = rec2(k + 1, cur);
            if (r.member) return r;
        }
        coeffs[k] = 0;
        return no("");
    };
    auto r = rec2(0, OrderedValue::lex(0, 0));
    if (r.member) return r;
    throw budget_error("mixed-sign lex membership is only decided within the search budget");
}

// ---- quadratic --------------------------------------------------------------

struct QuadSplit {
    Rat rat_part;
    Rat surd_coeff;  // coefficient of sqrt(d)
};

QuadSplit split_scalar(const OrderedValue& v) {
    if (v.kind() == ValueKind::Quadratic)
        return {v.as_quad().rat_part(), v.as_quad().surd_coeff()};
    return {v.to_rat(), Rat(0)};
}

MemberResult quad_member(const std::vector<OrderedValue>& gens, const OrderedValue& v,
                         std::size_t budget) {
    const std::size_t n = gens.size();
    std::vector<QuadSplit> parts(n);
    std::vector<std::size_t> irr, rational;
    for (std::size_t i = 0; i < n; ++i) {
        parts[i] = split_scalar(gens[i]);
        (parts[i].surd_coeff != 0 ? irr : rational).push_back(i);
    }
    QuadSplit vv = split_scalar(v);

    auto rational_residual = [&](std::vector<Int> coeffs, const Rat& target) -> MemberResult {
        std::vector<Rat> rg;
        for (auto i : rational) rg.push_back(parts[i].rat_part);
        if (rg.empty()) {
            if (target == 0) return yes(std::move(coeffs), "surd part decides");
            return no("rational residual nonzero with no rational generators");
        }
        auto sub = rat_member(rg, target, budget);
        if (!sub.member) return no("rational residual: " + sub.certificate);
        for (std::size_t k = 0; k < rational.size(); ++k)
            coeffs[rational[k]] += sub.coefficients[k];
        return yes(std::move(coeffs), "surd part, then rational residual");
    };

    if (irr.empty()) {
        if (vv.surd_coeff != 0) return no("no generator carries a surd part");
        return rational_residual(std::vector<Int>(n, 0), vv.rat_part);
    }
    if (irr.size() == 1) {
        std::size_t ii = irr[0];
        Rat ratio = vv.surd_coeff / parts[ii].surd_coeff;
        if (ratio < 0 || ratio.get_den() != 1)
            return no("surd coefficient is not a natural multiple of the irrational generator's");
        Int s = ratio.get_num();
        std::vector<Int> coeffs(n, 0);
        coeffs[ii] = s;
        return rational_residual(std::move(coeffs),
                                 Rat(vv.rat_part - Rat(s) * parts[ii].rat_part));
    }

    // several irrational generators with commensurable surd parts
    bool all_pos = true, all_neg = true;
    for (auto i : irr) {
        if (parts[i].surd_coeff > 0) all_neg = false;
        if (parts[i].surd_coeff < 0) all_pos = false;
    }
    if (!(all_pos || all_neg))
        throw budget_error("mixed-sign surd coefficients are not decided exactly");
    Rat tgt = all_pos ? vv.surd_coeff : Rat(-vv.surd_coeff);
    if (tgt < 0) return no("surd coefficient has the wrong sign");
    std::size_t nodes = 0;
    std::vector<Int> stack(irr.size(), 0);
    MemberResult found = no("no surd-coefficient representation (complete enumeration)");
    bool have = false;
    std::function<void(std::size_t, Rat)> rec = [&](std::size_t k, Rat rem) {
        if (have) return;
        if (++nodes > budget) throw budget_error("quadratic membership budget exhausted");
        if (k == irr.size()) {
            if (rem != 0) return;
            Rat residual = vv.rat_part;
            std::vector<Int> coeffs(n, 0);
            for (std::size_t j = 0; j < irr.size(); ++j) {
                coeffs[irr[j]] = stack[j];
                residual -= Rat(stack[j]) * parts[irr[j]].rat_part;
            }
            auto res = rational_residual(std::move(coeffs), residual);
            if (res.member) {
                found = std::move(res);
                have = true;
            }
            return;
        }
        Rat w = abs(parts[irr[k]].surd_coeff);
        Rat maxs = rem / w;
        for (Int s = 0; Rat(s) <= maxs; ++s) {
            stack[k] = s;
            rec(k + 1, Rat(rem - Rat(s) * w));
            if (have) return;
        }
        stack[k] = 0;
    };
    rec(0, tgt);
    return found;
}

} // namespace

GeneratedSemigroup::GeneratedSemigroup(std::vector<OrderedValue> generators)
    : gens_(std::move(generators)) {
    if (gens_.empty()) throw math_error("semigroup needs at least one generator");
    bool lex = false, scalar = false;
    ValueKind widest = ValueKind::Integer;
    std::optional<Int> d;
    for (const auto& g : gens_) {
        if (g.kind() == ValueKind::LexPair)
            lex = true;
        else
            scalar = true;
        if (g.kind() == ValueKind::Rational && widest == ValueKind::Integer)
            widest = ValueKind::Rational;
        if (g.kind() == ValueKind::Quadratic) {
            if (d && *d != g.as_quad().d())
                throw kind_error("incommensurable surds among generators");
            if (!d) d = g.as_quad().d();
            widest = ValueKind::Quadratic;
        }
    }
    if (lex && scalar) throw kind_error("cannot mix lex pairs with scalars");
    kind_ = lex ? ValueKind::LexPair : widest;
}

MemberResult member(const GeneratedSemigroup& s, const OrderedValue& v, std::size_t budget) {
    if ((s.kind() == ValueKind::LexPair) != (v.kind() == ValueKind::LexPair))
        throw kind_error("value kind does not match the semigroup");
    if (s.kind() == ValueKind::LexPair) return lex_member(s.generators(), v.as_lex(), budget);
    if (s.kind() == ValueKind::Quadratic || v.kind() == ValueKind::Quadratic)
        return quad_member(s.generators(), v, budget);
    bool any_rat = v.kind() == ValueKind::Rational;
    for (const auto& g : s.generators()) any_rat |= g.kind() == ValueKind::Rational;
    if (any_rat) {
        std::vector<Rat> gs;
        for (const auto& g : s.generators()) gs.push_back(g.to_rat());
        return rat_member(gs, v.to_rat(), budget);
    }
    std::vector<Int> gs;
    for (const auto& g : s.generators()) gs.push_back(g.as_int());
    return int_member(gs, v.as_int(), budget);
}

std::vector<OrderedValue> enumerate(const GeneratedSemigroup& s,
                                    const OrderedValue& lo, const OrderedValue& hi,
                                    std::size_t budget) {
    if (hi < lo) return {};
    const auto& gens = s.generators();

    if (s.kind() == ValueKind::Integer || s.kind() == ValueKind::Rational) {
        // scale rationals to integers
        Int L(1);
        if (s.kind() == ValueKind::Rational) {
            for (const auto& g : gens) L = lcm(L, g.to_rat().get_den());
            L = lcm(L, lo.to_rat().get_den());
            L = lcm(L, hi.to_rat().get_den());
        }
        std::vector<Int> ints;
        bool any_negative = false;
        for (const auto& g : gens) {
            Rat r = g.to_rat() * Rat(L);
            ints.push_back(r.get_num());
            any_negative |= r.get_num() < 0;
        }
        Int ilo = floor_rat(Rat(lo.to_rat() * Rat(L)));
        Rat hi_scaled = hi.to_rat() * Rat(L);
        Int ihi = floor_rat(hi_scaled);
        std::vector<OrderedValue> out;
        auto push = [&](const Int& value) {
            if (s.kind() == ValueKind::Integer)
                out.push_back(OrderedValue::integer(value));
            else
                out.push_back(OrderedValue::rational(make_rat(value, L)));
        };
        if (any_negative) {
            Int width = ihi - ilo + 1;
            if (width > Int(static_cast<unsigned long>(budget)))
                throw budget_error("enumeration window too wide");
            for (Int x = ilo; x <= ihi; ++x)
                if (int_member(ints, x, budget).member) push(x);
            return out;
        }
        // positive generators: one dense table decides the whole window
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < ints.size(); ++i)
            if (ints[i] > 0) idx.push_back(i);
        if (idx.empty()) {
            if (ilo <= 0 && 0 <= ihi) push(Int(0));
            return out;
        }
        auto sp = make_scaled(ints, idx);
        Int top = ihi / sp.gcd_all;
        long t = to_long_checked(top, "window");
        sp.table.extend(t, budget);
        for (Int x = ilo < 0 ? Int(0) : ilo; x <= ihi; ++x) {
            if (x % sp.gcd_all != 0) continue;
            if (sp.table.reachable(to_long_checked(x / sp.gcd_all, "value"))) push(x);
        }
        return out;
    }

    if (s.kind() == ValueKind::Quadratic) {
        OrderedValue zero = OrderedValue::integer(0);
        for (const auto& g : gens)
            if (!(g > zero))
                throw math_error("enumeration needs positive generators for this kind");
        // minimal generator bounds the coefficient total
        OrderedValue mu = gens[0];
        for (const auto& g : gens)
            if (g < mu) mu = g;
        std::set<OrderedValue> seen;
        std::size_t nodes = 0;
        std::function<void(std::size_t, OrderedValue)> rec = [&](std::size_t k, OrderedValue acc) {
            if (++nodes > budget) throw budget_error("enumeration budget exhausted");
            if (acc > hi) return;
            if (k == gens.size()) {
                if (acc >= lo) seen.insert(acc);
                return;
            }
            OrderedValue cur = acc;
            while (true) {
                rec(k + 1, cur);
                cur = cur + gens[k];
                if (cur > hi) break;
            }
        };
        rec(0, zero);
        return {seen.begin(), seen.end()};
    }

    // lex pairs
    OrderedValue zero = OrderedValue::lex(0, 0);
    for (const auto& g : gens)
        if (g < zero)
            throw math_error("unbounded enumeration request on a non-well-ordered semigroup");
    const LexPair& l = lo.as_lex();
    const LexPair& h = hi.as_lex();
    std::vector<std::size_t> zidx, fidx;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i] == zero) continue;
        (gens[i].as_lex().first == 0 ? zidx : fidx).push_back(i);
    }
    bool has_growing_second = false;
    for (auto i : zidx)
        if (gens[i].as_lex().second > 0) has_growing_second = true;
    if (has_growing_second && l.first != h.first)
        throw math_error("enumeration window spans several first coordinates of an "
                         "infinite lex semigroup slice");
    // enumerate first-coordinate combinations, then fill seconds
    std::set<OrderedValue> seen;
    std::size_t nodes = 0;
    std::function<void(std::size_t, Int, Int)> rec = [&](std::size_t k, Int f, Int sec) {
        if (++nodes > budget) throw budget_error("enumeration budget exhausted");
        if (f > h.first) return;
        if (k == fidx.size()) {
            if (f < l.first || f > h.first) return;
            // slice f: seconds from the zero-column semigroup added to sec
            Int lo2 = (f == l.first) ? Int(l.second) : Int(0);
            Int hi2 = (f == h.first) ? Int(h.second) : Int(0);
            if (zidx.empty()) {
                OrderedValue val = OrderedValue::lex(f, sec);
                if (val >= lo && val <= hi) seen.insert(val);
                return;
            }
            if (f != l.first || f != h.first)
                return;  // guarded above unless the zero column cannot grow
            std::vector<OrderedValue> zgens;
            for (auto i : zidx) zgens.push_back(OrderedValue::integer(gens[i].as_lex().second));
            GeneratedSemigroup zs(zgens);
            auto subs = enumerate(zs, OrderedValue::integer(Int(lo2 - sec)),
                                  OrderedValue::integer(Int(hi2 - sec)), budget);
            for (const auto& t : subs) seen.insert(OrderedValue::lex(f, Int(sec + t.as_int())));
            return;
        }
        const LexPair& g = gens[fidx[k]].as_lex();
        Int cf = f, cs = sec;
        while (true) {
            rec(k + 1, cf, cs);
            cf += g.first;
            cs += g.second;
            if (cf > h.first) break;
        }
    };
    rec(0, Int(0), Int(0));
    return {seen.begin(), seen.end()};
}

std::vector<OrderedValue> brute_force_generate(const std::vector<OrderedValue>& generators,
                                               unsigned budget, const OrderedValue* value_cap,
                                               std::size_t node_budget) {
    if (generators.empty()) throw math_error("need at least one generator");
    std::set<OrderedValue> seen;
    std::size_t nodes = 0;
    std::function<void(std::size_t, unsigned, OrderedValue)> rec =
        [&](std::size_t k, unsigned used, OrderedValue acc) {
            if (++nodes > node_budget) throw budget_error("brute-force budget exhausted");
            if (value_cap && acc > *value_cap) return;
            if (k == generators.size()) {
                seen.insert(acc);
                return;
            }
            OrderedValue cur = acc;
            for (unsigned s = 0; used + s <= budget; ++s) {
                if (s > 0) cur = cur + generators[k];
                if (value_cap && cur > *value_cap && generators[k].sign() > 0) break;
                rec(k + 1, used + s, cur);
            }
        };
    rec(0, 0, generators[0] - generators[0]);
    return {seen.begin(), seen.end()};
}

std::optional<std::pair<Int, Int>> conductor_frobenius(const std::vector<Int>& gens) {
    if (gens.empty()) return std::nullopt;
    Int g(0);
    for (const auto& x : gens) {
        if (x <= 0) return std::nullopt;
        g = gcd(g, x);
    }
    if (g != 1) return std::nullopt;
    std::vector<long> scaled;
    for (const auto& x : gens) scaled.push_back(to_long_checked(x, "generator"));
    DenseTable table(std::move(scaled));
    long c = table.conductor(1 << 26);
    return std::make_pair(Int(c), Int(c - 1));
}

} // namespace seminf
