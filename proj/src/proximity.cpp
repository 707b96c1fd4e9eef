#include "seminf/proximity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "seminf/contfrac.hpp"

namespace seminf {

namespace {

struct BlockSched {
    Int mult;
    Int count;  // negative = unbounded (infinite last digit)
};

struct WalkPlan {
    std::vector<std::pair<Int, Int>> pairs;   // integer pairs in the model scale
    std::vector<std::vector<Int>> digits;     // per pair
    bool last_digit_infinite = false;         // type C
    std::optional<std::size_t> last_pair_cap; // D/E: trusted point count of the last pair
    std::optional<Int> tail_free;             // A: exactly f free points; nullopt = per tail kind
    ClusterTail tail = ClusterTail::Finite;
    DeltaCore scale_model;
};

std::vector<std::vector<Int>> pair_digits(const std::vector<std::pair<Int, Int>>& pairs) {
    std::vector<std::vector<Int>> out;
    out.reserve(pairs.size());
    for (const auto& [m, e] : pairs)
        out.push_back(cf_expand(OrderedValue::integer(m), OrderedValue::integer(e)).digits());
    return out;
}

std::vector<BlockSched> pair_blocks(const std::pair<Int, Int>& pair,
                                    const std::vector<Int>& digits, bool infinite_last) {
    std::vector<BlockSched> out;
    Int m = pair.first, e = pair.second;
    for (std::size_t k = 0; k < digits.size(); ++k) {
        bool last = (k + 1 == digits.size());
        out.push_back(BlockSched{e, (last && infinite_last) ? Int(-1) : digits[k]});
        Int r = m - digits[k] * e;
        m = e;
        e = r;
    }
    return out;
}

struct Slot {
    Int val;
    long carrier;  // -1 = no divisor (virtual axis), else point index
};

Cluster run_walk(const WalkPlan& plan, std::size_t truncation) {
    Cluster cl;
    cl.tail = plan.tail;
    cl.pair_count = plan.pairs.size();
    cl.scale_model = plan.scale_model;

    // per-pair block schedules (multiplicity bookkeeping)
    std::vector<std::vector<BlockSched>> sched;
    for (std::size_t l = 0; l < plan.pairs.size(); ++l)
        sched.push_back(pair_blocks(plan.pairs[l], plan.digits[l],
                                    plan.last_digit_infinite && l + 1 == plan.pairs.size()));

    std::size_t cur_pair = 0, cur_block = 0;
    Int in_block(0);
    std::size_t last_pair_points = 0;
    bool germ_done = plan.pairs.empty();

    auto advance_block = [&]() {
        in_block += 1;
        while (cur_pair < sched.size() && cur_block < sched[cur_pair].size() &&
               sched[cur_pair][cur_block].count >= 0 &&
               in_block >= sched[cur_pair][cur_block].count) {
            in_block = 0;
            ++cur_block;
        }
    };

    auto emit = [&](std::vector<std::size_t> prox, const Int& mult) {
        ClusterPoint p;
        p.index = cl.points.size();
        p.proximate_to = std::move(prox);
        p.satellite = p.proximate_to.size() >= 2;
        p.multiplicity = mult;
        p.pair_id = cur_pair;
        p.block_id = cur_block;
        if (cur_pair + 1 == plan.pairs.size()) ++last_pair_points;
        advance_block();
        cl.points.push_back(std::move(p));
    };

    auto over_cap = [&]() {
        return plan.last_pair_cap && cur_pair + 1 == plan.pairs.size() &&
               last_pair_points >= *plan.last_pair_cap;
    };

    if (!plan.pairs.empty() && truncation > 0) {
        Slot big{plan.pairs[0].first, -1}, small{plan.pairs[0].second, -1};
        if (big.val < small.val) std::swap(big, small);
        emit({}, small.val);

        while (cl.points.size() < truncation && !over_cap()) {
            long prev = static_cast<long>(cl.points.size()) - 1;
            Int r = big.val - small.val;
            if (r > 0) {
                std::vector<std::size_t> prox{static_cast<std::size_t>(prev)};
                if (big.carrier >= 0) prox.push_back(static_cast<std::size_t>(big.carrier));
                Int mult = std::min(small.val, r);
                Slot from_small{small.val, prev};
                Slot from_big{std::move(r), big.carrier};
                if (from_big.val >= from_small.val) {
                    big = std::move(from_big);
                    small = std::move(from_small);
                } else {
                    big = std::move(from_small);
                    small = std::move(from_big);
                }
                emit(std::move(prox), mult);
                continue;
            }
            // remainder zero: this pair's walk is complete
            if (plan.last_digit_infinite && cur_pair + 1 == plan.pairs.size()) {
                // infinite satellite block: all further points share the anchor
                std::vector<std::size_t> prox{static_cast<std::size_t>(prev)};
                if (big.carrier >= 0) prox.push_back(static_cast<std::size_t>(big.carrier));
                small.carrier = prev;
                emit(std::move(prox), small.val);
                continue;
            }
            if (cur_pair + 1 < plan.pairs.size()) {
                // junction: the exhaustion point opens the next pair
                ++cur_pair;
                cur_block = 0;
                in_block = 0;
                if (plan.pairs[cur_pair].second != small.val)
                    throw math_error("pair chain broken: e mismatch at the junction");
                emit({static_cast<std::size_t>(prev)}, small.val);
                big = Slot{plan.pairs[cur_pair].first, -1};
                small.carrier = prev;
                continue;
            }
            germ_done = true;
            break;
        }
    }

    // free tail of multiplicity-one points (types A and B)
    Int tail_emitted(0);
    if (germ_done && (plan.tail_free || plan.tail == ClusterTail::InfiniteFree)) {
        cur_pair = plan.pairs.size();
        cur_block = 0;
        while (cl.points.size() < truncation) {
            if (plan.tail_free && tail_emitted >= *plan.tail_free) break;
            std::vector<std::size_t> prox;
            if (!cl.points.empty()) prox.push_back(cl.points.size() - 1);
            ClusterPoint p;
            p.index = cl.points.size();
            p.proximate_to = std::move(prox);
            p.multiplicity = 1;
            p.pair_id = plan.pairs.size();
            cl.points.push_back(std::move(p));
            tail_emitted += 1;
        }
    }

    if (plan.tail == ClusterTail::Finite)
        cl.truncated = !germ_done || (plan.tail_free && tail_emitted < *plan.tail_free);
    else
        cl.truncated = true;
    return cl;
}

Int germ_point_total(const std::vector<std::vector<Int>>& digits) {
    Int total(0);
    for (const auto& d : digits)
        for (const Int& a : d) total += a;
    return total;
}

WalkPlan plan_for_core(const DeltaCore& core) {
    DerivedInvariants inv = derived_invariants(core);
    WalkPlan plan;
    plan.pairs = inv.em_pairs;
    plan.digits = pair_digits(plan.pairs);
    plan.scale_model = core;
    return plan;
}

WalkPlan plan_for(const DeltaSequence& seq, std::size_t truncation) {
    switch (seq.type()) {
        case SeqType::A: {
            WalkPlan plan = plan_for_core(seq.a().core);
            plan.tail = ClusterTail::Finite;
            plan.tail_free = trailing_free_count(seq);
            return plan;
        }
        case SeqType::B: {
            WalkPlan plan = plan_for_core(seq.b().core);
            plan.tail = ClusterTail::InfiniteFree;
            return plan;
        }
        case SeqType::C: {
            WalkPlan plan = plan_for_core(seq.c().core);
            plan.tail = ClusterTail::InfiniteSatelliteSameDivisor;
            plan.last_digit_infinite = true;
            return plan;
        }
        case SeqType::D: {
            // The pairs before the last contribute witness-independent points;
            // the last pair is trusted only as far as its digits agree with
            // the limit walk, so grow the agreement goal until it covers.
            const TypeD& data = seq.d();
            std::size_t goal = 1;
            for (int rounds = 0; rounds < 16; ++rounds, goal *= 2) {
                std::vector<TypeDWitness> witnesses;
                try {
                    witnesses = type_d_witnesses(data, 1, goal, data.approximants);
                } catch (const budget_error&) {
                    continue;  // this goal was not reached; widen and retry
                }
                for (const auto& w : witnesses) {
                    DerivedInvariants winv = derived_invariants(w.core);
                    std::vector<std::pair<Int, Int>> pairs = winv.em_pairs;
                    auto digits = pair_digits(pairs);
                    Int earlier(0);
                    for (std::size_t l = 0; l + 1 < digits.size(); ++l)
                        for (const Int& a : digits[l]) earlier += a;
                    Int needed = Int(static_cast<unsigned long>(truncation)) - earlier;
                    Int trusted(0);
                    for (std::size_t k = 0; k < w.agreed_digits && k < digits.back().size(); ++k)
                        trusted += digits.back()[k];
                    if (needed <= 0 || trusted >= needed) {
                        WalkPlan plan;
                        plan.pairs = std::move(pairs);
                        plan.digits = std::move(digits);
                        plan.scale_model = w.core;
                        plan.tail = ClusterTail::InfiniteSatelliteAlternating;
                        plan.last_pair_cap = trusted.fits_ulong_p()
                                                 ? static_cast<std::size_t>(trusted.get_ui())
                                                 : truncation;
                        return plan;
                    }
                }
            }
            throw budget_error("could not cover the requested truncation with a witness core");
        }
        default: {
            // type E: grow the prefix until its witness covers the truncation
            for (std::size_t j = 2; j < 2 + 64; ++j) {
                PrefixCertificate cert = validate_prefix(seq, j);
                if (!cert.report.ok())
                    throw math_error("type-E prefix " + std::to_string(j) +
                                     " is invalid: " + cert.report.detail);
                WalkPlan plan = plan_for_core(cert.witness);
                if (germ_point_total(plan.digits) >= Int(static_cast<unsigned long>(truncation)) ||
                    j + 1 == 2 + 64) {
                    plan.tail = ClusterTail::InfiniteBlocks;
                    return plan;
                }
            }
            throw budget_error("could not cover the requested truncation with a prefix witness");
        }
    }
}

} // namespace

Cluster cluster_from_delta(const DeltaSequence& seq, std::size_t truncation) {
    WalkPlan plan = plan_for(seq, truncation);
    return run_walk(plan, truncation);
}

std::vector<std::pair<Int, std::size_t>> multiplicity_sequence(const DeltaSequence& seq,
                                                               std::size_t truncation) {
    Cluster cl = cluster_from_delta(seq, truncation);
    std::vector<std::pair<Int, std::size_t>> runs;
    std::size_t last_pair = 0;
    for (const auto& p : cl.points) {
        if (!runs.empty() && p.pair_id == last_pair && runs.back().first == p.multiplicity) {
            runs.back().second += 1;
        } else {
            runs.emplace_back(p.multiplicity, 1);
            last_pair = p.pair_id;
        }
    }
    return runs;
}

Int noether_residual(const DeltaSequence& seq) {
    if (seq.type() != SeqType::A)
        throw math_error("the Noether residual is a type-A notion");
    // germ part explicitly, free tail arithmetically (f points of multiplicity 1)
    Int germ_total = germ_point_total(pair_digits(derived_invariants(seq.a().core).em_pairs));
    if (!germ_total.fits_ulong_p()) throw budget_error("germ too large");
    Cluster germ = cluster_from_delta(seq, static_cast<std::size_t>(germ_total.get_ui()));
    Int sum(0);
    for (const auto& p : germ.points) sum += p.multiplicity * p.multiplicity;
    const Int& d0 = seq.a().core.entries[0];
    return d0 * d0 - sum - trailing_free_count(seq);
}

DualGraph dual_graph(const Cluster& cluster) {
    DualGraph g;
    g.points = cluster.points;
    g.tail = cluster.tail;
    g.truncated = cluster.truncated;

    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& p : cluster.points)
        for (std::size_t q : p.proximate_to) edges.insert({q, p.index});
    for (const auto& p : cluster.points)
        if (p.proximate_to.size() == 2) {
            std::size_t a = std::min(p.proximate_to[0], p.proximate_to[1]);
            std::size_t b = std::max(p.proximate_to[0], p.proximate_to[1]);
            edges.erase({a, b});  // blowing the satellite separates its two divisors
        }
    g.edges.assign(edges.begin(), edges.end());

    // rho_l = last free point of pair l, st_l = last point of pair l
    g.rho.assign(cluster.pair_count, -1);
    g.st.assign(cluster.pair_count, -1);
    g.gamma.assign(cluster.pair_count, {});
    for (const auto& p : cluster.points) {
        if (p.pair_id >= cluster.pair_count) continue;
        if (!p.satellite) g.rho[p.pair_id] = static_cast<long>(p.index);
        g.st[p.pair_id] = static_cast<long>(p.index);
    }

    if (cluster.points.empty()) return g;

    // main path from vertex 0 to the last vertex; branches hang off it
    const std::size_t n = cluster.points.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<long> parent(n, -2);
    std::vector<std::size_t> stack{0};
    parent[0] = -1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adj[v])
            if (parent[w] == -2) {
                parent[w] = static_cast<long>(v);
                stack.push_back(w);
            }
    }
    std::vector<bool> on_path(n, false);
    for (long v = static_cast<long>(n) - 1; v >= 0; v = parent[static_cast<std::size_t>(v)])
        on_path[static_cast<std::size_t>(v)] = true;

    // branch component containing rho_l
    for (std::size_t l = 0; l < cluster.pair_count; ++l) {
        if (g.rho[l] < 0 || on_path[static_cast<std::size_t>(g.rho[l])]) continue;
        std::set<std::size_t> comp;
        std::vector<std::size_t> work{static_cast<std::size_t>(g.rho[l])};
        while (!work.empty()) {
            std::size_t v = work.back();
            work.pop_back();
            if (comp.count(v) || on_path[v]) continue;
            comp.insert(v);
            for (std::size_t w : adj[v])
                if (!on_path[w] && !comp.count(w)) work.push_back(w);
        }
        g.gamma[l].assign(comp.begin(), comp.end());
    }
    return g;
}

std::string emit_dot(const DualGraph& graph) {
    std::ostringstream os;
    os << "graph dual_graph {\n";
    os << "  node [shape=circle];\n";
    std::vector<bool> in_gamma(graph.points.size(), false);
    for (std::size_t l = 0; l < graph.gamma.size(); ++l) {
        if (graph.gamma[l].empty()) continue;
        os << "  subgraph cluster_gamma_" << (l + 1) << " {\n";
        os << "    label=\"Gamma_" << (l + 1) << "\";\n";
        for (std::size_t v : graph.gamma[l]) {
            in_gamma[v] = true;
            os << "    v" << (v + 1);
            os << " [label=\"" << (v + 1) << " m=" << graph.points[v].multiplicity.get_str();
            if (graph.rho[l] == static_cast<long>(v)) os << " rho_" << (l + 1);
            os << "\"";
            if (graph.points[v].satellite) os << ", shape=box";
            os << "];\n";
        }
        os << "  }\n";
    }
    for (const auto& p : graph.points) {
        if (in_gamma[p.index]) continue;
        os << "  v" << (p.index + 1) << " [label=\"" << (p.index + 1)
           << " m=" << p.multiplicity.get_str();
        for (std::size_t l = 0; l < graph.st.size(); ++l) {
            if (graph.st[l] == static_cast<long>(p.index)) os << " st_" << (l + 1);
            if (graph.rho[l] == static_cast<long>(p.index)) os << " rho_" << (l + 1);
        }
        os << "\"";
        if (p.satellite) os << ", shape=box";
        os << "];\n";
    }
    for (const auto& [a, b] : graph.edges)
        os << "  v" << (a + 1) << " -- v" << (b + 1) << ";\n";
    if (graph.truncated || graph.tail != ClusterTail::Finite) {
        const char* what = "";
        switch (graph.tail) {
            case ClusterTail::Finite: what = "truncated"; break;
            case ClusterTail::InfiniteFree: what = "infinitely many free points"; break;
            case ClusterTail::InfiniteSatelliteSameDivisor:
                what = "infinitely many satellites of one divisor";
                break;
            case ClusterTail::InfiniteSatelliteAlternating:
                what = "infinitely many satellites, alternating";
                break;
            case ClusterTail::InfiniteBlocks: what = "infinitely many blocks"; break;
        }
        os << "  vtail [label=\"" << what << "\", style=dashed];\n";
        if (!graph.points.empty())
            os << "  v" << graph.points.size() << " -- vtail [style=dashed];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace seminf
