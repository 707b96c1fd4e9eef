#pragma once

/* Infinitely-near-point clusters of the valuations described by a
 * delta-sequence, reconstructed from the Euclidean walks of its m/e pairs.
 *
 * Each continued-fraction digit contributes a block of consecutive points;
 * proximity is wired by tracking, at every blow-up, which older divisor the
 * new point still lies on. Multiplicities are the running divisor values in
 * the germ scale (types A-C) or in the scale of the smallest witness core
 * covering the requested truncation (types D and E, whose normalized
 * multiplicities are not integers).
 *
 * Infinite tails are first-class: materialization always takes an explicit
 * truncation, and the tail marker says how the cluster would continue.
 */

#include <string>
#include <vector>

#include "seminf/delta.hpp"

namespace seminf {

enum class ClusterTail {
    Finite,
    InfiniteFree,
    InfiniteSatelliteSameDivisor,
    InfiniteSatelliteAlternating,
    InfiniteBlocks,
};

struct ClusterPoint {
    std::size_t index = 0;  // creation order, 0-based
    bool satellite = false;
    std::vector<std::size_t> proximate_to;  // immediate predecessor first, then the anchor
    Int multiplicity;
    std::size_t pair_id = 0;   // which m/e pair produced the point; tail points get pair count
    std::size_t block_id = 0;  // digit index within the pair, 0-based
};

struct Cluster {
    std::vector<ClusterPoint> points;
    ClusterTail tail = ClusterTail::Finite;
    bool truncated = false;      // true when an infinite tail (or a long finite one) was cut
    std::size_t pair_count = 0;  // germ pairs walked
    DeltaCore scale_model;       // integer model whose multiplicities are reported
};

Cluster cluster_from_delta(const DeltaSequence& seq, std::size_t truncation);

// Run-length encoding of the multiplicities, runs never crossing pair or
// germ/tail boundaries.
std::vector<std::pair<Int, std::size_t>> multiplicity_sequence(const DeltaSequence& seq,
                                                               std::size_t truncation);

// delta_0^2 - sum of squared multiplicities over the full finite cluster of
// a type-A sequence; equals delta_{g+1}.
Int noether_residual(const DeltaSequence& seq);

struct DualGraph {
    std::vector<ClusterPoint> points;  // vertex i = divisor from blowing up point i
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // (i, j) with i < j
    std::vector<std::vector<std::size_t>> gamma;  // branch subgraph per pair (may be empty)
    std::vector<long> rho, st;                    // per pair; -1 when not materialized
    ClusterTail tail = ClusterTail::Finite;
    bool truncated = false;
};

DualGraph dual_graph(const Cluster& cluster);

// Deterministic text in DOT format: stable vertex order, subgraph clusters
// for the branches, rho/st labels, infinite tails as a dashed terminal node.
std::string emit_dot(const DualGraph& graph);

} // namespace seminf
