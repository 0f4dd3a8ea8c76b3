#ifndef ESPOINTS_ORACLE_HPP
#define ESPOINTS_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "espoints/geometry.hpp"

namespace espoints {

struct TraceStep {
    std::string step;
    std::string detail;  // compact JSON value or free text
};

/// A verified subset in convex position plus the derivation that produced
/// it. The trace is advisory; verify_witness never trusts it.
struct ConvexWitness {
    std::vector<int> indices;
    int size = 0;
    std::vector<TraceStep> trace;
};

/// Maximum-cardinality subset in convex position, by the anchored
/// longest-convex-chain DP. For sets no larger than the exhaustive cutoff
/// (15 unless overridden by ESPOINTS_MAX_ORACLE_N) the result is
/// cross-checked against full subset enumeration.
ConvexWitness largest_convex_subset(const PointSet& s);

/// Early-exit variant: a witness with exactly n points, or nullopt when no
/// n points of S are in convex position.
std::optional<ConvexWitness> contains_convex_ngon(const PointSet& s, int n);

/// Full subset enumeration; authoritative but exponential. Guarded to
/// N <= 22.
int largest_convex_subset_exhaustive(const PointSet& s);

/// Re-checks index bounds, distinctness, the size field and convex
/// position. Returns false rather than throwing on malformed witnesses.
bool verify_witness(const PointSet& s, const ConvexWitness& w);

}  // namespace espoints

#endif
