#ifndef ESPOINTS_PIPELINE_HPP
#define ESPOINTS_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "espoints/cupcap.hpp"
#include "espoints/geometry.hpp"
#include "espoints/oracle.hpp"
#include "espoints/order.hpp"

namespace espoints {

enum class ExtractMode { Strict, BestEffort };

/// All proof parameters derived from the target polygon size n, in exact
/// integer/rational arithmetic. Strict mode also carries a conservative
/// upper bound on the exponent of the input-size requirement.
struct PipelineParams {
    int n = 0;
    int k = 0;             // ceil(n^(2/3)); also the K of the schedule
    int cap_size = 0;      // k + 3, the size of the chosen cup-or-cap
    int t = 0;             // ceil(n^(1/3) / 2), Case 1 part count
    int rounds = 0;        // ceil(n^(1/3)), Case 2 schedule length
    Rational alpha;        // 3 * floor(log2 n) / ceil(n^(1/3)), clamped to 1/2 at >= 1
    bool alpha_clamped = false;
    int region_fraction_exponent = 32;  // c in the |P| / 2^(c k) occupancy bound
    ExtractMode mode = ExtractMode::BestEffort;

    struct Round {
        int left_target;    // i*K
        int right_target;   // n - i*K + K, clamped below at 2
        BigInt threshold;   // f(left_target, right_target)
    };
    std::vector<Round> schedule;

    BigInt strict_size_exponent;  // conservative: requirement treated as 2^this

    /// Conservative: claims the paper bound is met only when N >= 2^e for
    /// the rounded-up exponent e, so desk-scale inputs always report unmet.
    bool meets_strict_threshold(const BigInt& n_points) const;

    /// The per-region occupancy bound |P| / 2^(c k) as an exact rational.
    Rational region_fraction_threshold(const BigInt& n_points) const;
};

PipelineParams params_for(int n, ExtractMode mode);

/// One region T_i of a cap's support. Anchors are indices of the cap
/// vertices x_(i-1), x_i, x_(i+1), x_(i+2) (cyclic); members are the points
/// of S strictly inside. The base segment x_(i-1) x_(i+2) exists for
/// 2 <= i <= |X|-2, where the anchors are not wrapped.
struct SupportRegion {
    int region_index = 0;  // 1-based i of T_i
    int x_prev = -1;       // x_(i-1)
    int x_left = -1;       // x_i
    int x_right = -1;      // x_(i+1)
    int x_next = -1;       // x_(i+2)
    bool has_base = false;
    std::vector<int> members;
};

/// Support regions T_1 .. T_(|X|-1) of a cap (cups are reflected
/// internally). Each point of S lands in at most one region; assignment is
/// by exact halfplane signs. Requires |X| >= 4.
std::vector<SupportRegion> support_of(const PointSet& s, const CupCap& x);

struct FractionalCapResult {
    CupCap x;                            // the chosen (k+3)-cup-or-cap
    std::vector<SupportRegion> regions;  // support of x
    BigInt min_occupancy;                // over T_1 .. T_(|X|-1)
    bool meets_threshold = false;
    int candidates_tried = 0;
};

/// Searches for a (k+3)-cup-or-cap whose support regions are all occupied
/// above the threshold: windows of the longest cup/cap plus seeded restarts
/// on subsamples, keeping the candidate maximizing the minimum occupancy.
/// Strict mode returns nullopt when no candidate meets the threshold.
std::optional<FractionalCapResult> find_fractional_cap(const PointSet& s, int k,
                                                       const Rational& fraction_threshold,
                                                       ExtractMode mode,
                                                       std::uint64_t seed);

struct RegionSplit {
    int region_index = 0;
    ChainAntichain split;
};

/// Per-region Dilworth split against the base segment, for the regions that
/// have one and are nonempty. `frame` must be the point set the regions
/// were computed on (reflected when the chosen X was a cup).
std::vector<RegionSplit> dilworth_regions(const PointSet& frame,
                                          const std::vector<SupportRegion>& regions,
                                          const Rational& alpha);

enum class CapSide { Left, Right };

/// A subset of one chain region convex together with the region's right
/// anchor x_(i+1) (left-cap) or left anchor x_i (right-cap). Construction
/// verifies the defining convexity and throws VerificationFailed otherwise.
struct SidedCap {
    CapSide side = CapSide::Left;
    int region_index = 0;
    int anchor = -1;            // x_(i+1) for Left, x_i for Right
    std::vector<int> indices;   // in increasing depth order

    int size() const { return static_cast<int>(indices.size()); }
};

SidedCap make_sided_cap(const PointSet& frame, CapSide side, int region_index, int anchor,
                        std::vector<int> indices);

/// The Case 2 join: a left-cap of Q_(i-1) and a right-cap of Q_i form one
/// convex set of size |left| + |right|. Verified; throws VerificationFailed
/// when the union is not convex (an upstream precondition was violated).
ConvexWitness glue(const PointSet& frame, const SidedCap& left, const SidedCap& right);

/// Case 1: caps found inside pairwise non-adjacent antichain regions union
/// into one cap. Returns nullopt when fewer than params.t such regions are
/// selectable.
std::optional<ConvexWitness> case1_assemble(const PointSet& frame,
                                            const std::vector<RegionSplit>& antichains,
                                            const PipelineParams& params,
                                            std::vector<TraceStep>* trace);

/// Case 2: walk consecutive chain regions, growing a left-cap per the
/// schedule and gluing against a right-cap when one appears. Best-effort
/// mode keeps the largest structure achieved instead of failing a round.
std::optional<ConvexWitness> case2_iterate(const PointSet& frame,
                                           const std::vector<RegionSplit>& chains,
                                           const std::vector<SupportRegion>& regions,
                                           const PipelineParams& params,
                                           std::vector<TraceStep>* trace);

/// The full extraction: fractional cap, per-region Dilworth split, Case 1
/// or Case 2, with the longest cup/cap as a floor in best-effort mode.
/// Strict mode throws ThresholdUnmet when |S| is below the paper bound.
ConvexWitness extract(const PointSet& s, int n, ExtractMode mode, std::uint64_t seed = 0);

}  // namespace espoints

#endif
