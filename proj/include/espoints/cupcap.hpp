#ifndef ESPOINTS_CUPCAP_HPP
#define ESPOINTS_CUPCAP_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "espoints/geometry.hpp"

namespace espoints {

enum class CupCapKind { Cup, Cap };

/// An ordered convex chain: indices into a PointSet, strictly increasing in
/// the canonical (x, y) order, turning consistently counter-clockwise (cup)
/// or clockwise (cap). Chains of length <= 2 count as both.
struct CupCap {
    CupCapKind kind = CupCapKind::Cup;
    std::vector<int> indices;

    int length() const { return static_cast<int>(indices.size()); }
};

/// True iff the selection, which must be given in canonical order, turns
/// counter-clockwise at every consecutive triple. Rejects unsorted input.
bool is_cup(const PointSet& s, std::span<const int> indices);
/// Clockwise counterpart of is_cup.
bool is_cap(const PointSet& s, std::span<const int> indices);

/// Maximum-length cup (cap) via the ordered-pair DP, O(N^2 log N).
CupCap longest_cup(const PointSet& s);
CupCap longest_cap(const PointSet& s);

/// f(k, l) = C(k + l - 4, k - 2) + 1: the smallest N forcing a k-cup or an
/// l-cap in any N-point general-position set.
struct CupCapThreshold {
    int k;
    int l;
    BigInt value;
};
CupCapThreshold cupcap_threshold(int k, int l);

/// A k-cup or an l-cap when one exists; nullopt certifies that the set has
/// neither (possible only below f(k, l) or on an extremal configuration).
std::optional<CupCap> find_cup_or_cap(const PointSet& s, int k, int l);

enum class TripleColor { Red, Blue };

/// Triple-coloring oracle over {0, .., n_elements-1} promising transitivity:
/// same-colored (i1,i2,i3) and (i2,i3,i4) force (i1,i2,i4) and (i1,i3,i4)
/// into that color. color_of is queried only with i < j < k.
struct TransitiveColoring {
    int n_elements = 0;
    std::function<TripleColor(int, int, int)> color_of;
};

struct CliqueResult {
    TripleColor color;
    std::vector<int> elements;
};

/// Longest sequences whose consecutive triples are all red / all blue; by
/// transitivity these are monochromatic cliques.
struct CliqueSearch {
    std::vector<int> best_red;
    std::vector<int> best_blue;
};
CliqueSearch longest_monochromatic(const TransitiveColoring& coloring);

/// A red clique of size red_target or a blue clique of size blue_target,
/// nullopt if neither exists. Samples quadruples for transitivity and
/// throws ContractViolation on a failure.
std::optional<CliqueResult> transitive_clique(const TransitiveColoring& coloring,
                                              int red_target, int blue_target);

}  // namespace espoints

#endif
