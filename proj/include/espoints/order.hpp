#ifndef ESPOINTS_ORDER_HPP
#define ESPOINTS_ORDER_HPP

#include <vector>

#include "espoints/geometry.hpp"

namespace espoints {

struct Segment {
    Point a;
    Point b;
};

/// The region partial order: p precedes q iff p != q and q lies in the
/// closed triangle spanned by the base segment and p. Rejects p == q.
bool precedes(const Point& p, const Point& q, const Segment& base);

enum class ChainKind { Chain, Antichain };

/// Result of a Dilworth-style split: a chain listed in order of increasing
/// depth, or an antichain (one Mirsky level).
struct ChainAntichain {
    ChainKind kind = ChainKind::Chain;
    std::vector<int> members;  // indices into the originating PointSet
    Rational alpha_used = 0;

    int size() const { return static_cast<int>(members.size()); }
};

/// A point set restricted to one support region, ordered by the base
/// triangle containment relation. Comparabilities are precomputed; the
/// referenced PointSet must outlive the order.
class RegionOrder {
  public:
    RegionOrder(const PointSet& s, Segment base, std::vector<int> elements);

    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<int>& elements() const { return elements_; }
    const Segment& base() const { return base_; }
    const PointSet& point_set() const { return *set_; }

    /// Comparability by element positions (not set indices).
    bool less(int i, int j) const { return comp_[static_cast<std::size_t>(i) * size() + j]; }

    /// Irreflexivity, antisymmetry and transitivity of the precomputed
    /// relation; quadratic plus a cubic transitivity scan.
    bool verify_partial_order() const;

  private:
    const PointSet* set_;
    Segment base_;
    std::vector<int> elements_;
    std::vector<unsigned char> comp_;
};

/// Maximum chain via Mirsky levels (longest-path DP on the comparability
/// relation), members in increasing order.
ChainAntichain longest_chain(const RegionOrder& order);

/// Mirsky levels: level t holds the elements whose longest descending chain
/// has length t. Levels partition the elements; each level is an antichain;
/// the number of levels equals the longest chain. Returns set indices.
std::vector<std::vector<int>> mirsky_levels(const RegionOrder& order);

/// The chain/antichain dichotomy: the maximum chain when its length reaches
/// ceil(m^(1-alpha)), otherwise the largest Mirsky level (an antichain of
/// size >= ceil(m^alpha)). Thresholds are compared in exact integer
/// arithmetic on the rational alpha in (0, 1).
ChainAntichain dilworth_split(const RegionOrder& order, const Rational& alpha);

}  // namespace espoints

#endif
