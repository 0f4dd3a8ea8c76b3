#ifndef ESPOINTS_GEOMETRY_HPP
#define ESPOINTS_GEOMETRY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace espoints {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact integer-coordinate planar point. Coordinates are unbounded;
/// predicates pick a 64-bit fast path when every operand satisfies
/// |coord| <= kSmallCoordLimit and fall back to arbitrary precision
/// otherwise.
struct Point {
    BigInt x;
    BigInt y;

    Point() = default;
    Point(BigInt px, BigInt py) : x(std::move(px)), y(std::move(py)) {}
    Point(std::int64_t px, std::int64_t py) : x(px), y(py) {}

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

/// Largest coordinate magnitude for which a 3x3 orientation determinant is
/// guaranteed to fit in signed 64-bit intermediates.
inline constexpr std::int64_t kSmallCoordLimit = std::int64_t{1} << 20;

struct SmallPoint {
    std::int64_t x;
    std::int64_t y;
};

enum class Orientation : int {
    Clockwise = -1,
    Collinear = 0,
    CounterClockwise = +1,
};

/// Immutable ordered point collection. Caches a 64-bit coordinate view when
/// every coordinate fits the fast-path bound, so the DP cores can avoid
/// arbitrary-precision arithmetic on generated inputs.
class PointSet {
  public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> pts, std::string id = "");

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Point>& points() const { return points_; }
    const std::string& id() const { return id_; }
    void set_id(std::string id) { id_ = std::move(id); }

    bool has_small_coords() const { return small_ok_; }
    std::span<const SmallPoint> small_view() const { return small_; }

    /// Same points with y negated. Maps cups to caps and vice versa.
    PointSet reflected_y() const;

  private:
    std::vector<Point> points_;
    std::vector<SmallPoint> small_;
    std::string id_;
    bool small_ok_ = true;
};

/// Sign of (q - p) x (r - p), computed exactly.
Orientation orientation(const Point& p, const Point& q, const Point& r);

/// Sign of (b - a) x (d - c), computed exactly.
int cross_sign(const Point& a, const Point& b, const Point& c, const Point& d);

/// Lexicographic (x, y) order; the canonical left-to-right order used by all
/// cup/cap machinery (equal x resolved as if by an infinitesimal shear).
bool lex_less(const Point& a, const Point& b);

/// Indices of S sorted by lex_less.
std::vector<int> sorted_indices(const PointSet& s);

/// True iff all points are distinct and no three are collinear. Uses an
/// exhaustive triple scan for small N and a sorted-direction sweep above
/// that.
bool is_general_position(const PointSet& s);

/// Exhaustive O(N^3) variant, independent of the sweep. Test oracle.
bool is_general_position_triples(const PointSet& s);

/// If a collinear triple (or duplicate pair, reported with c == b) exists,
/// returns {a, b, c}; empty otherwise.
std::vector<int> find_degenerate_triple(const PointSet& s);

/// Hull vertex indices in counter-clockwise order starting from the
/// lexicographic minimum. Collinear mid-edge points are excluded.
std::vector<int> convex_hull(const PointSet& s);
std::vector<int> convex_hull_of(const PointSet& s, std::span<const int> subset);

/// True iff every selected point is a hull vertex of the selection.
/// Rejects duplicate indices. For |subset| <= 12 the result is cross-checked
/// against the every-4-subset characterization.
bool is_convex_position(const PointSet& s, std::span<const int> subset);

/// The every-4-subset characterization, checked directly.
bool is_convex_position_quadruples(const PointSet& s, std::span<const int> subset);

/// Exact membership of q in a convex CCW polygon; open selects the strict
/// interior, otherwise the closed hull.
bool point_in_convex_polygon(const Point& q, std::span<const Point> polygon, bool open);

namespace detail {

inline int sign_of(std::int64_t v) { return (v > 0) - (v < 0); }

inline int orient_small(const SmallPoint& p, const SmallPoint& q, const SmallPoint& r) {
    const std::int64_t det =
        (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sign_of(det);
}

inline int cross_small(const SmallPoint& a, const SmallPoint& b, const SmallPoint& c,
                       const SmallPoint& d) {
    const std::int64_t det = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
    return sign_of(det);
}

int orient_big(const Point& p, const Point& q, const Point& r);
int cross_big(const Point& a, const Point& b, const Point& c, const Point& d);

/// Index-based predicate kernel over the 64-bit view.
struct SmallKernel {
    std::span<const SmallPoint> pts;

    int orient(int a, int b, int c) const { return orient_small(pts[a], pts[b], pts[c]); }
    int cross(int a, int b, int c, int d) const {
        return cross_small(pts[a], pts[b], pts[c], pts[d]);
    }
    bool lex_less(int a, int b) const {
        return pts[a].x < pts[b].x || (pts[a].x == pts[b].x && pts[a].y < pts[b].y);
    }
};

/// Index-based predicate kernel over exact coordinates.
struct BigKernel {
    const std::vector<Point>* pts;

    int orient(int a, int b, int c) const {
        return orient_big((*pts)[a], (*pts)[b], (*pts)[c]);
    }
    int cross(int a, int b, int c, int d) const {
        return cross_big((*pts)[a], (*pts)[b], (*pts)[c], (*pts)[d]);
    }
    bool lex_less(int a, int b) const { return espoints::lex_less((*pts)[a], (*pts)[b]); }
};

template <class F>
decltype(auto) with_kernel(const PointSet& s, F&& f) {
    if (s.has_small_coords()) {
        return f(SmallKernel{s.small_view()});
    }
    return f(BigKernel{&s.points()});
}

}  // namespace detail

}  // namespace espoints

#endif
