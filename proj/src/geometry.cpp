#include "espoints/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace espoints {

namespace detail {

int orient_big(const Point& p, const Point& q, const Point& r) {
    const BigInt det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return det.sign();
}

int cross_big(const Point& a, const Point& b, const Point& c, const Point& d) {
    const BigInt det = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
    return det.sign();
}

namespace {

bool fits_small(const Point& p) {
    return p.x >= -kSmallCoordLimit && p.x <= kSmallCoordLimit &&
           p.y >= -kSmallCoordLimit && p.y <= kSmallCoordLimit;
}

SmallPoint to_small(const Point& p) {
    return SmallPoint{p.x.convert_to<std::int64_t>(), p.y.convert_to<std::int64_t>()};
}

}  // namespace

}  // namespace detail

PointSet::PointSet(std::vector<Point> pts, std::string id)
    : points_(std::move(pts)), id_(std::move(id)) {
    small_.reserve(points_.size());
    for (const Point& p : points_) {
        if (!detail::fits_small(p)) {
            small_ok_ = false;
            small_.clear();
            break;
        }
        small_.push_back(detail::to_small(p));
    }
}

PointSet PointSet::reflected_y() const {
    std::vector<Point> pts;
    pts.reserve(points_.size());
    for (const Point& p : points_) pts.emplace_back(p.x, -p.y);
    return PointSet(std::move(pts), id_);
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
    int sign;
    if (detail::fits_small(p) && detail::fits_small(q) && detail::fits_small(r)) {
        sign = detail::orient_small(detail::to_small(p), detail::to_small(q),
                                    detail::to_small(r));
    } else {
        sign = detail::orient_big(p, q, r);
    }
    return static_cast<Orientation>(sign);
}

int cross_sign(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (detail::fits_small(a) && detail::fits_small(b) && detail::fits_small(c) &&
        detail::fits_small(d)) {
        return detail::cross_small(detail::to_small(a), detail::to_small(b),
                                   detail::to_small(c), detail::to_small(d));
    }
    return detail::cross_big(a, b, c, d);
}

bool lex_less(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

std::vector<int> sorted_indices(const PointSet& s) {
    std::vector<int> order(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) order[i] = static_cast<int>(i);
    detail::with_kernel(s, [&](auto k) {
        std::sort(order.begin(), order.end(), [&](int a, int b) { return k.lex_less(a, b); });
    });
    return order;
}

namespace {

// Reduced direction between two points, normalized to the upper half plane
// (dx > 0, or dx == 0 and dy > 0) so opposite directions compare equal.
// Used only on the 64-bit path; callers keyed on general position fall back
// to exact scans otherwise.
std::pair<std::int64_t, std::int64_t> reduced_direction(const SmallPoint& a,
                                                        const SmallPoint& b) {
    std::int64_t dx = b.x - a.x;
    std::int64_t dy = b.y - a.y;
    if (dx < 0 || (dx == 0 && dy < 0)) {
        dx = -dx;
        dy = -dy;
    }
    std::int64_t g = std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
    if (g > 1) {
        dx /= g;
        dy /= g;
    }
    return {dx, dy};
}

// Returns {a, b, b} for a duplicate pair, empty otherwise.
std::vector<int> find_duplicate(const PointSet& s) {
    std::vector<int> order = sorted_indices(s);
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (s[order[i - 1]] == s[order[i]]) {
            int a = order[i - 1], b = order[i];
            if (a > b) std::swap(a, b);
            return {a, b, b};
        }
    }
    return {};
}

// Sorted-direction sweep: anchored at each point, two later points make a
// collinear triple with it iff their reduced directions from the anchor
// coincide mod pi. Reports the first triple found.
std::vector<int> sweep_collinear_small(const PointSet& s) {
    const auto pts = s.small_view();
    const int n = static_cast<int>(pts.size());
    std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, int>> dirs;
    dirs.reserve(n);
    for (int i = 0; i < n; ++i) {
        dirs.clear();
        for (int j = i + 1; j < n; ++j)
            dirs.push_back({reduced_direction(pts[i], pts[j]), j});
        std::sort(dirs.begin(), dirs.end());
        for (std::size_t j = 1; j < dirs.size(); ++j) {
            if (dirs[j].first == dirs[j - 1].first)
                return {i, dirs[j - 1].second, dirs[j].second};
        }
    }
    return {};
}

}  // namespace

bool is_general_position_triples(const PointSet& s) {
    if (!find_duplicate(s).empty()) return false;
    const int n = static_cast<int>(s.size());
    return detail::with_kernel(s, [&](auto k) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    if (k.orient(a, b, c) == 0) return false;
        return true;
    });
}

std::vector<int> find_degenerate_triple(const PointSet& s) {
    std::vector<int> dup = find_duplicate(s);
    if (!dup.empty()) return dup;
    const int n = static_cast<int>(s.size());
    if (s.has_small_coords() && n > 48) return sweep_collinear_small(s);
    return detail::with_kernel(s, [&](auto k) -> std::vector<int> {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    if (k.orient(a, b, c) == 0) return {a, b, c};
        return {};
    });
}

bool is_general_position(const PointSet& s) {
    if (s.size() < 3) return find_duplicate(s).empty();
    return find_degenerate_triple(s).empty();
}

namespace {

template <class Kernel>
std::vector<int> hull_indices(const Kernel& k, std::vector<int> order) {
    const int n = static_cast<int>(order.size());
    if (n <= 2) {
        if (n == 2 && !k.lex_less(order[0], order[1]) && !k.lex_less(order[1], order[0]))
            order.pop_back();  // duplicate point
        return order;
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) { return k.lex_less(a, b); });
    std::vector<int> hull;
    hull.reserve(2 * n);
    // lower chain
    for (int idx : order) {
        while (hull.size() >= 2 &&
               k.orient(hull[hull.size() - 2], hull[hull.size() - 1], idx) <= 0)
            hull.pop_back();
        hull.push_back(idx);
    }
    // upper chain
    const std::size_t lower = hull.size() + 1;
    for (int i = n - 2; i >= 0; --i) {
        int idx = order[i];
        while (hull.size() >= lower &&
               k.orient(hull[hull.size() - 2], hull[hull.size() - 1], idx) <= 0)
            hull.pop_back();
        hull.push_back(idx);
    }
    hull.pop_back();  // closes back at order[0]
    return hull;
}

}  // namespace

std::vector<int> convex_hull(const PointSet& s) {
    if (s.empty()) throw std::invalid_argument("convex_hull: empty point set");
    std::vector<int> order(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) order[i] = static_cast<int>(i);
    return detail::with_kernel(s, [&](auto k) { return hull_indices(k, std::move(order)); });
}

std::vector<int> convex_hull_of(const PointSet& s, std::span<const int> subset) {
    if (subset.empty()) throw std::invalid_argument("convex_hull_of: empty subset");
    std::vector<int> order(subset.begin(), subset.end());
    return detail::with_kernel(s, [&](auto k) { return hull_indices(k, std::move(order)); });
}

bool is_convex_position(const PointSet& s, std::span<const int> subset) {
    std::unordered_set<int> seen;
    for (int idx : subset) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= s.size())
            throw std::out_of_range("is_convex_position: index out of range");
        if (!seen.insert(idx).second)
            throw std::invalid_argument("is_convex_position: duplicate index");
    }
    if (subset.size() <= 2) return true;
    const bool hull_based = convex_hull_of(s, subset).size() == subset.size();
    if (subset.size() <= 12) {
        const bool quad = is_convex_position_quadruples(s, subset);
        if (quad != hull_based)
            throw std::logic_error("is_convex_position: hull and 4-subset checks disagree");
    }
    return hull_based;
}

bool is_convex_position_quadruples(const PointSet& s, std::span<const int> subset) {
    const int m = static_cast<int>(subset.size());
    if (m <= 3) return true;
    return detail::with_kernel(s, [&](auto k) {
        // Four points are in convex position iff no one of them lies inside
        // the triangle of the other three.
        auto inside = [&](int p, int a, int b, int c) {
            const int oab = k.orient(a, b, p);
            const int obc = k.orient(b, c, p);
            const int oca = k.orient(c, a, p);
            return oab == obc && obc == oca && oab != 0;
        };
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                for (int c = b + 1; c < m; ++c)
                    for (int d = c + 1; d < m; ++d) {
                        const int ia = subset[a], ib = subset[b], ic = subset[c],
                                  id = subset[d];
                        if (inside(ia, ib, ic, id) || inside(ib, ia, ic, id) ||
                            inside(ic, ia, ib, id) || inside(id, ia, ib, ic))
                            return false;
                    }
        return true;
    });
}

bool point_in_convex_polygon(const Point& q, std::span<const Point> polygon, bool open) {
    const std::size_t n = polygon.size();
    if (n == 0) return false;
    if (n == 1) return !open && q == polygon[0];
    if (n == 2) {
        if (open) return false;
        if (orientation(polygon[0], polygon[1], q) != Orientation::Collinear) return false;
        const Point& a = polygon[0];
        const Point& b = polygon[1];
        const BigInt dot = (q.x - a.x) * (b.x - a.x) + (q.y - a.y) * (b.y - a.y);
        const BigInt len2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
        return dot >= 0 && dot <= len2;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = polygon[i];
        const Point& b = polygon[(i + 1) % n];
        const Orientation o = orientation(a, b, q);
        if (o == Orientation::Clockwise) return false;
        if (open && o == Orientation::Collinear) return false;
    }
    return true;
}

}  // namespace espoints
