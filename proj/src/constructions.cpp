#include "espoints/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace espoints {

namespace {

constexpr const char* kPrngName = "mt19937_64-v1";

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Unbiased draw from [0, bound) by rejection.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

// Open-addressing set of direction keys, cleared in O(1) via epochs. The
// rejection sampler probes one candidate's directions to every accepted
// point, so the set is rebuilt for each candidate.
class KeySet {
  public:
    void reset(std::size_t capacity) {
        std::size_t want = 16;
        while (want < 2 * capacity + 8) want <<= 1;
        if (want != table_.size()) {
            table_.assign(want, 0);
            stamp_.assign(want, 0);
        }
        ++epoch_;
    }

    bool insert(std::uint64_t key) {
        const std::size_t mask = table_.size() - 1;
        std::size_t i = splitmix64(key) & mask;
        while (stamp_[i] == epoch_) {
            if (table_[i] == key) return false;
            i = (i + 1) & mask;
        }
        table_[i] = key;
        stamp_[i] = epoch_;
        return true;
    }

  private:
    std::vector<std::uint64_t> table_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
};

// Direction from a to b reduced and normalized mod pi, packed into 64 bits.
// Two equal keys from the same source point witness a collinear triple.
std::uint64_t direction_key(std::int64_t ax, std::int64_t ay, std::int64_t bx,
                            std::int64_t by) {
    std::int64_t dx = bx - ax;
    std::int64_t dy = by - ay;
    if (dx < 0 || (dx == 0 && dy < 0)) {
        dx = -dx;
        dy = -dy;
    }
    const std::int64_t g = std::gcd(dx, dy < 0 ? -dy : dy);
    if (g > 1) {
        dx /= g;
        dy /= g;
    }
    return (static_cast<std::uint64_t>(dx) << 32) |
           static_cast<std::uint32_t>(static_cast<std::int32_t>(dy));
}

}  // namespace

PointSet random_general_position(int n, std::int64_t range, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_general_position: negative size");
    if (range < 1 || range > (std::int64_t{1} << 30))
        throw std::invalid_argument("random_general_position: range out of [1, 2^30]");
    std::mt19937_64 rng(seed);
    const std::uint64_t side = static_cast<std::uint64_t>(2 * range + 1);
    std::vector<std::int64_t> xs, ys;
    xs.reserve(n);
    ys.reserve(n);
    KeySet dirs;
    constexpr int kAttemptsPerPoint = 20000;
    for (int i = 0; i < n; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < kAttemptsPerPoint && !placed; ++attempt) {
            const std::int64_t x = static_cast<std::int64_t>(bounded(rng, side)) - range;
            const std::int64_t y = static_cast<std::int64_t>(bounded(rng, side)) - range;
            dirs.reset(static_cast<std::size_t>(i));
            bool ok = true;
            for (int j = 0; j < i; ++j) {
                if (xs[j] == x && ys[j] == y) {
                    ok = false;
                    break;
                }
                if (!dirs.insert(direction_key(x, y, xs[j], ys[j]))) {
                    ok = false;  // two accepted points aligned through the candidate
                    break;
                }
            }
            if (ok) {
                xs.push_back(x);
                ys.push_back(y);
                placed = true;
            }
        }
        if (!placed)
            throw std::runtime_error(
                "random_general_position: resampling budget exhausted; range too small");
    }
    std::vector<Point> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) pts.emplace_back(xs[i], ys[i]);
    return PointSet(std::move(pts));
}

PointSet parabola_points(int n) {
    if (n < 0) throw std::invalid_argument("parabola_points: negative size");
    std::vector<Point> pts;
    pts.reserve(n);
    for (int i = 1; i <= n; ++i) pts.emplace_back(BigInt(i), BigInt(i) * i);
    return PointSet(std::move(pts));
}

namespace {

struct Block {
    std::vector<Point> pts;  // x-coordinates are exactly 0 .. size-1
};

BigInt y_span(const Block& b) {
    if (b.pts.empty()) return 0;
    BigInt lo = b.pts[0].y, hi = b.pts[0].y;
    for (const Point& p : b.pts) {
        lo = std::min(lo, p.y);
        hi = std::max(hi, p.y);
    }
    return hi - lo;
}

// Recursive extremal construction. The right part is shifted past the left
// part and lifted until every left-to-right slope exceeds every slope inside
// either part; crossing chains then lose a cup after their first right point
// and a cap after their first left point.
Block delta_block(int k, int l) {
    if (k == 2 || l == 2) return Block{{Point(0, 0)}};
    Block left = delta_block(k - 1, l);
    Block right = delta_block(k, l - 1);
    const auto lsize = static_cast<std::int64_t>(left.pts.size());
    const BigInt total = lsize + static_cast<std::int64_t>(right.pts.size());
    const BigInt span = std::max(y_span(left), y_span(right));
    BigInt max_left_y = left.pts[0].y, min_right_y = right.pts[0].y;
    for (const Point& p : left.pts) max_left_y = std::max(max_left_y, p.y);
    for (const Point& p : right.pts) min_right_y = std::min(min_right_y, p.y);
    // min cross slope >= (lift + min_right_y - max_left_y) / total > span
    const BigInt lift = (span + 1) * total + max_left_y - min_right_y;
    Block out;
    out.pts = std::move(left.pts);
    for (Point& p : right.pts) out.pts.emplace_back(p.x + lsize, p.y + lift);
    return out;
}

}  // namespace

PointSet extremal_cupcap_set(int k, int l) {
    if (k < 2 || l < 2) throw std::invalid_argument("extremal_cupcap_set: k, l >= 2 required");
    if (k + l > 14)
        throw std::invalid_argument("extremal_cupcap_set: k + l <= 14 (coordinate growth)");
    return PointSet(delta_block(k, l).pts);
}

PointSet es_lower_bound_set(int n) {
    if (n < 3 || n > 12)
        throw std::invalid_argument("es_lower_bound_set: n must lie in [3, 12]");
    // blocks in left-to-right order carry decreasing block index i
    std::vector<Block> blocks;
    for (int i = n - 2; i >= 0; --i) blocks.push_back(delta_block(i + 2, n - i));

    std::int64_t width = 0;
    BigInt vmax = 0;
    for (const Block& b : blocks) {
        width += static_cast<std::int64_t>(b.pts.size()) + 1;
        for (const Point& p : b.pts) vmax = std::max(vmax, abs(p.y));
    }
    // next powers of two covering the width factor and the vertical extent;
    // depth towers by these factors so slopes into each block undercut every
    // slope into earlier blocks and every within-block slope
    BigInt width_factor = 1;
    while (width_factor < width + 1) width_factor <<= 1;
    BigInt extent = 1;
    while (extent < 2 * vmax + 1) extent <<= 1;

    std::vector<Point> pts;
    std::int64_t x_offset = 0;
    BigInt depth = 0;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        if (bi > 0) depth = width_factor * (depth + extent);
        for (const Point& p : blocks[bi].pts) pts.emplace_back(p.x + x_offset, p.y - depth);
        x_offset += static_cast<std::int64_t>(blocks[bi].pts.size()) + 1;
    }
    return PointSet(std::move(pts));
}

std::string generator_metadata(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorKind::Random:
            return "kind=random n=" + std::to_string(spec.n) +
                   " seed=" + std::to_string(spec.seed) +
                   " range=" + std::to_string(spec.range) + " prng=" + kPrngName;
        case GeneratorKind::Parabola:
            return "kind=parabola n=" + std::to_string(spec.n);
        case GeneratorKind::CupCapExtremal:
            return "kind=cupcap-extremal k=" + std::to_string(spec.k) +
                   " l=" + std::to_string(spec.l);
        case GeneratorKind::EsLower:
            return "kind=es-lower n=" + std::to_string(spec.n);
    }
    return "";
}

PointSet generate(const GeneratorSpec& spec) {
    PointSet s;
    switch (spec.kind) {
        case GeneratorKind::Random:
            s = random_general_position(spec.n, spec.range, spec.seed);
            s.set_id("random-n" + std::to_string(spec.n) + "-seed" + std::to_string(spec.seed));
            break;
        case GeneratorKind::Parabola:
            s = parabola_points(spec.n);
            s.set_id("parabola-n" + std::to_string(spec.n));
            break;
        case GeneratorKind::CupCapExtremal:
            s = extremal_cupcap_set(spec.k, spec.l);
            s.set_id("cupcap-extremal-" + std::to_string(spec.k) + "-" + std::to_string(spec.l));
            break;
        case GeneratorKind::EsLower:
            s = es_lower_bound_set(spec.n);
            s.set_id("es-lower-" + std::to_string(spec.n));
            break;
    }
    return s;
}

}  // namespace espoints
