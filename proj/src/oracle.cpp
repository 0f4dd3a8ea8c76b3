#include "espoints/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>

namespace espoints {

namespace {

int exhaustive_cutoff() {
    if (const char* env = std::getenv("ESPOINTS_MAX_ORACLE_N")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 0 && v <= 22) return static_cast<int>(v);
    }
    return 15;
}

// Longest convex chain anchored at the lexicographic-minimum vertex of the
// polygon. Candidates must be the points lex-greater than b, sorted by
// angle around b; in that order every pair is a valid 2-chain and only the
// interior and closing turns need checking.
template <class Kernel>
struct AnchoredDP {
    const Kernel& k;
    std::vector<std::uint16_t> d;
    std::vector<int> cand;

    explicit AnchoredDP(const Kernel& kernel) : k(kernel) {}

    std::uint16_t& at(int i, int j) {
        return d[static_cast<std::size_t>(i) * cand.size() + j];
    }

    // Fills cand and the table for anchor b over `pool` (indices lex-greater
    // than b). Returns the best closed polygon size and its final pair.
    struct Best {
        int size = 0;
        int j = -1;
        int kpos = -1;
    };

    Best run(int b, const std::vector<int>& pool, int early_exit_at) {
        cand = pool;
        std::sort(cand.begin(), cand.end(),
                  [&](int u, int v) { return k.cross(b, u, b, v) > 0; });
        const int m = static_cast<int>(cand.size());
        d.assign(static_cast<std::size_t>(m) * m, 0);
        Best best;
        for (int j = 0; j < m; ++j)
            for (int t = j + 1; t < m; ++t) at(j, t) = 2;
        for (int t = 1; t < m; ++t) {
            for (int j = 0; j < t; ++j) {
                std::uint16_t run_best = 0;
                for (int i = 0; i < j; ++i) {
                    if (at(i, j) > run_best && k.orient(cand[i], cand[j], cand[t]) > 0)
                        run_best = at(i, j);
                }
                if (run_best > 0)
                    at(j, t) = std::max(at(j, t), static_cast<std::uint16_t>(run_best + 1));
                if (k.orient(cand[j], cand[t], b) > 0) {
                    const int closed = at(j, t) + 1;
                    if (closed > best.size) {
                        best = Best{closed, j, t};
                        if (early_exit_at > 0 && closed >= early_exit_at) return best;
                    }
                }
            }
        }
        return best;
    }

    std::vector<int> reconstruct(int b, Best best) {
        int j = best.j;
        int t = best.kpos;
        std::vector<int> chain{cand[t], cand[j]};
        while (at(j, t) > 2) {
            const std::uint16_t want = static_cast<std::uint16_t>(at(j, t) - 1);
            int found = -1;
            for (int i = 0; i < j; ++i) {
                if (at(i, j) == want && k.orient(cand[i], cand[j], cand[t]) > 0) {
                    found = i;
                    break;
                }
            }
            if (found < 0) throw std::logic_error("convex chain reconstruction failed");
            chain.push_back(cand[found]);
            t = j;
            j = found;
        }
        chain.push_back(b);
        std::reverse(chain.begin(), chain.end());
        return chain;  // polygon order: b, then increasing angle
    }
};

template <class Kernel>
ConvexWitness largest_impl(const Kernel& k, const std::vector<int>& order, int n,
                           int early_exit_at) {
    ConvexWitness w;
    if (n <= 2) {
        for (int i = 0; i < n; ++i) w.indices.push_back(order[i]);
        w.size = n;
        return w;
    }
    AnchoredDP<Kernel> dp(k);
    int best_size = 2;
    std::vector<int> best_chain{order[0], order[1]};
    std::vector<int> pool;
    for (int bi = 0; bi < n; ++bi) {
        const int remaining = n - bi - 1;
        if (remaining + 1 <= best_size) break;  // order is lex-sorted
        const int b = order[bi];
        pool.assign(order.begin() + bi + 1, order.end());
        auto best = dp.run(b, pool, early_exit_at);
        if (best.size > best_size) {
            best_size = best.size;
            best_chain = dp.reconstruct(b, best);
            if (early_exit_at > 0 && best_size >= early_exit_at) break;
        }
    }
    // a lone triangle beats the 2-point base case even if no closed DP
    // polygon was found (cannot happen under general position, but keep the
    // floor consistent)
    if (best_size < 3 && n >= 3) {
        best_size = 3;
        best_chain = {order[0], order[1], order[2]};
    }
    w.indices = std::move(best_chain);
    w.size = static_cast<int>(w.indices.size());
    return w;
}

template <class Kernel>
bool subset_convex(const Kernel& k, const std::vector<int>& members,
                   std::vector<int>& hull) {
    const int m = static_cast<int>(members.size());
    if (m <= 2) return true;
    hull.clear();
    // members arrive in canonical order; run both chains of the monotone
    // hull and compare vertex counts
    for (int idx : members) {
        while (hull.size() >= 2 &&
               k.orient(hull[hull.size() - 2], hull[hull.size() - 1], idx) <= 0)
            hull.pop_back();
        hull.push_back(idx);
    }
    const std::size_t lower_keep = hull.size() + 1;
    for (int i = m - 2; i >= 0; --i) {
        int idx = members[i];
        while (hull.size() >= lower_keep &&
               k.orient(hull[hull.size() - 2], hull[hull.size() - 1], idx) <= 0)
            hull.pop_back();
        hull.push_back(idx);
    }
    hull.pop_back();
    return hull.size() == members.size();
}

}  // namespace

ConvexWitness largest_convex_subset(const PointSet& s) {
    const std::vector<int> order = sorted_indices(s);
    ConvexWitness w = detail::with_kernel(s, [&](auto k) {
        return largest_impl(k, order, static_cast<int>(s.size()), 0);
    });
    w.trace.push_back({"oracle-dp", "{\"size\":" + std::to_string(w.size) + "}"});
    if (static_cast<int>(s.size()) <= exhaustive_cutoff()) {
        const int brute = largest_convex_subset_exhaustive(s);
        if (brute != w.size)
            throw std::logic_error("largest_convex_subset: DP disagrees with enumeration");
        w.trace.push_back({"oracle-crosscheck", "{\"exhaustive\":" + std::to_string(brute) + "}"});
    }
    return w;
}

std::optional<ConvexWitness> contains_convex_ngon(const PointSet& s, int n) {
    if (n < 3) throw std::invalid_argument("contains_convex_ngon requires n >= 3");
    if (static_cast<int>(s.size()) < n) return std::nullopt;
    const std::vector<int> order = sorted_indices(s);
    ConvexWitness w = detail::with_kernel(s, [&](auto k) {
        return largest_impl(k, order, static_cast<int>(s.size()), n);
    });
    if (w.size < n) return std::nullopt;
    w.indices.resize(n);  // any subset of a convex-position set stays convex
    w.size = n;
    w.trace.push_back({"oracle-ngon", "{\"n\":" + std::to_string(n) + "}"});
    return w;
}

int largest_convex_subset_exhaustive(const PointSet& s) {
    const int n = static_cast<int>(s.size());
    if (n > 22) throw std::invalid_argument("exhaustive oracle limited to N <= 22");
    if (n <= 2) return n;
    const std::vector<int> order = sorted_indices(s);
    return detail::with_kernel(s, [&](auto k) {
        int best = 2;
        std::vector<int> members, hull;
        members.reserve(n);
        hull.reserve(2 * n + 1);
        const std::uint32_t full = (n >= 31) ? 0 : (std::uint32_t{1} << n);
        for (std::uint32_t mask = 1; mask < full; ++mask) {
            if (std::popcount(mask) <= best) continue;
            members.clear();
            for (int i = 0; i < n; ++i)
                if (mask & (std::uint32_t{1} << i)) members.push_back(order[i]);
            if (subset_convex(k, members, hull)) best = static_cast<int>(members.size());
        }
        return best;
    });
}

bool verify_witness(const PointSet& s, const ConvexWitness& w) {
    if (w.size != static_cast<int>(w.indices.size())) return false;
    std::vector<int> sorted = w.indices;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= static_cast<int>(s.size())) return false;
        if (i > 0 && sorted[i] == sorted[i - 1]) return false;
    }
    return is_convex_position(s, w.indices);
}

}  // namespace espoints
