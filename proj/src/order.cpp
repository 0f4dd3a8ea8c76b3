#include "espoints/order.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace espoints {

bool precedes(const Point& p, const Point& q, const Segment& base) {
    if (p == q) throw std::invalid_argument("precedes: p and q must differ");
    const Orientation o = orientation(base.a, base.b, p);
    if (o == Orientation::Collinear) {
        // degenerate triangle; closed hull is the covering segment
        const Point* lo = &base.a;
        const Point* hi = &base.a;
        for (const Point* t : {&base.b, &p}) {
            if (lex_less(*t, *lo)) lo = t;
            if (lex_less(*hi, *t)) hi = t;
        }
        const std::array<Point, 2> seg{*lo, *hi};
        return point_in_convex_polygon(q, seg, false);
    }
    std::array<Point, 3> tri;
    if (o == Orientation::CounterClockwise)
        tri = {base.a, base.b, p};
    else
        tri = {base.b, base.a, p};
    return point_in_convex_polygon(q, tri, false);
}

RegionOrder::RegionOrder(const PointSet& s, Segment base, std::vector<int> elements)
    : set_(&s), base_(std::move(base)), elements_(std::move(elements)) {
    const int m = size();
    comp_.assign(static_cast<std::size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            comp_[static_cast<std::size_t>(i) * m + j] =
                precedes(s[elements_[i]], s[elements_[j]], base_) ? 1 : 0;
        }
    }
}

bool RegionOrder::verify_partial_order() const {
    const int m = size();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            if (less(i, j) && less(j, i)) return false;
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (!less(i, j)) continue;
            for (int k = 0; k < m; ++k)
                if (less(j, k) && !less(i, k)) return false;
        }
    return true;
}

namespace {

// level[v] = length of the longest chain ending at v. Processing order by
// predecessor count is topological: a predecessor's predecessors are a
// strict subset of its successor's.
std::vector<int> mirsky_level_of(const RegionOrder& order) {
    const int m = order.size();
    std::vector<int> pred_count(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (j != i && order.less(j, i)) ++pred_count[i];
    std::vector<int> topo(m);
    for (int i = 0; i < m; ++i) topo[i] = i;
    std::sort(topo.begin(), topo.end(),
              [&](int a, int b) { return pred_count[a] < pred_count[b]; });
    std::vector<int> level(m, 1);
    for (int v : topo)
        for (int u = 0; u < m; ++u)
            if (u != v && order.less(u, v)) level[v] = std::max(level[v], level[u] + 1);
    return level;
}

BigInt int_pow(const BigInt& base, unsigned exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

}  // namespace

std::vector<std::vector<int>> mirsky_levels(const RegionOrder& order) {
    const std::vector<int> level = mirsky_level_of(order);
    const int depth = level.empty() ? 0 : *std::max_element(level.begin(), level.end());
    std::vector<std::vector<int>> out(depth);
    for (int i = 0; i < order.size(); ++i)
        out[level[i] - 1].push_back(order.elements()[i]);
    return out;
}

ChainAntichain longest_chain(const RegionOrder& order) {
    const int m = order.size();
    ChainAntichain result;
    result.kind = ChainKind::Chain;
    if (m == 0) return result;
    const std::vector<int> level = mirsky_level_of(order);
    int cur = static_cast<int>(
        std::max_element(level.begin(), level.end()) - level.begin());
    std::vector<int> chain{cur};
    while (level[cur] > 1) {
        int next = -1;
        for (int u = 0; u < m; ++u) {
            if (u != cur && order.less(u, cur) && level[u] == level[cur] - 1) {
                next = u;
                break;
            }
        }
        if (next < 0) throw std::logic_error("mirsky chain reconstruction failed");
        chain.push_back(next);
        cur = next;
    }
    std::reverse(chain.begin(), chain.end());
    result.members.reserve(chain.size());
    for (int pos : chain) result.members.push_back(order.elements()[pos]);
    return result;
}

ChainAntichain dilworth_split(const RegionOrder& order, const Rational& alpha) {
    if (alpha <= 0 || alpha >= 1)
        throw std::invalid_argument("dilworth_split: alpha must lie in (0, 1)");
    const int m = order.size();
    ChainAntichain chain = longest_chain(order);
    chain.alpha_used = alpha;
    if (m <= 1) return chain;

    const BigInt a = numerator(alpha);
    const BigInt b = denominator(alpha);
    if (b > 4096) throw std::invalid_argument("dilworth_split: alpha denominator too large");
    const unsigned bu = b.convert_to<unsigned>();
    const unsigned au = a.convert_to<unsigned>();
    const BigInt mexp = int_pow(BigInt(m), bu - au);  // m^(b-a)
    const BigInt lexp = int_pow(BigInt(chain.size()), bu);
    if (lexp >= mexp) return chain;  // L >= m^(1-alpha)

    std::vector<std::vector<int>> levels = mirsky_levels(order);
    std::size_t widest = 0;
    for (std::size_t i = 1; i < levels.size(); ++i)
        if (levels[i].size() > levels[widest].size()) widest = i;
    ChainAntichain anti;
    anti.kind = ChainKind::Antichain;
    anti.members = levels[widest];
    anti.alpha_used = alpha;
    // guaranteed: widest level >= ceil(m / L) > m^alpha when the chain fails
    const BigInt aexp = int_pow(BigInt(anti.size()), bu);
    if (aexp < int_pow(BigInt(m), au))
        throw std::logic_error("dilworth_split: antichain bound violated");
    return anti;
}

}  // namespace espoints
