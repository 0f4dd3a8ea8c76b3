#include "espoints/cupcap.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "espoints/errors.hpp"

namespace espoints {

namespace {

template <class Kernel>
bool is_chain(const Kernel& k, std::span<const int> indices, int turn) {
    for (std::size_t i = 1; i < indices.size(); ++i) {
        if (!k.lex_less(indices[i - 1], indices[i]))
            throw std::invalid_argument("cup/cap selection must be in canonical x-order");
    }
    for (std::size_t i = 2; i < indices.size(); ++i) {
        if (k.orient(indices[i - 2], indices[i - 1], indices[i]) != turn) return false;
    }
    return true;
}

// Longest consistently-turning chain over the canonical order. For each
// middle vertex the incoming and outgoing edges are sorted by slope and
// merged, giving O(N^2 log N) overall instead of the cubic pair-times-
// predecessor scan.
template <class Kernel>
CupCap longest_chain(const Kernel& k, int n, const std::vector<int>& ord, bool cup) {
    const int turn = cup ? +1 : -1;
    const CupCapKind kind = cup ? CupCapKind::Cup : CupCapKind::Cap;
    if (n <= 2) {
        std::vector<int> all(ord.begin(), ord.end());
        return CupCap{kind, std::move(all)};
    }
    if (n > 60000) throw std::invalid_argument("longest_cup/cap: point set too large");

    std::vector<std::uint16_t> len(static_cast<std::size_t>(n) * n, 2);
    auto at = [&](int i, int j) -> std::uint16_t& {
        return len[static_cast<std::size_t>(i) * n + j];
    };

    std::vector<int> in, out;
    for (int j = 1; j + 1 < n; ++j) {
        in.clear();
        out.clear();
        for (int i = 0; i < j; ++i) in.push_back(i);
        for (int t = j + 1; t < n; ++t) out.push_back(t);
        // slope order around the middle vertex, reversed for caps
        std::sort(in.begin(), in.end(), [&](int a, int b) {
            return turn * k.cross(ord[a], ord[j], ord[b], ord[j]) > 0;
        });
        std::sort(out.begin(), out.end(), [&](int a, int b) {
            return turn * k.cross(ord[j], ord[a], ord[j], ord[b]) > 0;
        });
        std::size_t ptr = 0;
        std::uint16_t best = 0;
        for (int t : out) {
            while (ptr < in.size() &&
                   turn * k.orient(ord[in[ptr]], ord[j], ord[t]) > 0) {
                best = std::max(best, at(in[ptr], j));
                ++ptr;
            }
            if (best > 0) at(j, t) = static_cast<std::uint16_t>(best + 1);
        }
    }

    int bj = 0, bk = 1;
    std::uint16_t blen = 2;
    for (int j = 0; j < n; ++j)
        for (int t = j + 1; t < n; ++t)
            if (at(j, t) > blen) {
                blen = at(j, t);
                bj = j;
                bk = t;
            }

    std::vector<int> chain{bk, bj};
    while (at(bj, bk) > 2) {
        const std::uint16_t want = static_cast<std::uint16_t>(at(bj, bk) - 1);
        int found = -1;
        for (int i = 0; i < bj; ++i) {
            if (at(i, bj) == want && turn * k.orient(ord[i], ord[bj], ord[bk]) > 0) {
                found = i;
                break;
            }
        }
        if (found < 0) throw std::logic_error("cup/cap DP reconstruction failed");
        chain.push_back(found);
        bk = bj;
        bj = found;
    }
    std::reverse(chain.begin(), chain.end());
    for (int& c : chain) c = ord[c];
    return CupCap{kind, std::move(chain)};
}

}  // namespace

bool is_cup(const PointSet& s, std::span<const int> indices) {
    return detail::with_kernel(s, [&](auto k) { return is_chain(k, indices, +1); });
}

bool is_cap(const PointSet& s, std::span<const int> indices) {
    return detail::with_kernel(s, [&](auto k) { return is_chain(k, indices, -1); });
}

CupCap longest_cup(const PointSet& s) {
    std::vector<int> ord = sorted_indices(s);
    return detail::with_kernel(s, [&](auto k) {
        return longest_chain(k, static_cast<int>(s.size()), ord, true);
    });
}

CupCap longest_cap(const PointSet& s) {
    std::vector<int> ord = sorted_indices(s);
    return detail::with_kernel(s, [&](auto k) {
        return longest_chain(k, static_cast<int>(s.size()), ord, false);
    });
}

CupCapThreshold cupcap_threshold(int k, int l) {
    if (k < 2 || l < 2) throw std::invalid_argument("cupcap_threshold requires k, l >= 2");
    const int n = k + l - 4;
    const int r = k - 2;
    BigInt value = 1;
    for (int i = 1; i <= r; ++i) {
        value *= n - r + i;
        value /= i;
    }
    value += 1;
    return CupCapThreshold{k, l, std::move(value)};
}

std::optional<CupCap> find_cup_or_cap(const PointSet& s, int k, int l) {
    if (k < 2 || l < 2) throw std::invalid_argument("find_cup_or_cap requires k, l >= 2");
    CupCap cup = longest_cup(s);
    if (cup.length() >= k) {
        cup.indices.resize(k);
        return cup;
    }
    CupCap cap = longest_cap(s);
    if (cap.length() >= l) {
        cap.indices.resize(l);
        return cap;
    }
    return std::nullopt;
}

namespace {

void sample_transitivity(const TransitiveColoring& c) {
    const int n = c.n_elements;
    if (n < 4) return;
    auto check = [&](int i, int j, int k, int l) {
        const TripleColor c1 = c.color_of(i, j, k);
        const TripleColor c2 = c.color_of(j, k, l);
        if (c1 != c2) return;
        if (c.color_of(i, j, l) != c1 || c.color_of(i, k, l) != c1)
            throw ContractViolation("triple coloring violates transitivity");
    };
    const long long total = static_cast<long long>(n) * (n - 1) * (n - 2) * (n - 3) / 24;
    constexpr long long kBudget = 10000;
    if (total <= kBudget) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    for (int l = k + 1; l < n; ++l) check(i, j, k, l);
        return;
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n));
    for (long long t = 0; t < kBudget; ++t) {
        int q[4];
        do {
            for (int& v : q) v = static_cast<int>(rng() % n);
            std::sort(q, q + 4);
        } while (q[0] == q[1] || q[1] == q[2] || q[2] == q[3]);
        check(q[0], q[1], q[2], q[3]);
    }
}

struct CliqueDP {
    int n;
    const TransitiveColoring* col;
    std::vector<std::uint16_t> red, blue;

    std::uint16_t& r(int i, int j) { return red[static_cast<std::size_t>(i) * n + j]; }
    std::uint16_t& b(int i, int j) { return blue[static_cast<std::size_t>(i) * n + j]; }

    explicit CliqueDP(const TransitiveColoring& c)
        : n(c.n_elements),
          col(&c),
          red(static_cast<std::size_t>(n) * n, 2),
          blue(static_cast<std::size_t>(n) * n, 2) {}

    // Fills the tables; stops early once a color reaches its target (0 = no
    // target). Returns true on early stop.
    bool run(int red_target, int blue_target) {
        for (int k = 2; k < n; ++k) {
            for (int j = 1; j < k; ++j) {
                std::uint16_t best_r = 0, best_b = 0;
                for (int i = 0; i < j; ++i) {
                    if (col->color_of(i, j, k) == TripleColor::Red)
                        best_r = std::max(best_r, r(i, j));
                    else
                        best_b = std::max(best_b, b(i, j));
                }
                if (best_r > 0) r(j, k) = static_cast<std::uint16_t>(best_r + 1);
                if (best_b > 0) b(j, k) = static_cast<std::uint16_t>(best_b + 1);
                if ((red_target > 0 && r(j, k) >= red_target) ||
                    (blue_target > 0 && b(j, k) >= blue_target))
                    return true;
            }
        }
        return false;
    }

    std::vector<int> reconstruct(TripleColor color, int j, int k) {
        auto& tab = color == TripleColor::Red ? red : blue;
        auto at = [&](int a, int c) { return tab[static_cast<std::size_t>(a) * n + c]; };
        std::vector<int> seq{k, j};
        while (at(j, k) > 2) {
            const std::uint16_t want = static_cast<std::uint16_t>(at(j, k) - 1);
            int found = -1;
            for (int i = 0; i < j; ++i) {
                if (at(i, j) == want && col->color_of(i, j, k) == color) {
                    found = i;
                    break;
                }
            }
            if (found < 0) throw std::logic_error("clique DP reconstruction failed");
            seq.push_back(found);
            k = j;
            j = found;
        }
        std::reverse(seq.begin(), seq.end());
        // consecutive triples certify the clique under the transitivity promise
        for (std::size_t t = 2; t < seq.size(); ++t) {
            if (col->color_of(seq[t - 2], seq[t - 1], seq[t]) != color)
                throw std::logic_error("clique certification failed");
        }
        return seq;
    }

    std::pair<int, std::pair<int, int>> best(TripleColor color) {
        auto& tab = color == TripleColor::Red ? red : blue;
        int bl = 0, bj = -1, bk = -1;
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const int v = tab[static_cast<std::size_t>(j) * n + k];
                if (v > bl) {
                    bl = v;
                    bj = j;
                    bk = k;
                }
            }
        return {bl, {bj, bk}};
    }
};

std::vector<int> trivial_elements(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace

CliqueSearch longest_monochromatic(const TransitiveColoring& coloring) {
    const int n = coloring.n_elements;
    if (n <= 2) return CliqueSearch{trivial_elements(n), trivial_elements(n)};
    if (n > 4096) throw std::invalid_argument("transitive coloring too large");
    CliqueDP dp(coloring);
    dp.run(0, 0);
    CliqueSearch out;
    auto [rl, rp] = dp.best(TripleColor::Red);
    auto [blen, bp] = dp.best(TripleColor::Blue);
    out.best_red = rl > 0 ? dp.reconstruct(TripleColor::Red, rp.first, rp.second)
                          : trivial_elements(std::min(n, 2));
    out.best_blue = blen > 0 ? dp.reconstruct(TripleColor::Blue, bp.first, bp.second)
                             : trivial_elements(std::min(n, 2));
    return out;
}

std::optional<CliqueResult> transitive_clique(const TransitiveColoring& coloring,
                                              int red_target, int blue_target) {
    if (red_target < 2 || blue_target < 2)
        throw std::invalid_argument("clique targets must be >= 2");
    const int n = coloring.n_elements;
    if (n > 4096) throw std::invalid_argument("transitive coloring too large");
    sample_transitivity(coloring);
    // size-2 cliques carry no triples, so any pair qualifies
    if (red_target == 2 && n >= 2) return CliqueResult{TripleColor::Red, {0, 1}};
    if (blue_target == 2 && n >= 2) return CliqueResult{TripleColor::Blue, {0, 1}};
    if (n < 3) return std::nullopt;
    CliqueDP dp(coloring);
    dp.run(red_target, blue_target);
    auto [rl, rp] = dp.best(TripleColor::Red);
    if (rl >= red_target) {
        auto seq = dp.reconstruct(TripleColor::Red, rp.first, rp.second);
        seq.resize(red_target);
        return CliqueResult{TripleColor::Red, std::move(seq)};
    }
    auto [bl, bp] = dp.best(TripleColor::Blue);
    if (bl >= blue_target) {
        auto seq = dp.reconstruct(TripleColor::Blue, bp.first, bp.second);
        seq.resize(blue_target);
        return CliqueResult{TripleColor::Blue, std::move(seq)};
    }
    return std::nullopt;
}

}  // namespace espoints
