#include "espoints/pipeline.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "espoints/errors.hpp"

namespace espoints {

namespace {

int ceil_root(long long value, int power) {
    if (value <= 1) return 1;
    int r = 1;
    auto pow_ok = [&](long long base) {
        long long acc = 1;
        for (int i = 0; i < power; ++i) {
            acc *= base;
            if (acc >= value) return true;
        }
        return acc >= value;
    };
    while (!pow_ok(r)) ++r;
    return r;
}

int floor_log2(int n) { return std::bit_width(static_cast<unsigned>(n)) - 1; }
int ceil_log2(int n) { return n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1)); }

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ']';
    return os.str();
}

void push_step(std::vector<TraceStep>* trace, std::string step, std::string detail) {
    if (trace) trace->push_back(TraceStep{std::move(step), std::move(detail)});
}

}  // namespace

bool PipelineParams::meets_strict_threshold(const BigInt& n_points) const {
    if (n_points <= 0) return false;
    const unsigned long long exp = strict_size_exponent.convert_to<unsigned long long>();
    return boost::multiprecision::msb(n_points) >= exp;
}

Rational PipelineParams::region_fraction_threshold(const BigInt& n_points) const {
    BigInt denom = 1;
    denom <<= static_cast<unsigned>(region_fraction_exponent) * static_cast<unsigned>(k);
    return Rational(n_points, denom);
}

PipelineParams params_for(int n, ExtractMode mode) {
    if (n < 3) throw std::invalid_argument("params_for requires n >= 3");
    PipelineParams p;
    p.n = n;
    p.mode = mode;
    p.k = ceil_root(static_cast<long long>(n) * n, 3);
    p.cap_size = p.k + 3;
    p.t = 1;
    while (8LL * p.t * p.t * p.t < n) ++p.t;
    p.rounds = ceil_root(n, 3);
    p.alpha = Rational(3 * floor_log2(n), ceil_root(n, 3));
    if (p.alpha >= 1) {
        p.alpha = Rational(1, 2);
        p.alpha_clamped = true;
    }
    for (int i = 1; i <= p.rounds; ++i) {
        PipelineParams::Round r;
        r.left_target = i * p.k;
        r.right_target = std::max(2, n - i * p.k + p.k);
        r.threshold = cupcap_threshold(r.left_target, r.right_target).value;
        p.schedule.push_back(std::move(r));
    }
    p.strict_size_exponent = BigInt(n) + BigInt(6) * p.k * ceil_log2(n);
    return p;
}

std::vector<SupportRegion> support_of(const PointSet& s, const CupCap& x) {
    const int kappa = x.length();
    if (kappa < 4) throw std::invalid_argument("support_of requires |X| >= 4");

    const bool reflect = (x.kind == CupCapKind::Cup);
    PointSet reflected;
    const PointSet* frame = &s;
    std::vector<int> xs = x.indices;
    if (reflect) {
        reflected = s.reflected_y();
        frame = &reflected;
        // reflection flips ties between equal-x points; restore canonical order
        std::sort(xs.begin(), xs.end(),
                  [&](int a, int b) { return lex_less((*frame)[a], (*frame)[b]); });
    }

    std::vector<SupportRegion> regions;
    regions.reserve(kappa - 1);
    for (int i = 1; i <= kappa - 1; ++i) {
        SupportRegion r;
        r.region_index = i;
        r.x_prev = (i >= 2) ? xs[i - 2] : xs[kappa - 1];  // x_0 wraps to x_kappa
        r.x_left = xs[i - 1];
        r.x_right = xs[i];
        r.x_next = (i + 2 <= kappa) ? xs[i + 1] : xs[0];  // x_(kappa+1) wraps to x_1
        r.has_base = (i >= 2 && i <= kappa - 2);
        regions.push_back(std::move(r));
    }

    std::vector<bool> in_x(s.size(), false);
    for (int idx : xs) in_x[idx] = true;

    detail::with_kernel(*frame, [&](auto k) {
        for (int q = 0; q < static_cast<int>(frame->size()); ++q) {
            if (in_x[q]) continue;
            int hits = 0;
            for (SupportRegion& r : regions) {
                if (k.orient(r.x_left, r.x_right, q) > 0 &&
                    k.orient(r.x_prev, r.x_left, q) < 0 &&
                    k.orient(r.x_right, r.x_next, q) < 0) {
                    r.members.push_back(q);
                    ++hits;
                }
            }
            if (hits > 1)
                throw std::logic_error("support_of: point assigned to two regions");
        }
    });
    return regions;
}

namespace {

struct CandidateScore {
    BigInt min_occ = -1;
    std::vector<SupportRegion> regions;
};

CandidateScore score_candidate(const PointSet& s, const CupCap& cand) {
    CandidateScore out;
    out.regions = support_of(s, cand);
    BigInt min_occ = -1;
    for (const SupportRegion& r : out.regions) {
        const BigInt occ = static_cast<long long>(r.members.size());
        if (min_occ < 0 || occ < min_occ) min_occ = occ;
    }
    out.min_occ = min_occ < 0 ? 0 : min_occ;
    return out;
}

void add_windows(std::vector<std::vector<int>>& cands, const CupCap& chain, int kappa,
                 int max_windows) {
    const int len = chain.length();
    if (len < kappa) return;
    const int starts = len - kappa + 1;
    std::vector<int> offsets;
    if (starts <= max_windows) {
        for (int o = 0; o < starts; ++o) offsets.push_back(o);
    } else {
        for (int w = 0; w < max_windows; ++w)
            offsets.push_back(static_cast<int>(
                static_cast<long long>(w) * (starts - 1) / (max_windows - 1)));
    }
    for (int o : offsets) {
        std::vector<int> idx(chain.indices.begin() + o, chain.indices.begin() + o + kappa);
        cands.push_back(std::move(idx));
    }
    if (len > kappa) {
        // evenly spread subsequence; wider support regions than any window
        std::vector<int> spread;
        for (int w = 0; w < kappa; ++w)
            spread.push_back(
                chain.indices[static_cast<long long>(w) * (len - 1) / (kappa - 1)]);
        cands.push_back(std::move(spread));
    }
}

}  // namespace

std::optional<FractionalCapResult> find_fractional_cap(const PointSet& s, int k,
                                                       const Rational& fraction_threshold,
                                                       ExtractMode mode,
                                                       std::uint64_t seed) {
    const int kappa = k + 3;
    if (kappa < 4) throw std::invalid_argument("find_fractional_cap requires k >= 1");
    if (kappa > static_cast<int>(s.size())) return std::nullopt;

    std::vector<std::vector<int>> cand_indices;
    const CupCap gcup = longest_cup(s);
    const CupCap gcap = longest_cap(s);
    add_windows(cand_indices, gcap, kappa, 8);
    add_windows(cand_indices, gcup, kappa, 8);

    // seeded restarts on subsamples widen the pool when the global chains
    // give poorly occupied supports
    std::vector<int> pool(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) pool[i] = static_cast<int>(i);
    constexpr int kRestarts = 2;
    for (int r = 0; r < kRestarts; ++r) {
        const std::size_t take =
            std::min(s.size(), std::max<std::size_t>(4 * kappa, s.size() / 2));
        if (take < static_cast<std::size_t>(kappa) || take == s.size()) break;
        std::mt19937_64 rng(seed ^ (0xc2b2ae3d27d4eb4fULL + r));
        for (std::size_t i = 0; i < take; ++i) {
            const std::size_t j = i + rng() % (pool.size() - i);
            std::swap(pool[i], pool[j]);
        }
        std::vector<Point> sub_pts;
        std::vector<int> back(take);
        sub_pts.reserve(take);
        for (std::size_t i = 0; i < take; ++i) {
            sub_pts.push_back(s[pool[i]]);
            back[i] = pool[i];
        }
        const PointSet sub(std::move(sub_pts));
        for (CupCap chain : {longest_cap(sub), longest_cup(sub)}) {
            for (int& idx : chain.indices) idx = back[idx];
            // subsample order may differ from the full-set canonical order
            // only by identical coordinates, so remapping keeps the chain
            add_windows(cand_indices, chain, kappa, 4);
        }
    }

    std::set<std::vector<int>> seen;
    std::optional<FractionalCapResult> best;
    int tried = 0;
    for (auto& idx : cand_indices) {
        if (!seen.insert(idx).second) continue;
        CupCap cand;
        cand.indices = idx;
        cand.kind = is_cup(s, idx) ? CupCapKind::Cup : CupCapKind::Cap;
        CandidateScore sc = score_candidate(s, cand);
        ++tried;
        if (!best || sc.min_occ > best->min_occupancy) {
            FractionalCapResult r;
            r.x = std::move(cand);
            r.regions = std::move(sc.regions);
            r.min_occupancy = sc.min_occ;
            best = std::move(r);
        }
    }
    if (!best) return std::nullopt;
    best->candidates_tried = tried;
    best->meets_threshold = Rational(best->min_occupancy) >= fraction_threshold;
    if (mode == ExtractMode::Strict && !best->meets_threshold) return std::nullopt;
    return best;
}

std::vector<RegionSplit> dilworth_regions(const PointSet& frame,
                                          const std::vector<SupportRegion>& regions,
                                          const Rational& alpha) {
    constexpr std::size_t kMaxOrderElements = 1024;  // desk-scale budget
    std::vector<RegionSplit> out;
    for (const SupportRegion& r : regions) {
        if (!r.has_base || r.members.empty()) continue;
        std::vector<int> members = r.members;
        if (members.size() > kMaxOrderElements) members.resize(kMaxOrderElements);
        RegionOrder order(frame, Segment{frame[r.x_prev], frame[r.x_next]},
                          std::move(members));
        RegionSplit split;
        split.region_index = r.region_index;
        split.split = dilworth_split(order, alpha);
        out.push_back(std::move(split));
    }
    return out;
}

SidedCap make_sided_cap(const PointSet& frame, CapSide side, int region_index, int anchor,
                        std::vector<int> indices) {
    SidedCap cap;
    cap.side = side;
    cap.region_index = region_index;
    cap.anchor = anchor;
    cap.indices = std::move(indices);
    std::vector<int> with_anchor = cap.indices;
    with_anchor.push_back(anchor);
    if (!is_convex_position(frame, with_anchor))
        throw VerificationFailed("sided cap is not convex with its anchor");
    return cap;
}

ConvexWitness glue(const PointSet& frame, const SidedCap& left, const SidedCap& right) {
    if (left.side != CapSide::Left || right.side != CapSide::Right)
        throw std::invalid_argument("glue expects a left-cap and a right-cap");
    if (!left.indices.empty() && right.region_index != left.region_index + 1)
        throw std::invalid_argument("glue expects caps from adjacent regions");
    ConvexWitness w;
    w.indices = left.indices;
    w.indices.insert(w.indices.end(), right.indices.begin(), right.indices.end());
    w.size = static_cast<int>(w.indices.size());
    if (!is_convex_position(frame, w.indices))
        throw VerificationFailed("glued caps are not in convex position");
    w.trace.push_back(
        {"glue", "{\"left\":" + std::to_string(left.indices.size()) +
                     ",\"right\":" + std::to_string(right.indices.size()) +
                     ",\"regions\":[" + std::to_string(left.region_index) + "," +
                     std::to_string(right.region_index) + "]}"});
    return w;
}

namespace {

PointSet subset_points(const PointSet& frame, const std::vector<int>& members) {
    std::vector<Point> pts;
    pts.reserve(members.size());
    for (int idx : members) pts.push_back(frame[idx]);
    return PointSet(std::move(pts));
}

std::vector<int> map_back(const std::vector<int>& local, const std::vector<int>& members) {
    std::vector<int> out;
    out.reserve(local.size());
    for (int idx : local) out.push_back(members[idx]);
    return out;
}

}  // namespace

std::optional<ConvexWitness> case1_assemble(const PointSet& frame,
                                            const std::vector<RegionSplit>& antichains,
                                            const PipelineParams& params,
                                            std::vector<TraceStep>* trace) {
    // greedy maximal independent set on the region path graph
    std::vector<const RegionSplit*> selected;
    int last = -1000;
    for (const RegionSplit& r : antichains) {
        if (r.region_index > last + 1) {
            selected.push_back(&r);
            last = r.region_index;
        }
    }
    if (static_cast<int>(selected.size()) < params.t) {
        push_step(trace, "case1-insufficient",
                  "{\"selected\":" + std::to_string(selected.size()) +
                      ",\"required\":" + std::to_string(params.t) + "}");
        return std::nullopt;
    }

    const int cap_target = ceil_root(8LL * params.n * params.n, 3);  // ceil(2 n^(2/3))
    std::vector<int> union_indices;
    std::vector<int> cap_sizes, used_regions;
    for (const RegionSplit* r : selected) {
        const std::vector<int>& members = r->split.members;
        const PointSet sub = subset_points(frame, members);
        const CupCap cup = longest_cup(sub);
        if (cup.length() >= params.n) {
            ConvexWitness w;
            w.indices = map_back(cup.indices, members);
            w.indices.resize(params.n);
            w.size = params.n;
            push_step(trace, "case1-ncup",
                      "{\"region\":" + std::to_string(r->region_index) + "}");
            w.trace.push_back({"case1-ncup", join_ints(w.indices)});
            return w;
        }
        CupCap cap = longest_cap(sub);
        if (params.mode == ExtractMode::Strict && cap.length() < cap_target)
            return std::nullopt;  // schedule miss; unreachable above the size bound
        if (cap.length() < 2) continue;
        if (cap.length() > cap_target) cap.indices.resize(cap_target);
        std::vector<int> mapped = map_back(cap.indices, members);
        union_indices.insert(union_indices.end(), mapped.begin(), mapped.end());
        cap_sizes.push_back(static_cast<int>(mapped.size()));
        used_regions.push_back(r->region_index);
    }
    if (union_indices.empty()) return std::nullopt;

    std::sort(union_indices.begin(), union_indices.end(), [&](int a, int b) {
        return lex_less(frame[a], frame[b]);
    });
    if (!is_cap(frame, union_indices) || !is_convex_position(frame, union_indices))
        throw VerificationFailed("case 1 union of antichain caps is not a cap");

    ConvexWitness w;
    w.indices = std::move(union_indices);
    w.size = static_cast<int>(w.indices.size());
    push_step(trace, "case1-union",
              "{\"regions\":" + join_ints(used_regions) +
                  ",\"cap_sizes\":" + join_ints(cap_sizes) +
                  ",\"size\":" + std::to_string(w.size) + "}");
    w.trace.push_back({"case1", join_ints(w.indices)});
    return w;
}

namespace {

// Left/right-cap classification of one triple of a chain region: the triple
// is a left-cap iff it is convex together with the region's right anchor.
bool quad_convex(const PointSet& frame, int a, int b, int c, int d) {
    std::array<int, 4> q{a, b, c, d};
    std::sort(q.begin(), q.end(),
              [&](int u, int v) { return lex_less(frame[u], frame[v]); });
    const Point& p0 = frame[q[0]];
    const Point& p1 = frame[q[1]];
    const Point& p2 = frame[q[2]];
    const Point& p3 = frame[q[3]];
    auto inside = [](const Point& p, const Point& u, const Point& v, const Point& w) {
        const Orientation o1 = orientation(u, v, p);
        const Orientation o2 = orientation(v, w, p);
        const Orientation o3 = orientation(w, u, p);
        return o1 == o2 && o2 == o3 && o1 != Orientation::Collinear;
    };
    // the lex extremes are always hull vertices; only the middle two can sink
    return !inside(p1, p0, p2, p3) && !inside(p2, p0, p1, p3);
}

struct RegionCaps {
    SidedCap left;
    SidedCap right;
};

// Longest left-cap and right-cap of one chain region via the transitive
// clique search on the cap-side coloring.
RegionCaps region_caps(const PointSet& frame, const SupportRegion& region,
                       const std::vector<int>& chain_members) {
    constexpr std::size_t kMaxCliqueElements = 128;  // cubic DP budget
    std::vector<int> members = chain_members;
    if (members.size() > kMaxCliqueElements) {
        std::vector<int> spaced;
        for (std::size_t w = 0; w < kMaxCliqueElements; ++w)
            spaced.push_back(members[w * (members.size() - 1) / (kMaxCliqueElements - 1)]);
        members = std::move(spaced);
    }
    const int left_anchor = region.x_right;
    const int right_anchor = region.x_left;
    TransitiveColoring coloring;
    coloring.n_elements = static_cast<int>(members.size());
    coloring.color_of = [&frame, &members, left_anchor](int i, int j, int k) {
        return quad_convex(frame, members[i], members[j], members[k], left_anchor)
                   ? TripleColor::Red
                   : TripleColor::Blue;
    };
    const CliqueSearch found = longest_monochromatic(coloring);
    RegionCaps out;
    out.left = make_sided_cap(frame, CapSide::Left, region.region_index, left_anchor,
                              map_back(found.best_red, members));
    out.right = make_sided_cap(frame, CapSide::Right, region.region_index, right_anchor,
                               map_back(found.best_blue, members));
    return out;
}

}  // namespace

std::optional<ConvexWitness> case2_iterate(const PointSet& frame,
                                           const std::vector<RegionSplit>& chains,
                                           const std::vector<SupportRegion>& regions,
                                           const PipelineParams& params,
                                           std::vector<TraceStep>* trace) {
    if (chains.empty()) return std::nullopt;
    // longest run of consecutive region indices (leftmost on ties)
    std::size_t run_begin = 0, run_len = 1, best_begin = 0, best_len = 1;
    for (std::size_t i = 1; i < chains.size(); ++i) {
        if (chains[i].region_index == chains[i - 1].region_index + 1) {
            ++run_len;
        } else {
            run_begin = i;
            run_len = 1;
        }
        if (run_len > best_len) {
            best_len = run_len;
            best_begin = run_begin;
        }
    }
    if (params.mode == ExtractMode::Strict && static_cast<int>(best_len) < params.rounds)
        return std::nullopt;

    auto region_of = [&](int index) -> const SupportRegion& {
        for (const SupportRegion& r : regions)
            if (r.region_index == index) return r;
        throw std::logic_error("case2_iterate: unknown region index");
    };

    std::optional<ConvexWitness> best;
    auto consider = [&](ConvexWitness w) {
        if (!best || w.size > best->size) best = std::move(w);
    };

    std::optional<SidedCap> carried;
    const std::size_t rounds =
        std::min<std::size_t>(best_len, static_cast<std::size_t>(params.rounds));
    for (std::size_t i = 0; i < rounds; ++i) {
        const RegionSplit& split = chains[best_begin + i];
        const SupportRegion& region = region_of(split.region_index);
        RegionCaps caps = region_caps(frame, region, split.split.members);
        push_step(trace, "case2-region",
                  "{\"round\":" + std::to_string(i + 1) +
                      ",\"region\":" + std::to_string(region.region_index) +
                      ",\"chain\":" + std::to_string(split.split.members.size()) +
                      ",\"left\":" + std::to_string(caps.left.size()) +
                      ",\"right\":" + std::to_string(caps.right.size()) + "}");

        const PipelineParams::Round& round = params.schedule[i];
        if (params.mode == ExtractMode::Strict) {
            if (caps.right.size() >= round.right_target) {
                SidedCap right = caps.right;
                right.indices.resize(round.right_target);
                SidedCap left = carried ? *carried
                                        : make_sided_cap(frame, CapSide::Left,
                                                         region.region_index - 1,
                                                         region.x_left, {});
                return glue(frame, left, right);
            }
            if (caps.left.size() < round.left_target) return std::nullopt;  // miss
            carried = caps.left;
            carried->indices.resize(round.left_target);
            continue;
        }

        // best-effort: keep every verified structure and carry the best left
        ConvexWitness right_alone;
        right_alone.indices = caps.right.indices;
        right_alone.size = caps.right.size();
        right_alone.trace.push_back({"case2-right", join_ints(right_alone.indices)});
        consider(std::move(right_alone));
        ConvexWitness left_alone;
        left_alone.indices = caps.left.indices;
        left_alone.size = caps.left.size();
        left_alone.trace.push_back({"case2-left", join_ints(left_alone.indices)});
        consider(std::move(left_alone));
        if (carried && !carried->indices.empty() && !caps.right.indices.empty()) {
            ConvexWitness glued = glue(frame, *carried, caps.right);
            push_step(trace, "case2-glue",
                      "{\"round\":" + std::to_string(i + 1) +
                          ",\"size\":" + std::to_string(glued.size) + "}");
            consider(std::move(glued));
        }
        carried = caps.left;
    }

    if (params.mode == ExtractMode::Strict) {
        // every round grew the left-cap; the last one has >= rounds*K >= n members
        if (!carried || carried->size() < params.n)
            throw std::logic_error("strict schedule completed without an n-left-cap");
        ConvexWitness w;
        w.indices = carried->indices;
        w.indices.resize(params.n);
        w.size = params.n;
        w.trace.push_back({"case2-nleftcap", join_ints(w.indices)});
        return w;
    }
    if (best) {
        push_step(trace, "case2-best", "{\"size\":" + std::to_string(best->size) + "}");
    }
    return best;
}

ConvexWitness extract(const PointSet& s, int n, ExtractMode mode, std::uint64_t seed) {
    if (!is_general_position(s))
        throw std::invalid_argument("extract requires a general-position point set");
    PipelineParams params = params_for(n, mode);
    const BigInt size_n = static_cast<long long>(s.size());

    std::vector<TraceStep> trace;
    {
        std::ostringstream os;
        os << "{\"n\":" << n << ",\"k\":" << params.k << ",\"t\":" << params.t
           << ",\"rounds\":" << params.rounds << ",\"alpha\":\"" << params.alpha
           << (params.alpha_clamped ? "\",\"alpha_clamped\":true" : "\"")
           << ",\"mode\":\"" << (mode == ExtractMode::Strict ? "strict" : "best-effort")
           << "\",\"seed\":" << seed << "}";
        trace.push_back({"params", os.str()});
    }

    if (mode == ExtractMode::Strict && !params.meets_strict_threshold(size_n)) {
        std::ostringstream os;
        os << "strict extraction requires at least 2^" << params.strict_size_exponent
           << " points, got " << size_n;
        throw ThresholdUnmet(os.str());
    }

    std::vector<ConvexWitness> candidates;
    std::vector<std::string> rules;

    if (mode == ExtractMode::BestEffort) {
        CupCap cup = longest_cup(s);
        CupCap cap = longest_cap(s);
        ConvexWitness floor_w;
        const CupCap& pick = cup.length() >= cap.length() ? cup : cap;
        floor_w.indices = pick.indices;
        floor_w.size = pick.length();
        floor_w.trace.push_back(
            {"floor", std::string("{\"kind\":\"") +
                          (pick.kind == CupCapKind::Cup ? "cup" : "cap") +
                          "\",\"size\":" + std::to_string(floor_w.size) + "}"});
        push_step(&trace, "floor",
                  "{\"cup\":" + std::to_string(cup.length()) +
                      ",\"cap\":" + std::to_string(cap.length()) + "}");
        candidates.push_back(std::move(floor_w));
        rules.push_back("floor");
    }

    auto fractional = find_fractional_cap(
        s, params.k, params.region_fraction_threshold(size_n), mode, seed);
    if (fractional) {
        {
            std::ostringstream os;
            os << "{\"kind\":\"" << (fractional->x.kind == CupCapKind::Cup ? "cup" : "cap")
               << "\",\"indices\":" << join_ints(fractional->x.indices)
               << ",\"min_occupancy\":" << fractional->min_occupancy
               << ",\"meets_threshold\":" << (fractional->meets_threshold ? "true" : "false")
               << ",\"occupancies\":[";
            for (std::size_t i = 0; i < fractional->regions.size(); ++i) {
                if (i) os << ',';
                os << fractional->regions[i].members.size();
            }
            os << "]}";
            push_step(&trace, "fractional-cap", os.str());
        }

        const bool reflected = fractional->x.kind == CupCapKind::Cup;
        const PointSet frame = reflected ? s.reflected_y() : s;
        push_step(&trace, "frame", reflected ? "{\"reflected\":true}" : "{\"reflected\":false}");

        std::vector<RegionSplit> splits =
            dilworth_regions(frame, fractional->regions, params.alpha);
        {
            std::ostringstream os;
            os << '[';
            for (std::size_t i = 0; i < splits.size(); ++i) {
                if (i) os << ',';
                os << "{\"region\":" << splits[i].region_index << ",\"tag\":\""
                   << (splits[i].split.kind == ChainKind::Chain ? "chain" : "antichain")
                   << "\",\"size\":" << splits[i].split.size() << "}";
            }
            os << ']';
            push_step(&trace, "dilworth", os.str());
        }

        std::vector<RegionSplit> antichains, chains;
        for (const RegionSplit& r : splits)
            (r.split.kind == ChainKind::Antichain ? antichains : chains).push_back(r);

        std::optional<ConvexWitness> case_result;
        std::string case_rule;
        auto w1 = case1_assemble(frame, antichains, params, &trace);
        if (w1) {
            push_step(&trace, "case", "{\"taken\":1}");
            case_result = std::move(w1);
            case_rule = "case1";
        }
        if (!case_result || case_result->size < n) {
            auto w2 = case2_iterate(frame, chains, fractional->regions, params, &trace);
            if (w2 && (!case_result || w2->size > case_result->size)) {
                push_step(&trace, "case", "{\"taken\":2}");
                case_result = std::move(w2);
                case_rule = "case2";
            }
        }
        if (case_result) {
            candidates.push_back(std::move(*case_result));
            rules.push_back(case_rule);
        }
    } else {
        push_step(&trace, "fractional-cap", "{\"found\":false}");
        if (mode == ExtractMode::Strict)
            throw std::logic_error("strict fractional cap missing above the size bound");
    }

    if (candidates.empty())
        throw std::logic_error("extraction produced no candidate witness");
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i)
        if (candidates[i].size > candidates[best].size) best = i;

    ConvexWitness result = std::move(candidates[best]);
    for (TraceStep& step : result.trace) trace.push_back(std::move(step));
    push_step(&trace, "result",
              "{\"rule\":\"" + rules[best] + "\",\"size\":" + std::to_string(result.size) +
                  ",\"indices\":" + join_ints(result.indices) + "}");
    result.trace = std::move(trace);
    if (!verify_witness(s, result))
        throw std::logic_error("extraction produced an unverifiable witness");
    return result;
}

}  // namespace espoints
