// Command-line front end: generators, extraction, oracle queries, witness
// verification and SVG figures over the plain-text point-set format.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "espoints/constructions.hpp"
#include "espoints/cupcap.hpp"
#include "espoints/errors.hpp"
#include "espoints/geometry.hpp"
#include "espoints/io.hpp"
#include "espoints/oracle.hpp"
#include "espoints/pipeline.hpp"
#include "espoints/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitThreshold = 4;
constexpr int kExitVerify = 5;

using espoints::PointSet;

// exit 3 with the offending triple when the input is degenerate
int require_general_position(const PointSet& s) {
    const std::vector<int> bad = espoints::find_degenerate_triple(s);
    if (bad.empty()) return kExitOk;
    if (bad.size() == 3 && bad[1] == bad[2]) {
        std::cerr << "error: points " << bad[0] << " and " << bad[1] << " coincide\n";
    } else {
        std::cerr << "error: points " << bad[0] << ", " << bad[1] << ", " << bad[2]
                  << " are collinear (general position required)\n";
    }
    return kExitPrecondition;
}

struct GenOptions {
    std::string kind;
    int n = 0;
    int k = 0;
    int l = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::int64_t range = espoints::kSmallCoordLimit;
    std::string out;
};

int run_gen(const GenOptions& opt) {
    espoints::GeneratorSpec spec;
    if (opt.kind == "random") {
        if (!opt.seed_set) {
            std::cerr << "error: --kind random requires --seed (reproducibility)\n";
            return kExitUsage;
        }
        spec.kind = espoints::GeneratorKind::Random;
        spec.n = opt.n;
        spec.seed = opt.seed;
        spec.range = opt.range;
    } else if (opt.kind == "parabola") {
        spec.kind = espoints::GeneratorKind::Parabola;
        spec.n = opt.n;
    } else if (opt.kind == "cupcap-extremal") {
        if (opt.k < 2 || opt.l < 2) {
            std::cerr << "error: --kind cupcap-extremal requires --k and --l (>= 2)\n";
            return kExitUsage;
        }
        spec.kind = espoints::GeneratorKind::CupCapExtremal;
        spec.k = opt.k;
        spec.l = opt.l;
    } else if (opt.kind == "es-lower") {
        spec.kind = espoints::GeneratorKind::EsLower;
        spec.n = opt.n;
    } else {
        std::cerr << "error: unknown --kind '" << opt.kind << "'\n";
        return kExitUsage;
    }
    const PointSet s = espoints::generate(spec);
    const std::string meta = espoints::generator_metadata(spec);
    if (opt.out.empty()) {
        std::cout << espoints::serialize_pointset(s, meta);
        std::cerr << "generated " << s.size() << " points (" << meta << ")\n";
    } else {
        espoints::save_pointset(s, opt.out, meta);
        std::cout << "generated " << s.size() << " points (" << meta << ") -> " << opt.out
                  << "\n";
    }
    return kExitOk;
}

std::string params_from_trace(const espoints::ConvexWitness& w) {
    for (const espoints::TraceStep& st : w.trace)
        if (st.step == "params") return st.detail;
    return "";
}

std::string rule_from_trace(const espoints::ConvexWitness& w) {
    for (const espoints::TraceStep& st : w.trace) {
        if (st.step != "result") continue;
        const nlohmann::json j = nlohmann::json::parse(st.detail, nullptr, false);
        if (!j.is_discarded() && j.contains("rule")) return j["rule"].get<std::string>();
    }
    return "";
}

int run_extract(const std::string& in, int target, const std::string& mode_name,
                std::uint64_t seed, const std::string& trace_out) {
    const PointSet s = espoints::load_pointset(in);
    if (int rc = require_general_position(s)) return rc;
    const espoints::ExtractMode mode = mode_name == "strict"
                                           ? espoints::ExtractMode::Strict
                                           : espoints::ExtractMode::BestEffort;
    espoints::ConvexWitness w;
    try {
        w = espoints::extract(s, target, mode, seed);
    } catch (const espoints::ThresholdUnmet& e) {
        std::cerr << "threshold unmet: " << e.what() << "\n";
        return kExitThreshold;
    }
    if (!trace_out.empty()) {
        espoints::save_witness(espoints::make_witness_record(s, w, params_from_trace(w)),
                               trace_out);
    }
    const std::string rule = rule_from_trace(w);
    std::cout << "witness size " << w.size;
    if (!rule.empty()) std::cout << " (" << rule << ")";
    std::cout << "\n";
    return kExitOk;
}

int run_oracle(const std::string& in, std::optional<int> ngon, const std::string& out) {
    const PointSet s = espoints::load_pointset(in);
    if (int rc = require_general_position(s)) return rc;
    espoints::ConvexWitness w;
    if (ngon) {
        auto found = espoints::contains_convex_ngon(s, *ngon);
        if (!found) {
            std::cout << "NotFound: no " << *ngon << " points in convex position\n";
            return kExitOk;
        }
        w = std::move(*found);
        std::cout << "found " << w.size << "-gon:";
    } else {
        w = espoints::largest_convex_subset(s);
        std::cout << "largest convex subset " << w.size << ":";
    }
    for (int idx : w.indices) std::cout << ' ' << idx;
    std::cout << "\n";
    if (!out.empty()) espoints::save_witness(espoints::make_witness_record(s, w), out);
    return kExitOk;
}

int run_cupcap(const std::string& in, int k, int l) {
    const PointSet s = espoints::load_pointset(in);
    if (int rc = require_general_position(s)) return rc;
    auto found = espoints::find_cup_or_cap(s, k, l);
    if (!found) {
        std::cout << "NotFound: no " << k << "-cup and no " << l << "-cap\n";
        return kExitOk;
    }
    std::cout << (found->kind == espoints::CupCapKind::Cup ? "cup" : "cap") << " of "
              << found->length() << ":";
    for (int idx : found->indices) std::cout << ' ' << idx;
    std::cout << "\n";
    return kExitOk;
}

int run_verify(const std::string& points_path, const std::string& witness_path) {
    const PointSet s = espoints::load_pointset(points_path);
    const espoints::WitnessRecord rec = espoints::load_witness(witness_path);
    if (!espoints::verify_witness_record(s, rec)) {
        std::cerr << "verification failed\n";
        return kExitVerify;
    }
    std::cout << "witness ok: " << rec.witness.size << " points in convex position\n";
    return kExitOk;
}

int run_plot(const std::string& in, const std::string& witness_path, const std::string& out) {
    const PointSet s = espoints::load_pointset(in);
    std::optional<espoints::WitnessRecord> rec;
    if (!witness_path.empty()) rec = espoints::load_witness(witness_path);
    std::vector<int> skeleton;
    if (rec) {
        for (const espoints::TraceStep& st : rec->witness.trace) {
            if (st.step != "fractional-cap") continue;
            const nlohmann::json j = nlohmann::json::parse(st.detail, nullptr, false);
            if (!j.is_discarded() && j.contains("indices"))
                skeleton = j["indices"].get<std::vector<int>>();
        }
    }
    std::string svg;
    try {
        svg = espoints::render_svg(s, rec ? &rec->witness.indices : nullptr,
                                   skeleton.empty() ? nullptr : &skeleton);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot write '" << out << "'\n";
        return kExitUsage;
    }
    f << svg;
    std::cout << "wrote " << out << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"espoints: convex-position extraction and cup/cap experiments"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a point set");
    cmd_gen->add_option("--kind", gen.kind, "random|parabola|cupcap-extremal|es-lower")
        ->required();
    cmd_gen->add_option("--n", gen.n, "point count (random/parabola) or n (es-lower)");
    cmd_gen->add_option("--k", gen.k, "cup parameter (cupcap-extremal)");
    cmd_gen->add_option("--l", gen.l, "cap parameter (cupcap-extremal)");
    auto* seed_opt = cmd_gen->add_option("--seed", gen.seed, "PRNG seed (required for random)");
    cmd_gen->add_option("--range", gen.range, "coordinate bound (default 2^20)");
    cmd_gen->add_option("--out", gen.out, "output file (stdout if omitted)");

    std::string ex_in, ex_mode = "best-effort", ex_trace;
    int ex_target = 0;
    std::uint64_t ex_seed = 0;
    CLI::App* cmd_extract = app.add_subcommand("extract", "extract a convex-position subset");
    cmd_extract->add_option("--in", ex_in, "input point set")->required();
    cmd_extract->add_option("--target", ex_target, "target polygon size n")->required();
    cmd_extract->add_option("--mode", ex_mode, "strict|best-effort")
        ->check(CLI::IsMember({"strict", "best-effort"}));
    cmd_extract->add_option("--seed", ex_seed, "search seed (default 0)");
    cmd_extract->add_option("--trace", ex_trace, "write the witness+trace record here");

    std::string or_in, or_out;
    int or_ngon = -1;
    CLI::App* cmd_oracle = app.add_subcommand("oracle", "exact largest convex subset");
    cmd_oracle->add_option("--in", or_in, "input point set")->required();
    auto* ngon_opt = cmd_oracle->add_option("--ngon", or_ngon, "test for an n-gon instead");
    cmd_oracle->add_option("--out", or_out, "write the witness record here");

    std::string cc_in;
    int cc_k = 0, cc_l = 0;
    CLI::App* cmd_cupcap = app.add_subcommand("cupcap", "find a k-cup or an l-cap");
    cmd_cupcap->add_option("--in", cc_in, "input point set")->required();
    cmd_cupcap->add_option("--k", cc_k, "cup target")->required();
    cmd_cupcap->add_option("--l", cc_l, "cap target")->required();

    std::string ve_points, ve_witness;
    CLI::App* cmd_verify = app.add_subcommand("verify", "re-check a witness record");
    cmd_verify->add_option("--points", ve_points, "point set file")->required();
    cmd_verify->add_option("--witness", ve_witness, "witness file")->required();

    std::string pl_in, pl_witness, pl_out;
    CLI::App* cmd_plot = app.add_subcommand("plot", "render a static SVG figure");
    cmd_plot->add_option("--in", pl_in, "input point set")->required();
    cmd_plot->add_option("--witness", pl_witness, "witness record to highlight");
    cmd_plot->add_option("--out", pl_out, "output SVG file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    gen.seed_set = seed_opt->count() > 0;

    try {
        if (cmd_gen->parsed()) return run_gen(gen);
        if (cmd_extract->parsed())
            return run_extract(ex_in, ex_target, ex_mode, ex_seed, ex_trace);
        if (cmd_oracle->parsed())
            return run_oracle(or_in,
                              ngon_opt->count() > 0 ? std::optional<int>(or_ngon)
                                                    : std::nullopt,
                              or_out);
        if (cmd_cupcap->parsed()) return run_cupcap(cc_in, cc_k, cc_l);
        if (cmd_verify->parsed()) return run_verify(ve_points, ve_witness);
        if (cmd_plot->parsed()) return run_plot(pl_in, pl_witness, pl_out);
    } catch (const espoints::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const espoints::ThresholdUnmet& e) {
        std::cerr << "threshold unmet: " << e.what() << "\n";
        return kExitThreshold;
    } catch (const espoints::VerificationFailed& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerify;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
