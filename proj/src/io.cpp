#include "espoints/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace espoints {

namespace {

constexpr const char* kMagic = "#espoints v1";

bool is_integer_token(const std::string& tok) {
    if (tok.empty()) return false;
    std::size_t i = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9') return false;
    return true;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

std::string bigint_str(const BigInt& v) { return v.str(); }

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

std::string serialize_pointset(const PointSet& s, const std::string& metadata) {
    std::ostringstream os;
    os << kMagic << '\n';
    if (!s.id().empty()) os << "# id: " << s.id() << '\n';
    if (!metadata.empty()) os << "# generator: " << metadata << '\n';
    os << s.size() << '\n';
    for (const Point& p : s.points()) os << bigint_str(p.x) << ' ' << bigint_str(p.y) << '\n';
    return os.str();
}

PointSet parse_pointset(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != kMagic)
        throw ParseError("point set file must start with '" + std::string(kMagic) + "'");

    std::string id;
    long long count = -1;
    std::vector<Point> pts;
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            constexpr const char* kIdTag = "# id: ";
            if (line.rfind(kIdTag, 0) == 0) id = line.substr(std::string(kIdTag).size());
            continue;
        }
        std::istringstream ls(line);
        if (count < 0) {
            std::string tok;
            ls >> tok;
            std::string rest;
            if (!is_integer_token(tok) || (ls >> rest))
                throw ParseError("expected a point count, got '" + line + "'");
            try {
                count = std::stoll(tok);
            } catch (const std::exception&) {
                throw ParseError("point count out of range: '" + tok + "'");
            }
            if (count < 0) throw ParseError("negative point count");
            pts.reserve(static_cast<std::size_t>(count));
            continue;
        }
        std::string xs, ys, rest;
        ls >> xs >> ys;
        if (!is_integer_token(xs) || !is_integer_token(ys) || (ls >> rest))
            throw ParseError("expected 'x y', got '" + line + "'");
        if (static_cast<long long>(pts.size()) >= count)
            throw ParseError("more points than declared");
        pts.emplace_back(BigInt(xs), BigInt(ys));
    }
    if (count < 0) throw ParseError("missing point count");
    if (static_cast<long long>(pts.size()) != count)
        throw ParseError("declared " + std::to_string(count) + " points, found " +
                         std::to_string(pts.size()));
    return PointSet(std::move(pts), std::move(id));
}

PointSet load_pointset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pointset(buf.str());
}

void save_pointset(const PointSet& s, const std::string& path, const std::string& metadata) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << serialize_pointset(s, metadata);
}

std::string content_hash(const PointSet& s) {
    std::ostringstream os;
    os << "espoints-v1\n" << s.size() << '\n';
    for (const Point& p : s.points()) os << bigint_str(p.x) << ' ' << bigint_str(p.y) << '\n';
    std::ostringstream hex;
    hex << "fnv1a64:" << std::hex;
    const std::uint64_t h = fnv1a64(os.str());
    for (int shift = 60; shift >= 0; shift -= 4) hex << ((h >> shift) & 0xF);
    return hex.str();
}

WitnessRecord make_witness_record(const PointSet& s, const ConvexWitness& w,
                                  std::string params_json) {
    WitnessRecord rec;
    rec.pointset_id = s.id();
    rec.pointset_hash = content_hash(s);
    rec.pointset_size = static_cast<long long>(s.size());
    rec.witness = w;
    rec.params = std::move(params_json);
    return rec;
}

std::string serialize_witness(const WitnessRecord& rec) {
    nlohmann::json j;
    j["schema_version"] = rec.schema_version;
    j["pointset"] = {{"id", rec.pointset_id},
                     {"hash", rec.pointset_hash},
                     {"size", rec.pointset_size}};
    j["witness"] = {{"size", rec.witness.size}, {"indices", rec.witness.indices}};
    if (!rec.params.empty()) {
        j["params"] = nlohmann::json::parse(rec.params, nullptr, false);
        if (j["params"].is_discarded()) j["params"] = rec.params;
    } else {
        j["params"] = nullptr;
    }
    nlohmann::json steps = nlohmann::json::array();
    for (const TraceStep& st : rec.witness.trace) {
        nlohmann::json detail = nlohmann::json::parse(st.detail, nullptr, false);
        if (detail.is_discarded()) detail = st.detail;
        steps.push_back({{"step", st.step}, {"detail", detail}});
    }
    j["trace"] = steps;
    return j.dump(2) + "\n";
}

WitnessRecord parse_witness(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("witness file is not valid JSON");
    WitnessRecord rec;
    try {
        rec.schema_version = j.at("schema_version").get<int>();
        rec.pointset_id = j.at("pointset").at("id").get<std::string>();
        rec.pointset_hash = j.at("pointset").at("hash").get<std::string>();
        rec.pointset_size = j.at("pointset").at("size").get<long long>();
        rec.witness.size = j.at("witness").at("size").get<int>();
        rec.witness.indices = j.at("witness").at("indices").get<std::vector<int>>();
        if (j.contains("params") && !j["params"].is_null())
            rec.params = j["params"].is_string() ? j["params"].get<std::string>()
                                                 : j["params"].dump();
        if (j.contains("trace")) {
            for (const auto& st : j["trace"]) {
                TraceStep step;
                step.step = st.at("step").get<std::string>();
                step.detail = st.at("detail").is_string()
                                  ? st.at("detail").get<std::string>()
                                  : st.at("detail").dump();
                rec.witness.trace.push_back(std::move(step));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed witness file: ") + e.what());
    }
    if (rec.schema_version != 1)
        throw ParseError("unsupported witness schema version " +
                         std::to_string(rec.schema_version));
    return rec;
}

WitnessRecord load_witness(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_witness(buf.str());
}

void save_witness(const WitnessRecord& rec, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << serialize_witness(rec);
}

bool verify_witness_record(const PointSet& s, const WitnessRecord& rec) {
    if (rec.pointset_hash != content_hash(s)) return false;
    if (rec.pointset_size != static_cast<long long>(s.size())) return false;
    return verify_witness(s, rec.witness);
}

}  // namespace espoints
