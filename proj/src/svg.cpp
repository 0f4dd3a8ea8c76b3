#include "espoints/svg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace espoints {

namespace {

struct Mapper {
    double min_x = 0, min_y = 0, scale = 1;
    double width = 800, height = 600, margin = 40;

    double mx(const BigInt& v) const {
        return margin + (v.convert_to<double>() - min_x) * scale;
    }
    double my(const BigInt& v) const {
        // flip the y axis so the figure matches plane orientation
        return height - margin - (v.convert_to<double>() - min_y) * scale;
    }
};

Mapper fit(const PointSet& s) {
    Mapper m;
    if (s.empty()) return m;
    double lo_x = s[0].x.convert_to<double>(), hi_x = lo_x;
    double lo_y = s[0].y.convert_to<double>(), hi_y = lo_y;
    for (const Point& p : s.points()) {
        lo_x = std::min(lo_x, p.x.convert_to<double>());
        hi_x = std::max(hi_x, p.x.convert_to<double>());
        lo_y = std::min(lo_y, p.y.convert_to<double>());
        hi_y = std::max(hi_y, p.y.convert_to<double>());
    }
    m.min_x = lo_x;
    m.min_y = lo_y;
    const double span_x = std::max(hi_x - lo_x, 1.0);
    const double span_y = std::max(hi_y - lo_y, 1.0);
    m.scale = std::min((m.width - 2 * m.margin) / span_x, (m.height - 2 * m.margin) / span_y);
    return m;
}

}  // namespace

std::string render_svg(const PointSet& s, const std::vector<int>* witness_indices,
                       const std::vector<int>* chain_indices) {
    auto check = [&](const std::vector<int>* v) {
        if (!v) return;
        for (int idx : *v)
            if (idx < 0 || idx >= static_cast<int>(s.size()))
                throw std::invalid_argument("svg: index out of range");
    };
    check(witness_indices);
    check(chain_indices);

    const Mapper m = fit(s);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << m.width << "\" height=\""
       << m.height << "\" viewBox=\"0 0 " << m.width << ' ' << m.height << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (chain_indices && chain_indices->size() >= 2) {
        os << "  <polyline fill=\"none\" stroke=\"#7799cc\" stroke-width=\"1.5\" points=\"";
        for (int idx : *chain_indices) os << m.mx(s[idx].x) << ',' << m.my(s[idx].y) << ' ';
        os << "\"/>\n";
    }

    if (witness_indices && !witness_indices->empty()) {
        std::vector<int> poly = *witness_indices;
        if (poly.size() >= 3) poly = convex_hull_of(s, poly);
        os << "  <polygon fill=\"#dd333322\" stroke=\"#dd3333\" stroke-width=\"2\" points=\"";
        for (int idx : poly) os << m.mx(s[idx].x) << ',' << m.my(s[idx].y) << ' ';
        os << "\"/>\n";
    }

    std::vector<bool> highlighted(s.size(), false);
    if (witness_indices)
        for (int idx : *witness_indices) highlighted[idx] = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        os << "  <circle cx=\"" << m.mx(s[i].x) << "\" cy=\"" << m.my(s[i].y) << "\" r=\""
           << (highlighted[i] ? 4 : 2.5) << "\" fill=\""
           << (highlighted[i] ? "#dd3333" : "#333333") << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace espoints
