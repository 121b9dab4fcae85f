#include "skelcollar/cli.hpp"

#include <algorithm>
#include <sstream>

namespace skelcollar::cli {

namespace {

using Pt = std::array<long, 2>;

long cross(const Pt& a, const Pt& b) { return a[0] * b[1] - a[1] * b[0]; }

bool inside(const Pt& r1, const Pt& r2, const Pt& p) { return cross(r1, p) >= 0 && cross(p, r2) >= 0; }

}  // namespace

std::string fan_svg(const std::vector<std::vector<Pt>>& cones, const std::vector<std::vector<Pt>>& interior_rays,
                    const std::vector<std::string>& titles, const std::string& header) {
    constexpr int kUnit = 32;
    constexpr int kMargin = 24;
    struct Panel {
        long xmin, xmax, ymin, ymax;
    };
    std::vector<Panel> panels;
    int width = kMargin;
    int height = 0;
    for (const auto& c : cones) {
        Panel p{-1, 1, -1, 1};
        for (const auto& r : c) {
            p.xmin = std::min(p.xmin, r[0] - 1);
            p.xmax = std::max(p.xmax, r[0] + 1);
            p.ymin = std::min(p.ymin, r[1] - 1);
            p.ymax = std::max(p.ymax, r[1] + 1);
        }
        panels.push_back(p);
        width += static_cast<int>(p.xmax - p.xmin) * kUnit + kMargin;
        height = std::max(height, static_cast<int>(p.ymax - p.ymin) * kUnit + 2 * kMargin + 16);
    }
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<!-- " << header << " -->\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    int left = kMargin;
    for (std::size_t k = 0; k < cones.size(); ++k) {
        const auto& p = panels[k];
        const auto& r1 = cones[k][0];
        const auto& r2 = cones[k][1];
        const auto sx = [&](long x) { return left + static_cast<int>(x - p.xmin) * kUnit; };
        const auto sy = [&](long y) { return kMargin + 16 + static_cast<int>(p.ymax - y) * kUnit; };
        os << "<g id=\"panel" << k << "\">\n";
        os << "<text x=\"" << left << "\" y=\"" << kMargin << "\" font-family=\"monospace\" font-size=\"12\">"
           << (k < titles.size() ? titles[k] : "") << "</text>\n";
        os << "<polygon points=\"" << sx(0) << ',' << sy(0) << ' ' << sx(r1[0]) << ',' << sy(r1[1]) << ' '
           << sx(r1[0] + r2[0]) << ',' << sy(r1[1] + r2[1]) << ' ' << sx(r2[0]) << ',' << sy(r2[1])
           << "\" fill=\"#dde8f5\" stroke=\"none\"/>\n";
        for (long x = p.xmin; x <= p.xmax; ++x) {
            for (long y = p.ymin; y <= p.ymax; ++y) {
                const bool in = inside(r1, r2, {x, y});
                os << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"" << (in ? 3 : 2) << "\" fill=\""
                   << (in ? "#1f4e8c" : "#bbbbbb") << "\"/>\n";
            }
        }
        for (const auto& r : {r1, r2}) {
            os << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(r[0]) << "\" y2=\"" << sy(r[1])
               << "\" stroke=\"#1f4e8c\" stroke-width=\"2\"/>\n";
        }
        if (k < interior_rays.size()) {
            for (const auto& r : interior_rays[k]) {
                os << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(r[0]) << "\" y2=\"" << sy(r[1])
                   << "\" stroke=\"#c0392b\" stroke-width=\"1.5\" stroke-dasharray=\"4 3\"/>\n";
            }
        }
        os << "</g>\n";
        left += static_cast<int>(p.xmax - p.xmin) * kUnit + kMargin;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace skelcollar::cli
