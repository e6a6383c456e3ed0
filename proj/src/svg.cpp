#include "qd/svg.hpp"

#include <fstream>
#include <sstream>

#include "qd/errors.hpp"

namespace qd {

static void path_data(std::ostringstream& os, const std::vector<complex>& pts, bool close) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        os << (i == 0 ? "M" : "L") << pts[i].real() << ' ' << -pts[i].imag() << ' ';
    }
    if (close) os << "Z ";
}

std::string svg_document(const std::vector<std::vector<complex>>& closed_curves,
                         const std::vector<std::vector<complex>>& open_paths) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto extend = [&](const std::vector<complex>& pts) {
        for (auto& p : pts) {
            xmin = std::min(xmin, p.real());
            xmax = std::max(xmax, p.real());
            ymin = std::min(ymin, -p.imag());
            ymax = std::max(ymax, -p.imag());
        }
    };
    for (auto& c : closed_curves) extend(c);
    for (auto& c : open_paths) extend(c);
    if (xmin > xmax) {
        xmin = ymin = -1.0;
        xmax = ymax = 1.0;
    }
    double mx = 0.05 * (xmax - xmin) + 1e-6, my = 0.05 * (ymax - ymin) + 1e-6;

    std::ostringstream os;
    os.precision(8);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << xmin - mx << ' ' << ymin - my << ' '
       << (xmax - xmin + 2 * mx) << ' ' << (ymax - ymin + 2 * my) << "\">\n";
    if (!closed_curves.empty()) {
        os << "  <path fill-rule=\"evenodd\" fill=\"#9ecbff\" stroke=\"#1a4f8a\" stroke-width=\""
           << 0.004 * (xmax - xmin + 2 * mx) << "\" d=\"";
        std::ostringstream d;
        d.precision(8);
        for (auto& c : closed_curves) path_data(d, c, true);
        os << d.str() << "\"/>\n";
    }
    for (auto& path : open_paths) {
        std::ostringstream d;
        d.precision(8);
        path_data(d, path, false);
        os << "  <path fill=\"none\" stroke=\"#c03020\" stroke-width=\""
           << 0.005 * (xmax - xmin + 2 * mx) << "\" d=\"" << d.str() << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void write_svg_file(const std::string& path, const std::string& document) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::SpecParseError, "cannot write SVG file: " + path);
    out << document;
}

std::string domain_svg(const Domain& domain, int points_per_curve) {
    return svg_document(boundary_curves(domain, points_per_curve));
}

} // namespace qd
