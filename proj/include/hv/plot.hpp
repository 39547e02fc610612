#pragma once

// SVG slices of the null conic and the trope sextic in the real chart
// v0 = X + Y, v1 = 2Z, v2 = X - Y with X = 1.  In this chart the null
// conic v1^2 = 4 v0 v2 is the unit circle Y^2 + Z^2 = 1.

#include <complex>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hv/trope.hpp"

namespace hv {

enum class PlotCurve { conic, sextic, both };

struct PlotSpec {
    UnivariatePoly<ExactScalar> sextic;
    PlotCurve curve = PlotCurve::both;
    PairingMode mode = PairingMode::apolar;
    SexticConstants constants{};
    double half_width = 2.0;
    int grid = 300;
    int pixels = 600;
};

// x = v0 X_0 + (v1/2) X_1 + v2 X_2, so that (1, -2t, t^2) lands on the conic point x(-t).
inline Matrix<ExactScalar> class_to_x() {
    auto x = conic_coefficient_matrix();
    for (int r = 0; r < 3; ++r) x[r][1] = x[r][1] * ExactScalar::ratio(1, 2);
    return x;
}

namespace detail {

using cplx = std::complex<double>;

inline std::function<double(double, double)> chart_function(const Form3& f) {
    std::vector<std::pair<Exp3, cplx>> terms;
    for (const auto& [e, c] : f.terms()) terms.push_back({e, {c.re().get_d(), c.im().get_d()}});
    return [terms](double y, double z) {
        double v[3] = {1.0 + y, 2.0 * z, 1.0 - y};
        cplx s = 0;
        for (const auto& [e, c] : terms) s += c * std::pow(v[0], e[0]) * std::pow(v[1], e[1]) * std::pow(v[2], e[2]);
        return s.real();
    };
}

struct Segment {
    double x0, y0, x1, y1;
};

// Marching squares on the zero level set.
inline std::vector<Segment> zero_contour(const std::function<double(double, double)>& f, double h, int n) {
    std::vector<double> val((n + 1) * (n + 1));
    auto at = [&](int i, int j) -> double& { return val[i * (n + 1) + j]; };
    auto coord = [&](int i) { return -h + 2.0 * h * i / n; };
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) at(i, j) = f(coord(i), coord(j));
    std::vector<Segment> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double c[4] = {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
            double px[4] = {coord(i), coord(i + 1), coord(i + 1), coord(i)};
            double py[4] = {coord(j), coord(j), coord(j + 1), coord(j + 1)};
            std::vector<std::pair<double, double>> hits;
            for (int k = 0; k < 4; ++k) {
                int l = (k + 1) % 4;
                if ((c[k] < 0) != (c[l] < 0)) {
                    double s = c[k] / (c[k] - c[l]);
                    hits.push_back({px[k] + s * (px[l] - px[k]), py[k] + s * (py[l] - py[k])});
                }
            }
            for (std::size_t k = 0; k + 1 < hits.size(); k += 2)
                out.push_back({hits[k].first, hits[k].second, hits[k + 1].first, hits[k + 1].second});
        }
    return out;
}

inline std::string svg_path(const std::vector<Segment>& segs, double h, int px) {
    std::ostringstream d;
    char buf[96];
    auto sx = [&](double x) { return (x + h) / (2 * h) * px; };
    auto sy = [&](double y) { return px - (y + h) / (2 * h) * px; };
    for (const auto& s : segs) {
        std::snprintf(buf, sizeof buf, "M%.2f %.2fL%.2f %.2f", sx(s.x0), sy(s.y0), sx(s.x1), sy(s.y1));
        d << buf;
    }
    return d.str();
}

}  // namespace detail

inline std::string render_svg(const PlotSpec& spec) {
    const int px = spec.pixels;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px << "\" height=\"" << px + 40
        << "\" viewBox=\"0 0 " << px << " " << px + 40 << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    struct Layer {
        const char* label;
        const char* color;
        std::string d;
    };
    std::vector<Layer> layers;
    if (spec.curve != PlotCurve::sextic) {
        auto f = [](double y, double z) { return y * y + z * z - 1.0; };
        layers.push_back({"null conic", "#1f77b4", detail::svg_path(detail::zero_contour(f, spec.half_width, spec.grid),
                                                                    spec.half_width, px)});
    }
    if (spec.curve != PlotCurve::conic) {
        Form3 s = trope_sextic(spec.sextic, spec.mode, spec.constants).compose_linear(class_to_x());
        layers.push_back({"trope sextic", "#d62728",
                          detail::svg_path(detail::zero_contour(detail::chart_function(s), spec.half_width, spec.grid),
                                           spec.half_width, px)});
    }
    for (const auto& l : layers)
        svg << "<path d=\"" << l.d << "\" stroke=\"" << l.color << "\" fill=\"none\" stroke-width=\"1.5\"/>\n";
    int y = px + 15;
    for (const auto& l : layers) {
        svg << "<line x1=\"10\" y1=\"" << y - 4 << "\" x2=\"40\" y2=\"" << y - 4 << "\" stroke=\"" << l.color
            << "\" stroke-width=\"2\"/>";
        svg << "<text x=\"48\" y=\"" << y << "\" font-size=\"12\" font-family=\"sans-serif\">" << l.label
            << "</text>\n";
        y += 18;
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace hv
