#include "tiltwall/svg.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tiltwall {

namespace {

constexpr double kMargin = 40.0;
constexpr double kPlotWidth = 720.0;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return std::string(buf);
}

// Exact visibility of the upper-half semicircle (center c, radius rho) inside
// the closed window.  Decided without extracting square roots:
//   - no horizontal overlap (c + rho < beta_min or c - rho > beta_max): hidden;
//   - an axis endpoint c +- rho inside [beta_min, beta_max]: visible (the arc
//     comes arbitrarily close to alpha = 0 there);
//   - otherwise the window is horizontally strictly inside the circle, and
//     the lowest visible arc point sits over the window edge farthest from c:
//     visible iff rho^2 - (far_edge - c)^2 <= alpha_max^2.
bool semicircle_visible(const PlotWindow& w, const Rational& c, const Rational& rho_sq) {
    // cmp_with_sqrt(t, q) = sign of t - sqrt(q)
    if (cmp_with_sqrt(w.beta_min - c, rho_sq) > 0) return false;  // c + rho < beta_min
    if (cmp_with_sqrt(c - w.beta_max, rho_sq) > 0) return false;  // c - rho > beta_max
    if (cmp_with_sqrt(c - w.beta_min, rho_sq) >= 0) return true;  // left endpoint in window
    if (cmp_with_sqrt(w.beta_max - c, rho_sq) >= 0) return true;  // right endpoint in window
    Rational dl = w.beta_min - c;
    Rational dr = w.beta_max - c;
    Rational far_sq = dl * dl;
    if (dr * dr > far_sq) far_sq = dr * dr;
    return rho_sq - far_sq <= w.alpha_max * w.alpha_max;
}

}  // namespace

std::string render_slice_svg(const SlicePlot& plot) {
    const PlotWindow& w = plot.window;
    if (!(w.beta_min < w.beta_max)) {
        throw std::invalid_argument("render_slice_svg: beta_min must be less than beta_max");
    }
    if (w.alpha_max.sign() <= 0) {
        throw std::invalid_argument("render_slice_svg: alpha_max must be positive");
    }
    if (plot.vertical && plot.vertical->kind != WallKind::VerticalLine) {
        throw std::invalid_argument("render_slice_svg: vertical slot takes a VerticalLine");
    }
    for (const Wall& s : plot.semicircles) {
        if (s.kind != WallKind::Semicircle) {
            throw std::invalid_argument("render_slice_svg: semicircles slot takes Semicircles");
        }
    }
    if (plot.highlight && plot.highlight->kind != WallKind::Semicircle &&
        plot.highlight->kind != WallKind::VerticalLine) {
        throw std::invalid_argument("render_slice_svg: highlight must be a geometric wall");
    }

    // All arithmetic below this line is display-only; exact values are kept
    // in the XML comments.
    double beta_min = w.beta_min.to_double();
    double beta_max = w.beta_max.to_double();
    double alpha_max = w.alpha_max.to_double();
    double scale = kPlotWidth / (beta_max - beta_min);
    double plot_h = alpha_max * scale;
    double width = kPlotWidth + 2 * kMargin;
    double height = plot_h + 2 * kMargin;
    auto px = [&](double beta) { return kMargin + (beta - beta_min) * scale; };
    auto py = [&](double alpha) { return kMargin + (alpha_max - alpha) * scale; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) +
           "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " +
           fmt(height) + "\">\n";
    out += "<!-- slice window: beta in [" + w.beta_min.to_string() + ", " +
           w.beta_max.to_string() + "], alpha in [0, " + w.alpha_max.to_string() +
           "] -->\n";
    out += "<defs><clipPath id=\"win\"><rect x=\"" + fmt(kMargin) + "\" y=\"" +
           fmt(kMargin) + "\" width=\"" + fmt(kPlotWidth) + "\" height=\"" + fmt(plot_h) +
           "\"/></clipPath></defs>\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
           "\" fill=\"#ffffff\"/>\n";
    out += "<rect x=\"" + fmt(kMargin) + "\" y=\"" + fmt(kMargin) + "\" width=\"" +
           fmt(kPlotWidth) + "\" height=\"" + fmt(plot_h) +
           "\" fill=\"none\" stroke=\"#cccccc\"/>\n";

    // The beta axis is always present.
    out += "<!-- beta axis: alpha = 0, beta from " + w.beta_min.to_string() + " to " +
           w.beta_max.to_string() + " -->\n";
    out += "<line x1=\"" + fmt(px(beta_min)) + "\" y1=\"" + fmt(py(0)) + "\" x2=\"" +
           fmt(px(beta_max)) + "\" y2=\"" + fmt(py(0)) +
           "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";

    out += "<g clip-path=\"url(#win)\" fill=\"none\">\n";

    auto emit_vertical = [&](const Wall& v, const char* color, double stroke_w,
                             const char* label) {
        if (v.beta < w.beta_min || v.beta > w.beta_max) return;
        out += "<!-- " + std::string(label) + ": beta = " + v.beta.to_string() + " -->\n";
        double x = px(v.beta.to_double());
        out += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(py(0)) + "\" x2=\"" + fmt(x) +
               "\" y2=\"" + fmt(py(alpha_max)) + "\" stroke=\"" + color +
               "\" stroke-width=\"" + fmt(stroke_w) + "\"/>\n";
    };

    auto emit_semicircle = [&](const Wall& s, const char* color, double stroke_w,
                               const char* label) {
        if (!semicircle_visible(w, s.center, s.radius_sq)) return;
        out += "<!-- " + std::string(label) + ": center = " + s.center.to_string() +
               ", radius_sq = " + s.radius_sq.to_string() + " -->\n";
        double c = s.center.to_double();
        double rho = std::sqrt(s.radius_sq.to_double());
        double r_px = rho * scale;
        out += "<path d=\"M " + fmt(px(c - rho)) + " " + fmt(py(0)) + " A " + fmt(r_px) +
               " " + fmt(r_px) + " 0 0 1 " + fmt(px(c + rho)) + " " + fmt(py(0)) +
               "\" stroke=\"" + color + "\" stroke-width=\"" + fmt(stroke_w) + "\"/>\n";
    };

    if (plot.vertical) emit_vertical(*plot.vertical, "#1f77b4", 1.5, "vertical wall");
    for (const Wall& s : plot.semicircles) {
        emit_semicircle(s, "#888888", 1.0, "candidate wall");
    }
    if (plot.highlight) {
        if (plot.highlight->kind == WallKind::Semicircle) {
            emit_semicircle(*plot.highlight, "#d62728", 2.5, "highlighted wall");
        } else {
            emit_vertical(*plot.highlight, "#d62728", 2.5, "highlighted wall");
        }
    }

    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace tiltwall
