#include "diamlab/svg.hpp"

#include "diamlab/measures.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <string_view>

namespace diamlab {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s(buf);
    if (s == "-0.0000") s = "0.0000";
    return s;
}

class Canvas {
public:
    Canvas(BoundingBox box, const SvgStyle& st) : box_(box), st_(st) {}

    double x(double v) const { return (v - box_.min.x) * st_.scale; }
    double y(double v) const { return (box_.max.y - v) * st_.scale; }
    std::string xy(Point p) const { return num(x(p.x)) + " " + num(y(p.y)); }
    double len(double v) const { return v * st_.scale; }
    double width() const { return len(box_.width()); }
    double height() const { return len(box_.height()); }

private:
    BoundingBox box_;
    SvgStyle st_;
};

// The y flip negates angles, so counter-clockwise is SVG sweep-flag 0.
std::string arc_cmd(const Canvas& cv, double r, bool large, bool ccw, Point to) {
    return "A " + num(cv.len(r)) + " " + num(cv.len(r)) + " 0 " + (large ? "1 " : "0 ") + (ccw ? "0 " : "1 ") +
           cv.xy(to) + " ";
}

std::string path_data(const Figure& f, const Canvas& cv) {
    std::string d = "M " + cv.xy(f[0].start) + " ";
    for (const Edge& e : f.edges()) {
        if (!e.is_arc()) {
            d += "L " + cv.xy(e.end) + " ";
            continue;
        }
        const bool ccw = e.orientation == Orientation::ccw;
        if (e.full_turn) {
            // two half turns; a single SVG arc cannot close on itself
            const Point mid = e.center - (e.start - e.center);
            d += arc_cmd(cv, e.radius, false, ccw, mid);
            d += arc_cmd(cv, e.radius, false, ccw, e.end);
            continue;
        }
        d += arc_cmd(cv, e.radius, e.sweep() > std::numbers::pi, ccw, e.end);
    }
    return d + "Z";
}

BoundingBox merged(BoundingBox a, BoundingBox b) {
    return {{std::min(a.min.x, b.min.x), std::min(a.min.y, b.min.y)},
            {std::max(a.max.x, b.max.x), std::max(a.max.y, b.max.y)}};
}

}  // namespace

std::string render_svg(const NamedShape& shape, const SvgStyle& style, const Tolerance& tol) {
    const Figure& f = shape.figure;
    const Circle ref = shape.reference.value_or(reference_circle());
    BoundingBox box = merged(bounding_box(f), {ref.center - Point{ref.radius, ref.radius},
                                               ref.center + Point{ref.radius, ref.radius}});
    box.min = box.min - Point{style.margin, style.margin};
    box.max = box.max + Point{style.margin, style.margin + 0.1};  // room for the caption
    const Canvas cv(box, style);

    const std::string fig = path_data(f, cv);
    const std::string cx = num(cv.x(ref.center.x));
    const std::string cy = num(cv.y(ref.center.y));
    const std::string cr = num(cv.len(ref.radius));

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(cv.width()) + "\" height=\"" +
         num(cv.height()) + "\" viewBox=\"0 0 " + num(cv.width()) + " " + num(cv.height()) + "\">\n";
    s += "  <title>" + shape.name + "</title>\n";
    s += "  <defs><clipPath id=\"fig\"><path d=\"" + fig + "\"/></clipPath></defs>\n";
    s += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // exterior = figure minus disc: fill the figure, then blank the disc inside it
    s += "  <g clip-path=\"url(#fig)\">\n";
    s += "    <path d=\"" + fig + "\" fill=\"#f4a259\"/>\n";
    s += "    <circle cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"" + cr + "\" fill=\"#fdf6ec\"/>\n";
    s += "  </g>\n";
    s += "  <circle cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"" + cr +
         "\" fill=\"none\" stroke=\"#3b6ea5\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
    s += "  <path d=\"" + fig + "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" stroke-linejoin=\"round\"/>\n";

    const std::pair<std::string_view, Point> labels[] = {
        {"K", pts::K}, {"L", pts::L}, {"C", pts::C}, {"D", pts::D}};
    for (const auto& [name, p] : labels) {
        if (contains(f, p, tol) == Location::outside) continue;
        const double dx = p.x < 0 ? -18.0 : (p.x > 0 ? 8.0 : 6.0);
        const double dy = p.y < 0 ? 18.0 : (p.y > 0 ? -8.0 : 18.0);
        s += "  <circle cx=\"" + num(cv.x(p.x)) + "\" cy=\"" + num(cv.y(p.y)) + "\" r=\"3\" fill=\"black\"/>\n";
        s += "  <text x=\"" + num(cv.x(p.x) + dx) + "\" y=\"" + num(cv.y(p.y) + dy) +
             "\" font-family=\"serif\" font-size=\"16\">" + std::string(name) + "</text>\n";
    }

    std::string caption = "\xCE\xBC \xE2\x89\x88 ";  // "mu approx" in UTF-8
    try {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", mu(f, ref, tol).mu);
        caption += buf;
    } catch (const DegenerateFigure&) {
        caption += "undefined";
    }
    s += "  <text x=\"12\" y=\"24\" font-family=\"sans-serif\" font-size=\"18\">" + caption + "</text>\n";
    s += "</svg>\n";
    return s;
}

}  // namespace diamlab
