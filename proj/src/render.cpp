#include "trip/render.hpp"

#include <sstream>

namespace trip {

Rational triangle_area(const std::vector<std::pair<Rational, Rational>>& v) {
    Rational twice = (v[1].first - v[0].first) * (v[2].second - v[0].second) -
                     (v[2].first - v[0].first) * (v[1].second - v[0].second);
    return abs_value(twice) / 2;
}

Rational SubdivisionFigure::total_area() const {
    Rational a = 0;
    for (const auto& t : triangles) a += triangle_area(t.vertices);
    return a;
}

namespace {

void collect(const VertexTriangle& t, std::vector<int>& word, size_t depth, const TripMapSpec& m,
             std::vector<FigureTriangle>& out) {
    if (word.size() == depth) {
        out.push_back({word, t.projected()});
        return;
    }
    for (int bit : {0, 1}) {
        word.push_back(bit);
        collect(subdivide(t, bit, m), word, depth, m, out);
        word.pop_back();
    }
}

// Fixed-point rendering of 1000 * q, rounded half away from zero at 9 fractional digits.
std::string screen(const Rational& q) {
    const Integer scale("1000000000");
    Rational v = q * 1000 * scale;
    Integer r = floor_div(abs_value(v) + Rational(1, 2));
    bool neg = sgn(v) < 0 && r != 0;
    Integer whole = r / scale, frac = r % scale;
    std::string f = frac.get_str();
    f.insert(0, 9 - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    std::string s = (neg ? "-" : "") + whole.get_str();
    return f.empty() ? s : s + "." + f;
}

}  // namespace

SubdivisionFigure subdivision_figure(const TripMapSpec& m, size_t depth) {
    SubdivisionFigure f;
    f.depth = depth;
    std::vector<int> word;
    collect(VertexTriangle::base(), word, depth, m, f.triangles);
    return f;
}

std::string render_svg(const SubdivisionFigure& f, const std::string& title) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n"
       << "<title>" << title << " depth " << f.depth << "</title>\n"
       << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1\">\n";
    for (const auto& t : f.triangles) {
        std::string w;
        for (int b : t.word) w += static_cast<char>('0' + b);
        os << "<polygon data-word=\"" << w << "\" data-vertices=\"";
        for (size_t i = 0; i < t.vertices.size(); ++i)
            os << (i ? " " : "") << to_string(t.vertices[i].first) << "," << to_string(t.vertices[i].second);
        os << "\" points=\"";
        for (size_t i = 0; i < t.vertices.size(); ++i)
            os << (i ? " " : "") << screen(t.vertices[i].first) << "," << screen(1 - t.vertices[i].second);
        os << "\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace trip
