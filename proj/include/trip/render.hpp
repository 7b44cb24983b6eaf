#pragma once

#include <string>
#include <vector>

#include "trip/trip_engine.hpp"

namespace trip {

struct FigureTriangle {
    std::vector<int> word;
    std::vector<std::pair<Rational, Rational>> vertices;
};

// Projected triangles Delta(w) for every word w of the given length, words in lexicographic order.
struct SubdivisionFigure {
    size_t depth = 0;
    std::vector<FigureTriangle> triangles;
    Rational total_area() const;
};

Rational triangle_area(const std::vector<std::pair<Rational, Rational>>& v);

SubdivisionFigure subdivision_figure(const TripMapSpec& m, size_t depth);

// 1000x1000 viewport, y flipped; coordinates rounded to 1e-9 of a unit.
std::string render_svg(const SubdivisionFigure& f, const std::string& title);

}  // namespace trip
