#pragma once

#include <array>
#include <string>

#include "penopt/errors.hpp"

namespace penopt {

/// The three regular polygons that tile the plane and therefore admit
/// side-minimizing spiral packings.
enum class SpiralShape { triangle, square, hexagon };

constexpr std::array<SpiralShape, 3> all_spiral_shapes() {
    return {SpiralShape::triangle, SpiralShape::square, SpiralShape::hexagon};
}

std::string spiral_shape_name(SpiralShape shape);

/// Area of the unit-side polygon: sqrt(3)/4, 1, or 3 sqrt(3)/2.
double unit_area_coeff(SpiralShape shape);

/// A spiral packing of k congruent cells under total perimeter P.
/// area_lower/area_upper bracket the exact area with the ceiling-free
/// bounds used by the closed-form comparisons; where only one side of the
/// envelope is available the other is the exact value itself.
struct SpiralArrangement {
    SpiralShape shape = SpiralShape::triangle;
    long long pens = 0;
    long long side_count = 0;
    double side_length = 0.0;  // P / side_count
    double area = 0.0;         // pens * unit_area_coeff * side_length^2
    double area_lower = 0.0;
    double area_upper = 0.0;
};

/// Exact number of unit sides on the spiral packing of k cells:
///   triangles: k + ceil((k + sqrt(6k)) / 2)
///   squares:   2k + ceil(2 sqrt(k))
///   hexagons:  3k + ceil(sqrt(12k - 3))
/// Ceilings are certified with exact integer comparisons, never trusting
/// the floating square root near perfect squares.
long long spiral_side_count(SpiralShape shape, long long pens);

SpiralArrangement spiral_area(SpiralShape shape, long long pens, double perimeter);

/// All three shapes at the same k and P, ranked by area (descending).
/// The ordering is hexagon > square > triangle for every k >= 1.
struct SpiralRanking {
    std::array<SpiralArrangement, 3> by_area;
};

SpiralRanking spiral_compare(long long pens, double perimeter);

}  // namespace penopt
