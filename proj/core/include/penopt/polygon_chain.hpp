#pragma once

#include <string>
#include <vector>

#include "penopt/errors.hpp"

namespace penopt {

/// Pen shape for chain problems: a regular n-gon (n >= 3) or a circle.
/// The circle is a distinguished value, not a sentinel side count.
class PenShape {
public:
    static PenShape circle() { return PenShape(0); }
    static PenShape ngon(int sides);

    bool is_circle() const { return sides_ == 0; }
    int sides() const;  // throws InvalidSpec for the circle

    std::string name() const;  // "triangle", "square", ..., "n-gon(13)", "circle"

    friend bool operator==(PenShape a, PenShape b) { return a.sides_ == b.sides_; }
    friend bool operator!=(PenShape a, PenShape b) { return !(a == b); }
    /// Orders by side count with the circle last; used for deterministic
    /// tie-breaking toward fewer sides.
    friend bool operator<(PenShape a, PenShape b) {
        return a.tie_rank() < b.tie_rank();
    }

private:
    explicit PenShape(int sides) : sides_(sides) {}
    long long tie_rank() const { return sides_ == 0 ? 1LL << 32 : sides_; }
    int sides_;  // 0 encodes the circle
};

/// A chain of k pens, consecutive polygons sharing exactly one side,
/// built from a fixed total perimeter P.
struct ChainSpec {
    int pens = 1;                       // k >= 1
    PenShape shape = PenShape::ngon(4);
    double perimeter = 1.0;             // P > 0

    void validate() const;
};

struct ChainSolution {
    double side_length = 0.0;    // s for polygons; radius r for circles
    double total_area = 0.0;
    double boundary_check = 0.0; // recomputed perimeter, equals P
};

/// Total enclosed area of the chain. For k regular n-gons the shared sides
/// give s = P / (k(n-1)+1) and area (P^2 k / 4) n cot(pi/n) / [k(n-1)+1]^2;
/// k circles cannot share boundary, so r = P / (2 pi k) and area P^2/(4 pi k).
ChainSolution chain_area(const ChainSpec& spec);

/// Convenience: just the area.
double chain_area_value(int pens, PenShape shape, double perimeter);

/// Chain area with the side count treated as a real variable x >= 3.
/// Used by derivative checks; the integer case agrees with chain_area.
double chain_area_continuous(int pens, double x, double perimeter);

/// Sign surrogate for d/dx of the continuous chain area:
///   (1/2) sin(2 pi / x) [1 - k(x+1)] + (pi / x) [k(x-1)+1].
/// The remaining factor of the derivative is positive for x >= 3, so this
/// value carries the sign of the derivative itself.
double derivative_sign(int pens, double x);

/// True iff sin(2 pi / x) > 2 pi / (x + 1). Holds for all x >= 7.5; the
/// bound drives the proof that more than 8 sides never helps for k >= 2.
bool sine_bound_check(double x);

struct RankedShape {
    PenShape shape;
    double area;
};

struct BestPolygonResult {
    PenShape winner;
    std::vector<RankedShape> ranking;  // descending area; ties toward fewer sides
};

/// Candidate shapes it suffices to consider: {3..8} and the circle.
std::vector<PenShape> default_candidates();

/// Argmax of chain_area over the candidate set, with the full ranking.
BestPolygonResult best_polygon(int pens, double perimeter,
                               const std::vector<PenShape>& candidates = default_candidates());

/// Circle chain versus triangle chain at the same k and perimeter.
/// Circles win exactly for k <= 3 despite sharing no boundary.
struct CircleVsTriangle {
    bool circle_wins = false;
    double circle_area = 0.0;     // at unit perimeter
    double triangle_area = 0.0;   // at unit perimeter
};

CircleVsTriangle circle_vs_triangle(int pens);

}  // namespace penopt
