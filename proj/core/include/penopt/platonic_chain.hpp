#pragma once

#include <array>
#include <string>

#include "penopt/errors.hpp"

namespace penopt {

enum class PlatonicSolid : int {
    tetrahedron = 4,
    cube = 6,
    octahedron = 8,
    dodecahedron = 12,
    icosahedron = 20,
};

constexpr std::array<PlatonicSolid, 5> all_platonic_solids() {
    return {PlatonicSolid::tetrahedron, PlatonicSolid::cube, PlatonicSolid::octahedron,
            PlatonicSolid::dodecahedron, PlatonicSolid::icosahedron};
}

constexpr int face_count(PlatonicSolid s) { return static_cast<int>(s); }

std::string solid_name(PlatonicSolid s);        // "tetrahedron", ...
std::string solid_short_name(PlatonicSolid s);  // "Tetra", "Cube", "Octa", "Dode", "Ico"

/// A 3-D pen shape: one of the five platonic solids or a sphere.
/// q_const is A^{3/2} / V for the unit of the shape, so a single pen with
/// surface area A encloses V = A^{3/2} / q. Smaller q means more volume per
/// unit of surface. Values come from the radical closed forms, not decimal
/// literals.
class Solid {
public:
    static Solid sphere() { return Solid(0); }
    static Solid platonic(PlatonicSolid s) { return Solid(static_cast<int>(s)); }
    static Solid from_faces(int faces);  // 4, 6, 8, 12, 20; throws InvalidSpec

    bool is_sphere() const { return faces_ == 0; }
    int faces() const;                   // throws InvalidSpec for the sphere
    PlatonicSolid platonic_kind() const; // throws InvalidSpec for the sphere

    double q_const() const;
    std::string name() const;

    friend bool operator==(Solid a, Solid b) { return a.faces_ == b.faces_; }
    friend bool operator!=(Solid a, Solid b) { return !(a == b); }

private:
    explicit Solid(int faces) : faces_(faces) {}
    int faces_;  // 0 encodes the sphere
};

/// q constant for a platonic solid (radical closed form).
double q_const(PlatonicSolid s);

/// q constant for the sphere, 6 sqrt(pi).
double sphere_q_const();

/// A face-sharing chain of k solids under total surface area T.
/// per_solid_area double-counts shared faces: each solid is sized as if it
/// owned A = T f / (k(f-1)+1), and the chain total (k f - (k-1))/f * A
/// recovers T. Spheres share nothing, so each gets T / k.
struct SolidChainSolution {
    double per_solid_area = 0.0;  // A
    double total_volume = 0.0;    // k A^{3/2} / q_f  (T^{3/2}/(6 sqrt(pi k)) for spheres)
    double surface_check = 0.0;   // recomputed chain total, equals T
};

SolidChainSolution chain_volume(const Solid& solid, int pens, double total_surface);

/// Pairwise comparison via the rearranged inequality
///   V_k(f) < V_k(F)  iff  (k(F-1)+1)/(k(f-1)+1) < (F/f) (q_f / q_F)^{2/3}.
/// The left side is monotone in k, so the ordering flips at most once.
struct PairwiseOrder {
    PlatonicSolid first;
    PlatonicSolid second;
    bool first_encloses_less = false;  // V_k(first) < V_k(second)
    double lhs = 0.0;                  // rational function at this k
    double rhs = 0.0;                  // shape constant
    double margin = 0.0;               // |lhs - rhs| / rhs
};

PairwiseOrder pairwise_order(PlatonicSolid f, PlatonicSolid F, int pens);

/// The five solids ranked by chain volume at this k (most volume first).
/// Three regimes: icosahedron leads for k <= 8, then the dodecahedron takes
/// over, and from k = 68 the cube also passes the octahedron.
std::array<PlatonicSolid, 5> full_ordering(int pens);

/// Sphere chain versus platonic chain at the same k and surface budget.
/// The sphere wins for every k >= 1 in spite of sharing no faces.
struct SphereComparison {
    bool sphere_wins = false;
    double sphere_volume = 0.0;  // at unit surface budget
    double solid_volume = 0.0;   // at unit surface budget
};

SphereComparison sphere_comparison(PlatonicSolid solid, int pens);

}  // namespace penopt
