#pragma once

#include <span>
#include <vector>

#include "penopt/errors.hpp"

namespace penopt {

/// A b_1 x b_2 x ... x b_n grid of identical rectangular chambers, to be
/// sized under a fixed construction budget.
///
/// cost_coeffs holds the normalized per-direction coefficients C_i: the cost
/// of all walls perpendicular to direction i is C_i * prod_{j!=i}(x_j b_j),
/// so the total is sum_i C_i prod_{j!=i}(x_j b_j). Users who aggregated raw
/// wall costs c_i (price per unit area times a possibly fractional wall
/// count) should use from_raw_wall_costs, which divides by prod_{j!=i} b_j.
struct GridSpec {
    int dims = 0;                      // n >= 2 (capped at kMaxDims)
    std::vector<int> chamber_counts;   // b_i >= 1
    std::vector<double> cost_coeffs;   // C_i >= 0
    double budget = 0.0;               // C > 0

    static constexpr int kMaxDims = 16;

    static GridSpec from_normalized(std::vector<int> chamber_counts,
                                    std::vector<double> cost_coeffs,
                                    double budget);
    static GridSpec from_raw_wall_costs(std::vector<int> chamber_counts,
                                        std::vector<double> raw_costs,
                                        double budget);

    /// Throws InvalidSpec on any violated field invariant.
    void validate() const;

    bool has_zero_coeff() const;
};

/// The unique positive critical point of the grid problem.
struct RectSolution {
    std::vector<double> side_lengths;    // x_i
    double multiplier = 0.0;             // Lagrange parameter, x_i b_i / ((n-1) C_i)
    double hypervolume = 0.0;            // prod (x_i b_i)
    std::vector<double> direction_costs; // C_i prod_{j!=i}(x_j b_j), each C/n
};

/// Cost-equation witness that the degenerate problem is unbounded: side
/// lengths meeting the budget exactly with hypervolume proportional to the
/// chosen free parameter.
struct RectWitness {
    std::vector<double> side_lengths;
    double hypervolume = 0.0;
    double cost_check = 0.0;  // recomputed total cost, equals the budget
};

/// Total cost of the configuration x under the spec's coefficients.
double grid_cost(const GridSpec& spec, std::span<const double> side_lengths);

/// Hypervolume prod (x_i b_i) of the full grid.
double grid_volume(const GridSpec& spec, std::span<const double> side_lengths);

/// Closed-form maximizer: x_i = (C_i / b_i) * [C / (n prod_j C_j)]^{1/(n-1)}.
/// At the optimum every direction consumes exactly budget / n.
///
/// Throws UnboundedProblem if any C_i == 0 (no finite optimum exists) and
/// InvalidSpec for malformed specs.
RectSolution solve_grid(const GridSpec& spec);

/// For a spec with some C_i == 0, builds the configuration with x_j = x1 in
/// every costed direction and the last zero-cost direction sized to spend
/// the budget exactly. Volume grows linearly in x1.
///
/// Throws NotUnbounded if all C_i > 0.
RectWitness unbounded_witness(const GridSpec& spec, double x1);

/// The surface-area specialization: C_i = b_i + 1 counts the full-length
/// walls perpendicular to direction i, so the cost equation becomes total
/// hypersurface area and solve_grid maximizes volume under area budget S.
GridSpec surface_area_spec(int dims, std::vector<int> chamber_counts, double area_budget);

}  // namespace penopt
