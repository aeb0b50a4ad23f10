#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "penopt/rect_grid.hpp"

namespace penopt {

/// Controls for the independent grid maximizer. Deterministic given seed.
struct OracleConfig {
    int max_iterations = 10000;     // per start
    double convergence_tol = 1e-10; // on the relative step
    int multi_start = 8;
    std::uint64_t seed = 20240817;

    void validate() const;
};

struct GridMaximum {
    std::vector<double> side_lengths;
    double hypervolume = 0.0;
    int converged_starts = 0;  // out of multi_start
    int iterations = 0;        // of the winning start
};

/// Maximizes prod(x_i b_i) subject to the cost equation without using the
/// closed form: quasi-Newton ascent over log side lengths with derivatives
/// from central finite differences. The cost form is homogeneous of degree
/// n-1 in x, so every iterate is rescaled onto the constraint surface
/// exactly; the equality constraint never needs a penalty. Best result over
/// multi_start seeded random starts.
///
/// Throws UnboundedProblem if any cost coefficient is zero and
/// DidNotConverge if no start reaches tolerance within max_iterations.
GridMaximum maximize_grid(const GridSpec& spec, const OracleConfig& config = {});

enum class ComparisonFamily { polygon_chain, spiral, platonic };

std::string family_name(ComparisonFamily family);

/// A change in the pairwise ordering between two designs: `first` encloses
/// less than `second` for k < k_flip and more for k >= k_flip, or the
/// reverse (recorded in first_less_before).
struct FlipEvent {
    std::string first;
    std::string second;
    long long k_flip = 0;
    bool first_less_before = false;
};

/// Maximal k-interval on which one design encloses the most.
struct WinnerSegment {
    long long k_begin = 0;
    long long k_end = 0;  // inclusive
    std::string winner;
};

struct ScanReport {
    ComparisonFamily family = ComparisonFamily::polygon_chain;
    long long k_min = 0;
    long long k_max = 0;
    std::vector<WinnerSegment> winner_segments;
    std::vector<FlipEvent> flips;
};

/// Brute-force scan of every pairwise comparison in the family over
/// [k_min, k_max] (within 1..10^6), by direct evaluation of the closed-form
/// areas/volumes. Reports every ordering flip and the winner segments.
ScanReport scan_comparisons(ComparisonFamily family, long long k_min, long long k_max);

}  // namespace penopt
