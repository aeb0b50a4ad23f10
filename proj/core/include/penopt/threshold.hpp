#pragma once

#include <string>

#include "penopt/errors.hpp"

namespace penopt {

/// The comparison skeleton behind every crossover in this library:
/// a monotone rational function of the pen count against a shape constant,
///   r(k) = (alpha k + beta) / (gamma k + delta)  vs  bound c > 0,
/// with gamma k + delta > 0 on k >= 1. The predicate of interest is
/// r(k) < bound; `less_than_wins` records which side means the first
/// design encloses less (i.e. the second design wins).
struct RationalVsConstant {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
    double bound = 0.0;
    bool less_than_wins = true;
    std::string tag;  // caller-supplied derivation of the constant, for reports

    void validate() const;

    double value_at(double k) const { return (alpha * k + beta) / (gamma * k + delta); }
    bool predicate_at(long long k) const;  // r(k) < bound, evaluated directly
    /// Sign of alpha*delta - beta*gamma: r is increasing (+), decreasing (-),
    /// or constant (0) on k >= 1.
    int monotonicity() const;
};

enum class ThresholdVerdict { always_true, always_false, flip };

/// Certified integer threshold report for r(k) < bound over k in [1, k_max].
struct CrossoverReport {
    ThresholdVerdict verdict = ThresholdVerdict::always_true;

    /// Valid when verdict == flip: the predicate equals predicate_before for
    /// 1 <= k < flip_k and !predicate_before for flip_k <= k <= k_max.
    long long flip_k = 0;
    bool predicate_before = false;

    /// Diagnostics. real_crossing is the closed-form solution of r(k) = bound
    /// (NaN when the function never meets the bound); thresholds are only
    /// ever reported at integers, this is informational.
    double real_crossing = 0.0;
    bool limit_predicate = false;  // predicate in the k -> infinity limit
    bool limit_marginal = false;   // |alpha/gamma - bound| < 1e-12: limit verdict unreliable
    bool scan_certified = false;   // predicate verified pointwise on [1, min(k_max, 10^4)]

    std::string tag;
};

/// Locates the integer k at which the monotone predicate r(k) < bound flips,
/// if it flips in [1, k_max]. The closed-form root (c delta - beta)/(alpha -
/// c gamma) only seeds the search; the returned threshold is certified by
/// direct evaluation at flip_k - 1 and flip_k and by a pointwise scan of
/// [1, min(k_max, 10^4)]. A zero determinant (constant r) is classified as
/// AlwaysTrue/AlwaysFalse from any sample.
CrossoverReport find_threshold(const RationalVsConstant& cmp, long long k_max);

}  // namespace penopt
