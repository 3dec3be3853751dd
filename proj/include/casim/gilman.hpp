#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "casim/core.hpp"
#include "casim/measure.hpp"
#include "casim/random.hpp"

namespace casim {

/// Monte Carlo estimate of mu(C_n(x) cap B_m^T(x)) / mu(C_n(x)).
/// The membership horizon T truncates the infinite time quantifier; the
/// truncated set contains the true one, so the estimate upper-bounds the
/// true ratio.
struct RatioEstimate {
    double estimate = 0.0;
    double wilson_lo = 0.0;
    double wilson_hi = 1.0;
    std::uint64_t successes = 0;
    std::uint64_t samples = 0;
    int m = 0;
    int n = 0;
    int T = 0;
};

/// True iff the central half-width-m columns of x and y agree for all
/// time steps 0..T. Both windows must cover [-m - r*T, m + r*T].
bool b_set_member(const LocalRule& rule, const WindowConfig& x, const WindowConfig& y, int m, int T);

/// Draws y ~ mu(. | C_n(x)) and counts horizon-T column agreements at
/// half-width m. x_window must cover [-n - r*T, n + r*T]; requires m <= n.
RatioEstimate estimate_ratio(const LocalRule& rule, const StochasticMeasure& mu,
                             const WindowConfig& x_window, int m, int n, int T,
                             std::uint64_t samples, const RandomStream& s, unsigned threads = 1);

struct WitnessResult {
    std::optional<WindowConfig> witness;
    bool exhaustive = false;  // whether the full perturbation space was enumerated
};

/// Searches for y agreeing with x on [-m, m] but with a central column
/// (half-width n, horizon T) different from x's. Exhaustive when the
/// perturbable-cell state space is small, randomized up to `budget`
/// otherwise.
WitnessResult equicontinuity_witness_search(const LocalRule& rule, const WindowConfig& x_window,
                                            int n, int m, int T, std::uint64_t budget,
                                            const RandomStream& s);

struct ClassifyParams {
    std::vector<int> n_grid;
    int m = 1;
    int T = 25;
    std::uint64_t samples = 1000;
    int x_count = 10;
    std::uint64_t witness_budget = 2000;
    unsigned threads = 1;
};

struct Classification {
    std::string label;  // equicontinuous-like | mu-equicontinuous-like | expansive-like | inconclusive
    // evidence grid: estimates[i][j] is for n_grid[i], reference point j
    std::vector<std::vector<RatioEstimate>> estimates;
    std::vector<double> mean_ratio_per_n;
    std::vector<bool> witness_found_per_x;  // at the largest n
};

/// Heuristic three-way classifier. Thresholds are fixed: mean ratio above
/// 0.9 with a non-decreasing trend reads as mu-equicontinuous-like, below
/// 0.1 and decreasing as expansive-like; no witness at the largest n for
/// any sampled x reads as equicontinuous-like.
Classification classify(const LocalRule& rule, const StochasticMeasure& mu,
                        const ClassifyParams& params, const RandomStream& s);

}  // namespace casim
