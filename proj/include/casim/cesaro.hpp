#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "casim/core.hpp"
#include "casim/measure.hpp"
#include "casim/random.hpp"

namespace casim {

/// Word frequencies on length-L cylinders, with exact integer counts.
/// Estimates mu_n = (1/n) sum_{i<n} mu o F^{-i}; the positive-frequency
/// word set doubles as the empirical topological support.
struct EmpiricalCylinderMeasure {
    int L = 0;
    std::map<Word, std::uint64_t> counts;  // ordered, so serialization is canonical
    std::uint64_t total = 0;

    std::string rule_id;
    std::string measure_id;
    int n = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;

    double frequency(const Word& w) const {
        auto it = counts.find(w);
        return it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(total);
    }
};

struct CesaroTrace {
    std::vector<double> per_time;  // estimate of mu(F^-t C(w)) for t = 0..n-1
    std::vector<double> cesaro;    // running means
    std::uint64_t samples = 0;
};

/// Per-time cylinder estimates and their Cesaro averages for one word
/// placed at the fixed central position.
CesaroTrace cesaro_cylinder_estimate(const LocalRule& rule, const StochasticMeasure& mu,
                                     const Word& w, int n, std::uint64_t samples,
                                     const RandomStream& s, unsigned threads = 1);

/// Tallies the central length-L word of F^t(x) for every sample x and
/// every t < n; total count = samples * n.
EmpiricalCylinderMeasure empirical_measure(const LocalRule& rule, const StochasticMeasure& mu,
                                           int L, int n, std::uint64_t samples,
                                           const RandomStream& s, unsigned threads = 1);

struct ConvergenceDiag {
    double max_gap = 0.0;    // max |A_t - A_{t/2}| over the dyadic checkpoints
    double final_gap = 0.0;  // |A_last - A_{last/2}|
    double last_value = 0.0;
    bool converging = false;
};

/// Empirical Cauchy diagnostics on a Cesaro-average sequence. `mc_se` is
/// the Monte Carlo standard error of the last average; the trend flag is
/// set when the final gap is below twice that.
ConvergenceDiag convergence_diag(const std::vector<double>& cesaro_averages, double mc_se);

/// Approximate mu_c samples: draws x ~ mu, picks t uniform in [0, n), and
/// returns the exact central window of F^t(x) covering [-half_width,
/// half_width]. The law is exactly mu_n restricted to the window.
std::vector<WindowConfig> sample_mu_c_approx(const LocalRule& rule, const StochasticMeasure& mu,
                                             int n, int half_width, std::uint64_t count,
                                             const RandomStream& s, unsigned threads = 1);

/// Empirical measure file: header line
///   # rule=<id> measure=<id> L=<int> n=<int> samples=<int> seed=<int>
/// then `<word><comma><count>` lines sorted lexicographically.
std::string serialize_empirical_measure(const EmpiricalCylinderMeasure& m);
EmpiricalCylinderMeasure parse_empirical_measure(const std::string& text);

}  // namespace casim
