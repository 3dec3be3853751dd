#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "casim/core.hpp"
#include "casim/measure.hpp"
#include "casim/random.hpp"

namespace casim {

/// Block-entropy trace of the central (2p+1)-column process, in nats.
/// H_t is the entropy of the empirical distribution of height-t column
/// words; Miller-Madow adds (distinct - 1) / (2 * samples).
struct EntropyTrace {
    int p = 0;
    std::uint64_t samples = 0;
    std::vector<double> H_plugin;        // index t-1 holds H_t, t = 1..T
    std::vector<double> H_mm;
    std::vector<double> rate_ratio;      // H_t / t (plug-in)
    std::vector<double> rate_diff;       // H_t - H_{t-1} (Miller-Madow)
    std::vector<std::uint64_t> distinct; // distinct height-t words observed
    bool undersampled = false;           // distinct count exceeded samples/10 at some t
};

/// Column words drawn from mu: each sample contributes the sequence
/// (F^i(x)(-p, p))_{i < t} for every t <= T.
EntropyTrace column_entropy(const LocalRule& rule, const StochasticMeasure& mu, int p, int T,
                            std::uint64_t samples, const RandomStream& s, unsigned threads = 1);

/// Same estimator over pre-drawn windows (e.g. approximate mu_c samples
/// from sample_mu_c_approx). Windows must cover [-p - r*T, p + r*T].
EntropyTrace column_entropy_from_windows(const LocalRule& rule,
                                         const std::vector<WindowConfig>& windows, int p, int T,
                                         unsigned threads = 1);

struct EntropyRate {
    double via_diff = 0.0;   // H_T - H_{T-1}, Miller-Madow
    double via_ratio = 0.0;  // H_T / T, Miller-Madow
    std::string recommendation;  // "diff": less biased when columns are eventually periodic
};

EntropyRate entropy_rate_estimate(const EntropyTrace& trace);

}  // namespace casim
