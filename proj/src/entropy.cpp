#include "casim/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "casim/parallel.hpp"

namespace casim {

namespace {

using WordCounts = std::unordered_map<std::string, std::uint64_t>;

struct ColumnAcc {
    std::vector<WordCounts> per_t;  // index t-1: counts of height-t column words
};

EntropyTrace entropy_from_columns(const LocalRule& rule, int p, int T, std::uint64_t samples,
                                  unsigned threads,
                                  const std::function<WindowConfig(std::uint64_t)>& window_at) {
    if (p < 0) throw std::invalid_argument("column_entropy requires p >= 0");
    if (T < 1) throw std::invalid_argument("column_entropy requires T >= 1");
    if (samples < 1) throw std::invalid_argument("column_entropy requires samples >= 1");
    const int r = rule.radius();
    const std::size_t row = 2 * static_cast<std::size_t>(p) + 1;

    ColumnAcc acc = parallel_accumulate<ColumnAcc>(
        samples, threads,
        [&](ColumnAcc& a, std::uint64_t i) {
            if (a.per_t.empty()) a.per_t.resize(static_cast<std::size_t>(T));
            WindowConfig x = window_at(i);
            if (!x.covers(-p - static_cast<std::int64_t>(r) * T, p + static_cast<std::int64_t>(r) * T)) {
                throw std::invalid_argument("sample window does not cover the light cone");
            }
            std::size_t len = x.cells.size();
            std::int64_t offset = x.offset;
            std::string key;
            key.reserve(row * static_cast<std::size_t>(T));
            for (int t = 1; t <= T; ++t) {
                const std::size_t start = static_cast<std::size_t>(-p - offset);
                key.append(reinterpret_cast<const char*>(x.cells.data() + start), row);
                ++a.per_t[static_cast<std::size_t>(t - 1)][key];
                if (t == T) break;
                len = step_inplace(rule, x.cells.data(), len);
                offset += r;
            }
        },
        [T](ColumnAcc& total, ColumnAcc& part) {
            if (total.per_t.empty()) total.per_t.resize(static_cast<std::size_t>(T));
            for (std::size_t t = 0; t < part.per_t.size(); ++t) {
                for (auto& [w, c] : part.per_t[t]) total.per_t[t][w] += c;
            }
        });
    if (acc.per_t.empty()) acc.per_t.resize(static_cast<std::size_t>(T));

    EntropyTrace trace;
    trace.p = p;
    trace.samples = samples;
    const double N = static_cast<double>(samples);
    double prev_mm = 0.0;
    for (int t = 1; t <= T; ++t) {
        const WordCounts& counts = acc.per_t[static_cast<std::size_t>(t - 1)];
        // summation in count order keeps the result independent of the
        // hash-map iteration order (and hence of the thread count)
        std::vector<std::uint64_t> cs;
        cs.reserve(counts.size());
        for (const auto& [w, c] : counts) cs.push_back(c);
        std::sort(cs.begin(), cs.end());
        double sum_clogc = 0.0;
        for (std::uint64_t c : cs) {
            const double cd = static_cast<double>(c);
            sum_clogc += cd * std::log(cd);
        }
        const double h = std::log(N) - sum_clogc / N;
        const std::uint64_t distinct = counts.size();
        const double mm = h + static_cast<double>(distinct - 1) / (2.0 * N);
        trace.H_plugin.push_back(h);
        trace.H_mm.push_back(mm);
        trace.rate_ratio.push_back(mm / t);
        trace.rate_diff.push_back(mm - prev_mm);
        trace.distinct.push_back(distinct);
        if (distinct > samples / 10) trace.undersampled = true;
        prev_mm = mm;
    }
    return trace;
}

}  // namespace

EntropyTrace column_entropy(const LocalRule& rule, const StochasticMeasure& mu, int p, int T,
                            std::uint64_t samples, const RandomStream& s, unsigned threads) {
    const int r = rule.radius();
    const std::int64_t half = p + static_cast<std::int64_t>(r) * T;
    return entropy_from_columns(rule, p, T, samples, threads, [&](std::uint64_t i) {
        RandomStream sub = s.substream(i);
        return mu.sample_window(-half, half, sub);
    });
}

EntropyTrace column_entropy_from_windows(const LocalRule& rule,
                                         const std::vector<WindowConfig>& windows, int p, int T,
                                         unsigned threads) {
    if (windows.empty()) throw std::invalid_argument("column_entropy needs at least one window");
    return entropy_from_columns(rule, p, T, windows.size(), threads,
                                [&](std::uint64_t i) { return windows[i]; });
}

EntropyRate entropy_rate_estimate(const EntropyTrace& trace) {
    if (trace.H_mm.size() < 3) {
        throw std::invalid_argument("entropy_rate_estimate requires T >= 3");
    }
    EntropyRate rate;
    const std::size_t T = trace.H_mm.size();
    rate.via_diff = trace.H_mm[T - 1] - trace.H_mm[T - 2];
    rate.via_ratio = trace.H_mm[T - 1] / static_cast<double>(T);
    rate.recommendation = "diff";
    return rate;
}

}  // namespace casim
