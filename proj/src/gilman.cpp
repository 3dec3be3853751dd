#include "casim/gilman.hpp"

#include <cmath>
#include <stdexcept>

#include "casim/parallel.hpp"
#include "casim/stats.hpp"

namespace casim {

namespace {

// Evolves the cells of y in place and compares the central half-width-m
// word against a precomputed reference column, stopping at the first
// mismatching time step. `offset` is the absolute coordinate of cells[0].
bool column_matches(const LocalRule& rule, const std::vector<Word>& ref_column, Word& cells,
                    std::int64_t offset, int m, int T) {
    const int r = rule.radius();
    std::size_t len = cells.size();
    for (int t = 0;; ++t) {
        const std::size_t start = static_cast<std::size_t>(-m - offset);
        const Word& ref = ref_column[static_cast<std::size_t>(t)];
        for (std::size_t j = 0; j < ref.size(); ++j) {
            if (cells[start + j] != ref[j]) return false;
        }
        if (t == T) return true;
        len = step_inplace(rule, cells.data(), len);
        offset += r;
    }
}

void check_lightcone(const WindowConfig& w, int half_width, int r, int T, const char* what) {
    if (!w.covers(-half_width - static_cast<std::int64_t>(r) * T,
                  half_width + static_cast<std::int64_t>(r) * T)) {
        throw std::invalid_argument(std::string(what) + " does not cover the light cone");
    }
}

}  // namespace

bool b_set_member(const LocalRule& rule, const WindowConfig& x, const WindowConfig& y, int m,
                  int T) {
    const int r = rule.radius();
    check_lightcone(x, m, r, T, "x window");
    check_lightcone(y, m, r, T, "y window");
    const std::vector<Word> ref = evolve_column(rule, x, m, T);
    Word cells = y.cells;
    return column_matches(rule, ref, cells, y.offset, m, T);
}

RatioEstimate estimate_ratio(const LocalRule& rule, const StochasticMeasure& mu,
                             const WindowConfig& x_window, int m, int n, int T,
                             std::uint64_t samples, const RandomStream& s, unsigned threads) {
    if (m > n) throw std::invalid_argument("estimate_ratio requires m <= n");
    if (samples < 1) throw std::invalid_argument("estimate_ratio requires samples >= 1");
    const int r = rule.radius();
    check_lightcone(x_window, n, r, T, "x window");

    const std::vector<Word> ref = evolve_column(rule, x_window, m, T);
    WindowConfig core;
    core.offset = -n;
    core.cells.assign(x_window.cells.begin() + static_cast<std::size_t>(-n - x_window.offset),
                      x_window.cells.begin() + static_cast<std::size_t>(n + 1 - x_window.offset));
    const std::int64_t half = std::max<std::int64_t>(n, m + static_cast<std::int64_t>(r) * T);

    const std::uint64_t hits = parallel_accumulate<std::uint64_t>(
        samples, threads,
        [&](std::uint64_t& acc, std::uint64_t i) {
            RandomStream sub = s.substream(i);
            WindowConfig y = mu.sample_conditional_extension(core, -half, half, sub);
            if (column_matches(rule, ref, y.cells, y.offset, m, T)) ++acc;
        },
        [](std::uint64_t& total, const std::uint64_t& part) { total += part; });

    RatioEstimate est;
    est.successes = hits;
    est.samples = samples;
    est.estimate = static_cast<double>(hits) / static_cast<double>(samples);
    const WilsonInterval wi = wilson_interval(hits, samples);
    est.wilson_lo = wi.lo;
    est.wilson_hi = wi.hi;
    est.m = m;
    est.n = n;
    est.T = T;
    return est;
}

WitnessResult equicontinuity_witness_search(const LocalRule& rule, const WindowConfig& x_window,
                                            int n, int m, int T, std::uint64_t budget,
                                            const RandomStream& s) {
    const int r = rule.radius();
    check_lightcone(x_window, n, r, T, "x window");
    const std::int64_t lo = -n - static_cast<std::int64_t>(r) * T;
    const std::int64_t hi = n + static_cast<std::int64_t>(r) * T;

    // Absolute coordinates of the perturbable cells (light cone minus the
    // agreement block [-m, m]).
    std::vector<std::int64_t> free_pos;
    for (std::int64_t i = lo; i <= hi; ++i) {
        if (i < -m || i > m) free_pos.push_back(i);
    }
    const std::vector<Word> ref = evolve_column(rule, x_window, n, T);
    const std::size_t k = static_cast<std::size_t>(rule.alphabet_size());

    WindowConfig base;
    base.offset = lo;
    base.cells.assign(x_window.cells.begin() + static_cast<std::size_t>(lo - x_window.offset),
                      x_window.cells.begin() + static_cast<std::size_t>(hi + 1 - x_window.offset));

    const auto differs_from_x = [&](const WindowConfig& y) {
        for (std::int64_t i : free_pos) {
            if (y.at(i) != base.at(i)) return true;
        }
        return false;
    };
    const auto is_witness = [&](const WindowConfig& y) {
        Word cells = y.cells;
        return !column_matches(rule, ref, cells, y.offset, n, T);
    };

    // Exhaustive only while the assignment count stays desk-sized.
    double space = 1.0;
    for (std::size_t i = 0; i < free_pos.size() && space <= 4e6; ++i) space *= static_cast<double>(k);
    if (free_pos.size() <= 20 && space <= 4e6) {
        WindowConfig y = base;
        std::vector<std::size_t> digits(free_pos.size(), 0);
        const std::uint64_t count = static_cast<std::uint64_t>(space);
        for (std::uint64_t it = 0; it < count; ++it) {
            for (std::size_t j = 0; j < free_pos.size(); ++j) {
                y.cells[static_cast<std::size_t>(free_pos[j] - lo)] = static_cast<Symbol>(digits[j]);
            }
            if (differs_from_x(y) && is_witness(y)) return {y, true};
            // odometer increment
            for (std::size_t j = 0; j < digits.size(); ++j) {
                if (++digits[j] < k) break;
                digits[j] = 0;
            }
        }
        return {std::nullopt, true};
    }

    for (std::uint64_t trial = 0; trial < budget; ++trial) {
        RandomStream sub = s.substream(trial);
        WindowConfig y = base;
        for (std::int64_t i : free_pos) {
            y.cells[static_cast<std::size_t>(i - lo)] = static_cast<Symbol>(sub.next_below(k));
        }
        if (differs_from_x(y) && is_witness(y)) return {y, false};
    }
    return {std::nullopt, false};
}

Classification classify(const LocalRule& rule, const StochasticMeasure& mu,
                        const ClassifyParams& params, const RandomStream& s) {
    if (params.n_grid.empty()) throw std::invalid_argument("classify: empty n grid");
    for (std::size_t i = 1; i < params.n_grid.size(); ++i) {
        if (params.n_grid[i] <= params.n_grid[i - 1]) {
            throw std::invalid_argument("classify: n grid must be increasing");
        }
    }
    if (params.m > params.n_grid.front()) {
        throw std::invalid_argument("classify: m must be <= min of the n grid");
    }
    const int r = rule.radius();
    const int n_max = params.n_grid.back();
    const std::int64_t half = n_max + static_cast<std::int64_t>(r) * params.T;

    Classification result;
    RandomStream x_stream = s.substream(0);
    std::vector<WindowConfig> refs;
    for (int j = 0; j < params.x_count; ++j) {
        RandomStream sub = x_stream.substream(static_cast<std::uint64_t>(j));
        refs.push_back(mu.sample_window(-half, half, sub));
    }

    result.estimates.resize(params.n_grid.size());
    std::vector<std::uint64_t> hits(params.n_grid.size(), 0);
    for (std::size_t ni = 0; ni < params.n_grid.size(); ++ni) {
        for (int j = 0; j < params.x_count; ++j) {
            RandomStream sub = s.substream(1 + ni * static_cast<std::size_t>(params.x_count) +
                                           static_cast<std::size_t>(j));
            RatioEstimate est = estimate_ratio(rule, mu, refs[static_cast<std::size_t>(j)],
                                               params.m, params.n_grid[ni], params.T,
                                               params.samples, sub, params.threads);
            hits[ni] += est.successes;
            result.estimates[ni].push_back(est);
        }
        result.mean_ratio_per_n.push_back(
            static_cast<double>(hits[ni]) /
            (static_cast<double>(params.samples) * static_cast<double>(params.x_count)));
    }

    // Equicontinuity probe: can anything outside [-n, n] move the central
    // column within horizon T? Exhaustive enumeration is required to claim
    // the negative.
    RandomStream w_stream = s.substream(999983);
    bool all_exhaustive_none = true;
    for (int j = 0; j < params.x_count; ++j) {
        WitnessResult wr = equicontinuity_witness_search(
            rule, refs[static_cast<std::size_t>(j)], n_max, n_max, params.T,
            params.witness_budget, w_stream.substream(static_cast<std::uint64_t>(j)));
        result.witness_found_per_x.push_back(wr.witness.has_value());
        if (wr.witness.has_value() || !wr.exhaustive) all_exhaustive_none = false;
    }

    const std::uint64_t per_n_trials =
        params.samples * static_cast<std::uint64_t>(params.x_count);
    const auto pooled = [&](std::size_t ni) { return wilson_interval(hits[ni], per_n_trials); };
    bool non_decreasing = true;
    bool non_increasing = true;
    bool stays_low = true;
    for (std::size_t ni = 0; ni < params.n_grid.size(); ++ni) {
        if (result.mean_ratio_per_n[ni] >= 0.1) stays_low = false;
        if (ni == 0) continue;
        const WilsonInterval a = pooled(ni - 1);
        const WilsonInterval b = pooled(ni);
        const bool overlap = a.lo <= b.hi && b.lo <= a.hi;
        if (result.mean_ratio_per_n[ni] < result.mean_ratio_per_n[ni - 1] && !overlap)
            non_decreasing = false;
        if (result.mean_ratio_per_n[ni] > result.mean_ratio_per_n[ni - 1] && !overlap)
            non_increasing = false;
    }
    const double last = result.mean_ratio_per_n.back();
    if (all_exhaustive_none) {
        result.label = "equicontinuous-like";
    } else if (last > 0.9 && non_decreasing) {
        result.label = "mu-equicontinuous-like";
    } else if (last < 0.1 && (stays_low || non_increasing)) {
        // either the ratio never leaves the low band as the conditioning
        // tightens, or it visibly decays toward it
        result.label = "expansive-like";
    } else {
        result.label = "inconclusive";
    }
    return result;
}

}  // namespace casim
