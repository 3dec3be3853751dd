// Acceptance gate: every criterion below pins its parameters and
// tolerances and must pass before a release. Run via ctest (the CLI
// binary path arrives as argv[1]) or manually:
//   ./acceptance /path/to/casim
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "casim/cesaro.hpp"
#include "casim/core.hpp"
#include "casim/entropy.hpp"
#include "casim/gilman.hpp"
#include "casim/measure.hpp"
#include "casim/periodic.hpp"
#include "casim/random.hpp"
#include "casim/stats.hpp"
#include "casim/zoo.hpp"

using namespace casim;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(const std::string& name, bool ok, const std::string& detail) {
    std::printf("%-34s %s  %s\n", name.c_str(), ok ? "PASS" : "FAIL", detail.c_str());
    if (!ok) ++g_failures;
}

LocalRule random_rule(RandomStream& s) {
    const int k = 2 + static_cast<int>(s.next_below(2));  // k in {2,3}
    const int r = 1 + static_cast<int>(s.next_below(2));  // r in {1,2}
    std::size_t len = 1;
    for (int i = 0; i < 2 * r + 1; ++i) len *= static_cast<std::size_t>(k);
    Word table(len);
    for (auto& c : table) c = static_cast<Symbol>(s.next_below(static_cast<std::uint64_t>(k)));
    return LocalRule(k, r, std::move(table));
}

// 1. torus evolution agrees exactly with light-cone evolution on the
//    unrolled periodic configuration
void criterion_exactness() {
    const auto t0 = Clock::now();
    bool ok = true;
    RandomStream s(1001);
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        RandomStream sub = s.substream(static_cast<std::uint64_t>(trial));
        LocalRule rule = random_rule(sub);
        const int L = 1 + static_cast<int>(sub.next_below(12));
        const int T = 1 + static_cast<int>(sub.next_below(12));
        TorusConfig torus;
        for (int i = 0; i < L; ++i) {
            torus.cells.push_back(
                static_cast<Symbol>(sub.next_below(static_cast<std::uint64_t>(rule.alphabet_size()))));
        }
        // unroll enough periods to keep [0, L) inside the light cone
        const std::int64_t pad = static_cast<std::int64_t>(rule.radius()) * T;
        WindowConfig w{-pad, {}};
        for (std::int64_t i = -pad; i < L + pad; ++i) {
            const std::int64_t m = ((i % L) + L) % L;
            w.cells.push_back(torus.cells[static_cast<std::size_t>(m)]);
        }
        TorusConfig tt = torus;
        for (int t = 0; t < T; ++t) {
            tt = step_torus(rule, tt);
            w = step_lightcone(rule, w);
        }
        for (int i = 0; i < L; ++i) ok = ok && w.at(i) == tt.cells[static_cast<std::size_t>(i)];
    }
    const double dt = seconds_since(t0);
    report("1 exact torus/light-cone", ok && dt < 10.0,
           "1000 random triples, " + std::to_string(dt) + "s (budget 10s)");
}

// 2. every rule commutes with the shift
void criterion_shift_commutation() {
    bool ok = true;
    RandomStream s(1002);
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        RandomStream sub = s.substream(static_cast<std::uint64_t>(trial));
        LocalRule rule = random_rule(sub);
        const int len = static_cast<int>(rule.neighborhood_size()) + 1 +
                        static_cast<int>(sub.next_below(20));
        WindowConfig w{static_cast<std::int64_t>(sub.next_below(41)) - 20, {}};
        for (int i = 0; i < len; ++i) {
            w.cells.push_back(
                static_cast<Symbol>(sub.next_below(static_cast<std::uint64_t>(rule.alphabet_size()))));
        }
        WindowConfig shifted = w;
        shifted.offset -= 1;  // sigma: cell i of sigma(x) is x_{i+1}
        WindowConfig a = step_lightcone(rule, shifted);
        WindowConfig b = step_lightcone(rule, w);
        b.offset -= 1;
        ok = ok && a == b;
    }
    report("2 shift commutation", ok, "1000 random window/rule pairs, exact");
}

// 3. shift + Bernoulli(1/2): the ratio has closed form 2^-(m+T-n) = 2^-7
void criterion_shift_ratio() {
    const auto t0 = Clock::now();
    LocalRule sh = shift_rule(2);
    auto mu = StochasticMeasure::bernoulli({0.5, 0.5});
    RandomStream s(1003);
    const int m = 2, n = 5, T = 10;
    const std::int64_t half = n + static_cast<std::int64_t>(sh.radius()) * T;
    // the closed form does not depend on the reference point, so pool
    // several to tighten the interval
    std::uint64_t hits = 0, trials = 0;
    for (std::uint64_t j = 0; j < 5; ++j) {
        RandomStream xs = s.substream(2 * j);
        WindowConfig x = mu.sample_window(-half, half, xs);
        RatioEstimate est = estimate_ratio(sh, mu, x, m, n, T, 100000, s.substream(2 * j + 1), 8);
        hits += est.successes;
        trials += est.samples;
    }
    const double truth = std::pow(2.0, -(m + T - n));
    const double estimate = static_cast<double>(hits) / static_cast<double>(trials);
    const WilsonInterval wi = wilson_interval(hits, trials);
    const bool in_wilson = wi.lo <= truth && truth <= wi.hi;
    const bool in_band = 0.006 <= estimate && estimate <= 0.010;
    const double dt = seconds_since(t0);
    std::ostringstream d;
    d << "estimate " << estimate << " vs 2^-7=" << truth << ", " << dt << "s (budget 30s)";
    report("3 shift closed form", in_wilson && in_band && dt < 30.0, d.str());
}

// 4. identity: C_n(x) subset of B_m^T(x) whenever m <= n, so the ratio is 1
void criterion_identity_ratio() {
    const auto t0 = Clock::now();
    LocalRule ident = identity_rule(3);
    auto mu = StochasticMeasure::bernoulli({0.2, 0.3, 0.5});
    RandomStream s(1004);
    bool ok = true;
    for (int n : {1, 3, 6}) {
        for (int m = 1; m <= n; ++m) {
            for (int T : {1, 10, 50}) {
                RandomStream xs = s.substream(static_cast<std::uint64_t>(n * 1000 + m * 10 + T));
                WindowConfig x = mu.sample_window(-n, n, xs);
                RatioEstimate est = estimate_ratio(ident, mu, x, m, n, T, 2000, xs.substream(1));
                ok = ok && est.estimate == 1.0;
            }
        }
    }
    const double dt = seconds_since(t0);
    report("4 identity ratio == 1", ok && dt < 5.0,
           "(m,n,T) grid, " + std::to_string(dt) + "s (budget 5s)");
}

// 5. the built-in F_s study reproduces its headline behavior for 5 seeds
void criterion_fs_study() {
    const auto t0 = Clock::now();
    LocalRule fs = gilman_fs();
    auto mu = StochasticMeasure::bernoulli({0.2, 0.3, 0.5});
    bool trend_ok = true, witness_ok = true, cesaro_ok = true;
    const int m = 1, T = 100, n_lo = 2, n_hi = 20, x_count = 50;
    const std::uint64_t samples = 10000;
    for (std::uint64_t seed : {11u, 12u, 13u, 14u, 15u}) {
        RandomStream root(seed);
        const std::int64_t half = n_hi + static_cast<std::int64_t>(fs.radius()) * T;
        std::uint64_t hits_lo = 0, hits_hi = 0;
        RandomStream x_stream = root.substream(0);
        for (int j = 0; j < x_count; ++j) {
            RandomStream xs = x_stream.substream(static_cast<std::uint64_t>(j));
            WindowConfig x = mu.sample_window(-half, half, xs);
            hits_lo += estimate_ratio(fs, mu, x, m, n_lo, T, samples,
                                      root.substream(1 + 2 * static_cast<std::uint64_t>(j)), 8)
                           .successes;
            hits_hi += estimate_ratio(fs, mu, x, m, n_hi, T, samples,
                                      root.substream(2 + 2 * static_cast<std::uint64_t>(j)), 8)
                           .successes;
            // (b) a sensitivity witness exists for every reference point
            WitnessResult wr = equicontinuity_witness_search(
                fs, x, 1, 1, 50, 2000, root.substream(500000 + static_cast<std::uint64_t>(j)));
            witness_ok = witness_ok && wr.witness.has_value();
        }
        const std::uint64_t trials = samples * x_count;
        const WilsonInterval lo = wilson_interval(hits_lo, trials);
        const WilsonInterval hi = wilson_interval(hits_hi, trials);
        trend_ok = trend_ok && hits_hi > hits_lo && lo.hi < hi.lo;
        // (c) the symbol-1 cylinder loses at least half its Cesaro mass
        CesaroTrace tr =
            cesaro_cylinder_estimate(fs, mu, {1}, 200, samples, root.substream(600000), 8);
        cesaro_ok = cesaro_ok && tr.cesaro[199] < 0.5 * tr.cesaro[19];
    }
    // (d) periodic points: all {0,2} words are fixed; density 1.0 on {0,2}^4
    PeriodicPointReport rep = find_periodic_points(fs, 6);
    std::set<Word> fixed;
    for (const auto& pt : rep.points)
        if (pt.period == 1) fixed.insert(pt.word);
    bool periodic_ok = rep.complete;
    for (std::uint64_t v = 0; v < 64; ++v) {
        Word w;
        for (int j = 0; j < 6; ++j) w.push_back(((v >> j) & 1) ? 2 : 0);
        periodic_ok = periodic_ok && fixed.count(canonical_periodic_word(w)) == 1;
    }
    EmpiricalCylinderMeasure support;
    support.L = 4;
    for (std::uint64_t v = 0; v < 16; ++v) {
        Word w;
        for (int j = 0; j < 4; ++j) w.push_back(((v >> j) & 1) ? 2 : 0);
        support.counts[w] = 1;
        ++support.total;
    }
    periodic_ok = periodic_ok && density_check(rep.points, support, 0.0).coverage == 1.0;
    const double dt = seconds_since(t0);
    report("5a F_s ratio trend n=2 -> n=20", trend_ok, "5 seeds, pooled Wilson separated");
    report("5b F_s witnesses at n=m", witness_ok, "50 reference points x 5 seeds");
    report("5c F_s Cesaro decay of [1]", cesaro_ok, "A_200 < 0.5 A_20, 5 seeds");
    report("5d F_s periodic density", periodic_ok && dt < 600.0,
           "{0,2}^6 fixed, coverage 1.0; total " + std::to_string(dt) + "s (budget 600s)");
}

// 6. entropy calibration against closed forms
void criterion_entropy_calibration() {
    const auto t0 = Clock::now();
    LocalRule sh = shift_rule(2);
    auto mu2 = StochasticMeasure::bernoulli({0.5, 0.5});
    RandomStream s(1006);
    EntropyTrace tr = column_entropy(sh, mu2, 0, 12, 100000, s, 8);
    EntropyRate rate = entropy_rate_estimate(tr);
    const double log2 = std::log(2.0);
    const bool shift_ok = std::abs(rate.via_diff - log2) < 0.05 * log2;

    LocalRule ident = identity_rule(3);
    auto mu3 = StochasticMeasure::bernoulli({0.2, 0.3, 0.5});
    EntropyTrace tri = column_entropy(ident, mu3, 0, 8, 50000, s.substream(1), 8);
    const bool ident_ok = std::abs(entropy_rate_estimate(tri).via_diff) < 1e-6;
    const double dt = seconds_since(t0);
    std::ostringstream d;
    d << "shift rate " << rate.via_diff << " vs log2=" << log2 << ", " << dt << "s (budget 120s)";
    report("6 entropy calibration", shift_ok && ident_ok && dt < 120.0, d.str());
}

// 7. F_s column entropy under approximate mu_c samples is near zero
void criterion_fs_entropy() {
    const auto t0 = Clock::now();
    LocalRule fs = gilman_fs();
    auto mu = StochasticMeasure::bernoulli({0.2, 0.3, 0.5});
    RandomStream s(1007);
    const int p = 1, T = 10;
    auto windows = sample_mu_c_approx(fs, mu, 200, p + fs.radius() * T, 20000, s, 8);
    EntropyTrace tr = column_entropy_from_windows(fs, windows, p, T, 8);
    EntropyRate rate = entropy_rate_estimate(tr);
    const double dt = seconds_since(t0);
    std::ostringstream d;
    d << "rate_diff " << rate.via_diff << " nats (< 0.05), " << dt << "s (budget 300s)";
    report("7 F_s near-zero column entropy", rate.via_diff < 0.05 && dt < 300.0, d.str());
}

// 8. Cesaro per-time estimates track the exact shift-invariant law
void criterion_cesaro_calibration() {
    const auto t0 = Clock::now();
    LocalRule sh = shift_rule(2);
    auto mu = StochasticMeasure::markov(2, {0.8, 0.2, 0.3, 0.7});
    RandomStream s(1008);
    bool ok = true;
    const std::uint64_t samples = 40000;
    for (const Word& w : std::vector<Word>{{0}, {1, 1}, {0, 1, 0}}) {
        const double truth = mu.cylinder_prob(w);
        CesaroTrace tr = cesaro_cylinder_estimate(sh, mu, w, 10, samples, s.substream(w.size()), 8);
        for (double v : tr.per_time) {
            const auto wi = wilson_interval(
                static_cast<std::uint64_t>(std::lround(v * static_cast<double>(samples))), samples,
                3.5);
            ok = ok && wi.lo <= truth && truth <= wi.hi;
        }
    }
    const double dt = seconds_since(t0);
    report("8 cesaro calibration", ok && dt < 60.0,
           "shift+Markov, L<=3, " + std::to_string(dt) + "s (budget 60s)");
}

// 9. torus cycle detection always terminates with a consistent answer
void criterion_orbit_termination() {
    const auto t0 = Clock::now();
    bool ok = true;
    RandomStream s(1009);
    for (int trial = 0; trial < 20 && ok; ++trial) {
        RandomStream sub = s.substream(static_cast<std::uint64_t>(trial));
        LocalRule rule = eca(static_cast<int>(sub.next_below(256)));
        for (int L : {1, 4, 8, 12}) {
            TorusConfig t0c;
            for (int i = 0; i < L; ++i)
                t0c.cells.push_back(static_cast<Symbol>(sub.next_below(2)));
            OrbitCycleInfo info = torus_cycle(rule, t0c);
            ok = ok && info.found && info.preperiod + info.period <= (1ULL << L);
            TorusConfig a = t0c;
            for (std::uint64_t i = 0; i < info.preperiod; ++i) a = step_torus(rule, a);
            TorusConfig b = a;
            for (std::uint64_t i = 0; i < info.period; ++i) b = step_torus(rule, b);
            ok = ok && a == b;
        }
    }
    const double dt = seconds_since(t0);
    report("9 orbit termination", ok && dt < 120.0,
           "20 ECA rules, L<=12, " + std::to_string(dt) + "s (budget 120s)");
}

// 10. seeded CLI runs are byte-identical for --threads 1 vs 8
std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

void criterion_cli_determinism(const std::string& cli) {
    const std::vector<std::string> invocations = {
        "ratio --rule fs --measure bernoulli:3:0.2,0.3,0.5 --m 1 --n 2 --n 8 --T 40 "
        "--samples 2000 --seed 21 --x-count 4",
        "cesaro --rule fs --measure bernoulli:3:0.2,0.3,0.5 --word 1 --n 60 --samples 3000 --seed 22",
        "cesaro --rule shift:2 --measure bernoulli:2:1/2,1/2 --L 3 --n 8 --samples 2000 --seed 23",
        "entropy --rule eca:110 --measure bernoulli:2:0.5,0.5 --p 1 --T 8 --samples 5000 --seed 24",
        "classify --rule shift:2 --measure bernoulli:2:0.5,0.5 --n 5 --n 10 --n 20 --T 25 "
        "--samples 1000 --x-count 5 --seed 25",
        "demo-fs --seed 26 --samples 500 --x-count 5",
    };
    bool ok = true;
    std::string failing;
    for (std::size_t i = 0; i < invocations.size(); ++i) {
        bool pair_ok = true;
        std::vector<std::string> outs;
        for (unsigned threads : {1u, 8u}) {
            const std::string path = "/tmp/casim_det_" + std::to_string(i) + "_" +
                                     std::to_string(threads) + ".txt";
            const std::string cmd = cli + " " + invocations[i] + " --threads " +
                                    std::to_string(threads) + " > " + path + " 2>/dev/null";
            pair_ok = pair_ok && std::system(cmd.c_str()) == 0;
            outs.push_back(slurp(path));
        }
        pair_ok = pair_ok && !outs[0].empty() && outs[0] == outs[1];
        if (!pair_ok && failing.empty()) failing = invocations[i].substr(0, invocations[i].find(' '));
        ok = ok && pair_ok;
    }
    report("10 CLI thread determinism", ok,
           ok ? "6 seeded invocations byte-identical" : "mismatch in: " + failing);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-casim-cli>\n";
        return 2;
    }
    criterion_exactness();
    criterion_shift_commutation();
    criterion_shift_ratio();
    criterion_identity_ratio();
    criterion_fs_study();
    criterion_entropy_calibration();
    criterion_fs_entropy();
    criterion_cesaro_calibration();
    criterion_orbit_termination();
    criterion_cli_determinism(argv[1]);
    if (g_failures == 0) {
        std::printf("\nacceptance: all criteria passed\n");
        return 0;
    }
    std::printf("\nacceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
