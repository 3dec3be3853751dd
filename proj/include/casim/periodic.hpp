#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "casim/cesaro.hpp"
#include "casim/core.hpp"
#include "casim/random.hpp"

namespace casim {

/// Exact preperiod/period of a finite torus orbit.
struct OrbitCycleInfo {
    std::uint64_t preperiod = 0;
    std::uint64_t period = 1;
    std::vector<Word> cycle;  // states F^pp(w) .. F^(pp+p-1)(w); bounded, may be empty if huge
    bool found = true;        // false when the step bound was exhausted
};

/// Spatially periodic configuration ...www... with F^m(w-bar) = w-bar.
struct PeriodicPoint {
    Word word;            // canonical form: primitive, lexicographically least rotation
    std::uint64_t period = 1;  // least m with F^m(w-bar) = w-bar
};

/// Detects the first repeated state of the torus orbit by a visited-state
/// map; returns exact (preperiod, period). The default step bound is k^L
/// capped at 10^7.
OrbitCycleInfo torus_cycle(const LocalRule& rule, const TorusConfig& t0,
                           std::uint64_t max_steps = 0, std::size_t max_cycle_record = 4096);

/// Finds F-periodic points among spatially periodic configurations of
/// period <= L_max: enumerates primitive least-rotation words (exhaustive
/// while k^L <= 10^7), runs each torus orbit, and reports both immediate
/// periodic points (preperiod 0) and representatives of cycles reached
/// with positive preperiod. Every returned point is re-verified by
/// `period` explicit torus steps.
struct PeriodicPointReport {
    std::vector<PeriodicPoint> points;
    bool complete = true;  // false when a budget or time bound was hit
};
/// For lengths where k^L exceeds the exhaustive cap, `sample_budget`
/// random words are tried instead (requires a stream); the report is then
/// flagged incomplete.
PeriodicPointReport find_periodic_points(const LocalRule& rule, int L_max,
                                         std::uint64_t time_bound = 0,
                                         std::uint64_t sample_budget = 0,
                                         const RandomStream* s = nullptr);

/// True iff u occurs in the bi-infinite repetition ...www... of the
/// point's word.
bool point_covers_word(const PeriodicPoint& pt, const Word& u);

struct DensityReport {
    std::uint64_t total_words = 0;    // support words with frequency > threshold
    std::uint64_t covered_words = 0;
    double coverage = 0.0;            // 1.0 when total_words == 0
    std::vector<Word> uncovered;
};

/// Checks that every support word above the frequency threshold occurs in
/// some found periodic point's bi-infinite repetition.
DensityReport density_check(const std::vector<PeriodicPoint>& points,
                            const EmpiricalCylinderMeasure& support, double threshold);

/// Lexicographically least rotation of the primitive root of w.
Word canonical_periodic_word(const Word& w);

}  // namespace casim
