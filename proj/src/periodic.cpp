#include "casim/periodic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace casim {

namespace {

constexpr std::uint64_t kExhaustiveCap = 10'000'000;

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = 1469598103934665603ULL;
        for (Symbol c : w) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

std::uint64_t pow_capped(std::uint64_t base, int exp, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (int i = 0; i < exp; ++i) {
        if (v > cap / base) return cap + 1;
        v *= base;
    }
    return v;
}

Word rotate(const Word& w, std::size_t d) {
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(i + d) % w.size()];
    return out;
}

bool verify_periodic(const LocalRule& rule, const Word& w, std::uint64_t m) {
    TorusConfig t{w};
    for (std::uint64_t i = 0; i < m; ++i) t = step_torus(rule, t);
    return t.cells == w;
}

// Least F-period of a torus state known to satisfy F^p(state) = state.
std::uint64_t least_period_on_cycle(const LocalRule& rule, const Word& state, std::uint64_t p) {
    for (std::uint64_t d = 1; d <= p; ++d) {
        if (p % d == 0 && verify_periodic(rule, state, d)) return d;
    }
    return p;
}

}  // namespace

Word canonical_periodic_word(const Word& w) {
    if (w.empty()) throw std::invalid_argument("canonical_periodic_word: empty word");
    // Primitive root: the shortest cyclic period of w.
    std::size_t root = w.size();
    for (std::size_t d = 1; d < w.size(); ++d) {
        if (w.size() % d != 0) continue;
        if (rotate(w, d) == w) {
            root = d;
            break;
        }
    }
    Word base(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(root));
    Word best = base;
    for (std::size_t d = 1; d < base.size(); ++d) {
        Word r = rotate(base, d);
        if (r < best) best = r;
    }
    return best;
}

OrbitCycleInfo torus_cycle(const LocalRule& rule, const TorusConfig& t0, std::uint64_t max_steps,
                           std::size_t max_cycle_record) {
    check_symbols(t0.cells, rule.alphabet_size());
    if (t0.size() == 0) throw std::invalid_argument("torus_cycle: empty configuration");
    if (max_steps == 0) {
        max_steps = pow_capped(static_cast<std::uint64_t>(rule.alphabet_size()),
                               static_cast<int>(t0.size()), kExhaustiveCap);
        if (max_steps > kExhaustiveCap) max_steps = kExhaustiveCap;
    }

    std::unordered_map<Word, std::uint64_t, WordHash> first_seen;
    std::vector<Word> trajectory;
    TorusConfig cur = t0;
    for (std::uint64_t step = 0; step <= max_steps; ++step) {
        auto [it, inserted] = first_seen.try_emplace(cur.cells, step);
        if (!inserted) {
            OrbitCycleInfo info;
            info.preperiod = it->second;
            info.period = step - it->second;
            if (info.period <= max_cycle_record) {
                info.cycle.assign(trajectory.begin() + static_cast<std::ptrdiff_t>(info.preperiod),
                                  trajectory.begin() + static_cast<std::ptrdiff_t>(step));
            }
            return info;
        }
        trajectory.push_back(cur.cells);
        cur = step_torus(rule, cur);
    }
    OrbitCycleInfo info;
    info.found = false;
    return info;
}

PeriodicPointReport find_periodic_points(const LocalRule& rule, int L_max,
                                         std::uint64_t time_bound, std::uint64_t sample_budget,
                                         const RandomStream* s) {
    if (L_max < 1) throw std::invalid_argument("find_periodic_points requires L_max >= 1");
    const std::uint64_t k = static_cast<std::uint64_t>(rule.alphabet_size());
    PeriodicPointReport report;
    std::set<Word> seen;

    const auto consider = [&](const Word& w) {
        OrbitCycleInfo info = torus_cycle(rule, TorusConfig{w}, time_bound);
        if (!info.found) {
            report.complete = false;
            return;
        }
        std::vector<const Word*> candidates;
        if (info.preperiod == 0) {
            candidates.push_back(&w);
        }
        for (const Word& state : info.cycle) candidates.push_back(&state);
        for (const Word* cand : candidates) {
            Word canon = canonical_periodic_word(*cand);
            if (!seen.insert(canon).second) continue;
            const std::uint64_t m = least_period_on_cycle(rule, canon, info.period);
            if (!verify_periodic(rule, canon, m)) continue;  // cannot happen; belt and braces
            report.points.push_back(PeriodicPoint{std::move(canon), m});
        }
    };

    for (int L = 1; L <= L_max; ++L) {
        const std::uint64_t space = pow_capped(k, L, kExhaustiveCap);
        if (space <= kExhaustiveCap) {
            Word w(static_cast<std::size_t>(L), 0);
            for (std::uint64_t it = 0; it < space; ++it) {
                // only canonical representatives seed orbits
                bool canonical = true;
                for (std::size_t d = 1; d < w.size() && canonical; ++d) {
                    Word r = rotate(w, d);
                    if (r <= w && r != w) canonical = false;
                    if (r == w) canonical = false;  // non-primitive; covered at length d
                }
                if (w.size() == 1) canonical = true;
                if (canonical) consider(w);
                for (std::size_t j = w.size(); j-- > 0;) {
                    if (++w[j] < k) break;
                    w[j] = 0;
                }
            }
        } else {
            report.complete = false;
            if (sample_budget > 0 && s != nullptr) {
                RandomStream stream = s->substream(static_cast<std::uint64_t>(L));
                for (std::uint64_t b = 0; b < sample_budget; ++b) {
                    Word w(static_cast<std::size_t>(L));
                    for (auto& c : w) c = static_cast<Symbol>(stream.next_below(k));
                    consider(w);
                }
            }
        }
    }
    std::sort(report.points.begin(), report.points.end(),
              [](const PeriodicPoint& a, const PeriodicPoint& b) {
                  if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
                  return a.word < b.word;
              });
    return report;
}

bool point_covers_word(const PeriodicPoint& pt, const Word& u) {
    if (u.empty()) return true;
    const std::size_t L = pt.word.size();
    for (std::size_t start = 0; start < L; ++start) {
        bool match = true;
        for (std::size_t j = 0; j < u.size(); ++j) {
            if (pt.word[(start + j) % L] != u[j]) {
                match = false;
                break;
            }
        }
        if (match) return true;
    }
    return false;
}

DensityReport density_check(const std::vector<PeriodicPoint>& points,
                            const EmpiricalCylinderMeasure& support, double threshold) {
    DensityReport report;
    for (const auto& [word, count] : support.counts) {
        const double freq = static_cast<double>(count) / static_cast<double>(support.total);
        if (!(freq > threshold)) continue;
        ++report.total_words;
        bool covered = false;
        for (const auto& pt : points) {
            if (point_covers_word(pt, word)) {
                covered = true;
                break;
            }
        }
        if (covered) {
            ++report.covered_words;
        } else {
            report.uncovered.push_back(word);
        }
    }
    report.coverage = report.total_words == 0
                          ? 1.0
                          : static_cast<double>(report.covered_words) /
                                static_cast<double>(report.total_words);
    return report;
}

}  // namespace casim
