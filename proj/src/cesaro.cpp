#include "casim/cesaro.hpp"

#include <sstream>
#include <stdexcept>

#include "casim/parallel.hpp"

namespace casim {

namespace {

// Left coordinate of the fixed central slot for a length-L word.
std::int64_t central_left(int L) { return -static_cast<std::int64_t>(L / 2); }

struct CountsAcc {
    std::vector<std::uint64_t> per_t;
};

struct MapAcc {
    std::map<Word, std::uint64_t> counts;
};

struct WindowsAcc {
    std::vector<WindowConfig> windows;
};

}  // namespace

CesaroTrace cesaro_cylinder_estimate(const LocalRule& rule, const StochasticMeasure& mu,
                                     const Word& w, int n, std::uint64_t samples,
                                     const RandomStream& s, unsigned threads) {
    if (n < 1) throw std::invalid_argument("cesaro_cylinder_estimate requires n >= 1");
    if (samples < 1) throw std::invalid_argument("cesaro_cylinder_estimate requires samples >= 1");
    if (w.empty()) throw std::invalid_argument("cesaro_cylinder_estimate requires a nonempty word");
    check_symbols(w, rule.alphabet_size());
    const int r = rule.radius();
    const std::int64_t c = central_left(static_cast<int>(w.size()));
    const std::int64_t margin = static_cast<std::int64_t>(r) * (n - 1);
    const std::int64_t lo = c - margin;
    const std::int64_t hi = c + static_cast<std::int64_t>(w.size()) - 1 + margin;

    CountsAcc acc = parallel_accumulate<CountsAcc>(
        samples, threads,
        [&](CountsAcc& a, std::uint64_t i) {
            if (a.per_t.empty()) a.per_t.assign(static_cast<std::size_t>(n), 0);
            RandomStream sub = s.substream(i);
            WindowConfig x = mu.sample_window(lo, hi, sub);
            std::size_t len = x.cells.size();
            std::int64_t offset = x.offset;
            for (int t = 0;; ++t) {
                const std::size_t start = static_cast<std::size_t>(c - offset);
                bool match = true;
                for (std::size_t j = 0; j < w.size(); ++j) {
                    if (x.cells[start + j] != w[j]) { match = false; break; }
                }
                if (match) ++a.per_t[static_cast<std::size_t>(t)];
                if (t + 1 == n) break;
                len = step_inplace(rule, x.cells.data(), len);
                offset += r;
            }
        },
        [n](CountsAcc& total, const CountsAcc& part) {
            if (total.per_t.empty()) total.per_t.assign(static_cast<std::size_t>(n), 0);
            if (part.per_t.empty()) return;
            for (std::size_t t = 0; t < total.per_t.size(); ++t) total.per_t[t] += part.per_t[t];
        });
    if (acc.per_t.empty()) acc.per_t.assign(static_cast<std::size_t>(n), 0);

    CesaroTrace trace;
    trace.samples = samples;
    trace.per_time.resize(static_cast<std::size_t>(n));
    trace.cesaro.resize(static_cast<std::size_t>(n));
    double running = 0.0;
    for (int t = 0; t < n; ++t) {
        const double v =
            static_cast<double>(acc.per_t[static_cast<std::size_t>(t)]) / static_cast<double>(samples);
        trace.per_time[static_cast<std::size_t>(t)] = v;
        running += v;
        trace.cesaro[static_cast<std::size_t>(t)] = running / (t + 1);
    }
    return trace;
}

EmpiricalCylinderMeasure empirical_measure(const LocalRule& rule, const StochasticMeasure& mu,
                                           int L, int n, std::uint64_t samples,
                                           const RandomStream& s, unsigned threads) {
    if (L < 1) throw std::invalid_argument("empirical_measure requires L >= 1");
    if (n < 1) throw std::invalid_argument("empirical_measure requires n >= 1");
    if (samples < 1) throw std::invalid_argument("empirical_measure requires samples >= 1");
    const int r = rule.radius();
    const std::int64_t c = central_left(L);
    const std::int64_t margin = static_cast<std::int64_t>(r) * (n - 1);
    const std::int64_t lo = c - margin;
    const std::int64_t hi = c + L - 1 + margin;

    MapAcc acc = parallel_accumulate<MapAcc>(
        samples, threads,
        [&](MapAcc& a, std::uint64_t i) {
            RandomStream sub = s.substream(i);
            WindowConfig x = mu.sample_window(lo, hi, sub);
            std::size_t len = x.cells.size();
            std::int64_t offset = x.offset;
            Word word(static_cast<std::size_t>(L));
            for (int t = 0;; ++t) {
                const std::size_t start = static_cast<std::size_t>(c - offset);
                word.assign(x.cells.begin() + start, x.cells.begin() + start + L);
                ++a.counts[word];
                if (t + 1 == n) break;
                len = step_inplace(rule, x.cells.data(), len);
                offset += r;
            }
        },
        [](MapAcc& total, const MapAcc& part) {
            for (const auto& [w, cnt] : part.counts) total.counts[w] += cnt;
        });

    EmpiricalCylinderMeasure m;
    m.L = L;
    m.counts = std::move(acc.counts);
    m.total = samples * static_cast<std::uint64_t>(n);
    m.measure_id = mu.id();
    m.n = n;
    m.samples = samples;
    m.seed = s.seed();
    return m;
}

ConvergenceDiag convergence_diag(const std::vector<double>& cesaro_averages, double mc_se) {
    if (cesaro_averages.size() < 4) {
        throw std::invalid_argument("convergence_diag requires at least 4 averages");
    }
    ConvergenceDiag d;
    d.last_value = cesaro_averages.back();
    std::size_t t = cesaro_averages.size() - 1;
    bool first = true;
    while (t / 2 >= 1) {
        const double gap = std::abs(cesaro_averages[t] - cesaro_averages[t / 2]);
        if (first) {
            d.final_gap = gap;
            first = false;
        }
        if (gap > d.max_gap) d.max_gap = gap;
        t /= 2;
    }
    d.converging = d.final_gap < 2.0 * mc_se;
    return d;
}

std::vector<WindowConfig> sample_mu_c_approx(const LocalRule& rule, const StochasticMeasure& mu,
                                             int n, int half_width, std::uint64_t count,
                                             const RandomStream& s, unsigned threads) {
    if (n < 1) throw std::invalid_argument("sample_mu_c_approx requires n >= 1");
    if (half_width < 0) throw std::invalid_argument("sample_mu_c_approx requires half_width >= 0");
    const int r = rule.radius();
    const std::int64_t margin = static_cast<std::int64_t>(r) * (n - 1);

    WindowsAcc acc = parallel_accumulate<WindowsAcc>(
        count, threads,
        [&](WindowsAcc& a, std::uint64_t i) {
            RandomStream sub = s.substream(i);
            const int t = static_cast<int>(sub.next_below(static_cast<std::uint64_t>(n)));
            WindowConfig x = mu.sample_window(-half_width - margin, half_width + margin, sub);
            std::size_t len = x.cells.size();
            std::int64_t offset = x.offset;
            for (int i2 = 0; i2 < t; ++i2) {
                len = step_inplace(rule, x.cells.data(), len);
                offset += r;
            }
            WindowConfig out;
            out.offset = -half_width;
            const std::size_t start = static_cast<std::size_t>(-half_width - offset);
            out.cells.assign(x.cells.begin() + start,
                             x.cells.begin() + start + (2 * static_cast<std::size_t>(half_width) + 1));
            a.windows.push_back(std::move(out));
        },
        [](WindowsAcc& total, WindowsAcc& part) {
            for (auto& w : part.windows) total.windows.push_back(std::move(w));
        });
    return std::move(acc.windows);
}

std::string serialize_empirical_measure(const EmpiricalCylinderMeasure& m) {
    std::ostringstream os;
    os << "# rule=" << m.rule_id << " measure=" << m.measure_id << " L=" << m.L << " n=" << m.n
       << " samples=" << m.samples << " seed=" << m.seed << "\n";
    for (const auto& [w, cnt] : m.counts) {
        for (Symbol c : w) os << int(c);
        os << ',' << cnt << "\n";
    }
    return os.str();
}

EmpiricalCylinderMeasure parse_empirical_measure(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line.rfind("# ", 0) != 0) {
        throw std::invalid_argument("empirical measure file must start with a '# ' header");
    }
    EmpiricalCylinderMeasure m;
    {
        std::istringstream hs(line.substr(2));
        std::string tok;
        while (hs >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = tok.substr(0, eq);
            const std::string val = tok.substr(eq + 1);
            if (key == "rule") m.rule_id = val;
            else if (key == "measure") m.measure_id = val;
            else if (key == "L") m.L = std::stoi(val);
            else if (key == "n") m.n = std::stoi(val);
            else if (key == "samples") m.samples = std::stoull(val);
            else if (key == "seed") m.seed = std::stoull(val);
        }
    }
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": missing comma");
        }
        Word w;
        for (char ch : line.substr(0, comma)) {
            if (ch < '0' || ch > '9') {
                throw std::invalid_argument("line " + std::to_string(lineno) + ": bad symbol");
            }
            w.push_back(static_cast<Symbol>(ch - '0'));
        }
        if (static_cast<int>(w.size()) != m.L) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": word length != L");
        }
        const std::uint64_t cnt = std::stoull(line.substr(comma + 1));
        m.counts[w] += cnt;
        m.total += cnt;
    }
    return m;
}

}  // namespace casim
