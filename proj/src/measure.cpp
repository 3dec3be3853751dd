#include "casim/measure.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace casim {

namespace {

constexpr double kSumTol = 1e-12;
constexpr double kStationaryTol = 1e-10;

void check_prob_vector(const std::vector<double>& p) {
    double sum = 0.0;
    for (double v : p) {
        if (!(v >= 0.0)) throw std::invalid_argument("probabilities must be nonnegative");
        sum += v;
    }
    if (std::abs(sum - 1.0) > kSumTol) {
        throw std::invalid_argument("probability vector must sum to 1 (got " + std::to_string(sum) + ")");
    }
}

// Some power of P (exponent <= k^2) must be entrywise positive.
void check_primitive(int k, const std::vector<double>& P) {
    std::vector<double> M = P;
    for (int e = 1; e <= k * k; ++e) {
        bool all_pos = true;
        for (double v : M) {
            if (v <= 0.0) { all_pos = false; break; }
        }
        if (all_pos) return;
        std::vector<double> next(static_cast<std::size_t>(k) * k, 0.0);
        for (int i = 0; i < k; ++i)
            for (int l = 0; l < k; ++l) {
                const double m = M[static_cast<std::size_t>(i) * k + l];
                if (m == 0.0) continue;
                for (int j = 0; j < k; ++j)
                    next[static_cast<std::size_t>(i) * k + j] += m * P[static_cast<std::size_t>(l) * k + j];
            }
        M = std::move(next);
    }
    throw std::invalid_argument("Markov chain is not irreducible and aperiodic");
}

std::vector<double> stationary_vector(int k, const std::vector<double>& P) {
    std::vector<double> pi(static_cast<std::size_t>(k), 1.0 / k);
    for (int iter = 0; iter < 100000; ++iter) {
        std::vector<double> next(static_cast<std::size_t>(k), 0.0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) next[j] += pi[i] * P[static_cast<std::size_t>(i) * k + j];
        double diff = 0.0, sum = 0.0;
        for (int j = 0; j < k; ++j) {
            diff += std::abs(next[j] - pi[j]);
            sum += next[j];
        }
        for (double& v : next) v /= sum;
        pi = std::move(next);
        if (diff < 1e-15) break;
    }
    return pi;
}

std::string format_id(const std::string& head, const std::vector<double>& vals) {
    std::ostringstream os;
    os << head;
    for (double v : vals) os << ':' << v;
    return os.str();
}

}  // namespace

StochasticMeasure StochasticMeasure::bernoulli(std::vector<double> p) {
    if (p.size() < 2) throw std::invalid_argument("Bernoulli measure needs alphabet size >= 2");
    check_prob_vector(p);
    StochasticMeasure m;
    m.kind_ = Kind::Bernoulli;
    m.k_ = static_cast<int>(p.size());
    m.id_ = format_id("bernoulli", p);
    m.pi_ = std::move(p);
    return m;
}

StochasticMeasure StochasticMeasure::markov(int k, std::vector<double> transition) {
    if (k < 2) throw std::invalid_argument("Markov measure needs alphabet size >= 2");
    if (transition.size() != static_cast<std::size_t>(k) * k) {
        throw std::invalid_argument("transition matrix must have k*k entries");
    }
    for (int i = 0; i < k; ++i) {
        std::vector<double> row(transition.begin() + static_cast<std::size_t>(i) * k,
                                transition.begin() + static_cast<std::size_t>(i + 1) * k);
        check_prob_vector(row);
    }
    check_primitive(k, transition);
    StochasticMeasure m;
    m.kind_ = Kind::Markov;
    m.k_ = k;
    m.pi_ = stationary_vector(k, transition);
    // pi P = pi must hold to tolerance after power iteration
    for (int j = 0; j < k; ++j) {
        double v = 0.0;
        for (int i = 0; i < k; ++i) v += m.pi_[i] * transition[static_cast<std::size_t>(i) * k + j];
        if (std::abs(v - m.pi_[j]) > kStationaryTol) {
            throw std::invalid_argument("stationary vector did not converge");
        }
    }
    m.Prev_.assign(static_cast<std::size_t>(k) * k, 0.0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            m.Prev_[static_cast<std::size_t>(i) * k + j] =
                m.pi_[j] * transition[static_cast<std::size_t>(j) * k + i] / m.pi_[i];
    m.id_ = format_id("markov", transition);
    m.P_ = std::move(transition);
    return m;
}

Symbol StochasticMeasure::draw_from(const double* dist, RandomStream& s) const {
    const double u = s.next_double();
    double acc = 0.0;
    for (int a = 0; a < k_ - 1; ++a) {
        acc += dist[a];
        if (u < acc) return static_cast<Symbol>(a);
    }
    return static_cast<Symbol>(k_ - 1);
}

WindowConfig StochasticMeasure::sample_window(std::int64_t a, std::int64_t b, RandomStream& s) const {
    if (a > b) throw std::invalid_argument("sample_window: interval is empty");
    WindowConfig w;
    w.offset = a;
    w.cells.resize(static_cast<std::size_t>(b - a + 1));
    if (kind_ == Kind::Bernoulli) {
        for (auto& c : w.cells) c = draw_from(pi_.data(), s);
    } else {
        w.cells[0] = draw_from(pi_.data(), s);
        for (std::size_t i = 1; i < w.cells.size(); ++i) {
            w.cells[i] = draw_from(P_.data() + static_cast<std::size_t>(w.cells[i - 1]) * k_, s);
        }
    }
    return w;
}

double StochasticMeasure::cylinder_prob(const Word& word) const {
    if (word.empty()) throw std::invalid_argument("cylinder_prob: empty word");
    check_symbols(word, k_);
    if (kind_ == Kind::Bernoulli) {
        double p = 1.0;
        for (Symbol c : word) p *= pi_[c];
        return p;
    }
    double p = pi_[word[0]];
    for (std::size_t i = 1; i < word.size(); ++i) p *= transition(word[i - 1], word[i]);
    return p;
}

WindowConfig StochasticMeasure::sample_conditional_extension(const WindowConfig& core,
                                                             std::int64_t a, std::int64_t b,
                                                             RandomStream& s) const {
    if (a > core.left() || b < core.right()) {
        throw std::invalid_argument("conditional extension interval does not contain the core");
    }
    check_symbols(core.cells, k_);
    WindowConfig w;
    w.offset = a;
    w.cells.resize(static_cast<std::size_t>(b - a + 1));
    for (std::int64_t i = core.left(); i <= core.right(); ++i) {
        w.cells[static_cast<std::size_t>(i - a)] = core.at(i);
    }
    if (kind_ == Kind::Bernoulli) {
        for (std::int64_t i = core.left() - 1; i >= a; --i)
            w.cells[static_cast<std::size_t>(i - a)] = draw_from(pi_.data(), s);
        for (std::int64_t i = core.right() + 1; i <= b; ++i)
            w.cells[static_cast<std::size_t>(i - a)] = draw_from(pi_.data(), s);
    } else {
        // Left of the core the chain runs backwards via the reversed kernel.
        for (std::int64_t i = core.left() - 1; i >= a; --i) {
            const Symbol right = w.cells[static_cast<std::size_t>(i + 1 - a)];
            w.cells[static_cast<std::size_t>(i - a)] =
                draw_from(Prev_.data() + static_cast<std::size_t>(right) * k_, s);
        }
        for (std::int64_t i = core.right() + 1; i <= b; ++i) {
            const Symbol left = w.cells[static_cast<std::size_t>(i - 1 - a)];
            w.cells[static_cast<std::size_t>(i - a)] =
                draw_from(P_.data() + static_cast<std::size_t>(left) * k_, s);
        }
    }
    return w;
}

StochasticMeasure parse_measure(const std::string& text) {
    std::istringstream is(text);
    std::string kind;
    is >> kind;
    int k = 0;
    if (!(is >> k)) throw std::invalid_argument("measure format: missing alphabet size");
    std::vector<double> vals;
    double v;
    while (is >> v) vals.push_back(v);
    if (kind == "bernoulli") {
        if (vals.size() != static_cast<std::size_t>(k)) {
            throw std::invalid_argument("bernoulli measure needs k probabilities");
        }
        return StochasticMeasure::bernoulli(vals);
    }
    if (kind == "markov") {
        return StochasticMeasure::markov(k, vals);
    }
    throw std::invalid_argument("unknown measure kind '" + kind + "'");
}

}  // namespace casim
