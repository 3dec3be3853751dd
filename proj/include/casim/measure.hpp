#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "casim/core.hpp"
#include "casim/random.hpp"

namespace casim {

/// Shift-ergodic source measure: Bernoulli product measure or stationary
/// irreducible aperiodic Markov measure. Provides window sampling, exact
/// cylinder probabilities, and conditional extension sampling.
class StochasticMeasure {
public:
    enum class Kind { Bernoulli, Markov };

    static StochasticMeasure bernoulli(std::vector<double> p);

    /// Stationary Markov measure from a row-stochastic k x k matrix
    /// (row-major). The stationary vector is computed by power iteration.
    /// Rejects reducible or periodic chains.
    static StochasticMeasure markov(int k, std::vector<double> transition);

    Kind kind() const { return kind_; }
    int alphabet_size() const { return k_; }
    const std::vector<double>& marginal() const { return pi_; }
    /// Markov only: transition probability P(a, b).
    double transition(int a, int b) const { return P_[static_cast<std::size_t>(a) * k_ + b]; }
    /// Markov only: time-reversed transition P*(a, b) = pi(b) P(b, a) / pi(a).
    double reversed_transition(int a, int b) const {
        return Prev_[static_cast<std::size_t>(a) * k_ + b];
    }

    /// Draws a window on the absolute interval [a, b].
    WindowConfig sample_window(std::int64_t a, std::int64_t b, RandomStream& s) const;

    /// Exact measure of the cylinder fixed by `word`. Shift invariant, so
    /// no position argument.
    double cylinder_prob(const Word& word) const;

    /// Draws y ~ mu( . | C(core)) restricted to [a, b] (which must contain
    /// the core's interval). The result agrees with core on its interval.
    WindowConfig sample_conditional_extension(const WindowConfig& core, std::int64_t a,
                                              std::int64_t b, RandomStream& s) const;

    std::string id() const { return id_; }

private:
    StochasticMeasure() = default;

    Symbol draw_from(const double* dist, RandomStream& s) const;

    Kind kind_ = Kind::Bernoulli;
    int k_ = 0;
    std::vector<double> pi_;    // Bernoulli p, or Markov stationary vector
    std::vector<double> P_;     // Markov transition matrix, row-major
    std::vector<double> Prev_;  // reversed chain, row-major
    std::string id_;
};

/// Parses the measure text format:
///   bernoulli <k> <p_0> ... <p_{k-1}>
///   markov <k> <row-major P entries>
StochasticMeasure parse_measure(const std::string& text);

}  // namespace casim
