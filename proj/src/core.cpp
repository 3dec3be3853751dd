#include "casim/core.hpp"

#include <stdexcept>

namespace casim {

namespace {

std::size_t table_size(int k, int r) {
    std::size_t n = 1;
    for (int i = 0; i < 2 * r + 1; ++i) n *= static_cast<std::size_t>(k);
    return n;
}

}  // namespace

void check_symbols(const Word& cells, int alphabet_size) {
    for (Symbol s : cells) {
        if (s >= alphabet_size) {
            throw std::invalid_argument("symbol " + std::to_string(int(s)) +
                                        " out of range for alphabet size " +
                                        std::to_string(alphabet_size));
        }
    }
}

LocalRule::LocalRule(int alphabet_size, int radius, Word table)
    : k_(alphabet_size), r_(radius), table_(std::move(table)) {
    if (k_ < 2) throw std::invalid_argument("alphabet size must be >= 2");
    if (r_ < 0) throw std::invalid_argument("radius must be >= 0");
    const std::size_t expected = table_size(k_, r_);
    if (table_.size() != expected) {
        throw std::invalid_argument("rule table length " + std::to_string(table_.size()) +
                                    " does not match k^(2r+1) = " + std::to_string(expected));
    }
    check_symbols(table_, k_);
}

std::size_t LocalRule::index_of(const Symbol* neighborhood) const {
    std::size_t idx = 0;
    const std::size_t len = neighborhood_size();
    for (std::size_t i = 0; i < len; ++i) idx = idx * static_cast<std::size_t>(k_) + neighborhood[i];
    return idx;
}

Symbol LocalRule::apply(const Word& neighborhood) const {
    if (neighborhood.size() != neighborhood_size()) {
        throw std::invalid_argument("neighborhood length " + std::to_string(neighborhood.size()) +
                                    " != 2r+1 = " + std::to_string(neighborhood_size()));
    }
    check_symbols(neighborhood, k_);
    return table_[index_of(neighborhood.data())];
}

WindowConfig step_lightcone(const LocalRule& rule, const WindowConfig& w) {
    const std::size_t nh = rule.neighborhood_size();
    if (w.cells.size() < nh) {
        throw std::invalid_argument("window of length " + std::to_string(w.cells.size()) +
                                    " too short for neighborhood size " + std::to_string(nh));
    }
    WindowConfig out;
    out.offset = w.offset + rule.radius();
    out.cells.resize(w.cells.size() - nh + 1);
    for (std::size_t i = 0; i < out.cells.size(); ++i) {
        out.cells[i] = rule.table()[rule.index_of(w.cells.data() + i)];
    }
    return out;
}

std::vector<Word> evolve_column(const LocalRule& rule, const WindowConfig& w, int n, int T) {
    const std::int64_t r = rule.radius();
    if (!w.covers(-n - r * T, n + r * T)) {
        throw std::invalid_argument("window does not cover the light cone [-n-rT, n+rT]");
    }
    std::vector<Word> column;
    column.reserve(static_cast<std::size_t>(T) + 1);
    WindowConfig cur = w;
    for (int t = 0;; ++t) {
        Word central(cur.cells.begin() + static_cast<std::size_t>(-n - cur.offset),
                     cur.cells.begin() + static_cast<std::size_t>(n + 1 - cur.offset));
        column.push_back(std::move(central));
        if (t == T) break;
        cur = step_lightcone(rule, cur);
    }
    return column;
}

std::size_t step_inplace(const LocalRule& rule, Symbol* cells, std::size_t len) {
    const std::size_t nh = rule.neighborhood_size();
    if (len < nh) {
        throw std::invalid_argument("window of length " + std::to_string(len) +
                                    " too short for neighborhood size " + std::to_string(nh));
    }
    const std::size_t out_len = len - nh + 1;
    const Symbol* table = rule.table().data();
    const std::size_t k = static_cast<std::size_t>(rule.alphabet_size());
    if (nh == 1) {
        for (std::size_t i = 0; i < len; ++i) cells[i] = table[cells[i]];
        return len;
    }
    // Rolling base-k index; pow = k^(2r) is the weight of the leftmost symbol.
    std::size_t pow = 1;
    for (std::size_t i = 0; i + 1 < nh; ++i) pow *= k;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < nh; ++i) idx = idx * k + cells[i];
    for (std::size_t i = 0;; ++i) {
        const Symbol out = table[idx];
        if (i + 1 == out_len) {
            cells[i] = out;
            break;
        }
        idx = (idx - cells[i] * pow) * k + cells[i + nh];
        cells[i] = out;
    }
    return out_len;
}

TorusConfig step_torus(const LocalRule& rule, const TorusConfig& t) {
    const std::size_t L = t.size();
    const int r = rule.radius();
    const std::size_t nh = rule.neighborhood_size();
    TorusConfig out;
    out.cells.resize(L);
    Word neigh(nh);
    for (std::size_t i = 0; i < L; ++i) {
        for (std::size_t j = 0; j < nh; ++j) {
            const std::int64_t pos = static_cast<std::int64_t>(i) + static_cast<std::int64_t>(j) - r;
            neigh[j] = t.cells[static_cast<std::size_t>(((pos % static_cast<std::int64_t>(L)) + L) %
                                                        static_cast<std::int64_t>(L))];
        }
        out.cells[i] = rule.table()[rule.index_of(neigh.data())];
    }
    return out;
}

}  // namespace casim
