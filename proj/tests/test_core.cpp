#include "casim/core.hpp"

#include <stdexcept>

#include "casim/random.hpp"
#include "casim/zoo.hpp"
#include "doctest.h"

using namespace casim;

namespace {

// Independent reference for light-cone stepping: explicit neighborhood
// gather per output cell, no rolling index.
WindowConfig step_reference(const LocalRule& rule, const WindowConfig& w) {
    const int r = rule.radius();
    WindowConfig out;
    out.offset = w.offset + r;
    for (std::int64_t i = w.left() + r; i <= w.right() - r; ++i) {
        Word neigh;
        for (std::int64_t j = i - r; j <= i + r; ++j) neigh.push_back(w.at(j));
        out.cells.push_back(rule.apply(neigh));
    }
    return out;
}

LocalRule random_rule(int k, int r, RandomStream& s) {
    std::size_t len = 1;
    for (int i = 0; i < 2 * r + 1; ++i) len *= static_cast<std::size_t>(k);
    Word table(len);
    for (auto& c : table) c = static_cast<Symbol>(s.next_below(static_cast<std::uint64_t>(k)));
    return LocalRule(k, r, std::move(table));
}

}  // namespace

TEST_CASE("rule construction validates table length and symbols") {
    CHECK_NOTHROW(LocalRule(2, 0, {0, 1}));
    CHECK_THROWS_WITH_AS(LocalRule(3, 1, Word(26, 0)), doctest::Contains("length"),
                         std::invalid_argument);
    Word bad(27, 0);
    bad[5] = 3;
    CHECK_THROWS_WITH_AS(LocalRule(3, 1, bad), doctest::Contains("out of range"),
                         std::invalid_argument);
}

TEST_CASE("table index convention: leftmost most significant, base k") {
    // k=2, r=0 identity
    LocalRule ident(2, 0, {0, 1});
    CHECK(ident.apply({0}) == 0);
    CHECK(ident.apply({1}) == 1);

    // rule 110: bit i of the code = output on the neighborhood of base-2 value i
    LocalRule r110 = eca(110);
    CHECK(r110.apply({1, 1, 1}) == 0);
    CHECK(r110.apply({0, 0, 1}) == 1);
    CHECK(r110.apply({1, 1, 0}) == 1);
    CHECK(r110.apply({0, 0, 0}) == 0);

    // F_s: neighborhood (0,0,1) -> 1
    CHECK(gilman_fs().apply({0, 0, 1}) == 1);
}

TEST_CASE("apply_local checks length and symbols") {
    LocalRule fs = gilman_fs();
    CHECK(fs.apply({2, 2, 1}) == 0);
    CHECK(fs.apply({0, 2, 2}) == 2);
    CHECK_THROWS_AS(fs.apply({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(fs.apply({0, 1, 3}), std::invalid_argument);
}

TEST_CASE("step_lightcone: shift, identity, F_s hand cases") {
    LocalRule sh = shift_rule(2);
    WindowConfig w{0, {0, 1, 1, 0, 1}};
    WindowConfig out = step_lightcone(sh, w);
    CHECK(out.offset == 1);
    CHECK(out.cells == Word{1, 0, 1});

    LocalRule ident = identity_rule(2);
    CHECK(step_lightcone(ident, w) == w);

    LocalRule fs = gilman_fs();
    WindowConfig fw{-2, {0, 1, 2, 0, 0}};
    WindowConfig fout = step_lightcone(fs, fw);
    CHECK(fout.offset == -1);
    CHECK(fout.cells == Word{0, 2, 0});

    CHECK_THROWS_AS(step_lightcone(sh, WindowConfig{0, {1, 0}}), std::invalid_argument);
}

TEST_CASE("shift rule window oracle: out cell i equals x_{i+1}") {
    WindowConfig w{0, {0, 1, 1, 0, 1}};
    WindowConfig out = step_lightcone(shift_rule(2), w);
    // out covers [1,3]; cell at i is x_{i+1}
    for (std::int64_t i = out.left(); i <= out.right(); ++i) CHECK(out.at(i) == w.at(i + 1));
}

TEST_CASE("evolve_column: identity, shift, F_s") {
    LocalRule ident = identity_rule(3);
    WindowConfig w{-2, {0, 1, 2, 1, 0}};
    auto col = evolve_column(ident, w, 2, 5);
    REQUIRE(col.size() == 6);
    for (const auto& row : col) CHECK(row == w.cells);

    LocalRule sh = shift_rule(2);
    WindowConfig sw{-4, {1, 0, 1, 1, 0, 0, 1, 0, 1}};  // covers [-4, 4]
    auto scol = evolve_column(sh, sw, 1, 3);
    REQUIRE(scol.size() == 4);
    for (int t = 0; t <= 3; ++t) {
        Word expect;
        for (std::int64_t i = -1; i <= 1; ++i) expect.push_back(sw.at(i + t));
        CHECK(scol[static_cast<std::size_t>(t)] == expect);
    }

    LocalRule fs = gilman_fs();
    WindowConfig fw{-3, {0, 0, 0, 1, 2, 0, 0}};
    auto fcol = evolve_column(fs, fw, 1, 2);
    REQUIRE(fcol.size() == 3);
    CHECK(fcol[0] == Word{0, 1, 2});
    CHECK(fcol[1] == Word{1, 0, 2});
    CHECK(fcol[2] == Word{0, 0, 2});

    CHECK_THROWS_AS(evolve_column(fs, fw, 2, 2), std::invalid_argument);
}

TEST_CASE("step_torus: fixed points and rule 90") {
    LocalRule fs = gilman_fs();
    CHECK(step_torus(fs, TorusConfig{{0, 2}}) == TorusConfig{{0, 2}});
    CHECK(step_torus(fs, TorusConfig{{1}}) == TorusConfig{{1}});

    LocalRule r90 = eca(90);
    TorusConfig t{{0, 0, 0, 1}};
    t = step_torus(r90, t);
    CHECK(t == TorusConfig{{1, 0, 1, 0}});
    t = step_torus(r90, t);
    CHECK(t == TorusConfig{{0, 0, 0, 0}});
}

TEST_CASE("step_inplace agrees with the reference stepper") {
    RandomStream s(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        RandomStream sub = s.substream(static_cast<std::uint64_t>(trial));
        const int k = 2 + static_cast<int>(sub.next_below(3));
        const int r = static_cast<int>(sub.next_below(3));
        LocalRule rule = random_rule(k, r, sub);
        const std::size_t len = 2 * static_cast<std::size_t>(r) + 1 + sub.next_below(12);
        WindowConfig w;
        w.offset = static_cast<std::int64_t>(sub.next_below(21)) - 10;
        w.cells.resize(len);
        for (auto& c : w.cells) c = static_cast<Symbol>(sub.next_below(static_cast<std::uint64_t>(k)));

        WindowConfig expect = step_reference(rule, w);
        Word buf = w.cells;
        const std::size_t out_len = step_inplace(rule, buf.data(), buf.size());
        buf.resize(out_len);
        CHECK(buf == expect.cells);
        CHECK(step_lightcone(rule, w) == expect);
    }
}

TEST_CASE("property: shift commutation on window offsets") {
    RandomStream s(99);
    for (int trial = 0; trial < 300; ++trial) {
        RandomStream sub = s.substream(static_cast<std::uint64_t>(trial));
        const int k = 2 + static_cast<int>(sub.next_below(2));
        const int r = static_cast<int>(sub.next_below(3));
        LocalRule rule = random_rule(k, r, sub);
        WindowConfig w;
        w.offset = static_cast<std::int64_t>(sub.next_below(41)) - 20;
        w.cells.resize(2 * static_cast<std::size_t>(r) + 1 + sub.next_below(10));
        for (auto& c : w.cells) c = static_cast<Symbol>(sub.next_below(static_cast<std::uint64_t>(k)));
        const std::int64_t shift = static_cast<std::int64_t>(sub.next_below(15)) - 7;

        WindowConfig shifted = w;
        shifted.offset += shift;
        WindowConfig a = step_lightcone(rule, shifted);
        WindowConfig b = step_lightcone(rule, w);
        b.offset += shift;
        CHECK(a == b);
    }
}

TEST_CASE("property: torus / light-cone agreement") {
    RandomStream s(777);
    for (int trial = 0; trial < 1000; ++trial) {
        RandomStream sub = s.substream(static_cast<std::uint64_t>(trial));
        const int k = 2 + static_cast<int>(sub.next_below(2));
        const int r = static_cast<int>(sub.next_below(2));
        LocalRule rule = random_rule(k, r, sub);
        const int T = 1 + static_cast<int>(sub.next_below(4));
        const std::size_t L = static_cast<std::size_t>(2 * r * T + 1) + sub.next_below(6);
        TorusConfig t0;
        t0.cells.resize(L);
        for (auto& c : t0.cells) c = static_cast<Symbol>(sub.next_below(static_cast<std::uint64_t>(k)));

        // periodic unrolling to [0, L-1 + 2rT]
        WindowConfig w;
        w.offset = 0;
        const std::size_t width = L + 2 * static_cast<std::size_t>(r) * static_cast<std::size_t>(T);
        for (std::size_t i = 0; i < width; ++i) w.cells.push_back(t0.cells[i % L]);

        TorusConfig torus = t0;
        for (int step = 0; step < T; ++step) {
            torus = step_torus(rule, torus);
            w = step_lightcone(rule, w);
        }
        for (std::size_t i = 0; i < L; ++i) {
            const std::int64_t abs = static_cast<std::int64_t>(r) * T + static_cast<std::int64_t>(i);
            CHECK(w.at(abs) == torus.cells[(abs % static_cast<std::int64_t>(L) + L) % L]);
        }
    }
}
