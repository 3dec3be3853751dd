#include "casim/zoo.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace casim;

TEST_CASE("F_s table") {
    LocalRule fs = gilman_fs();
    CHECK(fs.alphabet_size() == 3);
    CHECK(fs.radius() == 1);
    CHECK(fs.apply({1, 2, 1}) == 0);
    CHECK(fs.apply({2, 0, 1}) == 1);
    // left-symbol independence
    for (Symbol b = 0; b < 3; ++b)
        for (Symbol c = 0; c < 3; ++c) {
            const Symbol v = fs.apply({0, b, c});
            CHECK(fs.apply({1, b, c}) == v);
            CHECK(fs.apply({2, b, c}) == v);
        }
}

TEST_CASE("F_s restricted to {0,2} is the identity on the interior") {
    LocalRule fs = gilman_fs();
    for (Symbol a : {0, 2})
        for (Symbol b : {0, 2})
            for (Symbol c : {0, 2}) CHECK(fs.apply({a, b, c}) == b);
}

TEST_CASE("F_s particle laws") {
    LocalRule fs = gilman_fs();

    // an isolated 1 moves one cell left per step
    WindowConfig w{-6, Word(13, 0)};
    w.cells[static_cast<std::size_t>(3 - w.offset)] = 1;  // a 1 at position 3
    for (int t = 1; t <= 3; ++t) {
        w = step_lightcone(fs, w);
        for (std::int64_t i = w.left(); i <= w.right(); ++i) {
            CHECK(w.at(i) == (i == 3 - t ? 1 : 0));
        }
    }

    // an isolated 2 is fixed
    WindowConfig v{-4, Word(9, 0)};
    v.cells[4] = 2;  // position 0
    for (int t = 1; t <= 3; ++t) {
        v = step_lightcone(fs, v);
        for (std::int64_t i = v.left(); i <= v.right(); ++i) CHECK(v.at(i) == (i == 0 ? 2 : 0));
    }

    // adjacent "21" annihilates to "00" (the 1 moves onto the 2)
    WindowConfig u{-3, {0, 0, 0, 2, 1, 0, 0}};
    u = step_lightcone(fs, u);
    for (std::int64_t i = u.left(); i <= u.right(); ++i) CHECK(u.at(i) == 0);
}

TEST_CASE("eca: identity, shift, constant, round trip") {
    LocalRule ident = eca(204);
    for (Symbol a = 0; a < 2; ++a)
        for (Symbol b = 0; b < 2; ++b)
            for (Symbol c = 0; c < 2; ++c) CHECK(ident.apply({a, b, c}) == b);

    CHECK(eca(170).table() == shift_rule(2).table());
    CHECK(eca(0).table() == Word(8, 0));
    CHECK_THROWS_AS(eca(256), std::invalid_argument);
    CHECK_THROWS_AS(eca(-1), std::invalid_argument);

    // table -> code -> table round trip for all 256 codes
    for (int code = 0; code < 256; ++code) {
        const Word t = eca(code).table();
        int back = 0;
        for (int v = 0; v < 8; ++v) back |= (t[static_cast<std::size_t>(v)] << v);
        CHECK(back == code);
    }
}

TEST_CASE("shift and identity rules") {
    LocalRule sh = shift_rule(3);
    WindowConfig w{0, {0, 1, 2}};
    WindowConfig out = step_lightcone(sh, w);
    CHECK(out.offset == 1);
    CHECK(out.cells == Word{2});

    LocalRule ident = identity_rule(3);
    WindowConfig v{-1, {2, 0, 1}};
    CHECK(step_lightcone(ident, v) == v);
}

TEST_CASE("rule file parsing and round trip") {
    LocalRule fs = gilman_fs();
    LocalRule parsed = parse_rule_file(serialize_rule(fs));
    CHECK(parsed == fs);
    CHECK(serialize_rule(parsed) == serialize_rule(fs));

    CHECK_THROWS_AS(parse_rule_file("k 3\nr 1\ntable 0 1 0\n"), std::invalid_argument);
    std::string bad = "k 3\nr 1\ntable";
    for (int i = 0; i < 27; ++i) bad += " 3";
    bad += "\n";
    CHECK_THROWS_AS(parse_rule_file(bad), std::invalid_argument);
    CHECK_THROWS_AS(parse_rule_file("q 1\n"), std::invalid_argument);
}

TEST_CASE("rule ids") {
    CHECK(rule_from_id("fs") == gilman_fs());
    CHECK(rule_from_id("identity:3") == identity_rule(3));
    CHECK(rule_from_id("shift:2") == shift_rule(2));
    CHECK(rule_from_id("eca:110") == eca(110));
    CHECK_THROWS_AS(rule_from_id("no-such-rule"), std::invalid_argument);
}
