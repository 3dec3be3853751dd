#pragma once

#include <string>

#include "casim/core.hpp"

namespace casim {

/// Gilman's three-symbol radius-1 automaton: 2's stand still, 1's move
/// left, and a 1 meeting a 2 annihilates both. The output depends only on
/// the middle and right symbols; the full 27-entry table is stored.
LocalRule gilman_fs();

/// Elementary cellular automaton (k=2, r=1) from its Wolfram code.
LocalRule eca(int code);

/// Left shift: f(a, b, c) = c.
LocalRule shift_rule(int k);

/// Identity: r = 0, f(a) = a.
LocalRule identity_rule(int k);

/// Rule text format:
///   k <int>
///   r <int>
///   table <k^(2r+1) space-separated ints>
LocalRule parse_rule_file(const std::string& text);
std::string serialize_rule(const LocalRule& rule);

/// Resolves a rule id: "fs", "identity:<k>", "shift:<k>", "eca:<code>",
/// or a path to a rule file.
LocalRule rule_from_id(const std::string& id);

}  // namespace casim
