#include "casim/zoo.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace casim {

LocalRule gilman_fs() {
    // Output for (middle, right); the left symbol is ignored.
    static constexpr Symbol g[9] = {0, 1, 0, 0, 1, 0, 2, 0, 2};
    Word table(27);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) table[static_cast<std::size_t>(a * 9 + b * 3 + c)] = g[b * 3 + c];
    return LocalRule(3, 1, std::move(table));
}

LocalRule eca(int code) {
    if (code < 0 || code > 255) throw std::invalid_argument("ECA code must be in 0..255");
    Word table(8);
    for (int v = 0; v < 8; ++v) table[static_cast<std::size_t>(v)] = static_cast<Symbol>((code >> v) & 1);
    return LocalRule(2, 1, std::move(table));
}

LocalRule shift_rule(int k) {
    if (k < 2) throw std::invalid_argument("alphabet size must be >= 2");
    Word table(static_cast<std::size_t>(k) * k * k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c)
                table[(static_cast<std::size_t>(a) * k + b) * k + c] = static_cast<Symbol>(c);
    return LocalRule(k, 1, std::move(table));
}

LocalRule identity_rule(int k) {
    if (k < 2) throw std::invalid_argument("alphabet size must be >= 2");
    Word table(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) table[static_cast<std::size_t>(a)] = static_cast<Symbol>(a);
    return LocalRule(k, 0, std::move(table));
}

LocalRule parse_rule_file(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int k = -1, r = -1;
    Word table;
    bool have_table = false;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;  // blank line
        if (key == "k") {
            if (!(ls >> k)) throw std::invalid_argument("line " + std::to_string(lineno) + ": bad k");
        } else if (key == "r") {
            if (!(ls >> r)) throw std::invalid_argument("line " + std::to_string(lineno) + ": bad r");
        } else if (key == "table") {
            int v;
            while (ls >> v) {
                if (v < 0 || v > 255)
                    throw std::invalid_argument("line " + std::to_string(lineno) + ": bad table entry");
                table.push_back(static_cast<Symbol>(v));
            }
            have_table = true;
        } else {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (k < 0 || r < 0 || !have_table) {
        throw std::invalid_argument("rule file must contain k, r and table lines");
    }
    return LocalRule(k, r, std::move(table));
}

std::string serialize_rule(const LocalRule& rule) {
    std::ostringstream os;
    os << "k " << rule.alphabet_size() << "\n";
    os << "r " << rule.radius() << "\n";
    os << "table";
    for (Symbol s : rule.table()) os << ' ' << int(s);
    os << "\n";
    return os.str();
}

LocalRule rule_from_id(const std::string& id) {
    if (id == "fs") return gilman_fs();
    const auto colon = id.find(':');
    if (colon != std::string::npos) {
        const std::string head = id.substr(0, colon);
        const std::string arg = id.substr(colon + 1);
        if (head == "identity" || head == "shift" || head == "eca") {
            int v;
            try {
                v = std::stoi(arg);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad rule id argument '" + arg + "'");
            }
            if (head == "identity") return identity_rule(v);
            if (head == "shift") return shift_rule(v);
            return eca(v);
        }
    }
    std::ifstream f(id);
    if (!f) throw std::invalid_argument("unknown rule id or unreadable rule file '" + id + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_rule_file(buf.str());
}

}  // namespace casim
