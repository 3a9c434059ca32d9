#include "cobarext/tables.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cobarext/grading.hpp"

namespace tables {

namespace {

// UTF-8 tokens used by the notation
const std::string kInfinity = "∞";  // ∞
const std::string kDot = "·";       // ·
const std::string kPi = "π";        // π

bool starts_with(const std::string& s, std::size_t pos, const std::string& tok) {
    return s.compare(pos, tok.size(), tok) == 0;
}

long long parse_int(const std::string& s, std::size_t& pos) {
    if (pos >= s.size() || !isdigit(static_cast<unsigned char>(s[pos])))
        throw ParseError("expected integer", pos);
    long long v = 0;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + (s[pos] - '0');
        ++pos;
    }
    return v;
}

}  // namespace

GroupExpr parse_group_expr(const std::string& text) {
    GroupExpr g;
    if (text.empty()) throw ParseError("empty group expression", 0);
    if (text == "0") return g;
    std::size_t pos = 0;
    bool first = true;
    while (true) {
        if (!first) {
            if (!starts_with(text, pos, kDot)) throw ParseError("expected '·' separator", pos);
            pos += kDot.size();
        }
        first = false;
        if (starts_with(text, pos, kInfinity)) {
            pos += kInfinity.size();
            ++g.free_rank;
        } else if (starts_with(text, pos, kPi)) {
            pos += kPi.size();
            if (pos >= text.size() || text[pos] != '_') throw ParseError("expected '_' after π", pos);
            ++pos;
            const long long k = parse_int(text, pos);
            if (g.pi_split) throw ParseError("duplicate π marker", pos);
            g.pi_split = int(k);
        } else {
            const std::size_t at = pos;
            const long long n = parse_int(text, pos);
            if (n < 2) throw ParseError("cyclic order must be >= 2", at);
            long long rep = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                rep = parse_int(text, pos);
                if (rep < 1) throw ParseError("exponent must be >= 1", pos);
            }
            for (long long i = 0; i < rep; ++i) g.cyclic.push_back(n);
        }
        if (pos == text.size()) break;
        if (!starts_with(text, pos, kDot)) throw ParseError("unexpected trailing input", pos);
    }
    std::sort(g.cyclic.rbegin(), g.cyclic.rend());
    return g;
}

std::string print_group_expr(const GroupExpr& g) {
    if (g.free_rank == 0 && g.cyclic.empty() && !g.pi_split) return "0";
    std::vector<std::string> factors;
    for (int i = 0; i < g.free_rank; ++i) factors.push_back(kInfinity);
    std::vector<long long> orders = g.cyclic;
    std::sort(orders.rbegin(), orders.rend());
    for (std::size_t i = 0; i < orders.size();) {
        std::size_t j = i;
        while (j < orders.size() && orders[j] == orders[i]) ++j;
        std::string f = std::to_string(orders[i]);
        if (j - i > 1) f += "^" + std::to_string(j - i);
        factors.push_back(f);
        i = j;
    }
    if (g.pi_split) factors.push_back(kPi + "_" + std::to_string(*g.pi_split));
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += kDot;
        out += factors[i];
    }
    return out;
}

const GroupExpr& classical_pi(int k) {
    static const std::vector<GroupExpr> table = [] {
        std::vector<GroupExpr> t(8);
        t[0].free_rank = 1;        // Z
        t[1].cyclic = {2};         // Z/2
        t[2].cyclic = {2};         // Z/2
        t[3].cyclic = {24};        // Z/24
        t[6].cyclic = {2};         // Z/2
        t[7].cyclic = {240};       // Z/240
        return t;
    }();
    if (k < 0 || k >= int(table.size()))
        throw std::out_of_range("classical_pi: only stems 0..7 are shipped");
    return table[std::size_t(k)];
}

bool contains_cyclic_of_order(const GroupExpr& g, long long n) {
    if (n < 2) throw std::invalid_argument("contains_cyclic_of_order: n must be >= 2");
    if (g.free_rank > 0) return true;
    for (long long c : g.cyclic)
        if (c % n == 0) return true;
    if (g.pi_split) return contains_cyclic_of_order(classical_pi(*g.pi_split), n);
    return false;
}

void StemTable::insert(int row, int s, GroupExpr g) { cells_[CellKey{row, s}] = std::move(g); }

const GroupExpr* StemTable::find(int row, int s) const {
    auto it = cells_.find(CellKey{row, s});
    return it == cells_.end() ? nullptr : &it->second;
}

StemTable parse_table(const std::string& text, const std::string& origin) {
    StemTable table;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int row, s;
        std::string expr, flags;
        if (!(ls >> row >> s >> expr >> flags))
            throw ParseError(origin + ":" + std::to_string(lineno) + ": expected `row s expr flags`",
                             0);
        GroupExpr g;
        try {
            g = parse_group_expr(expr);
        } catch (const ParseError& e) {
            throw ParseError(origin + ":" + std::to_string(lineno) + ": " + e.what(), e.pos);
        }
        if (flags != "-") {
            std::size_t start = 0;
            while (start <= flags.size()) {
                const auto comma = flags.find(',', start);
                const auto tok = flags.substr(start, comma == std::string::npos ? std::string::npos
                                                                                : comma - start);
                if (tok == "red")
                    g.red = true;
                else if (tok == "shaded")
                    g.shaded = true;
                else
                    throw ParseError(origin + ":" + std::to_string(lineno) + ": unknown flag `" +
                                         tok + "`",
                                     0);
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        }
        if (table.find(row, s))
            throw ParseError(origin + ":" + std::to_string(lineno) + ": duplicate cell", 0);
        table.insert(row, s, std::move(g));
    }
    return table;
}

StemTable load_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open table data file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_table(ss.str(), path);
}

std::vector<SplitViolation> splitting_check(const StemTable& table) {
    std::vector<SplitViolation> out;
    for (const auto& [key, g] : table.cells()) {
        const int w = key.s - key.row;
        if (key.s < 2 * w) continue;  // fixed-point splitting only applies for s >= 2w
        if (g.red || key.row <= 0 || key.s >= 12) continue;  // explicit-value cells
        if (g.pi_split && *g.pi_split == key.row) continue;
        out.push_back(SplitViolation{key.row, key.s, print_group_expr(g)});
    }
    return out;
}

std::vector<CellKey> region_mismatches(const StemTable& table) {
    std::vector<CellKey> out;
    for (const auto& [key, g] : table.cells()) {
        const int w = key.s - key.row;
        const bool iso =
            grading::homotopy_region_classify(key.s, w) == grading::RegionVerdict::isomorphism;
        if (iso != g.shaded) out.push_back(key);
    }
    return out;
}

bool region_consistency(const StemTable& table) { return region_mismatches(table).empty(); }

}  // namespace tables
