#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tables {

// Parsed abelian-group shorthand:
//   "0"            trivial group
//   "∞"            a Z summand           (free_rank counts them)
//   "n"            Z/n, n >= 2
//   "n^k"          (Z/n)^k
//   "π_k"          the classical stable stem pi_k splits off
//   factors joined by "·"
struct GroupExpr {
    int free_rank = 0;
    std::vector<long long> cyclic;  // orders, kept in canonical (descending) order
    std::optional<int> pi_split;
    bool red = false;
    bool shaded = false;
    friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " at position " + std::to_string(position)), pos(position) {}
    std::size_t pos;
};

// Recursive-descent parser for the grammar
//   expr   := '0' | factor ('·' factor)*
//   factor := '∞' | INT ('^' INT)? | 'π_' INT
GroupExpr parse_group_expr(const std::string& text);

// Canonical printing: Z summands first, cyclic orders descending with
// repeats as powers, the π_k marker last.
std::string print_group_expr(const GroupExpr& g);

// Classical stable stems pi_0..pi_7 as group expressions (pi_0 = Z,
// pi_1 = pi_2 = Z/2, pi_3 = Z/24, pi_4 = pi_5 = 0, pi_6 = Z/2,
// pi_7 = Z/240).
const GroupExpr& classical_pi(int k);

// True when the group contains an element of order divisible by n: some
// cyclic order divisible by n, a free summand, or the split classical
// stem contains one.
bool contains_cyclic_of_order(const GroupExpr& g, long long n);

struct CellKey {
    int row = 0;  // Milnor-Witt stem s - w
    int s = 0;
    friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

class StemTable {
public:
    void insert(int row, int s, GroupExpr g);
    const GroupExpr* find(int row, int s) const;
    const GroupExpr* find_by_weight(int s, int w) const { return find(s - w, s); }
    const std::map<CellKey, GroupExpr>& cells() const { return cells_; }

private:
    std::map<CellKey, GroupExpr> cells_;
};

// Loads the data file: one line per cell, `row s expr flags` with flags a
// comma list from {red, shaded} or "-". Throws ParseError with line/column
// detail on malformed input.
StemTable load_table(const std::string& path);
StemTable parse_table(const std::string& text, const std::string& origin = "<memory>");

struct SplitViolation {
    int row = 0, s = 0;
    std::string cell;
};

// Cells with s >= 2w must carry the π_(s-w) marker; red cells, rows <= 0
// and the s >= 12 columns (values announced without proof) print explicit
// groups instead and are exempt.
std::vector<SplitViolation> splitting_check(const StemTable& table);

// Shading agrees with the homotopy-level isomorphism region everywhere.
bool region_consistency(const StemTable& table);
std::vector<CellKey> region_mismatches(const StemTable& table);

}  // namespace tables
