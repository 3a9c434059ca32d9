#pragma once

#include <string>
#include <vector>

#include "cobarext/gf2.hpp"
#include "cobarext/grading.hpp"
#include "cobarext/steenrod.hpp"

namespace cobar {

using coeff::CoeffMonomial;
using coeff::GroundRing;
using grading::Tridegree;
using steenrod::AbarMonomial;

// Left-normalized cobar word m [z_1 | ... | z_f]; every letter is a
// non-unit admissible monomial.
struct CobarWord {
    CoeffMonomial coeff;
    std::vector<AbarMonomial> letters;
    friend bool operator==(const CobarWord&, const CobarWord&) = default;
};

bool word_less(const CobarWord& a, const CobarWord& b);
grading::Bidegree word_bidegree(const CobarWord& w);
Tridegree word_tridegree(const CobarWord& w);
std::string to_string(const CobarWord& w);

// F2 combination of cobar words (a cochain), canonically sorted.
class CochainElement {
public:
    CochainElement() = default;
    static CochainElement term(CobarWord w);
    void toggle(CobarWord w);
    bool is_zero() const { return words_.empty(); }
    const std::vector<CobarWord>& words() const { return words_; }
    CochainElement operator+(const CochainElement& o) const;
    friend bool operator==(const CochainElement&, const CochainElement&) = default;

private:
    std::vector<CobarWord> words_;
};

std::string to_string(const CochainElement& e);

// Basis of the cobar complex in filtration f at internal bidegree (t, w),
// canonically ordered. Finite for every slice: letters have t >= 1 and
// Chow degree >= 0, so the letter budget is bounded by max(t, 2(t-w)).
std::vector<CobarWord> slice_basis(GroundRing ring, int t, int w, int f);

// Exact number of basis words of the slice, computed by a memoized
// recursion without materializing anything. Slice sizes grow roughly
// like 3^(t-w), so campaigns check this before enumerating.
long long slice_word_count(GroundRing ring, int t, int w, int f);
long long tower_max_slice(GroundRing ring, int t, int w, int f_max);

// Number of negative-cone words of the Z2 slice (always small).
long long nc_word_count(int t, int w, int f);
std::vector<CobarWord> nc_slice_basis(int t, int w, int f);

// Same slice indexed the spec way, by (stem, filtration, weight).
std::vector<CobarWord> cobar_basis(GroundRing ring, int s, int f, int w);

// Cobar differential of a single word:
//   d(m[z_1|...|z_f]) = red(eta_R(m) - m) prepended as a new first letter
//                     + sum_i m[z_1|...|psi_red(z_i)|...|z_f],
// all left-normalized (characteristic 2, no signs).
CochainElement differential(const CobarWord& w, GroundRing ring);

// Matrix of d: C^f -> C^{f+1} at fixed (t, w) = (s+f, w);
// rows = |basis(f+1)|, cols = |basis(f)|, acting on coordinate columns.
gf2::BitMatrix differential_matrix(GroundRing ring, int f, const Tridegree& d);

// The full complex at one internal bidegree: bases for f = 0..f_max+1 and
// the differentials d[f]: C^f -> C^{f+1} for f = 0..f_max.
struct Tower {
    GroundRing ring = GroundRing::R;
    int t = 0, w = 0;
    std::vector<std::vector<CobarWord>> bases;  // f = 0 .. f_max+1
    std::vector<gf2::BitMatrix> d;              // f = 0 .. f_max
    int f_max() const { return int(d.size()) - 1; }
};

Tower build_tower(GroundRing ring, int t, int w, int f_max);

// Verify d(f+1) d(f) = 0 for all composable pairs; returns the first bad f
// or -1 if clean.
int first_dd_violation(const Tower& tower);

int ext_dim(const Tower& tower, int f);
int ext_dim(GroundRing ring, int s, int f, int w);

// Cocycles whose classes form a basis of Ext at (s, f, w). Deterministic:
// kernel vectors of d_out reduced against the echelonized image of d_in,
// keeping those that contribute a new pivot.
std::vector<CochainElement> cocycle_representatives(GroundRing ring, int s, int f, int w);
std::vector<CochainElement> cocycle_representatives(const Tower& tower, int f);

// Juxtaposition product of two cocycles (left-normalized concatenation).
// Throws if an input is not a cocycle.
CochainElement ext_product(const CochainElement& x, const CochainElement& y, GroundRing ring);

// Concatenation product on raw cochains (no cocycle check).
CochainElement concat_product(const CochainElement& x, const CochainElement& y, GroundRing ring);

}  // namespace cobar
