#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cobarext/cobar.hpp"
#include "cobarext/gf2.hpp"
#include "cobarext/grading.hpp"

namespace compare {

using cobar::CobarWord;
using cobar::Tower;
using coeff::GroundRing;
using grading::RegionVerdict;
using grading::Tridegree;

enum class MapVerdict : std::uint8_t { iso, inj_not_surj, not_inj };
std::string to_string(MapVerdict v);

struct ComparisonReport {
    Tridegree degree;
    int dim_R = 0;
    int dim_Z2 = 0;
    int map_rank = 0;
    RegionVerdict verdict_predicted = RegionVerdict::unclassified;
    MapVerdict verdict_observed = MapVerdict::iso;
    bool consistent = false;
};

// Both towers over one internal bidegree, with the inclusion matrices.
struct TowerPair {
    Tower r;
    Tower z2;
    std::vector<gf2::BitMatrix> incl;  // per filtration f = 0..f_max+1
};

TowerPair build_tower_pair(int t, int w, int f_max);

// Basis-label inclusion C_R^f -> C_Z2^f; rows = |Z2 basis|, cols = |R basis|.
// Throws if some R-word is missing from the Z2 basis.
gf2::BitMatrix inclusion_matrix(int f, const Tridegree& d);

// Words of the Z2 slice with negative-cone coefficient (the cokernel of the
// inclusion, as a basis).
std::vector<CobarWord> cokernel_basis(int f, const Tridegree& d);

// d_Z2 . incl = incl . d_R at every filtration of the pair.
bool inclusion_is_chain_map(const TowerPair& pair);

ComparisonReport ext_compare(const TowerPair& pair, int f);
ComparisonReport ext_compare(int s, int f, int w);

struct S0CokernelReport {
    int f = 0, w = 0;
    int dimension = 0;
    std::vector<std::string> class_labels;  // matched against theta/tau^(w-2) h0^f
};

// Cokernel of Ext_R -> Ext_Z2 at (0, f, w): dimension plus the matched
// label when the class is the expected theta/tau^(w-2) [tau0|...|tau0].
S0CokernelReport s0_cokernel_analysis(int f, int w);

// dim Ext_R(s,f,w) <= sum_{k=0..max(0,s+f-2w)} dim Ext_C(s+k,f,w+k)
bool bockstein_bound_check(int s, int f, int w);

}  // namespace compare
