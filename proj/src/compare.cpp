#include "cobarext/compare.hpp"

#include <map>
#include <stdexcept>

namespace compare {

using cobar::build_tower;
using cobar::slice_basis;
using cobar::word_less;
using coeff::CoeffMonomial;

std::string to_string(MapVerdict v) {
    switch (v) {
        case MapVerdict::iso: return "Iso";
        case MapVerdict::inj_not_surj: return "InjNotSurj";
        case MapVerdict::not_inj: return "NotInj";
    }
    return "?";
}

namespace {

gf2::BitMatrix inclusion_from_bases(const std::vector<CobarWord>& r_basis,
                                    const std::vector<CobarWord>& z2_basis) {
    std::map<CobarWord, std::size_t, decltype(&word_less)> index(&word_less);
    for (std::size_t i = 0; i < z2_basis.size(); ++i) index.emplace(z2_basis[i], i);
    gf2::BitMatrix m(z2_basis.size(), r_basis.size());
    for (std::size_t j = 0; j < r_basis.size(); ++j) {
        auto it = index.find(r_basis[j]);
        if (it == index.end())
            throw std::logic_error("inclusion_matrix: R-word missing from the Z2 basis: " +
                                   cobar::to_string(r_basis[j]));
        m.set(it->second, j, true);
    }
    return m;
}

}  // namespace

TowerPair build_tower_pair(int t, int w, int f_max) {
    TowerPair pair;
    pair.r = build_tower(GroundRing::R, t, w, f_max);
    pair.z2 = build_tower(GroundRing::Z2, t, w, f_max);
    pair.incl.reserve(pair.r.bases.size());
    for (std::size_t f = 0; f < pair.r.bases.size(); ++f)
        pair.incl.push_back(inclusion_from_bases(pair.r.bases[f], pair.z2.bases[f]));
    return pair;
}

gf2::BitMatrix inclusion_matrix(int f, const Tridegree& d) {
    return inclusion_from_bases(slice_basis(GroundRing::R, d.t(), d.w, f),
                                slice_basis(GroundRing::Z2, d.t(), d.w, f));
}

std::vector<CobarWord> cokernel_basis(int f, const Tridegree& d) {
    std::vector<CobarWord> out;
    for (const auto& w : slice_basis(GroundRing::Z2, d.t(), d.w, f))
        if (w.coeff.cone == CoeffMonomial::Cone::neg) out.push_back(w);
    return out;
}

bool inclusion_is_chain_map(const TowerPair& pair) {
    for (std::size_t f = 0; f < pair.r.d.size(); ++f) {
        const auto lhs = pair.z2.d[f].multiplied(pair.incl[f]);
        const auto rhs = pair.incl[f + 1].multiplied(pair.r.d[f]);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

ComparisonReport ext_compare(const TowerPair& pair, int f) {
    if (f < 0 || f > pair.r.f_max())
        throw std::invalid_argument("ext_compare: filtration outside tower pair");
    ComparisonReport rep;
    const int t = pair.r.t;
    rep.degree = Tridegree{t - f, f, pair.r.w};
    rep.dim_R = cobar::ext_dim(pair.r, f);
    rep.dim_Z2 = cobar::ext_dim(pair.z2, f);
    const auto sf = std::size_t(f);
    const gf2::BitMatrix zero_in_r(pair.r.d[sf].cols(), 0);
    const gf2::BitMatrix zero_in_z2(pair.z2.d[sf].cols(), 0);
    rep.map_rank = int(gf2::induced_map_rank(pair.r.d[sf], f == 0 ? zero_in_r : pair.r.d[sf - 1],
                                             pair.z2.d[sf], f == 0 ? zero_in_z2 : pair.z2.d[sf - 1],
                                             pair.incl[sf]));
    rep.verdict_predicted = grading::homotopy_region_classify(rep.degree.s, rep.degree.w);
    if (rep.map_rank < rep.dim_R)
        rep.verdict_observed = MapVerdict::not_inj;
    else if (rep.dim_Z2 == rep.map_rank)
        rep.verdict_observed = MapVerdict::iso;
    else
        rep.verdict_observed = MapVerdict::inj_not_surj;
    switch (rep.verdict_predicted) {
        case RegionVerdict::isomorphism: rep.consistent = rep.verdict_observed == MapVerdict::iso; break;
        case RegionVerdict::injection:
            rep.consistent = rep.verdict_observed == MapVerdict::iso ||
                             rep.verdict_observed == MapVerdict::inj_not_surj;
            break;
        case RegionVerdict::unclassified: rep.consistent = true; break;
    }
    return rep;
}

ComparisonReport ext_compare(int s, int f, int w) {
    return ext_compare(build_tower_pair(s + f, w, f), f);
}

S0CokernelReport s0_cokernel_analysis(int f, int w) {
    S0CokernelReport rep;
    rep.f = f;
    rep.w = w;
    if (w < 2) return rep;
    const auto pair = build_tower_pair(f, w, f);
    const auto full = ext_compare(pair, f);
    rep.dimension = full.dim_Z2 - full.map_rank;
    if (rep.dimension == 0) return rep;

    // candidate label: theta/tau^(w-2) [tau0 | ... | tau0]
    CobarWord candidate{CoeffMonomial::neg(0, w - 2),
                        std::vector<steenrod::AbarMonomial>(std::size_t(f), steenrod::AbarMonomial::tau(0))};
    // representatives of Ext_Z2 not in the image: negative-cone ones
    for (const auto& rep_elt : cobar::cocycle_representatives(pair.z2, f)) {
        bool has_neg = false;
        for (const auto& wd : rep_elt.words())
            if (wd.coeff.cone == CoeffMonomial::Cone::neg) has_neg = true;
        if (!has_neg) continue;
        if (rep_elt.words().size() == 1 && rep_elt.words()[0] == candidate) {
            std::string label = "theta";
            if (w > 2) label += "/tau^" + std::to_string(w - 2);
            if (f > 0) label += " h0^" + std::to_string(f);
            rep.class_labels.push_back(label);
        } else {
            rep.class_labels.push_back(cobar::to_string(rep_elt));
        }
    }
    return rep;
}

bool bockstein_bound_check(int s, int f, int w) {
    const int dim_r = cobar::ext_dim(GroundRing::R, s, f, w);
    if (dim_r == 0) return true;
    const int k_max = std::max(0, s + f - 2 * w);
    int total = 0;
    for (int k = 0; k <= k_max; ++k) total += cobar::ext_dim(GroundRing::C, s + k, f, w + k);
    return dim_r <= total;
}

}  // namespace compare
