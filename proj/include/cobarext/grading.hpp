#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace grading {

// (t, w) = (internal degree, weight), homological conventions.
struct Bidegree {
    int t = 0;
    int w = 0;
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
    Bidegree operator+(const Bidegree& o) const { return {t + o.t, w + o.w}; }
};

// (s, f, w) = (stem, Adams filtration, weight); t = s + f.
struct Tridegree {
    int s = 0;
    int f = 0;
    int w = 0;
    int t() const { return s + f; }
    friend auto operator<=>(const Tridegree&, const Tridegree&) = default;
};

inline int milnor_witt_stem(const Tridegree& d) { return d.s - d.w; }

enum class RegionVerdict : std::uint8_t { isomorphism, injection, unclassified };

std::string to_string(RegionVerdict v);

// Verdict for the realization map on homotopy/Ext in stem s, weight w:
// isomorphism when s >= 3w-5 or s <= -1, injection on the line s = 3w-6
// (s >= 0), unclassified otherwise.
inline RegionVerdict homotopy_region_classify(int s, int w) {
    if (s >= 3 * w - 5 || s <= -1) return RegionVerdict::isomorphism;
    if (s == 3 * w - 6 && s >= 0) return RegionVerdict::injection;
    return RegionVerdict::unclassified;
}

// Cobar-level verdict at internal degree t, filtration f, weight w.
// The inclusion of complexes is injective everywhere, so the fallback
// verdict is injection, never unclassified.
inline RegionVerdict cobar_region_classify(int t, int f, int w) {
    if (t - f >= 3 * w - 5 || t <= f - 1) return RegionVerdict::isomorphism;
    return RegionVerdict::injection;
}

// Degree box for campaigns: s in [s_min, s_max], f in [0, f_max],
// w in [w_min, w_max].
struct DegreeBox {
    int s_min = 0, s_max = 0;
    int f_max = 0;
    int w_min = 0, w_max = 0;
    bool valid() const { return s_min <= s_max && w_min <= w_max && f_max >= 0; }
    friend auto operator<=>(const DegreeBox&, const DegreeBox&) = default;
};

// Default campaign box: covers both boundary lines of the cobar comparison,
// the s <= -1 region, the s = 0 cokernel family and the sharpness witnesses.
inline DegreeBox default_box() { return DegreeBox{-6, 9, 8, -4, 5}; }

}  // namespace grading
