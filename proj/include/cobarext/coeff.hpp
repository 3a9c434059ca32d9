#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cobarext/grading.hpp"

namespace coeff {

enum class GroundRing : std::uint8_t { C, R, Z2 };

std::string to_string(GroundRing r);
std::optional<GroundRing> ring_from_string(const std::string& s);

// A basis monomial of one of the coefficient rings.
//   pos: tau^e1 rho^e2, degree (-e2, -e1-e2)
//   neg: theta/(rho^e1 tau^e2), degree (e1, e1+e2+2)
// The negative cone only exists over Z2.
struct CoeffMonomial {
    enum class Cone : std::uint8_t { pos, neg };
    Cone cone = Cone::pos;
    std::int32_t e1 = 0;
    std::int32_t e2 = 0;

    static CoeffMonomial one() { return {}; }
    static CoeffMonomial pos(int a, int b) { return {Cone::pos, a, b}; }
    static CoeffMonomial neg(int k, int l) { return {Cone::neg, k, l}; }
    static CoeffMonomial tau() { return pos(1, 0); }
    static CoeffMonomial rho() { return pos(0, 1); }
    static CoeffMonomial theta() { return neg(0, 0); }

    bool is_one() const { return cone == Cone::pos && e1 == 0 && e2 == 0; }
    friend auto operator<=>(const CoeffMonomial&, const CoeffMonomial&) = default;
};

grading::Bidegree coeff_degree(const CoeffMonomial& m);
bool coeff_valid(GroundRing ring, const CoeffMonomial& m);
std::string to_string(const CoeffMonomial& m);

// The basis of the coefficient ring in bidegree (t, w); each bidegree holds
// at most one monomial.
std::vector<CoeffMonomial> coeff_basis(GroundRing ring, int t, int w);

// Product of two basis monomials; nullopt encodes zero. Throws on a
// monomial that is invalid for the ring.
std::optional<CoeffMonomial> coeff_mul(const CoeffMonomial& x, const CoeffMonomial& y,
                                       GroundRing ring);

// Product without ring validation, usable where validity is structural.
std::optional<CoeffMonomial> coeff_mul(const CoeffMonomial& x, const CoeffMonomial& y);

// theta/(rho^k tau^l) sits at (t, w) = (k, k+l+2); checks t <= 3w - 6.
bool neg_cone_bound_check(int k, int l);

}  // namespace coeff
