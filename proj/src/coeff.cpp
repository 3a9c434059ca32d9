#include "cobarext/coeff.hpp"

#include <stdexcept>

namespace coeff {

std::string to_string(GroundRing r) {
    switch (r) {
        case GroundRing::C: return "C";
        case GroundRing::R: return "R";
        case GroundRing::Z2: return "Z2";
    }
    return "?";
}

std::optional<GroundRing> ring_from_string(const std::string& s) {
    if (s == "C") return GroundRing::C;
    if (s == "R") return GroundRing::R;
    if (s == "Z2" || s == "Z/2") return GroundRing::Z2;
    return std::nullopt;
}

grading::Bidegree coeff_degree(const CoeffMonomial& m) {
    if (m.cone == CoeffMonomial::Cone::pos) return {-m.e2, -m.e1 - m.e2};
    return {m.e1, m.e1 + m.e2 + 2};
}

bool coeff_valid(GroundRing ring, const CoeffMonomial& m) {
    if (m.e1 < 0 || m.e2 < 0) return false;
    if (m.cone == CoeffMonomial::Cone::neg) return ring == GroundRing::Z2;
    if (ring == GroundRing::C) return m.e2 == 0;
    return true;
}

std::string to_string(const CoeffMonomial& m) {
    auto pow = [](const char* base, int e) -> std::string {
        if (e == 0) return "";
        if (e == 1) return base;
        return std::string(base) + "^" + std::to_string(e);
    };
    if (m.cone == CoeffMonomial::Cone::pos) {
        std::string s;
        s += pow("tau", m.e1);
        if (!s.empty() && m.e2 > 0) s += " ";
        s += pow("rho", m.e2);
        return s.empty() ? "1" : s;
    }
    if (m.e1 == 0 && m.e2 == 0) return "theta";
    std::string denom = pow("rho", m.e1);
    if (!denom.empty() && m.e2 > 0) denom += " ";
    denom += pow("tau", m.e2);
    return "theta/(" + denom + ")";
}

std::vector<CoeffMonomial> coeff_basis(GroundRing ring, int t, int w) {
    std::vector<CoeffMonomial> out;
    if (ring == GroundRing::C) {
        if (t == 0 && w <= 0) out.push_back(CoeffMonomial::pos(-w, 0));
        return out;
    }
    if (t <= 0 && w <= t) out.push_back(CoeffMonomial::pos(t - w, -t));
    if (ring == GroundRing::Z2 && t >= 0 && w >= t + 2) out.push_back(CoeffMonomial::neg(t, w - t - 2));
    return out;
}

std::optional<CoeffMonomial> coeff_mul(const CoeffMonomial& x, const CoeffMonomial& y) {
    using Cone = CoeffMonomial::Cone;
    if (x.cone == Cone::pos && y.cone == Cone::pos)
        return CoeffMonomial::pos(x.e1 + y.e1, x.e2 + y.e2);
    if (x.cone == Cone::neg && y.cone == Cone::neg) return std::nullopt;
    const CoeffMonomial& p = x.cone == Cone::pos ? x : y;
    const CoeffMonomial& n = x.cone == Cone::pos ? y : x;
    // tau^a rho^b * theta/(rho^k tau^l): cancel exponents, zero if either
    // direction runs out (tau and rho are not invertible)
    const int k = n.e1 - p.e2;
    const int l = n.e2 - p.e1;
    if (k < 0 || l < 0) return std::nullopt;
    return CoeffMonomial::neg(k, l);
}

std::optional<CoeffMonomial> coeff_mul(const CoeffMonomial& x, const CoeffMonomial& y,
                                       GroundRing ring) {
    if (!coeff_valid(ring, x) || !coeff_valid(ring, y))
        throw std::invalid_argument("coeff_mul: monomial invalid for ring " + to_string(ring));
    return coeff_mul(x, y);
}

bool neg_cone_bound_check(int k, int l) {
    const auto [t, w] = coeff_degree(CoeffMonomial::neg(k, l));
    return t <= 3 * w - 6;
}

}  // namespace coeff
