#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cobarext/coeff.hpp"
#include "cobarext/grading.hpp"

namespace steenrod {

using coeff::CoeffMonomial;
using coeff::GroundRing;

// Admissible monomial tau^eps xi^e of the dual Steenrod algebra:
// eps is a bit mask (bit i = tau_i present, exponents are 0/1 after the
// relation tau_k^2 = tau xi_{k+1} + rho tau_{k+1} + rho tau_0 xi_{k+1}),
// xi[i] is the exponent of xi_{i+1}, trailing zeros trimmed.
struct AbarMonomial {
    std::uint32_t eps = 0;
    std::vector<std::uint16_t> xi;

    static AbarMonomial one() { return {}; }
    static AbarMonomial tau(int i) { return {std::uint32_t(1) << i, {}}; }
    static AbarMonomial xi_pow(int i, int e);

    bool is_unit() const { return eps == 0 && xi.empty(); }
    void trim();
    friend bool operator==(const AbarMonomial&, const AbarMonomial&) = default;
};

grading::Bidegree tau_degree(int i);
grading::Bidegree xi_degree(int i);
grading::Bidegree monomial_degree_raw(const AbarMonomial& m);

// Degree together with the two degree bounds: t <= 3w + 1 and
// t >= 2^(c+1) - c - 2 for the Chow degree c = t - 2w. Violations throw;
// they cannot happen for admissible monomials.
grading::Bidegree monomial_degree(const AbarMonomial& m);

// Canonical monomial order: by (t, w), then tau mask, then xi exponents.
bool monomial_less(const AbarMonomial& a, const AbarMonomial& b);

std::string to_string(const AbarMonomial& m);

// All non-unit admissible monomials of exact bidegree (t, w).
std::vector<AbarMonomial> abar_basis(int t, int w);
// All non-unit admissible monomials with t <= t_max, canonically ordered.
std::vector<AbarMonomial> abar_basis_up_to(int t_max);

struct AlgTerm {
    CoeffMonomial c;
    AbarMonomial m;
    friend bool operator==(const AlgTerm&, const AlgTerm&) = default;
};
bool term_less(const AlgTerm& a, const AlgTerm& b);

// F2-linear combination of (left coefficient, monomial) pairs, stored
// sorted with mod-2 cancellation.
class AlgElement {
public:
    AlgElement() = default;
    static AlgElement zero() { return {}; }
    static AlgElement term(const CoeffMonomial& c, const AbarMonomial& m);
    static AlgElement unit() { return term(CoeffMonomial::one(), AbarMonomial::one()); }

    void toggle(const CoeffMonomial& c, const AbarMonomial& m);
    AlgElement operator+(const AlgElement& o) const;  // symmetric difference
    bool is_zero() const { return terms_.empty(); }
    const std::vector<AlgTerm>& terms() const { return terms_; }
    friend bool operator==(const AlgElement&, const AlgElement&) = default;

private:
    std::vector<AlgTerm> terms_;
};

std::string to_string(const AlgElement& e);

// Products: commutative, tau_i squares rewritten until admissible.
AlgElement mul(const AbarMonomial& x, const AbarMonomial& y, GroundRing ring);
AlgElement mul(const AlgElement& x, const AlgElement& y, GroundRing ring);

// Right unit. On the positive cone: eta_R(rho) = rho, eta_R(tau) = tau +
// rho tau_0, extended multiplicatively (identity over C). On the negative
// cone (Z2 only) the multiplicative extension is forced:
//   eta_R(theta/(rho^k tau^l)) =
//     sum_{i=0..k} C(l+i, i) theta/(rho^(k-i) tau^(l+i)) tau_0^i   (mod 2).
AlgElement eta_R(const CoeffMonomial& m, GroundRing ring);

struct TensorTerm {
    CoeffMonomial c;
    AbarMonomial a, b;
    friend bool operator==(const TensorTerm&, const TensorTerm&) = default;
};
bool tensor_term_less(const TensorTerm& x, const TensorTerm& y);

// Left-normalized element of (dual Steenrod algebra)^{tensor 2}: every term
// is coefficient * (a tensor b) with no interior coefficients.
class TensorSquareElement {
public:
    TensorSquareElement() = default;
    void toggle(const CoeffMonomial& c, const AbarMonomial& a, const AbarMonomial& b);
    bool is_zero() const { return terms_.empty(); }
    const std::vector<TensorTerm>& terms() const { return terms_; }
    friend bool operator==(const TensorSquareElement&, const TensorSquareElement&) = default;

private:
    std::vector<TensorTerm> terms_;
};

TensorSquareElement tensor_mul(const TensorSquareElement& x, const TensorSquareElement& y,
                               GroundRing ring);

// Coproduct, multiplicative over the generator formulas
//   psi(xi_k)  = sum_{i=0..k} xi_{k-i}^{2^i} (x) xi_i
//   psi(tau_k) = tau_k (x) 1 + sum_{i=0..k} xi_{k-i}^{2^i} (x) tau_i.
TensorSquareElement coproduct(const AbarMonomial& z, GroundRing ring);

// psi(z) with both unit-bearing terms removed; rejects the unit monomial.
TensorSquareElement reduced_coproduct(const AbarMonomial& z, GroundRing ring);

// Counit contractions of a tensor square, for the axiom checks:
// (eps (x) id) and (id (x) eps).
AlgElement counit_left(const TensorSquareElement& e);
AlgElement counit_right(const TensorSquareElement& e);

}  // namespace steenrod
