#include "cobarext/steenrod.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>

namespace steenrod {

using coeff::coeff_mul;

AbarMonomial AbarMonomial::xi_pow(int i, int e) {
    AbarMonomial m;
    if (e > 0) {
        m.xi.assign(std::size_t(i), 0);
        m.xi[std::size_t(i) - 1] = std::uint16_t(e);
    }
    return m;
}

void AbarMonomial::trim() {
    while (!xi.empty() && xi.back() == 0) xi.pop_back();
}

grading::Bidegree tau_degree(int i) { return {(1 << (i + 1)) - 1, (1 << i) - 1}; }
grading::Bidegree xi_degree(int i) { return {2 * ((1 << i) - 1), (1 << i) - 1}; }

grading::Bidegree monomial_degree_raw(const AbarMonomial& m) {
    grading::Bidegree d{0, 0};
    std::uint32_t e = m.eps;
    while (e) {
        const int i = std::countr_zero(e);
        e &= e - 1;
        d = d + tau_degree(i);
    }
    for (std::size_t j = 0; j < m.xi.size(); ++j) {
        const auto g = xi_degree(int(j) + 1);
        d.t += int(m.xi[j]) * g.t;
        d.w += int(m.xi[j]) * g.w;
    }
    return d;
}

grading::Bidegree monomial_degree(const AbarMonomial& m) {
    const auto d = monomial_degree_raw(m);
    if (d.t > 3 * d.w + 1) throw std::logic_error("monomial degree violates t <= 3w+1");
    const int c = d.t - 2 * d.w;
    if (c < 0 || d.t < (1 << (c + 1)) - c - 2)
        throw std::logic_error("monomial degree violates the Chow-degree lower bound");
    return d;
}

bool monomial_less(const AbarMonomial& a, const AbarMonomial& b) {
    const auto da = monomial_degree_raw(a), db = monomial_degree_raw(b);
    if (da != db) return da < db;
    if (a.eps != b.eps) return a.eps < b.eps;
    return a.xi < b.xi;
}

std::string to_string(const AbarMonomial& m) {
    if (m.is_unit()) return "1";
    std::string s;
    std::uint32_t e = m.eps;
    while (e) {
        const int i = std::countr_zero(e);
        e &= e - 1;
        if (!s.empty()) s += " ";
        s += "tau" + std::to_string(i);
    }
    for (std::size_t j = 0; j < m.xi.size(); ++j) {
        if (m.xi[j] == 0) continue;
        if (!s.empty()) s += " ";
        s += "xi" + std::to_string(j + 1);
        if (m.xi[j] > 1) s += "^" + std::to_string(m.xi[j]);
    }
    return s;
}

std::vector<AbarMonomial> abar_basis_up_to(int t_max) {
    std::vector<AbarMonomial> out;
    if (t_max < 1) return out;
    // generators with degree t <= t_max, taus first then xis
    struct Gen {
        bool is_tau;
        int idx;
        grading::Bidegree deg;
    };
    std::vector<Gen> gens;
    for (int i = 0; tau_degree(i).t <= t_max; ++i) gens.push_back({true, i, tau_degree(i)});
    for (int i = 1; xi_degree(i).t <= t_max; ++i) gens.push_back({false, i, xi_degree(i)});

    AbarMonomial cur;
    auto rec = [&](auto&& self, std::size_t gi, int t) -> void {
        if (gi == gens.size()) {
            if (t > 0) {
                AbarMonomial m = cur;
                m.trim();
                out.push_back(std::move(m));
            }
            return;
        }
        const auto& g = gens[gi];
        if (g.is_tau) {
            self(self, gi + 1, t);
            if (t + g.deg.t <= t_max) {
                cur.eps |= std::uint32_t(1) << g.idx;
                self(self, gi + 1, t + g.deg.t);
                cur.eps &= ~(std::uint32_t(1) << g.idx);
            }
        } else {
            if (cur.xi.size() < std::size_t(g.idx)) cur.xi.resize(std::size_t(g.idx), 0);
            for (int e = 0; t + e * g.deg.t <= t_max; ++e) {
                cur.xi[std::size_t(g.idx) - 1] = std::uint16_t(e);
                self(self, gi + 1, t + e * g.deg.t);
            }
            cur.xi[std::size_t(g.idx) - 1] = 0;
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), monomial_less);
    return out;
}

std::vector<AbarMonomial> abar_basis(int t, int w) {
    std::vector<AbarMonomial> out;
    if (t <= 0 || w < 0 || t > 3 * w + 1) return out;
    for (auto& m : abar_basis_up_to(t)) {
        if (monomial_degree_raw(m) == grading::Bidegree{t, w}) out.push_back(std::move(m));
    }
    return out;
}

AlgElement AlgElement::term(const CoeffMonomial& c, const AbarMonomial& m) {
    AlgElement e;
    e.toggle(c, m);
    return e;
}

bool term_less(const AlgTerm& a, const AlgTerm& b) {
    if (a.m != b.m) return monomial_less(a.m, b.m);
    return a.c < b.c;
}

void AlgElement::toggle(const CoeffMonomial& c, const AbarMonomial& m) {
    AlgTerm t{c, m};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t, term_less);
    if (it != terms_.end() && *it == t)
        terms_.erase(it);
    else
        terms_.insert(it, std::move(t));
}

AlgElement AlgElement::operator+(const AlgElement& o) const {
    AlgElement out = *this;
    for (const auto& t : o.terms_) out.toggle(t.c, t.m);
    return out;
}

std::string to_string(const AlgElement& e) {
    if (e.is_zero()) return "0";
    std::string s;
    for (const auto& t : e.terms()) {
        if (!s.empty()) s += " + ";
        if (!t.c.is_one()) s += coeff::to_string(t.c) + "*";
        s += to_string(t.m);
    }
    return s;
}

namespace {

// tau exponent multiset while rewriting squares; counts stay <= 2
struct PendingMono {
    CoeffMonomial c;
    std::array<std::uint8_t, 32> taus;
    std::vector<std::uint16_t> xi;
};

void bump_xi(std::vector<std::uint16_t>& xi, int idx, int by) {
    if (xi.size() < std::size_t(idx)) xi.resize(std::size_t(idx), 0);
    xi[std::size_t(idx) - 1] = std::uint16_t(xi[std::size_t(idx) - 1] + by);
}

}  // namespace

AlgElement mul(const AbarMonomial& x, const AbarMonomial& y, GroundRing ring) {
    AlgElement out;
    PendingMono start;
    start.c = CoeffMonomial::one();
    start.taus.fill(0);
    for (std::uint32_t e = x.eps; e; e &= e - 1) start.taus[std::size_t(std::countr_zero(e))]++;
    for (std::uint32_t e = y.eps; e; e &= e - 1) start.taus[std::size_t(std::countr_zero(e))]++;
    start.xi.assign(std::max(x.xi.size(), y.xi.size()), 0);
    for (std::size_t i = 0; i < start.xi.size(); ++i) {
        int v = 0;
        if (i < x.xi.size()) v += x.xi[i];
        if (i < y.xi.size()) v += y.xi[i];
        start.xi[i] = std::uint16_t(v);
    }

    std::vector<PendingMono> work{std::move(start)};
    while (!work.empty()) {
        PendingMono p = std::move(work.back());
        work.pop_back();
        int sq = -1;
        for (std::size_t i = 0; i < p.taus.size(); ++i)
            if (p.taus[i] >= 2) {
                sq = int(i);
                break;
            }
        if (sq < 0) {
            AbarMonomial m;
            for (std::size_t i = 0; i < p.taus.size(); ++i)
                if (p.taus[i]) m.eps |= std::uint32_t(1) << i;
            m.xi = std::move(p.xi);
            m.trim();
            out.toggle(p.c, m);
            continue;
        }
        // tau_k^2 = tau xi_{k+1} + rho tau_{k+1} + rho tau_0 xi_{k+1}; rho = 0 over C
        PendingMono base = p;
        base.taus[std::size_t(sq)] -= 2;
        {
            PendingMono t1 = base;
            t1.c = *coeff_mul(t1.c, CoeffMonomial::tau());
            bump_xi(t1.xi, sq + 1, 1);
            work.push_back(std::move(t1));
        }
        if (ring != GroundRing::C) {
            PendingMono t2 = base;
            t2.c = *coeff_mul(t2.c, CoeffMonomial::rho());
            t2.taus[std::size_t(sq) + 1]++;
            work.push_back(std::move(t2));
            PendingMono t3 = base;
            t3.c = *coeff_mul(t3.c, CoeffMonomial::rho());
            t3.taus[0]++;
            bump_xi(t3.xi, sq + 1, 1);
            work.push_back(std::move(t3));
        }
    }
    return out;
}

AlgElement mul(const AlgElement& x, const AlgElement& y, GroundRing ring) {
    AlgElement out;
    for (const auto& tx : x.terms()) {
        for (const auto& ty : y.terms()) {
            const auto c = coeff_mul(tx.c, ty.c);
            if (!c) continue;
            for (const auto& t : mul(tx.m, ty.m, ring).terms()) {
                const auto cc = coeff_mul(*c, t.c);
                if (cc) out.toggle(*cc, t.m);
            }
        }
    }
    return out;
}

namespace {

bool binom_odd(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return false;
    return (k & (n - k)) == 0;
}

AlgElement tau0_power(int i, GroundRing ring) {
    AlgElement acc = AlgElement::unit();
    const AlgElement t0 = AlgElement::term(CoeffMonomial::one(), AbarMonomial::tau(0));
    for (int j = 0; j < i; ++j) acc = mul(acc, t0, ring);
    return acc;
}

}  // namespace

AlgElement eta_R(const CoeffMonomial& m, GroundRing ring) {
    if (!coeff_valid(ring, m))
        throw std::invalid_argument("eta_R: monomial invalid for ring " + coeff::to_string(ring));
    if (ring == GroundRing::C) return AlgElement::term(m, AbarMonomial::one());
    if (m.cone == CoeffMonomial::Cone::pos) {
        AlgElement acc = AlgElement::term(CoeffMonomial::pos(0, m.e2), AbarMonomial::one());
        AlgElement eta_tau = AlgElement::term(CoeffMonomial::tau(), AbarMonomial::one()) +
                             AlgElement::term(CoeffMonomial::rho(), AbarMonomial::tau(0));
        for (int j = 0; j < m.e1; ++j) acc = mul(acc, eta_tau, ring);
        return acc;
    }
    const int k = m.e1, l = m.e2;
    AlgElement out;
    for (int i = 0; i <= k; ++i) {
        if (!binom_odd(l + i, i)) continue;
        const auto n = CoeffMonomial::neg(k - i, l + i);
        for (const auto& t : tau0_power(i, ring).terms()) {
            const auto c = coeff_mul(n, t.c);
            if (c) out.toggle(*c, t.m);
        }
    }
    return out;
}

bool tensor_term_less(const TensorTerm& x, const TensorTerm& y) {
    if (x.a != y.a) return monomial_less(x.a, y.a);
    if (x.b != y.b) return monomial_less(x.b, y.b);
    return x.c < y.c;
}

void TensorSquareElement::toggle(const CoeffMonomial& c, const AbarMonomial& a,
                                 const AbarMonomial& b) {
    TensorTerm t{c, a, b};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t, tensor_term_less);
    if (it != terms_.end() && *it == t)
        terms_.erase(it);
    else
        terms_.insert(it, std::move(t));
}

TensorSquareElement tensor_mul(const TensorSquareElement& x, const TensorSquareElement& y,
                               GroundRing ring) {
    TensorSquareElement out;
    for (const auto& tx : x.terms()) {
        for (const auto& ty : y.terms()) {
            const auto c = coeff_mul(tx.c, ty.c);
            if (!c) continue;
            const AlgElement left = mul(tx.a, ty.a, ring);
            const AlgElement right = mul(tx.b, ty.b, ring);
            for (const auto& rt : right.terms()) {
                // interior coefficient migrates left: a (x) c b = a eta_R(c) (x) b
                const AlgElement lhs = mul(left, eta_R(rt.c, ring), ring);
                for (const auto& lt : lhs.terms()) {
                    const auto cc = coeff_mul(*c, lt.c);
                    if (cc) out.toggle(*cc, lt.m, rt.m);
                }
            }
        }
    }
    return out;
}

namespace {

TensorSquareElement psi_tau(int k) {
    TensorSquareElement out;
    out.toggle(CoeffMonomial::one(), AbarMonomial::tau(k), AbarMonomial::one());
    for (int i = 0; i <= k; ++i) {
        const AbarMonomial left = i == k ? AbarMonomial::one() : AbarMonomial::xi_pow(k - i, 1 << i);
        out.toggle(CoeffMonomial::one(), left, AbarMonomial::tau(i));
    }
    return out;
}

TensorSquareElement psi_xi(int k) {
    TensorSquareElement out;
    for (int i = 0; i <= k; ++i) {
        const AbarMonomial left = i == k ? AbarMonomial::one() : AbarMonomial::xi_pow(k - i, 1 << i);
        const AbarMonomial right = i == 0 ? AbarMonomial::one() : AbarMonomial::xi_pow(i, 1);
        out.toggle(CoeffMonomial::one(), left, right);
    }
    return out;
}

}  // namespace

TensorSquareElement coproduct(const AbarMonomial& z, GroundRing ring) {
    TensorSquareElement acc;
    acc.toggle(CoeffMonomial::one(), AbarMonomial::one(), AbarMonomial::one());
    for (std::uint32_t e = z.eps; e; e &= e - 1)
        acc = tensor_mul(acc, psi_tau(std::countr_zero(e)), ring);
    for (std::size_t j = 0; j < z.xi.size(); ++j) {
        const auto p = psi_xi(int(j) + 1);
        for (int rep = 0; rep < z.xi[j]; ++rep) acc = tensor_mul(acc, p, ring);
    }
    return acc;
}

TensorSquareElement reduced_coproduct(const AbarMonomial& z, GroundRing ring) {
    if (z.is_unit()) throw std::invalid_argument("reduced_coproduct: unit monomial");
    TensorSquareElement out;
    for (const auto& t : coproduct(z, ring).terms())
        if (!t.a.is_unit() && !t.b.is_unit()) out.toggle(t.c, t.a, t.b);
    return out;
}

AlgElement counit_left(const TensorSquareElement& e) {
    AlgElement out;
    for (const auto& t : e.terms())
        if (t.a.is_unit()) out.toggle(t.c, t.b);
    return out;
}

AlgElement counit_right(const TensorSquareElement& e) {
    AlgElement out;
    for (const auto& t : e.terms())
        if (t.b.is_unit()) out.toggle(t.c, t.a);
    return out;
}

}  // namespace steenrod
