#include "cobarext/cobar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cobarext/coeff.hpp"

namespace cobar {

using coeff::coeff_basis;
using coeff::coeff_mul;
using steenrod::AlgElement;
using steenrod::monomial_degree_raw;
using steenrod::monomial_less;

bool word_less(const CobarWord& a, const CobarWord& b) {
    const std::size_t n = std::min(a.letters.size(), b.letters.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.letters[i] != b.letters[i]) return monomial_less(a.letters[i], b.letters[i]);
    }
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return a.coeff < b.coeff;
}

grading::Bidegree word_bidegree(const CobarWord& w) {
    grading::Bidegree d = coeff::coeff_degree(w.coeff);
    for (const auto& z : w.letters) d = d + monomial_degree_raw(z);
    return d;
}

Tridegree word_tridegree(const CobarWord& w) {
    const auto d = word_bidegree(w);
    const int f = int(w.letters.size());
    return Tridegree{d.t - f, f, d.w};
}

std::string to_string(const CobarWord& w) {
    std::string s;
    if (!w.coeff.is_one() || w.letters.empty()) s += coeff::to_string(w.coeff);
    s += "[";
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) s += "|";
        s += steenrod::to_string(w.letters[i]);
    }
    s += "]";
    return s;
}

CochainElement CochainElement::term(CobarWord w) {
    CochainElement e;
    e.toggle(std::move(w));
    return e;
}

void CochainElement::toggle(CobarWord w) {
    auto it = std::lower_bound(words_.begin(), words_.end(), w, word_less);
    if (it != words_.end() && *it == w)
        words_.erase(it);
    else
        words_.insert(it, std::move(w));
}

CochainElement CochainElement::operator+(const CochainElement& o) const {
    CochainElement out = *this;
    for (const auto& w : o.words()) out.toggle(w);
    return out;
}

std::string to_string(const CochainElement& e) {
    if (e.is_zero()) return "0";
    std::string s;
    for (const auto& w : e.words()) {
        if (!s.empty()) s += " + ";
        s += to_string(w);
    }
    return s;
}

std::vector<CobarWord> slice_basis(GroundRing ring, int t, int w, int f) {
    std::vector<CobarWord> out;
    if (f < 0) return out;
    if (f == 0) {
        for (const auto& c : coeff_basis(ring, t, w)) out.push_back(CobarWord{c, {}});
        return out;
    }
    const int cap = std::max({t, 2 * (t - w), 0});
    const auto pool = steenrod::abar_basis_up_to(cap);

    std::vector<AbarMonomial> letters;
    auto rec = [&](auto&& self, int tr, int wr, int r) -> void {
        if (r == 0) {
            for (const auto& c : coeff_basis(ring, tr, wr)) out.push_back(CobarWord{c, letters});
            return;
        }
        for (const auto& m : pool) {
            const auto d = monomial_degree_raw(m);
            const int ntr = tr - d.t, nwr = wr - d.w;
            const int ncw = ntr - nwr;
            // every remaining letter needs t >= 1 and coweight >= 1;
            // a positive-cone coefficient needs residual coweight >= 0,
            // a negative-cone coefficient needs residual t >= 0
            const bool pos_ok = ncw >= r - 1;
            const bool nc_ok = ring == GroundRing::Z2 && ntr >= r - 1;
            bool feasible = false;
            switch (ring) {
                case GroundRing::C: feasible = ntr >= r - 1 && pos_ok; break;
                case GroundRing::R: feasible = pos_ok; break;
                case GroundRing::Z2: feasible = pos_ok || nc_ok; break;
            }
            if (!feasible) continue;
            letters.push_back(m);
            self(self, ntr, nwr, r - 1);
            letters.pop_back();
        }
    };
    rec(rec, t, w, f);
    std::sort(out.begin(), out.end(), word_less);
    return out;
}

std::vector<CobarWord> cobar_basis(GroundRing ring, int s, int f, int w) {
    if (f < 0) throw std::invalid_argument("cobar_basis: negative filtration");
    return slice_basis(ring, s + f, w, f);
}

namespace {

// left-normalized concatenation (c1 * L1) . (c2 * L2): the interior
// coefficient c2 migrates left through L1 via u (x) c y = u eta_R(c) (x) y
void concat_normalized(const CoeffMonomial& c1, std::vector<AbarMonomial>& L1,
                       const CoeffMonomial& c2, std::vector<AbarMonomial>& L2, GroundRing ring,
                       CochainElement& out) {
    if (L1.empty()) {
        const auto c = coeff_mul(c1, c2);
        if (!c) return;
        CobarWord w{*c, L2};
        out.toggle(std::move(w));
        return;
    }
    const AbarMonomial u = L1.back();
    L1.pop_back();
    const AlgElement moved = steenrod::mul(AlgElement::term(CoeffMonomial::one(), u),
                                           steenrod::eta_R(c2, ring), ring);
    for (const auto& t : moved.terms()) {
        L2.insert(L2.begin(), t.m);
        concat_normalized(c1, L1, t.c, L2, ring, out);
        L2.erase(L2.begin());
    }
    L1.push_back(u);
}

}  // namespace

CochainElement differential(const CobarWord& w, GroundRing ring) {
    CochainElement out;
    // coefficient face: eta_R(m) - eta_L(m); the unit term of eta_R(m)
    // equals m and cancels, the rest prepends as a new first letter
    for (const auto& t : steenrod::eta_R(w.coeff, ring).terms()) {
        if (t.m.is_unit()) continue;
        CobarWord nw{t.c, {}};
        nw.letters.reserve(w.letters.size() + 1);
        nw.letters.push_back(t.m);
        nw.letters.insert(nw.letters.end(), w.letters.begin(), w.letters.end());
        out.toggle(std::move(nw));
    }
    // internal faces
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        const auto red = steenrod::reduced_coproduct(w.letters[i], ring);
        if (red.is_zero()) continue;
        std::vector<AbarMonomial> prefix(w.letters.begin(), w.letters.begin() + std::ptrdiff_t(i));
        for (const auto& t : red.terms()) {
            std::vector<AbarMonomial> suffix;
            suffix.reserve(w.letters.size() + 1 - i);
            suffix.push_back(t.a);
            suffix.push_back(t.b);
            suffix.insert(suffix.end(), w.letters.begin() + std::ptrdiff_t(i) + 1, w.letters.end());
            concat_normalized(w.coeff, prefix, t.c, suffix, ring, out);
        }
    }
    return out;
}

gf2::BitMatrix differential_matrix(GroundRing ring, int f, const Tridegree& d) {
    const int t = d.t(), w = d.w;
    const auto src = slice_basis(ring, t, w, f);
    const auto tgt = slice_basis(ring, t, w, f + 1);
    std::map<CobarWord, std::size_t, decltype(&word_less)> index(&word_less);
    for (std::size_t i = 0; i < tgt.size(); ++i) index.emplace(tgt[i], i);
    gf2::BitMatrix m(tgt.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        for (const auto& ow : differential(src[j], ring).words()) {
            auto it = index.find(ow);
            if (it == index.end())
                throw std::logic_error("differential leaves the expected slice at " +
                                       to_string(ow));
            m.flip(it->second, j);
        }
    }
    return m;
}

Tower build_tower(GroundRing ring, int t, int w, int f_max) {
    Tower tower;
    tower.ring = ring;
    tower.t = t;
    tower.w = w;
    tower.bases.reserve(std::size_t(f_max) + 2);
    for (int f = 0; f <= f_max + 1; ++f) tower.bases.push_back(slice_basis(ring, t, w, f));
    tower.d.reserve(std::size_t(f_max) + 1);
    for (int f = 0; f <= f_max; ++f) {
        const auto& src = tower.bases[std::size_t(f)];
        const auto& tgt = tower.bases[std::size_t(f) + 1];
        std::map<CobarWord, std::size_t, decltype(&word_less)> index(&word_less);
        for (std::size_t i = 0; i < tgt.size(); ++i) index.emplace(tgt[i], i);
        gf2::BitMatrix m(tgt.size(), src.size());
        for (std::size_t j = 0; j < src.size(); ++j) {
            for (const auto& ow : differential(src[j], ring).words()) {
                auto it = index.find(ow);
                if (it == index.end())
                    throw std::logic_error("differential leaves the expected slice at " +
                                           to_string(ow));
                m.flip(it->second, j);
            }
        }
        tower.d.push_back(std::move(m));
    }
    return tower;
}

int first_dd_violation(const Tower& tower) {
    for (int f = 0; f + 1 <= tower.f_max(); ++f) {
        if (!tower.d[std::size_t(f) + 1].multiplied(tower.d[std::size_t(f)]).is_zero()) return f;
    }
    return -1;
}

int ext_dim(const Tower& tower, int f) {
    if (f < 0 || f > tower.f_max()) throw std::invalid_argument("ext_dim: filtration outside tower");
    const auto& d_out = tower.d[std::size_t(f)];
    const std::size_t cycles = d_out.cols() - gf2::rank(d_out);
    const std::size_t boundaries = f == 0 ? 0 : gf2::rank(tower.d[std::size_t(f) - 1]);
    return int(cycles - boundaries);
}

int ext_dim(GroundRing ring, int s, int f, int w) {
    if (f < 0) throw std::invalid_argument("ext_dim: negative filtration");
    return ext_dim(build_tower(ring, s + f, w, f), f);
}

std::vector<CochainElement> cocycle_representatives(const Tower& tower, int f) {
    if (f < 0 || f > tower.f_max())
        throw std::invalid_argument("cocycle_representatives: filtration outside tower");
    const auto& basis = tower.bases[std::size_t(f)];
    const gf2::BitMatrix kernel = gf2::kernel_basis(tower.d[std::size_t(f)]);
    const gf2::BitMatrix image =
        f == 0 ? gf2::BitMatrix(0, basis.size()) : tower.d[std::size_t(f) - 1].transposed();

    // echelon of the image rows; then keep kernel vectors contributing new pivots
    gf2::BitMatrix work = gf2::vstack(image, kernel);
    std::vector<std::size_t> pivot_of_row(work.rows(), SIZE_MAX);
    std::vector<std::size_t> row_of_pivot(basis.size(), SIZE_MAX);
    std::vector<CochainElement> out;
    for (std::size_t r = 0; r < work.rows(); ++r) {
        for (std::size_t c = 0; c < basis.size(); ++c) {
            if (!work.get(r, c)) continue;
            if (row_of_pivot[c] != SIZE_MAX) {
                work.xor_row(r, row_of_pivot[c]);
            } else {
                row_of_pivot[c] = r;
                pivot_of_row[r] = c;
                break;
            }
        }
        if (r >= image.rows() && pivot_of_row[r] != SIZE_MAX) {
            // a kernel vector surviving modulo the boundaries
            CochainElement e;
            const std::size_t kr = r - image.rows();
            for (std::size_t c = 0; c < basis.size(); ++c)
                if (kernel.get(kr, c)) e.toggle(basis[c]);
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::vector<CochainElement> cocycle_representatives(GroundRing ring, int s, int f, int w) {
    return cocycle_representatives(build_tower(ring, s + f, w, f), f);
}

CochainElement concat_product(const CochainElement& x, const CochainElement& y, GroundRing ring) {
    CochainElement out;
    for (const auto& wx : x.words()) {
        for (const auto& wy : y.words()) {
            std::vector<AbarMonomial> L1 = wx.letters;
            std::vector<AbarMonomial> L2 = wy.letters;
            concat_normalized(wx.coeff, L1, wy.coeff, L2, ring, out);
        }
    }
    return out;
}

namespace {

bool is_cocycle(const CochainElement& e, GroundRing ring) {
    CochainElement d;
    for (const auto& w : e.words()) d = d + differential(w, ring);
    return d.is_zero();
}

}  // namespace

CochainElement ext_product(const CochainElement& x, const CochainElement& y, GroundRing ring) {
    if (!is_cocycle(x, ring) || !is_cocycle(y, ring))
        throw std::invalid_argument("ext_product: input is not a cocycle");
    return concat_product(x, y, ring);
}

}  // namespace cobar
