#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace levelone {

using ivec = std::vector<std::int64_t>;

enum class Family { B, D, G2 };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::B: return "B";
        case Family::D: return "D";
        case Family::G2: return "G2";
    }
    return "?";
}

inline std::optional<Family> family_from_name(const std::string& s) {
    if (s == "B") return Family::B;
    if (s == "D") return Family::D;
    if (s == "G2") return Family::G2;
    return std::nullopt;
}

// A Weyl group element acting on X*(T) in coordinates, row-major rank x rank.
struct WeylElement {
    std::vector<std::int64_t> mat;
    int sign = 1;  // determinant on the reflection representation

    ivec apply(const ivec& x, int rank) const {
        ivec y(rank, 0);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) y[i] += mat[i * rank + j] * x[j];
        return y;
    }
};

struct Weight {
    ivec coords;
};

// Strictly decreasing nonnegative integers of a common parity.
struct HodgeWeights {
    std::vector<int> entries;

    bool valid() const {
        if (entries.empty()) return true;
        for (std::size_t i = 0; i + 1 < entries.size(); ++i)
            if (entries[i] <= entries[i + 1]) return false;
        if (entries.back() < 0) return false;
        int par = entries[0] & 1;
        for (int e : entries)
            if ((e & 1) != par) return false;
        return true;
    }
    bool odd() const { return !entries.empty() && (entries[0] & 1); }
    int motivic_weight() const { return entries.empty() ? 0 : entries[0]; }
    auto operator<=>(const HodgeWeights&) const = default;
};

// Based root datum for B_l, D_l, G2 with X* and X_* in coordinates.
// For B/D: X* = X_* = Z^l with the canonical pairing. For G2: X* = Z{alpha}
// + Z{beta}, X_* = Z{alpha^} + Z{beta^} with the Cartan pairing.
struct BasedRootDatum {
    Family family;
    int rank;
    std::vector<ivec> positive_roots;     // in X*
    std::vector<ivec> positive_coroots;   // in X_*, aligned with positive_roots
    std::vector<int> simple_indices;      // indices of simple roots in positive_roots
    ivec two_rho;                         // 2 * half-sum of positive roots
    std::vector<WeylElement> weyl;        // full Weyl group
    std::vector<std::int64_t> pairing_;   // <e_i, f_j>, rank x rank
    std::vector<std::int64_t> dot_;       // W-invariant form on X*, rank x rank
    // in_image[w][k]: whether positive root k lies in w(Phi^+)
    std::vector<std::vector<std::uint8_t>> in_image;

    std::int64_t pair(const ivec& x, const ivec& y) const {
        std::int64_t s = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) s += x[i] * pairing_[i * rank + j] * y[j];
        return s;
    }
    std::int64_t dot(const ivec& x, const ivec& y) const {
        std::int64_t s = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) s += x[i] * dot_[i * rank + j] * y[j];
        return s;
    }
    std::size_t weyl_order() const { return weyl.size(); }

    bool dominant(const Weight& w) const {
        for (int si : simple_indices)
            if (pair(w.coords, positive_coroots[si]) < 0) return false;
        return true;
    }
};

namespace detail {

inline void enumerate_signed_permutations(int l, bool even_signs_only,
                                          std::vector<WeylElement>& out) {
    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int perm_sign = 1;
        {
            std::vector<bool> seen(l, false);
            for (int i = 0; i < l; ++i) {
                if (seen[i]) continue;
                int len = 0;
                for (int j = i; !seen[j]; j = perm[j]) { seen[j] = true; ++len; }
                if (len % 2 == 0) perm_sign = -perm_sign;
            }
        }
        for (std::uint32_t bits = 0; bits < (1u << l); ++bits) {
            int nminus = __builtin_popcount(bits);
            int det = perm_sign * ((nminus % 2) ? -1 : 1);
            if (even_signs_only && (nminus % 2)) continue;
            WeylElement w;
            w.mat.assign(std::size_t(l) * l, 0);
            for (int j = 0; j < l; ++j)
                w.mat[std::size_t(perm[j]) * l + j] = (bits >> j) & 1 ? -1 : 1;
            w.sign = det;
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace detail

inline BasedRootDatum build_root_datum(Family family, int rank) {
    BasedRootDatum d;
    d.family = family;
    d.rank = rank;
    auto e = [&](int i) {
        ivec v(rank, 0);
        v[i] = 1;
        return v;
    };
    switch (family) {
        case Family::B: {
            if (rank < 1) throw std::invalid_argument("B_l needs l >= 1");
            int l = rank;
            d.pairing_.assign(std::size_t(l) * l, 0);
            d.dot_.assign(std::size_t(l) * l, 0);
            for (int i = 0; i < l; ++i) d.pairing_[i * l + i] = d.dot_[i * l + i] = 1;
            // short roots e_i with coroot 2 e_i
            for (int i = 0; i < l; ++i) {
                d.positive_roots.push_back(e(i));
                ivec cv = e(i);
                cv[i] = 2;
                d.positive_coroots.push_back(cv);
            }
            for (int i = 0; i < l; ++i)
                for (int j = i + 1; j < l; ++j) {
                    ivec a = e(i);
                    a[j] = -1;
                    d.positive_roots.push_back(a);
                    d.positive_coroots.push_back(a);
                    ivec b = e(i);
                    b[j] = 1;
                    d.positive_roots.push_back(b);
                    d.positive_coroots.push_back(b);
                }
            // simple roots: e_1-e_2, ..., e_{l-1}-e_l, e_l
            for (int i = 0; i < l; ++i) {
                ivec s(rank, 0);
                if (i + 1 < l) {
                    s[i] = 1;
                    s[i + 1] = -1;
                } else {
                    s[l - 1] = 1;
                }
                for (std::size_t k = 0; k < d.positive_roots.size(); ++k)
                    if (d.positive_roots[k] == s) d.simple_indices.push_back(int(k));
            }
            detail::enumerate_signed_permutations(l, false, d.weyl);
            break;
        }
        case Family::D: {
            if (rank < 3) throw std::invalid_argument("D_l needs l >= 3");
            int l = rank;
            d.pairing_.assign(std::size_t(l) * l, 0);
            d.dot_.assign(std::size_t(l) * l, 0);
            for (int i = 0; i < l; ++i) d.pairing_[i * l + i] = d.dot_[i * l + i] = 1;
            for (int i = 0; i < l; ++i)
                for (int j = i + 1; j < l; ++j) {
                    ivec a = e(i);
                    a[j] = -1;
                    d.positive_roots.push_back(a);
                    d.positive_coroots.push_back(a);
                    ivec b = e(i);
                    b[j] = 1;
                    d.positive_roots.push_back(b);
                    d.positive_coroots.push_back(b);
                }
            // simple roots: e_i - e_{i+1} and e_{l-1} + e_l
            for (int i = 0; i + 1 < l; ++i) {
                ivec s = e(i);
                s[i + 1] = -1;
                for (std::size_t k = 0; k < d.positive_roots.size(); ++k)
                    if (d.positive_roots[k] == s) d.simple_indices.push_back(int(k));
            }
            {
                ivec s = e(l - 2);
                s[l - 1] = 1;
                for (std::size_t k = 0; k < d.positive_roots.size(); ++k)
                    if (d.positive_roots[k] == s) d.simple_indices.push_back(int(k));
            }
            detail::enumerate_signed_permutations(l, true, d.weyl);
            break;
        }
        case Family::G2: {
            if (rank != 2) throw std::invalid_argument("G2 has rank 2");
            // X* basis (alpha, beta), alpha short; X_* basis (alpha^, beta^).
            // <alpha,alpha^>=2, <alpha,beta^>=-1, <beta,alpha^>=-3, <beta,beta^>=2.
            d.pairing_ = {2, -1, -3, 2};
            // invariant form with (alpha,alpha)=2, (beta,beta)=6, (alpha,beta)=-3
            d.dot_ = {2, -3, -3, 6};
            // positive roots: alpha, beta, beta+alpha, beta+2alpha, beta+3alpha, 2beta+3alpha
            const std::array<std::array<std::int64_t, 2>, 6> roots = {
                {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}}};
            for (auto& r : roots) d.positive_roots.push_back({r[0], r[1]});
            // coroots: alpha^ = alpha-coords scaled; short root a has a^ = a under
            // (,) with (a,a)=2, long root b has b^ = b/3 in the dual basis.
            // In X_* coordinates (alpha^, beta^): short roots alpha, beta+alpha,
            // beta+2alpha get coroots alpha^, ... computed from 2(r,.)/(r,r).
            auto coroot = [&](const ivec& r) {
                // solve <x, c> = 2 (x, r) / (r, r) for all x: c = 2 P^{-T} S r/(r,r)
                // with P the pairing matrix and S the form. Do it directly for rank 2.
                std::int64_t rr = d.dot(r, r);
                // want c with pair(e_i, c) = 2*dot(e_i, r)/rr
                // pairing rows: [2,-1;-3,2], det = 1
                std::int64_t b0 = 2 * d.dot({1, 0}, r), b1 = 2 * d.dot({0, 1}, r);
                if (b0 % rr || b1 % rr) throw std::logic_error("coroot not integral");
                b0 /= rr;
                b1 /= rr;
                // [2,-1;-3,2] c = (b0,b1): inverse is [2,1;3,2]
                return ivec{2 * b0 + 1 * b1, 3 * b0 + 2 * b1};
            };
            for (auto& r : d.positive_roots) d.positive_coroots.push_back(coroot(r));
            d.simple_indices = {0, 1};
            // Weyl group from the two simple reflections on X* coordinates.
            auto reflect = [&](int si) {
                WeylElement w;
                w.mat.assign(4, 0);
                const ivec& a = d.positive_roots[si];
                const ivec& ac = d.positive_coroots[si];
                for (int j = 0; j < 2; ++j) {
                    ivec x(2, 0);
                    x[j] = 1;
                    std::int64_t c = d.pair(x, ac);
                    w.mat[0 * 2 + j] = x[0] - c * a[0];
                    w.mat[1 * 2 + j] = x[1] - c * a[1];
                }
                w.sign = -1;
                return w;
            };
            std::vector<WeylElement> gens = {reflect(0), reflect(1)};
            std::vector<WeylElement> all;
            WeylElement id;
            id.mat = {1, 0, 0, 1};
            id.sign = 1;
            all.push_back(id);
            auto key = [](const WeylElement& w) { return w.mat; };
            std::vector<std::vector<std::int64_t>> seen = {key(id)};
            for (std::size_t i = 0; i < all.size(); ++i) {
                for (auto& g : gens) {
                    WeylElement p;
                    p.mat.assign(4, 0);
                    for (int r = 0; r < 2; ++r)
                        for (int c = 0; c < 2; ++c)
                            for (int k = 0; k < 2; ++k)
                                p.mat[r * 2 + c] += g.mat[r * 2 + k] * all[i].mat[k * 2 + c];
                    p.sign = g.sign * all[i].sign;
                    if (std::find(seen.begin(), seen.end(), key(p)) == seen.end()) {
                        seen.push_back(key(p));
                        all.push_back(p);
                    }
                }
            }
            d.weyl = std::move(all);
            break;
        }
    }
    ivec tr(rank, 0);
    for (auto& r : d.positive_roots)
        for (int i = 0; i < rank; ++i) tr[i] += r[i];
    d.two_rho = tr;
    // sanity: <alpha, alpha^> = 2 for all pairs
    for (std::size_t k = 0; k < d.positive_roots.size(); ++k)
        if (d.pair(d.positive_roots[k], d.positive_coroots[k]) != 2)
            throw std::logic_error("root/coroot pairing != 2");
    d.in_image.assign(d.weyl.size(),
                      std::vector<std::uint8_t>(d.positive_roots.size(), 0));
    for (std::size_t wi = 0; wi < d.weyl.size(); ++wi)
        for (auto& beta : d.positive_roots) {
            ivec im = d.weyl[wi].apply(beta, rank);
            for (std::size_t k = 0; k < d.positive_roots.size(); ++k)
                if (d.positive_roots[k] == im) {
                    d.in_image[wi][k] = 1;
                    break;
                }
        }
    return d;
}

// lambda with 2(lambda+rho) = w for B/D; the U_{w,v} highest weight for G2.
// Throws if the Hodge weights are inadmissible for the family.
inline Weight weight_from_hodge(const BasedRootDatum& d, const HodgeWeights& w) {
    if (!w.valid()) throw std::invalid_argument("invalid Hodge weights");
    Weight lam;
    switch (d.family) {
        case Family::B: {
            if (int(w.entries.size()) != d.rank)
                throw std::invalid_argument("rank mismatch");
            if (!w.odd()) throw std::invalid_argument("B family needs odd weights");
            lam.coords.resize(d.rank);
            for (int i = 0; i < d.rank; ++i) {
                std::int64_t t = w.entries[i] - d.two_rho[i];
                if (t % 2) throw std::invalid_argument("non-integral weight");
                lam.coords[i] = t / 2;
            }
            break;
        }
        case Family::D: {
            if (int(w.entries.size()) != d.rank)
                throw std::invalid_argument("rank mismatch");
            if (w.odd()) throw std::invalid_argument("D family needs even weights");
            lam.coords.resize(d.rank);
            for (int i = 0; i < d.rank; ++i) {
                std::int64_t t = w.entries[i] - d.two_rho[i];
                if (t % 2) throw std::invalid_argument("non-integral weight");
                lam.coords[i] = t / 2;
            }
            break;
        }
        case Family::G2: {
            if (w.entries.size() != 2 || w.odd())
                throw std::invalid_argument("G2 needs (w,v) even");
            int ww = w.entries[0], v = w.entries[1];
            if (!(ww > v && v >= 2)) throw std::invalid_argument("G2 needs w > v >= 2");
            // ((w-v-2)/2) w1 + ((v-2)/2) w2 with w1 = 2a+b, w2 = 3a+2b
            std::int64_t a = ww + v / 2 - 5;
            std::int64_t b = (ww + v - 6) / 2;
            lam.coords = {a, b};
            break;
        }
    }
    if (!d.dominant(lam)) throw std::invalid_argument("non-dominant weight");
    return lam;
}

// Recover the Hodge weights: sorted 2(lambda+rho) for B/D, the dual-side
// (w, v) for G2.
inline HodgeWeights hodge_from_weight(const BasedRootDatum& d, const Weight& lam) {
    HodgeWeights h;
    if (d.family == Family::G2) {
        std::int64_t a = lam.coords[0], b = lam.coords[1];
        // invert a = w + v/2 - 5, b = (w+v-6)/2
        std::int64_t w = 2 * (a - b) + 4;
        std::int64_t v = 2 * (2 * b - a) + 2;
        h.entries = {int(w), int(v)};
    } else {
        for (int i = 0; i < d.rank; ++i)
            h.entries.push_back(int(2 * lam.coords[i] + d.two_rho[i]));
        std::sort(h.entries.rbegin(), h.entries.rend());
    }
    return h;
}

// Rational cocharacter mu = num / den (componentwise, common denominator).
struct RatCochar {
    ivec num;
    std::int64_t den = 1;

    void normalize() {
        std::int64_t g = den;
        for (auto x : num) g = std::gcd(g, x < 0 ? -x : x);
        if (g > 1) {
            for (auto& x : num) x /= g;
            den /= g;
        }
        for (auto& x : num) {
            x %= den;
            if (x < 0) x += den;
        }
    }
};

struct LeviData {
    std::vector<int> levi_roots;      // indices into positive_roots
    std::vector<int> other_roots;     // complement in Phi^+
    ivec two_rho_levi;
    std::vector<int> coset_reps;      // indices into datum.weyl forming W^M
    std::size_t levi_weyl_order = 0;  // |W_M| = |W| / |W^M|
};

// Phi_M^+ = { alpha in Phi^+ : <alpha, mu> in Z }, W^M = { w : w^{-1} Phi_M^+ in Phi^+ }.
inline LeviData levi_data(const BasedRootDatum& d, const RatCochar& mu) {
    LeviData L;
    L.two_rho_levi.assign(d.rank, 0);
    for (std::size_t k = 0; k < d.positive_roots.size(); ++k) {
        std::int64_t p = d.pair(d.positive_roots[k], mu.num);
        if (p % mu.den == 0) {
            L.levi_roots.push_back(int(k));
            for (int i = 0; i < d.rank; ++i)
                L.two_rho_levi[i] += d.positive_roots[k][i];
        } else {
            L.other_roots.push_back(int(k));
        }
    }
    for (std::size_t wi = 0; wi < d.weyl.size(); ++wi) {
        // w^{-1} Phi_M^+ subset Phi^+  <=>  Phi_M^+ subset w(Phi^+)
        bool ok = true;
        for (int k : L.levi_roots)
            if (!d.in_image[wi][k]) {
                ok = false;
                break;
            }
        if (ok) L.coset_reps.push_back(int(wi));
    }
    if (!L.coset_reps.empty()) L.levi_weyl_order = d.weyl.size() / L.coset_reps.size();
    return L;
}

}  // namespace levelone
