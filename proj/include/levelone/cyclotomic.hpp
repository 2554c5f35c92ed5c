#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace levelone {

inline long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}

// integer polynomials, coefficients low-to-high
using zpoly = std::vector<mpz_class>;

inline void zpoly_trim(zpoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division by a monic divisor over Z
inline zpoly zpoly_div_exact(zpoly num, const zpoly& den) {
    if (den.empty() || den.back() != 1) throw std::invalid_argument("divisor not monic");
    zpoly_trim(num);
    if (num.empty()) return {};
    if (num.size() < den.size()) throw std::logic_error("inexact polynomial division");
    zpoly q(num.size() - den.size() + 1, 0);
    for (std::size_t i = num.size(); i-- > 0;) {
        if (i + 1 < den.size()) break;
        mpz_class c = num[i];
        if (c == 0) continue;
        std::size_t sh = i + 1 - den.size();
        q[sh] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[sh + j] -= c * den[j];
    }
    zpoly_trim(num);
    if (!num.empty()) throw std::logic_error("inexact polynomial division");
    return q;
}

// Phi_d by dividing x^d - 1 by the Phi_e for proper divisors e, memoized.
inline const zpoly& cyclotomic_polynomial(long d) {
    static std::map<long, zpoly> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    zpoly p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    for (long e = 1; e < d; ++e)
        if (d % e == 0) p = zpoly_div_exact(p, cyclotomic_polynomial(e));
    return cache.emplace(d, std::move(p)).first->second;
}

// Exact element of Q(zeta_N) in the power basis of Q[x]/Phi_N.
class CyclotomicNumber {
  public:
    CyclotomicNumber() : n_(1), c_(1, 0) {}
    explicit CyclotomicNumber(long conductor)
        : n_(conductor), c_(euler_phi(conductor), 0) {}
    CyclotomicNumber(long conductor, std::vector<mpq_class> coeffs)
        : n_(conductor), c_(std::move(coeffs)) {
        if (long(c_.size()) != euler_phi(n_)) throw std::invalid_argument("bad coeff size");
    }

    static CyclotomicNumber from_rational(const mpq_class& q, long conductor = 1) {
        CyclotomicNumber z(conductor);
        z.c_[0] = q;
        return z;
    }

    // zeta_N^k reduced to the power basis
    static CyclotomicNumber root_of_unity(long k, long conductor) {
        k %= conductor;
        if (k < 0) k += conductor;
        long deg = euler_phi(conductor);
        CyclotomicNumber z(conductor);
        if (long(k) < deg) {
            z.c_[k] = 1;
            return z;
        }
        std::vector<mpq_class> poly(k + 1, 0);
        poly[k] = 1;
        z.c_ = reduce(std::move(poly), conductor);
        return z;
    }

    long conductor() const { return n_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const {
        for (auto& q : c_)
            if (q != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    mpq_class rational_value() const {
        if (!is_rational()) throw std::domain_error("not rational");
        return c_[0];
    }
    // rational integer value; throws NonIntegral-style on anything else
    mpz_class to_integer() const {
        if (!is_rational() || c_[0].get_den() != 1)
            throw std::domain_error("cyclotomic value is not a rational integer");
        return c_[0].get_num();
    }

    // lossless embedding into conductor m (n | m)
    CyclotomicNumber embed(long m) const {
        if (m == n_) return *this;
        if (m % n_) throw std::invalid_argument("conductor does not divide target");
        long step = m / n_;
        std::vector<mpq_class> poly(std::size_t((c_.size() - 1) * step + 1), 0);
        for (std::size_t i = 0; i < c_.size(); ++i) poly[i * step] = c_[i];
        return CyclotomicNumber(m, reduce(std::move(poly), m));
    }

    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        auto [x, y] = align(a, b);
        for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
        return x;
    }
    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        auto [x, y] = align(a, b);
        for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
        return x;
    }
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        auto [x, y] = align(a, b);
        std::vector<mpq_class> prod(2 * x.c_.size(), 0);
        for (std::size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i] == 0) continue;
            for (std::size_t j = 0; j < y.c_.size(); ++j)
                if (y.c_[j] != 0) prod[i + j] += x.c_[i] * y.c_[j];
        }
        return CyclotomicNumber(x.n_, reduce(std::move(prod), x.n_));
    }
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        auto [x, y] = align(a, b);
        return x.c_ == y.c_;
    }

    // Inverse via extended gcd against Phi_N. Small degrees run the direct
    // rational Euclid; larger conductors go through word-size primes with CRT
    // and rational reconstruction, then an exact verification.
    CyclotomicNumber invert() const {
        if (is_zero()) throw std::domain_error("division by zero");
        if (c_.size() <= 32) {
            auto inv = rational_euclid_inverse();
            return CyclotomicNumber(n_, std::move(inv));
        }
        return modular_inverse();
    }

    friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        auto [x, y] = align(a, b);
        return x * y.invert();
    }

    // complex conjugation: zeta -> zeta^{-1}
    CyclotomicNumber conjugate() const { return galois(n_ - 1); }

    // Galois twist zeta -> zeta^k, gcd(k, N) = 1
    CyclotomicNumber galois(long k) const {
        k %= n_;
        if (k < 0) k += n_;
        if (std::gcd(k, n_) != 1) throw std::invalid_argument("twist not coprime");
        std::vector<mpq_class> acc(n_, 0);
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) acc[(i * k) % n_] += c_[i];
        return CyclotomicNumber(n_, reduce(std::move(acc), n_));
    }

    std::complex<double> complex_value() const {
        std::complex<double> z = 0;
        const double tau = 6.283185307179586476925286766559;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0)
                z += c_[i].get_d() * std::polar(1.0, tau * double(i) / double(n_));
        return z;
    }

    // reduce a polynomial in zeta_N (exponents as indices) mod Phi_N
    static std::vector<mpq_class> reduce(std::vector<mpq_class> poly, long n) {
        const zpoly& phi = cyclotomic_polynomial(n);
        std::size_t deg = phi.size() - 1;
        if (poly.size() < deg) poly.resize(deg, 0);
        for (std::size_t i = poly.size(); i-- > deg;) {
            if (poly[i] == 0) continue;
            mpq_class c = poly[i];
            poly[i] = 0;
            std::size_t sh = i - deg;
            for (std::size_t j = 0; j < deg; ++j)
                if (phi[j] != 0) poly[sh + j] -= c * phi[j];
        }
        poly.resize(deg);
        return poly;
    }

  private:
    static std::pair<CyclotomicNumber, CyclotomicNumber> align(const CyclotomicNumber& a,
                                                               const CyclotomicNumber& b) {
        if (a.n_ == b.n_) return {a, b};
        long m = std::lcm(a.n_, b.n_);
        return {a.embed(m), b.embed(m)};
    }

    std::vector<mpq_class> rational_euclid_inverse() const {
        auto divmod = [](std::vector<mpq_class> a, const std::vector<mpq_class>& b) {
            std::vector<mpq_class> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
            for (std::size_t i = a.size(); i-- > 0;) {
                if (i + 1 < b.size()) break;
                if (a[i] == 0) continue;
                mpq_class c = a[i] / b.back();
                std::size_t sh = i + 1 - b.size();
                q[sh] = c;
                for (std::size_t j = 0; j < b.size(); ++j) a[sh + j] -= c * b[j];
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
            return std::pair{std::move(q), std::move(a)};
        };
        const zpoly& phi = cyclotomic_polynomial(n_);
        std::vector<mpq_class> r0(phi.begin(), phi.end()), r1 = c_;
        while (!r1.empty() && r1.back() == 0) r1.pop_back();
        std::vector<mpq_class> s0(1, 0), s1(1, 1);  // cofactors of `this`
        while (r1.size() > 1) {
            auto [q, rem] = divmod(r0, r1);
            std::vector<mpq_class> snew(std::max(s0.size(), q.size() + s1.size()), 0);
            for (std::size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (std::size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
            }
            while (!snew.empty() && snew.back() == 0) snew.pop_back();
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(snew);
        }
        if (r1.empty()) throw std::logic_error("non-invertible element");
        mpq_class lead = r1[0];
        std::vector<mpq_class> full(s1.size());
        for (std::size_t i = 0; i < s1.size(); ++i) full[i] = s1[i] / lead;
        return reduce(std::move(full), n_);
    }

    CyclotomicNumber modular_inverse() const {
        const zpoly& phi = cyclotomic_polynomial(n_);
        const std::size_t deg = phi.size() - 1;
        // common denominator, so we invert an integer polynomial
        mpz_class den = 1;
        for (auto& q : c_) den = den * q.get_den() / gcd(den, mpz_class(q.get_den()));
        std::vector<mpz_class> b(deg);
        for (std::size_t i = 0; i < deg; ++i)
            b[i] = c_[i].get_num() * (den / c_[i].get_den());

        std::vector<mpz_class> crt(deg, 0);
        mpz_class modulus = 1;
        std::uint64_t p = 2147483629;  // descend over 31-bit primes
        auto is_prime = [](std::uint64_t m) {
            if (m % 2 == 0) return m == 2;
            for (std::uint64_t d = 3; d * d <= m; d += 2)
                if (m % d == 0) return false;
            return true;
        };
        int used = 0;
        while (true) {
            while (!is_prime(p)) --p;
            if (auto xp = inverse_mod_p(b, phi, p)) {
                // coefficientwise CRT into crt mod modulus*p
                mpz_class pz((unsigned long)p), g, u, v;
                mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(),
                           modulus.get_mpz_t(), pz.get_mpz_t());
                for (std::size_t i = 0; i < deg; ++i) {
                    mpz_class xi((unsigned long)(*xp)[i]);
                    // solve c = crt[i] mod modulus, c = xi mod p
                    mpz_class t = ((xi - crt[i]) % pz * (u % pz)) % pz;
                    if (t < 0) t += pz;
                    crt[i] += modulus * t;
                }
                modulus *= pz;
                ++used;
                if (used >= 3 && (used & 1)) {
                    if (auto cand = rational_reconstruct(crt, modulus)) {
                        CyclotomicNumber inv(n_, *cand);
                        // scale back by the cleared denominator
                        for (auto& q : inv.c_) q *= den;
                        inv.c_ = reduce(std::move(inv.c_), n_);
                        if ((*this * inv).is_rational() &&
                            (*this * inv).rational_value() == 1)
                            return inv;
                    }
                }
            }
            --p;
        }
    }

    static std::optional<std::vector<std::uint64_t>> inverse_mod_p(
        const std::vector<mpz_class>& b, const zpoly& phi, std::uint64_t p) {
        auto normalize = [&](const mpz_class& z) {
            mpz_class r = z % (long)p;
            if (r < 0) r += (long)p;
            return r.get_ui();
        };
        std::vector<std::uint64_t> r0(phi.size()), r1(b.size());
        for (std::size_t i = 0; i < phi.size(); ++i) r0[i] = normalize(phi[i]);
        for (std::size_t i = 0; i < b.size(); ++i) r1[i] = normalize(b[i]);
        while (!r1.empty() && r1.back() == 0) r1.pop_back();
        if (r1.empty()) return std::nullopt;
        auto powmod = [&](std::uint64_t a, std::uint64_t e) {
            std::uint64_t r = 1;
            while (e) {
                if (e & 1) r = (unsigned __int128)r * a % p;
                a = (unsigned __int128)a * a % p;
                e >>= 1;
            }
            return r;
        };
        std::vector<std::uint64_t> s0(1, 0), s1(1, 1);
        while (r1.size() > 1) {
            std::uint64_t linv = powmod(r1.back(), p - 2);
            std::vector<std::uint64_t> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
            std::vector<std::uint64_t> rem = r0;
            for (std::size_t i = rem.size(); i-- > 0;) {
                if (i + 1 < r1.size()) break;
                if (rem[i] == 0) continue;
                std::uint64_t c = (unsigned __int128)rem[i] * linv % p;
                std::size_t sh = i + 1 - r1.size();
                q[sh] = c;
                for (std::size_t j = 0; j < r1.size(); ++j) {
                    std::uint64_t sub = (unsigned __int128)c * r1[j] % p;
                    rem[sh + j] = (rem[sh + j] + p - sub) % p;
                }
            }
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            std::vector<std::uint64_t> snew(std::max(s0.size(), q.size() + s1.size()), 0);
            for (std::size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (std::size_t j = 0; j < s1.size(); ++j) {
                    std::uint64_t sub = (unsigned __int128)q[i] * s1[j] % p;
                    snew[i + j] = (snew[i + j] + p - sub) % p;
                }
            }
            while (!snew.empty() && snew.back() == 0) snew.pop_back();
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(snew);
        }
        if (r1.empty()) return std::nullopt;
        std::uint64_t ginv = powmod(r1[0], p - 2);
        std::vector<std::uint64_t> out(phi.size() - 1, 0);
        for (std::size_t i = 0; i < s1.size() && i < out.size(); ++i)
            out[i] = (unsigned __int128)s1[i] * ginv % p;
        return out;
    }

    // coefficientwise rational reconstruction mod M (fails -> more primes)
    static std::optional<std::vector<mpq_class>> rational_reconstruct(
        const std::vector<mpz_class>& x, const mpz_class& M) {
        mpz_class bound;
        mpz_sqrt(bound.get_mpz_t(), mpz_class(M / 2).get_mpz_t());
        std::vector<mpq_class> out(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            mpz_class r0 = M, r1 = x[i] % M, t0 = 0, t1 = 1;
            if (r1 < 0) r1 += M;
            while (r1 > bound) {
                mpz_class q = r0 / r1;
                mpz_class r2 = r0 - q * r1, t2 = t0 - q * t1;
                r0 = std::move(r1);
                r1 = std::move(r2);
                t0 = std::move(t1);
                t1 = std::move(t2);
            }
            if (t1 == 0 || abs(t1) > bound) return std::nullopt;
            if (t1 < 0) {
                t1 = -t1;
                r1 = -r1;
            }
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), mpz_class(abs(r1)).get_mpz_t(), t1.get_mpz_t());
            if (g != 1) return std::nullopt;
            out[i] = mpq_class(r1, t1);
            out[i].canonicalize();
        }
        return out;
    }

    long n_;
    std::vector<mpq_class> c_;
};

}  // namespace levelone
