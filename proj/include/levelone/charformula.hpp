#pragma once

#include <levelone/classdata.hpp>
#include <levelone/cyclotomic.hpp>
#include <levelone/rootdata.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace levelone {

enum class EvalMode { Exact, Certified, Checked };

// Weyl dimension formula: prod (alpha, lambda+rho) / (alpha, rho)
inline mpz_class weyl_dim(const BasedRootDatum& d, const Weight& lambda) {
    if (!d.dominant(lambda)) throw std::invalid_argument("weight not dominant");
    ivec u(d.rank);
    for (int i = 0; i < d.rank; ++i) u[i] = 2 * lambda.coords[i] + d.two_rho[i];
    mpz_class num = 1, den = 1;
    for (auto& a : d.positive_roots) {
        num *= mpz_class((long)d.dot(a, u));
        den *= mpz_class((long)d.dot(a, d.two_rho));
    }
    if (num % den != 0) throw std::logic_error("Weyl dimension not integral");
    return num / den;
}

// complex value with a running absolute error bound
struct CertValue {
    std::complex<double> v;
    double err = 0;

    static constexpr double kEps = 2.3e-16;
    CertValue operator+(const CertValue& o) const {
        CertValue r{v + o.v, err + o.err};
        r.err += std::abs(r.v) * kEps;
        return r;
    }
    CertValue operator*(const CertValue& o) const {
        CertValue r{v * o.v, err * std::abs(o.v) + o.err * std::abs(v) + err * o.err};
        r.err += std::abs(r.v) * 2 * kEps;
        return r;
    }
    CertValue operator/(const CertValue& o) const {
        double om = std::abs(o.v);
        if (o.err >= om / 2) {
            CertValue r{0.0, std::numeric_limits<double>::infinity()};
            return r;
        }
        CertValue r{v / o.v, 0};
        r.err = (err + std::abs(r.v) * o.err) / (om - o.err) + std::abs(r.v) * 2 * kEps;
        return r;
    }
};

// The degenerate Weyl character formula specialised to one torsion torus
// element, with the lambda-independent pieces precomputed.
class CharEvaluator {
  public:
    CharEvaluator(const BasedRootDatum& d, const RatCochar& mu) : d_(&d), mu_(mu) {
        mu_.normalize();
        order_ = mu_.den;
        levi_ = levi_data(d, mu_);
        pm_den_ = 1;
        for (int k : levi_.levi_roots)
            pm_den_ *= mpz_class((long)d.dot(d.positive_roots[k], levi_.two_rho_levi));
        // denominator prod (1 - t^{-alpha}) over the non-Levi roots
        denom_ = CyclotomicNumber::from_rational(1, order_);
        for (int k : levi_.other_roots) {
            long e = -d.pair(d.positive_roots[k], mu_.num) % order_;
            denom_ = denom_ * (CyclotomicNumber::from_rational(1, order_) -
                               CyclotomicNumber::root_of_unity(e, order_));
        }
        denom_inv_ = denom_.invert();
        roots_table_.resize(order_);
        const double tau = 6.283185307179586476925286766559;
        for (long k = 0; k < order_; ++k)
            roots_table_[k] = std::polar(1.0, tau * double(k) / double(order_));
        denom_num_ = {1.0, 0.0};
        for (int k : levi_.other_roots) {
            long e = -d.pair(d.positive_roots[k], mu_.num) % order_;
            if (e < 0) e += order_;
            CertValue f{std::complex<double>(1.0, 0.0) - roots_table_[e], 8 * CertValue::kEps};
            denom_num_ = denom_num_ * f;
        }
    }

    long order() const { return order_; }
    const LeviData& levi() const { return levi_; }

    // exact chi_{V_lambda}(t) as an element of Q(zeta_order)
    CyclotomicNumber exact(const Weight& lambda) const {
        ivec u0(d_->rank);
        for (int i = 0; i < d_->rank; ++i)
            u0[i] = 2 * lambda.coords[i] + d_->two_rho[i];
        std::vector<mpz_class> acc(order_, 0);
        for (int wi : levi_.coset_reps) {
            const WeylElement& w = d_->weyl[wi];
            ivec u = w.apply(u0, d_->rank);
            mpz_class pm = w.sign;
            for (int k : levi_.levi_roots)
                pm *= mpz_class((long)d_->dot(d_->positive_roots[k], u));
            long e = (d_->pair(u, mu_.num) - d_->pair(d_->two_rho, mu_.num)) / 2 % order_;
            if (e < 0) e += order_;
            acc[e] += pm;
        }
        std::vector<mpq_class> num(acc.size());
        for (std::size_t i = 0; i < acc.size(); ++i)
            num[i] = mpq_class(acc[i]) / mpq_class(pm_den_);
        CyclotomicNumber numerator(order_, CyclotomicNumber::reduce(std::move(num), order_));
        return numerator * denom_inv_;
    }

    // certified numeric value of chi with an error bound
    CertValue certified(const Weight& lambda) const {
        ivec u0(d_->rank);
        for (int i = 0; i < d_->rank; ++i)
            u0[i] = 2 * lambda.coords[i] + d_->two_rho[i];
        double pm_den = pm_den_.get_d();
        CertValue sum{0.0, 0.0};
        for (int wi : levi_.coset_reps) {
            const WeylElement& w = d_->weyl[wi];
            ivec u = w.apply(u0, d_->rank);
            double pm = w.sign;
            double rel = 0;
            for (int k : levi_.levi_roots) {
                pm *= double(d_->dot(d_->positive_roots[k], u));
                rel += 2 * CertValue::kEps;
            }
            pm /= pm_den;
            rel += 2 * CertValue::kEps;
            long e = (d_->pair(u, mu_.num) - d_->pair(d_->two_rho, mu_.num)) / 2 % order_;
            if (e < 0) e += order_;
            CertValue term{pm * roots_table_[e], std::abs(pm) * (rel + 8 * CertValue::kEps)};
            sum = sum + term;
        }
        return sum / denom_num_;
    }

  private:
    const BasedRootDatum* d_;
    RatCochar mu_;
    long order_ = 1;
    LeviData levi_;
    mpz_class pm_den_;
    CyclotomicNumber denom_, denom_inv_;
    CertValue denom_num_;
    std::vector<std::complex<double>> roots_table_;
};

// standalone character value (the per-dataset engine below memoizes these)
inline CyclotomicNumber char_value(const BasedRootDatum& d, const Weight& lambda,
                                   const RatCochar& mu) {
    if (!d.dominant(lambda)) throw std::invalid_argument("weight not dominant");
    return CharEvaluator(d, mu).exact(lambda);
}

// dim V_lambda^Gamma = 1/|Gamma| sum of C_j chi(t_j) over the class dataset
class InvariantDimEngine {
  public:
    InvariantDimEngine(const BasedRootDatum& d, const ClassDataset& ds)
        : d_(&d), ds_(&ds) {
        if (d.family != ds.family || d.rank != ds.rank)
            throw std::invalid_argument("dataset does not match root datum");
        for (auto& c : ds.classes) {
            if (c.size % (long long)c.reps.size())
                throw std::invalid_argument("class size not divisible among reps");
            mpz_class w((long)(c.size / (long long)c.reps.size()));
            for (auto& mu : c.reps) {
                evals_.emplace_back(d, mu);
                weights_.push_back(w);
                if (ds.conductor % evals_.back().order())
                    throw std::invalid_argument("class order does not divide conductor");
            }
        }
    }

    long long dimension(const Weight& lambda, EvalMode mode = EvalMode::Checked) const {
        if (!d_->dominant(lambda)) throw std::invalid_argument("weight not dominant");
        if (mode != EvalMode::Exact) {
            CertValue sum{0.0, 0.0};
            for (std::size_t i = 0; i < evals_.size(); ++i) {
                CertValue chi = evals_[i].certified(lambda);
                CertValue w{weights_[i].get_d(), 0.0};
                sum = sum + chi * w;
            }
            double order = double(ds_->group_order);
            double val = sum.v.real() / order;
            double err = (sum.err + std::abs(sum.v.imag())) / order;
            long long rounded = (long long)std::llround(val);
            if (err < 0.4 && std::abs(val - double(rounded)) + err < 0.5) {
                if (mode == EvalMode::Certified) return rounded;
                return rounded;  // Checked: certification succeeded
            }
            if (mode == EvalMode::Certified)
                throw std::runtime_error("certification failed; use exact mode");
        }
        return exact_dimension(lambda);
    }

    long long exact_dimension(const Weight& lambda) const {
        long N = ds_->conductor;
        std::vector<mpz_class> acc(N, 0);
        for (std::size_t i = 0; i < evals_.size(); ++i) {
            CyclotomicNumber chi = evals_[i].exact(lambda);
            long m = evals_[i].order();
            long step = N / m;
            const auto& c = chi.coeffs();
            for (std::size_t k = 0; k < c.size(); ++k) {
                if (c[k] == 0) continue;
                if (c[k].get_den() != 1)
                    throw std::logic_error("character value is not an algebraic integer");
                acc[(long(k) * step) % N] += weights_[i] * c[k].get_num();
            }
        }
        // reduce mod Phi_N, then the result must be the constant dim * |Gamma|
        const zpoly& phi = cyclotomic_polynomial(N);
        std::size_t deg = phi.size() - 1;
        for (std::size_t i = acc.size(); i-- > deg;) {
            if (acc[i] == 0) continue;
            mpz_class c = acc[i];
            acc[i] = 0;
            std::size_t sh = i - deg;
            for (std::size_t j = 0; j < deg; ++j)
                if (phi[j] != 0) acc[sh + j] -= c * phi[j];
        }
        for (std::size_t i = 1; i < deg; ++i)
            if (acc[i] != 0) throw std::logic_error("invariant sum is not rational");
        mpz_class total = acc[0];
        mpz_class order((long)ds_->group_order);
        if (total % order != 0) throw std::logic_error("invariant sum not divisible by |Gamma|");
        mpz_class dim = total / order;
        if (dim < 0 || !dim.fits_slong_p())
            throw std::logic_error("invariant dimension out of range");
        return dim.get_si();
    }

  private:
    const BasedRootDatum* d_;
    const ClassDataset* ds_;
    std::vector<CharEvaluator> evals_;
    std::vector<mpz_class> weights_;
};

enum class HarmonicCase { E7, E8, E8A1 };

// Coefficients of the closed generating series for the harmonic invariants:
//   case (i):  (1 - t^2)(1 + t^{|R|/2}) P_R(t)
//   case (ii): (1 + t^{1 + |R|/2}) P_R(t)
inline std::vector<long long> harmonic_invariant_series(HarmonicCase c, int maxdeg) {
    std::vector<int> dens;
    int numer_exp = 0;
    switch (c) {
        case HarmonicCase::E7:
            dens = {6, 8, 10, 12, 14, 18};
            numer_exp = 63;
            break;
        case HarmonicCase::E8:
            dens = {8, 12, 14, 18, 20, 24, 30};
            numer_exp = 120;
            break;
        case HarmonicCase::E8A1:
            dens = {2, 8, 12, 14, 18, 20, 24, 30};
            numer_exp = 121;
            break;
    }
    std::vector<long long> s(maxdeg + 1, 0);
    s[0] = 1;
    if (numer_exp <= maxdeg) s[numer_exp] += 1;
    for (int k : dens)
        for (int i = k; i <= maxdeg; ++i) s[i] += s[i - k];  // divide by (1 - t^k)
    return s;
}

}  // namespace levelone
