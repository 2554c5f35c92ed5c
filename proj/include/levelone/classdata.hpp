#pragma once

#include <levelone/cyclotomic.hpp>
#include <levelone/rootdata.hpp>

#include <cstdint>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

namespace levelone {

// Square matrix with entries a / 2^shift; the groups we enumerate live in
// GL_n(Z[1/2]).
struct DyadicMatrix {
    int n = 0;
    int shift = 0;
    std::vector<std::int64_t> a;

    static DyadicMatrix identity(int n) {
        DyadicMatrix m;
        m.n = n;
        m.a.assign(std::size_t(n) * n, 0);
        for (int i = 0; i < n; ++i) m.a[std::size_t(i) * n + i] = 1;
        return m;
    }
    void normalize() {
        while (shift > 0) {
            for (auto x : a)
                if (x & 1) return;
            for (auto& x : a) x >>= 1;
            --shift;
        }
    }
    friend DyadicMatrix operator*(const DyadicMatrix& x, const DyadicMatrix& y) {
        DyadicMatrix r;
        r.n = x.n;
        r.shift = x.shift + y.shift;
        r.a.assign(std::size_t(x.n) * x.n, 0);
        for (int i = 0; i < x.n; ++i)
            for (int k = 0; k < x.n; ++k) {
                std::int64_t v = x.a[std::size_t(i) * x.n + k];
                if (!v) continue;
                for (int j = 0; j < x.n; ++j)
                    r.a[std::size_t(i) * x.n + j] += v * y.a[std::size_t(k) * x.n + j];
            }
        r.normalize();
        return r;
    }
    std::string key() const {
        std::string s;
        s.reserve(a.size() + 1);
        s.push_back(char(shift));
        for (auto x : a) s.push_back(char(std::int8_t(x)));
        return s;
    }
    static DyadicMatrix from_key(const std::string& s, int n) {
        DyadicMatrix m;
        m.n = n;
        m.shift = std::int8_t(s[0]);
        m.a.resize(std::size_t(n) * n);
        for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = std::int8_t(s[i + 1]);
        return m;
    }
    bool small_entries() const {
        for (auto x : a)
            if (x < -127 || x > 127) return false;
        return true;
    }
};

// characteristic polynomial of an integer matrix, coefficients low-to-high,
// by the Faddeev-LeVerrier recursion; int64 with overflow guards is ample for
// the finite-order matrices enumerated here
inline std::vector<mpz_class> charpoly_int(const std::vector<std::int64_t>& m, int n) {
    std::vector<std::int64_t> A(m), Mk(std::size_t(n) * n, 0), AM(std::size_t(n) * n);
    for (int i = 0; i < n; ++i) Mk[std::size_t(i) * n + i] = 1;
    std::vector<mpz_class> c(n + 1, 0);
    c[n] = 1;
    constexpr __int128 lim = (__int128)1 << 62;
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                __int128 s = 0;
                for (int l = 0; l < n; ++l)
                    s += (__int128)A[std::size_t(i) * n + l] * Mk[std::size_t(l) * n + j];
                if (s >= lim || s <= -lim) throw std::overflow_error("charpoly overflow");
                AM[std::size_t(i) * n + j] = std::int64_t(s);
            }
        std::int64_t tr = 0;
        for (int i = 0; i < n; ++i) tr += AM[std::size_t(i) * n + i];
        std::int64_t ck = -tr / k;
        c[n - k] = ck;
        Mk = AM;
        for (int i = 0; i < n; ++i) Mk[std::size_t(i) * n + i] += ck;
    }
    return c;
}

// charpoly of a dyadic matrix; must be integral for finite-order elements
inline std::vector<mpz_class> charpoly_dyadic(const DyadicMatrix& g) {
    auto c = charpoly_int(g.a, g.n);
    if (g.shift) {
        for (int i = 0; i <= g.n; ++i) {
            mpz_class div = 1;
            mpz_mul_2exp(div.get_mpz_t(), div.get_mpz_t(),
                         mp_bitcnt_t(g.shift) * (g.n - i));
            if (c[i] % div != 0) throw std::logic_error("non-integral charpoly");
            c[i] /= div;
        }
    }
    return c;
}

// factor a monic integer polynomial into cyclotomics Phi_d; throws if a
// non-cyclotomic factor remains below the search limit
inline std::vector<std::pair<long, int>> factor_cyclotomic(zpoly p, long limit = 10000) {
    zpoly_trim(p);
    if (p.empty() || p.back() != 1) throw std::invalid_argument("not monic");
    std::vector<std::pair<long, int>> out;
    for (long d = 1; p.size() > 1 && d <= limit; ++d) {
        if (std::size_t(euler_phi(d)) + 1 > p.size()) continue;
        const zpoly& phi = cyclotomic_polynomial(d);
        int mult = 0;
        while (p.size() >= phi.size()) {
            bool ok = true;
            zpoly q;
            try {
                q = zpoly_div_exact(p, phi);
            } catch (const std::logic_error&) {
                ok = false;
            }
            if (!ok) break;
            p = std::move(q);
            if (p.empty()) p = {1};
            ++mult;
        }
        if (mult) out.emplace_back(d, mult);
    }
    if (p.size() > 1) throw std::domain_error("non-cyclotomic factor in charpoly");
    return out;
}

// Conjugacy-class bucket: one characteristic polynomial, its element count,
// and the torsion torus representatives standing in for it.
struct ClassRecord {
    zpoly charpoly;  // low-to-high, monic
    long long size = 0;
    std::vector<RatCochar> reps;

    long order() const {
        long o = 1;
        for (auto& [d, m] : factor_cyclotomic(charpoly)) o = std::lcm(o, d);
        return o;
    }
};

struct ClassDataset {
    std::string name;
    Family family = Family::B;
    int rank = 0;
    long long group_order = 0;
    std::vector<ClassRecord> classes;
    long conductor = 1;

    void compute_conductor() {
        conductor = 1;
        for (auto& c : classes) conductor = std::lcm(conductor, c.order());
    }
};

namespace detail {

// canonical angle a/b folded into [0, 1/2]
struct Angle {
    long num, den;
    bool operator<(const Angle& o) const { return num * o.den < o.num * den; }
    bool operator==(const Angle& o) const { return num * o.den == o.num * den; }
};

inline Angle make_angle(long num, long den) {
    num %= den;
    if (num < 0) num += den;
    if (2 * num > den) num = den - num;
    long g = std::gcd(num, den);
    return {num / g, den / g};
}

// eigenvalue structure of a product of cyclotomics: multiplicity of +1, of
// -1, and the +- paired angles from the Phi_d with d >= 3
struct EigenAngles {
    int mult_one = 0, mult_minus = 0;
    std::vector<Angle> pairs;
};

inline EigenAngles eigen_angles(const zpoly& p) {
    EigenAngles e;
    for (auto& [d, m] : factor_cyclotomic(p)) {
        if (d == 1)
            e.mult_one += m;
        else if (d == 2)
            e.mult_minus += m;
        else
            for (long k = 1; 2 * k < d; ++k)
                if (std::gcd(k, d) == 1)
                    for (int i = 0; i < m; ++i) e.pairs.push_back(make_angle(k, d));
    }
    std::sort(e.pairs.begin(), e.pairs.end());
    return e;
}

}  // namespace detail

// Torus representatives for a characteristic polynomial in SO_{2l+1} or
// SO_{2l}. Odd case: one representative. Even case: one if +-1 is an
// eigenvalue, else the two classes (theta_1..theta_{l-1}, +-theta_l).
inline std::vector<RatCochar> class_reps_from_charpoly(const zpoly& p, Family family,
                                                       int rank) {
    auto e = detail::eigen_angles(p);
    long deg = long(p.size()) - 1;
    std::vector<detail::Angle> angles = e.pairs;
    if (family == Family::B) {
        if (deg != 2 * rank + 1) throw std::invalid_argument("degree mismatch");
        if (e.mult_one % 2 != 1 || e.mult_minus % 2 != 0)
            throw std::invalid_argument("odd orthogonal needs odd +1 multiplicity");
        for (int i = 0; i < (e.mult_one - 1) / 2; ++i) angles.push_back({0, 1});
        for (int i = 0; i < e.mult_minus / 2; ++i) angles.push_back({1, 2});
    } else if (family == Family::D) {
        if (deg != 2 * rank) throw std::invalid_argument("degree mismatch");
        if (e.mult_one % 2 != 0 || e.mult_minus % 2 != 0)
            throw std::invalid_argument("even orthogonal needs even multiplicities");
        for (int i = 0; i < e.mult_one / 2; ++i) angles.push_back({0, 1});
        for (int i = 0; i < e.mult_minus / 2; ++i) angles.push_back({1, 2});
    } else {
        throw std::invalid_argument("use g2_torus_rep for G2");
    }
    if (int(angles.size()) != rank) throw std::logic_error("angle count mismatch");
    std::sort(angles.begin(), angles.end());
    long den = 1;
    for (auto& a : angles) den = std::lcm(den, a.den);
    RatCochar mu;
    mu.den = den;
    for (auto& a : angles) mu.num.push_back(a.num * (den / a.den));
    mu.normalize();
    if (family == Family::D && e.mult_one == 0 && e.mult_minus == 0) {
        RatCochar mu2 = mu;
        mu2.num.back() = (mu2.den - mu2.num.back()) % mu2.den;
        mu2.normalize();
        return {mu, mu2};
    }
    return {mu};
}

// G2 torus coordinates (x, y) in the coweight basis (alpha^, beta^) whose
// V_7 value set {0, +-A, +-B, +-(A+B)} matches the eigenvalue angles.
inline RatCochar g2_torus_rep(const zpoly& p) {
    auto e = detail::eigen_angles(p);
    if (long(p.size()) - 1 != 7 || e.mult_one % 2 != 1)
        throw std::invalid_argument("not a 7-dimensional special orthogonal charpoly");
    std::vector<detail::Angle> angles = e.pairs;
    for (int i = 0; i < (e.mult_one - 1) / 2; ++i) angles.push_back({0, 1});
    for (int i = 0; i < e.mult_minus / 2; ++i) angles.push_back({1, 2});
    if (angles.size() != 3) throw std::logic_error("angle count mismatch");
    long den = 1;
    for (auto& a : angles) den = std::lcm(den, a.den);
    std::array<long, 3> v;
    for (int i = 0; i < 3; ++i) v[i] = angles[i].num * (den / angles[i].den);
    auto norm = [&](long x) {
        x %= den;
        if (x < 0) x += den;
        return std::min(x, den - x);
    };
    // try all signed assignments of two of the angles as (A, B)
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            int k = 3 - i - j;
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    long A = si * v[i], B = sj * v[j];
                    if (norm(A + B) != v[k]) continue;
                    // mu = (A+B) alpha^ + (A+2B) beta^ realises value set {A, B, A+B}
                    RatCochar mu;
                    mu.den = den;
                    mu.num = {A + B, A + 2 * B};
                    mu.normalize();
                    return mu;
                }
        }
    throw std::domain_error("charpoly is not realised by the G2 torus");
}

// Full closure of a finitely generated finite matrix group, bucketed by
// characteristic polynomial. When `orbit_seed` is given, elements are keyed
// by the image of that vector; the seed must have trivial stabilizer (free
// orbit), which holds for vectors off every reflection hyperplane.
inline ClassDataset enumerate_group(const std::string& name, Family family, int rank,
                                    const std::vector<DyadicMatrix>& generators,
                                    long long max_elements = 800000000,
                                    const std::vector<std::int64_t>* orbit_seed = nullptr) {
    ClassDataset ds;
    ds.name = name;
    ds.family = family;
    ds.rank = rank;
    if (generators.empty()) throw std::invalid_argument("no generators");
    int n = generators[0].n;
    auto make_key = [&](const DyadicMatrix& g) {
        if (!orbit_seed) return g.key();
        std::string s(std::size_t(2 * n), '\0');
        for (int i = 0; i < n; ++i) {
            std::int64_t v = 0;
            for (int j = 0; j < n; ++j) v += g.a[std::size_t(i) * n + j] * (*orbit_seed)[j];
            if (g.shift) {
                if (v % (std::int64_t(1) << g.shift)) throw std::logic_error("seed not stable");
                v >>= g.shift;
            }
            if (v < -32768 || v > 32767) throw std::overflow_error("orbit key overflow");
            s[2 * i] = char(v & 0xff);
            s[2 * i + 1] = char((v >> 8) & 0xff);
        }
        return s;
    };
    std::unordered_set<std::string> seen;
    seen.reserve(std::size_t(std::min<long long>(max_elements, 4000000)));
    std::deque<DyadicMatrix> frontier;
    std::map<zpoly, long long> buckets;
    auto push = [&](DyadicMatrix g) {
        if (!g.small_entries()) throw std::logic_error("entry overflow in closure");
        auto [it, fresh] = seen.insert(make_key(g));
        if (fresh) {
            buckets[charpoly_dyadic(g)] += 1;
            frontier.push_back(std::move(g));
        }
    };
    push(DyadicMatrix::identity(n));
    while (!frontier.empty()) {
        DyadicMatrix g = std::move(frontier.front());
        frontier.pop_front();
        for (auto& s : generators) push(s * g);
        if ((long long)seen.size() > max_elements)
            throw std::runtime_error("element-count ceiling exceeded");
    }
    ds.group_order = (long long)seen.size();
    for (auto& [poly, count] : buckets) {
        ClassRecord rec;
        rec.charpoly = poly;
        rec.size = count;
        rec.reps = family == Family::G2 ? std::vector<RatCochar>{g2_torus_rep(poly)}
                                        : class_reps_from_charpoly(poly, family, rank);
        ds.classes.push_back(std::move(rec));
    }
    ds.compute_conductor();
    return ds;
}

// V' = V + epsilon: p(X) becomes p(X) (X - det) with det = p(0), buckets with
// equal 9-dimensional charpoly merge
inline ClassDataset so9_twist(const ClassDataset& e8) {
    if (e8.rank != 4 || e8.family != Family::D)
        throw std::invalid_argument("so9_twist expects an 8-dimensional dataset");
    ClassDataset ds;
    ds.name = e8.name + "_so9";
    ds.family = Family::B;
    ds.rank = 4;
    ds.group_order = e8.group_order;
    std::map<zpoly, long long> buckets;
    for (auto& c : e8.classes) {
        mpz_class det = c.charpoly[0];  // p(0) = det in even dimension
        if (det != 1 && det != -1) throw std::logic_error("determinant not a unit");
        zpoly q(c.charpoly.size() + 1, 0);
        for (std::size_t i = 0; i < c.charpoly.size(); ++i) {
            q[i + 1] += c.charpoly[i];
            q[i] -= det * c.charpoly[i];
        }
        buckets[q] += c.size;
    }
    for (auto& [poly, count] : buckets) {
        ClassRecord rec;
        rec.charpoly = poly;
        rec.size = count;
        rec.reps = class_reps_from_charpoly(poly, Family::B, 4);
        ds.classes.push_back(std::move(rec));
    }
    ds.compute_conductor();
    return ds;
}

// ---- class-data text format ----
//   group <name> ambient <B|D|G2> <rank> order <integer>
//   class <id> size <integer> charpoly <c0>,<c1>,...,<cn>
inline void save_class_data(const ClassDataset& ds, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "group " << ds.name << " ambient " << family_name(ds.family) << " "
        << ds.rank << " order " << ds.group_order << "\n";
    for (std::size_t i = 0; i < ds.classes.size(); ++i) {
        out << "class " << i << " size " << ds.classes[i].size << " charpoly ";
        for (std::size_t j = 0; j < ds.classes[i].charpoly.size(); ++j) {
            if (j) out << ",";
            out << ds.classes[i].charpoly[j];
        }
        out << "\n";
    }
}

inline ClassDataset load_class_data(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    ClassDataset ds;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok)) continue;
        if (tok == "group") {
            std::string fam, kw1, kw2;
            if (!(ss >> ds.name >> kw1 >> fam >> ds.rank >> kw2 >> ds.group_order) ||
                kw1 != "ambient" || kw2 != "order")
                throw std::runtime_error("malformed group header");
            auto f = family_from_name(fam);
            if (!f) throw std::runtime_error("unknown ambient family " + fam);
            ds.family = *f;
            have_header = true;
        } else if (tok == "class") {
            if (!have_header) throw std::runtime_error("class record before header");
            long long id, size;
            std::string kw1, kw2, coeffs;
            if (!(ss >> id >> kw1 >> size >> kw2 >> coeffs) || kw1 != "size" ||
                kw2 != "charpoly" || size <= 0)
                throw std::runtime_error("malformed class record");
            ClassRecord rec;
            rec.size = size;
            std::istringstream cs(coeffs);
            std::string c;
            while (std::getline(cs, c, ',')) rec.charpoly.push_back(mpz_class(c));
            rec.reps = ds.family == Family::G2
                           ? std::vector<RatCochar>{g2_torus_rep(rec.charpoly)}
                           : class_reps_from_charpoly(rec.charpoly, ds.family, ds.rank);
            ds.classes.push_back(std::move(rec));
        } else {
            throw std::runtime_error("unrecognised record: " + tok);
        }
    }
    if (!have_header) throw std::runtime_error("missing group header");
    ds.compute_conductor();
    return ds;
}

struct VerificationReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool ok() const {
        for (auto& [_, b] : checks)
            if (!b) return false;
        return true;
    }
    void add(const std::string& what, bool pass) { checks.emplace_back(what, pass); }
};

// 1/|Gamma| * sum of size * charpoly as an exact rational polynomial
inline std::vector<mpq_class> average_charpoly(const ClassDataset& ds) {
    std::size_t deg = 0;
    for (auto& c : ds.classes) deg = std::max(deg, c.charpoly.size());
    std::vector<mpq_class> avg(deg, 0);
    for (auto& c : ds.classes)
        for (std::size_t i = 0; i < c.charpoly.size(); ++i)
            avg[i] += mpq_class(c.charpoly[i] * mpz_class((long)c.size)) /
                      mpq_class(mpz_class((long)ds.group_order));
    return avg;
}

inline VerificationReport verify_class_data(const ClassDataset& ds) {
    VerificationReport rep;
    long long total = 0;
    for (auto& c : ds.classes) total += c.size;
    rep.add("class sizes sum to the group order", total == ds.group_order);

    bool cyc = true, orders = true, reps_ok = true, split_ok = true;
    long cond = 1;
    for (auto& c : ds.classes) {
        try {
            auto fact = factor_cyclotomic(c.charpoly);
            long o = 1;
            for (auto& [d, m] : fact) o = std::lcm(o, d);
            cond = std::lcm(cond, o);
            if (ds.conductor % o) orders = false;
        } catch (const std::exception&) {
            cyc = false;
            continue;
        }
        // reps must reproduce the eigenvalue angles of the charpoly
        auto want = detail::eigen_angles(c.charpoly);
        std::vector<detail::Angle> want_all = want.pairs;
        int drop_one = (ds.family == Family::B || ds.family == Family::G2) ? 1 : 0;
        for (int i = 0; i < (want.mult_one - drop_one) / 2; ++i)
            want_all.push_back({0, 1});
        for (int i = 0; i < want.mult_minus / 2; ++i) want_all.push_back({1, 2});
        std::sort(want_all.begin(), want_all.end());
        for (auto& mu : c.reps) {
            std::vector<detail::Angle> got;
            if (ds.family == Family::G2) {
                long A = 2 * mu.num[0] - mu.num[1];
                long B = mu.num[1] - mu.num[0];
                for (long val : {A, B, A + B}) got.push_back(detail::make_angle(val, mu.den));
            } else {
                for (auto x : mu.num) got.push_back(detail::make_angle(x, mu.den));
            }
            std::sort(got.begin(), got.end());
            if (got != want_all) reps_ok = false;
        }
        if (c.reps.size() == 2 &&
            (ds.family != Family::D || want.mult_one || want.mult_minus))
            split_ok = false;
    }
    rep.add("every charpoly is a product of cyclotomics", cyc);
    rep.add("representative angles match the charpoly", reps_ok);
    rep.add("split classes only in the even family without eigenvalue +-1", split_ok);
    rep.add("conductor is the lcm of class orders", cond == ds.conductor);

    // the natural-module identity (irreducible cases) or the G2 identity
    auto avg = average_charpoly(ds);
    if (ds.family == Family::G2) {
        // 1/|Gamma| sum = t^7 - t^4 + t^3 - 1
        std::vector<mpq_class> want(8, 0);
        want[7] = 1;
        want[4] = -1;
        want[3] = 1;
        want[0] = -1;
        rep.add("average charpoly equals t^7 - t^4 + t^3 - 1", avg == want);
    } else {
        int dim = ds.family == Family::B ? 2 * ds.rank + 1 : 2 * ds.rank;
        std::vector<mpq_class> want(dim + 1, 0);
        want[dim] = 1;
        want[0] = (dim % 2) ? -1 : 1;
        rep.add("average charpoly equals X^dim + (-1)^dim", avg == want);
    }
    return rep;
}

}  // namespace levelone
