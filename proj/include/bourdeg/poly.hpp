#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bourdeg/field.hpp"
#include "bourdeg/monomial.hpp"

namespace bourdeg {

template <CoefficientField K>
struct Term {
    Monomial m;
    K c;
};

/// Homogeneity of a polynomial: a degree, "inhomogeneous", or the zero
/// polynomial (homogeneous of every degree by convention).
class HomogeneousDegree {
  public:
    static HomogeneousDegree zero() { return HomogeneousDegree(kZero); }
    static HomogeneousDegree inhomogeneous() { return HomogeneousDegree(kInhom); }
    static HomogeneousDegree of(int d) { return HomogeneousDegree(d); }

    bool is_zero_poly() const { return v_ == kZero; }
    bool is_homogeneous() const { return v_ != kInhom; }
    std::optional<int> degree() const {
        if (v_ == kZero || v_ == kInhom) return std::nullopt;
        return v_;
    }
    bool operator==(const HomogeneousDegree&) const = default;

  private:
    static constexpr int kZero = -1;
    static constexpr int kInhom = -2;
    explicit HomogeneousDegree(int v) : v_(v) {}
    int v_;
};

/// Sparse polynomial: terms strictly descending in the carried monomial
/// order, no zero coefficients, zero = empty term list.
template <CoefficientField K>
class Poly {
  public:
    Poly() = default;
    explicit Poly(MonomialOrder o) : ord_(o) {}
    Poly(MonomialOrder o, const K& c, const Monomial& m) : ord_(o) {
        if (!c.is_zero()) t_.push_back({m, c});
    }

    static Poly from_terms(MonomialOrder o, std::vector<Term<K>> terms) {
        std::sort(terms.begin(), terms.end(),
                  [&o](const Term<K>& a, const Term<K>& b) { return o.cmp(a.m, b.m) > 0; });
        Poly p(o);
        for (auto& t : terms) {
            if (t.c.is_zero()) continue;
            if (!p.t_.empty() && p.t_.back().m == t.m)
                p.t_.back().c = p.t_.back().c + t.c;
            else
                p.t_.push_back(std::move(t));
            if (p.t_.back().c.is_zero()) p.t_.pop_back();
        }
        return p;
    }

    const MonomialOrder& order() const { return ord_; }
    const std::vector<Term<K>>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const Term<K>& leading() const { return t_.front(); }
    const Monomial& lm() const { return t_.front().m; }
    const K& lc() const { return t_.front().c; }

    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }

    int total_degree() const {
        int d = -1;
        for (const auto& t : t_) d = std::max(d, t.m.degree());
        return d;
    }

    HomogeneousDegree homogeneous_degree() const {
        if (t_.empty()) return HomogeneousDegree::zero();
        int d = t_[0].m.degree();
        for (const auto& t : t_)
            if (t.m.degree() != d) return HomogeneousDegree::inhomogeneous();
        return HomogeneousDegree::of(d);
    }

    Poly reordered(MonomialOrder o) const {
        if (o == ord_) return *this;
        return from_terms(o, t_);
    }

    Poly operator+(const Poly& o) const { return merged(o, false); }
    Poly operator-(const Poly& o) const { return merged(o, true); }
    Poly operator-() const {
        Poly r(ord_);
        r.t_.reserve(t_.size());
        for (const auto& t : t_) r.t_.push_back({t.m, -t.c});
        return r;
    }

    Poly operator*(const Poly& o) const {
        check_internal(ord_ == o.ord_, "order mismatch in polynomial product");
        std::vector<Term<K>> out;
        out.reserve(t_.size() * o.t_.size());
        for (const auto& a : t_)
            for (const auto& b : o.t_) out.push_back({a.m * b.m, a.c * b.c});
        return from_terms(ord_, std::move(out));
    }

    /// c * x^m * (*this)
    Poly scaled(const K& c, const Monomial& m) const {
        Poly r(ord_);
        if (c.is_zero()) return r;
        r.t_.reserve(t_.size());
        for (const auto& t : t_) r.t_.push_back({t.m * m, t.c * c});
        return r;
    }
    Poly scaled(const K& c) const { return scaled(c, Monomial()); }

    bool operator==(const Poly& o) const {
        if (t_.size() != o.t_.size()) return false;
        for (std::size_t i = 0; i < t_.size(); ++i)
            if (!(t_[i].m == o.t_[i].m) || !(t_[i].c == o.t_[i].c)) return false;
        return true;
    }

    Poly derivative(int var) const {
        std::vector<Term<K>> out;
        out.reserve(t_.size());
        for (const auto& t : t_) {
            int k = t.m[var];
            if (k == 0) continue;
            K c = t.c * t.c.from_int(k);
            if (c.is_zero()) continue;
            out.push_back({t.m.with_exponent(var, k - 1), c});
        }
        return from_terms(ord_, std::move(out));
    }

    /// Substitute each of the first `images.size()` variables by a polynomial;
    /// tag variables must not occur.
    Poly substitute(const std::vector<Poly>& images) const {
        Poly acc(ord_);
        if (t_.empty()) return acc;
        const K one = t_[0].c.one();
        // powers[v][k] = images[v]^k, built on demand
        std::vector<std::vector<Poly>> powers(images.size());
        for (std::size_t v = 0; v < images.size(); ++v) powers[v].push_back(Poly(ord_, one, Monomial()));
        for (const auto& t : t_) {
            Poly term(ord_, t.c, Monomial());
            for (std::size_t v = 0; v < images.size(); ++v) {
                int k = t.m[static_cast<int>(v)];
                while (static_cast<int>(powers[v].size()) <= k)
                    powers[v].push_back(powers[v].back() * images[v]);
                if (k > 0) term = term * powers[v][k];
            }
            for (int v = static_cast<int>(images.size()); v < kMaxVars; ++v)
                check_internal(t.m[v] == 0, "substitute: variable without an image");
            acc = acc + term;
        }
        return acc;
    }

    /// Set one variable to 1 (dehomogenization) and combine terms.
    Poly set_variable_to_one(int var) const {
        std::vector<Term<K>> out;
        out.reserve(t_.size());
        for (const auto& t : t_) out.push_back({t.m.with_exponent(var, 0), t.c});
        return from_terms(ord_, std::move(out));
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            const auto& t = t_[i];
            std::string c = t.c.str();
            bool neg = !c.empty() && c[0] == '-';
            if (i == 0) {
                if (neg) s += "-", c = c.substr(1);
            } else {
                s += neg ? " - " : " + ";
                if (neg) c = c.substr(1);
            }
            if (t.m.is_one())
                s += c;
            else if (c == "1")
                s += t.m.str();
            else
                s += c + "*" + t.m.str();
        }
        return s;
    }

  private:
    Poly merged(const Poly& o, bool subtract) const {
        check_internal(ord_ == o.ord_, "order mismatch in polynomial sum");
        Poly r(ord_);
        r.t_.reserve(t_.size() + o.t_.size());
        std::size_t i = 0, j = 0;
        while (i < t_.size() && j < o.t_.size()) {
            int c = ord_.cmp(t_[i].m, o.t_[j].m);
            if (c > 0)
                r.t_.push_back(t_[i++]);
            else if (c < 0)
                r.t_.push_back({o.t_[j].m, subtract ? -o.t_[j].c : o.t_[j].c}), ++j;
            else {
                K s = subtract ? t_[i].c - o.t_[j].c : t_[i].c + o.t_[j].c;
                if (!s.is_zero()) r.t_.push_back({t_[i].m, std::move(s)});
                ++i, ++j;
            }
        }
        for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
        for (; j < o.t_.size(); ++j) r.t_.push_back({o.t_[j].m, subtract ? -o.t_[j].c : o.t_[j].c});
        return r;
    }

    MonomialOrder ord_;
    std::vector<Term<K>> t_;
};

/// Scalar that maps the coefficient list to canonical form: over Q an
/// integral content-free list with positive lead, over F_p a monic one.
inline Rational canonical_scale(const std::vector<Rational>& coeffs) {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& c : coeffs) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.raw().get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den().get_mpz_t());
    }
    if (num_gcd == 0) return Rational(1);
    mpq_class s(den_lcm, num_gcd);
    s.canonicalize();
    if (sgn(coeffs.front().raw()) < 0) s = -s;
    return Rational::wrap(s);
}

inline GFp canonical_scale(const std::vector<GFp>& coeffs) {
    if (coeffs.empty()) return GFp();
    return coeffs.front().one() / coeffs.front();
}

template <CoefficientField K>
Poly<K> make_canonical(const Poly<K>& p) {
    if (p.is_zero()) return p;
    std::vector<K> cs;
    cs.reserve(p.size());
    for (const auto& t : p.terms()) cs.push_back(t.c);
    return p.scaled(canonical_scale(cs));
}

/// Invertible 3x3 change of projective coordinates over K.
template <CoefficientField K>
struct CoordinateChange {
    // row i = image of variable i as a linear form: x_i -> sum_j a[i][j] x_j
    std::array<std::array<K, 3>, 3> a;
    std::array<std::array<K, 3>, 3> inv;

    Poly<K> image(int var, MonomialOrder o) const {
        std::vector<Term<K>> ts;
        for (int j = 0; j < 3; ++j)
            if (!a[var][j].is_zero()) ts.push_back({Monomial::variable(j), a[var][j]});
        return Poly<K>::from_terms(o, std::move(ts));
    }
    CoordinateChange inverse() const { return CoordinateChange{inv, a}; }
};

template <CoefficientField K>
Poly<K> apply_change(const Poly<K>& p, const CoordinateChange<K>& c) {
    std::vector<Poly<K>> images;
    for (int v = 0; v < 3; ++v) images.push_back(c.image(v, p.order()));
    return p.substitute(images);
}

}  // namespace bourdeg
