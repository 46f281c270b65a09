#pragma once

#include <map>
#include <string>
#include <vector>

#include "bourdeg/linalg.hpp"
#include "bourdeg/resolution.hpp"
#include "bourdeg/zerodim.hpp"

namespace bourdeg {

/// Integer Laurent polynomial in one variable t.
class ZPoly {
  public:
    ZPoly() = default;
    static ZPoly one() {
        ZPoly p;
        p.c_[0] = 1;
        return p;
    }
    static ZPoly monomial(int e, long long c = 1) {
        ZPoly p;
        if (c) p.c_[e] = c;
        return p;
    }

    void add(int e, long long v) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            if (v) c_[e] = v;
        } else {
            it->second += v;
            if (!it->second) c_.erase(it);
        }
    }
    bool is_zero() const { return c_.empty(); }
    long long coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? 0 : it->second;
    }
    const std::map<int, long long>& coeffs() const { return c_; }

    long long eval_one() const {
        long long s = 0;
        for (auto& [e, v] : c_) s += v;
        return s;
    }

    ZPoly operator+(const ZPoly& o) const {
        ZPoly r = *this;
        for (auto& [e, v] : o.c_) r.add(e, v);
        return r;
    }
    ZPoly operator-(const ZPoly& o) const {
        ZPoly r = *this;
        for (auto& [e, v] : o.c_) r.add(e, -v);
        return r;
    }
    ZPoly operator*(const ZPoly& o) const {
        ZPoly r;
        for (auto& [e1, v1] : c_)
            for (auto& [e2, v2] : o.c_) r.add(e1 + e2, v1 * v2);
        return r;
    }

    /// Exact division by (1 - t); throws if the remainder is nonzero.
    ZPoly divided_by_one_minus_t() const {
        // N = Q (1-t) means q_e = n_e + q_{e-1}: forward prefix sums, and
        // exactness is N(1) = 0.
        ZPoly q;
        if (c_.empty()) return q;
        int lo = c_.begin()->first, hi = c_.rbegin()->first;
        long long carry = 0;
        for (int e = lo; e <= hi; ++e) {
            carry += coeff(e);
            if (e < hi && carry) q.c_[e] = carry;
        }
        check_internal(carry == 0, "Laurent polynomial is not divisible by (1-t)");
        return q;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (auto& [e, v] : c_) {
            if (!s.empty()) s += v >= 0 ? " + " : " - ";
            else if (v < 0) s += "-";
            long long a = v < 0 ? -v : v;
            if (a != 1 || e == 0) s += std::to_string(a);
            if (e != 0) {
                if (a != 1) s += "*";
                s += e == 1 ? "t" : "t^" + std::to_string(e);
            }
        }
        return s;
    }

    bool operator==(const ZPoly&) const = default;

  private:
    std::map<int, long long> c_;
};

/// Numerator of the Hilbert series over (1-t)^3: the alternating sum of
/// t^{shift} along the resolution.
template <CoefficientField K>
ZPoly hilbert_numerator(const FreeResolution<K>& res) {
    ZPoly n;
    for (int d : res.target_shifts) n.add(d, 1);
    long long sign = -1;
    for (int k = 0; k < res.length(); ++k, sign = -sign)
        for (int d : res.diff[k].col_shifts()) n.add(d, sign);
    return n;
}

struct DegreeInfo {
    int dim;     // Krull dimension of R/I
    long value;  // degree (multiplicity) if dim >= 1, length if dim == 0
    ZPoly numerator;
    ZPoly reduced;  // numerator / (1-t)^(3-dim)
};

template <CoefficientField K>
GradedMatrix<K> ideal_presentation(const std::vector<Poly<K>>& gens) {
    std::vector<Poly<K>> row;
    std::vector<int> csh;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        auto h = g.homogeneous_degree().degree();
        check_internal(h.has_value(), "ideal presentation needs homogeneous generators");
        row.push_back(g);
        csh.push_back(*h);
    }
    check_internal(!row.empty(), "ideal presentation of the zero ideal");
    return GradedMatrix<K>({0}, csh, row);
}

/// Krull dimension together with degree/multiplicity (dim >= 1) or total
/// length (dim == 0) of R/I, R = k[x,y,z], computed from a minimal free
/// resolution. I = (1) is rejected.
template <CoefficientField K>
DegreeInfo degree_or_length(const std::vector<Poly<K>>& gens,
                            MonomialOrder ord = MonomialOrder::grevlex()) {
    auto gb = groebner_basis(gens, ord);
    if (gb.contains_one()) throw Error("degree_or_length of the unit ideal");
    int dim = krull_dimension(gb, 3);
    auto res = free_resolution(ideal_presentation(gb.gens));
    ZPoly n = hilbert_numerator(res);
    ZPoly q = n;
    for (int i = 0; i < 3 - dim; ++i) q = q.divided_by_one_minus_t();
    long v = static_cast<long>(q.eval_one());
    check_internal(v > 0, "degree of a nonzero module must be positive");
    return {dim, v, n, q};
}

/// dim_k (R/I)_n for homogeneous I in x,y,z, counted from the Groebner
/// leads (standard monomials of degree n).
template <CoefficientField K>
long hilbert_function_from_gb(const GroebnerBasis<K>& gb, int n) {
    if (n < 0) return 0;
    std::vector<Monomial> leads;
    for (const auto& p : gb.gens)
        if (!p.is_zero()) leads.push_back(p.lm());
    long count = 0;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b) {
            Monomial m = Monomial::variable(0, a) * Monomial::variable(1, b) *
                         Monomial::variable(2, n - a - b);
            bool standard = true;
            for (const auto& l : leads)
                if (l.divides(m)) {
                    standard = false;
                    break;
                }
            if (standard) ++count;
        }
    return count;
}

/// All monomials of total degree n in x,y,z, descending in grevlex.
inline std::vector<Monomial> monomials_of_degree(int n) {
    std::vector<Monomial> ms;
    for (int a = n; a >= 0; --a)
        for (int b = n - a; b >= 0; --b) ms.push_back(Monomial::variable(0, a) * Monomial::variable(1, b) * Monomial::variable(2, n - a - b));
    std::sort(ms.begin(), ms.end(), [](const Monomial& u, const Monomial& v) {
        return MonomialOrder::grevlex().cmp(u, v) > 0;
    });
    return ms;
}

/// Independent check of the Hilbert function: row-reduce the Macaulay
/// matrix of degree-n multiples of the generators. Deliberately avoids the
/// Groebner machinery.
template <CoefficientField K>
long hilbert_function_oracle(const std::vector<Poly<K>>& gens, int n, int cap = 12) {
    if (n > cap) throw Error("hilbert_function_oracle: degree " + std::to_string(n) +
                             " exceeds cap " + std::to_string(cap));
    if (n < 0) return 0;
    auto cols = monomials_of_degree(n);
    std::map<std::string, std::size_t> col_of;
    for (std::size_t j = 0; j < cols.size(); ++j) col_of[cols[j].str()] = j;

    K zero;
    bool have = false;
    std::vector<std::vector<K>> rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!have) zero = g.leading().c.zero(), have = true;
        auto hd = g.homogeneous_degree().degree();
        check_internal(hd.has_value(), "oracle needs homogeneous generators");
        if (*hd > n) continue;
        for (const auto& mult : monomials_of_degree(n - *hd)) {
            std::vector<K> row(cols.size(), zero);
            for (const auto& t : g.terms()) row[col_of.at((t.m * mult).str())] = t.c;
            rows.push_back(std::move(row));
        }
    }
    long full = static_cast<long>(cols.size());
    if (rows.empty()) return full;
    DenseMatrix<K> m(rows.size(), cols.size(), zero);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m.at(i, j) = rows[i][j];
    return full - static_cast<long>(m.rref());
}

}  // namespace bourdeg
