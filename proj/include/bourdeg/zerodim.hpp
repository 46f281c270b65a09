#pragma once

#include <vector>

#include "bourdeg/ideal_ops.hpp"

namespace bourdeg {

namespace detail {

// Dense univariate polynomials, coefficients low to high, no trailing zeros.

template <CoefficientField K>
void uv_trim(std::vector<K>& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

template <CoefficientField K>
std::vector<K> uv_from_poly(const Poly<K>& p, int var) {
    std::vector<K> a;
    for (const auto& t : p.terms()) {
        for (int v = 0; v < kMaxVars; ++v)
            check_internal(v == var || t.m[v] == 0, "polynomial is not univariate");
        int k = t.m[var];
        if (static_cast<int>(a.size()) <= k) a.resize(k + 1, t.c.zero());
        a[k] = a[k] + t.c;
    }
    uv_trim(a);
    return a;
}

template <CoefficientField K>
Poly<K> uv_to_poly(const std::vector<K>& a, int var, MonomialOrder ord) {
    std::vector<Term<K>> ts;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!a[k].is_zero()) ts.push_back({Monomial::variable(var, static_cast<int>(k)), a[k]});
    return Poly<K>::from_terms(ord, std::move(ts));
}

template <CoefficientField K>
std::vector<K> uv_derivative(const std::vector<K>& a) {
    std::vector<K> d;
    for (std::size_t k = 1; k < a.size(); ++k) d.push_back(a[k] * a[k].from_int(static_cast<long>(k)));
    uv_trim(d);
    return d;
}

template <CoefficientField K>
std::vector<K> uv_rem(std::vector<K> a, const std::vector<K>& b) {
    check_internal(!b.empty(), "univariate remainder by zero");
    while (a.size() >= b.size()) {
        K f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] = a[off + i] - f * b[i];
        a.pop_back();
        uv_trim(a);
        if (a.empty()) break;
    }
    return a;
}

template <CoefficientField K>
std::vector<K> uv_quotient_exact(std::vector<K> a, const std::vector<K>& b) {
    std::vector<K> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, b.back().zero());
    while (a.size() >= b.size()) {
        K f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        q[off] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] = a[off + i] - f * b[i];
        uv_trim(a);
        if (a.empty()) break;
    }
    check_internal(a.empty(), "inexact univariate division");
    uv_trim(q);
    return q;
}

template <CoefficientField K>
std::vector<K> uv_gcd(std::vector<K> a, std::vector<K> b) {
    while (!b.empty()) {
        auto r = uv_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        K inv = a.back().one() / a.back();
        for (auto& c : a) c = c * inv;
    }
    return a;
}

/// g / gcd(g, g'): same roots, each simple. Assumes char 0 or char larger
/// than deg g, so the derivative of a nonconstant g never vanishes.
template <CoefficientField K>
std::vector<K> uv_squarefree_part(const std::vector<K>& g) {
    if (g.size() <= 1) return g;
    auto d = uv_derivative(g);
    check_internal(!d.empty(), "squarefree part: derivative vanished (characteristic too small)");
    auto h = uv_gcd(g, d);
    auto q = uv_quotient_exact(g, h);
    K inv = q.back().one() / q.back();
    for (auto& c : q) c = c * inv;
    return q;
}

}  // namespace detail

/// True when the quotient by the ideal is a finite-dimensional vector
/// space over K, judging from the Groebner leads: each of the first
/// `nvars` variables must contribute a pure power.
template <CoefficientField K>
bool is_zero_dimensional(const GroebnerBasis<K>& gb, int nvars) {
    if (gb.contains_one()) return true;
    for (int v = 0; v < nvars; ++v) {
        bool found = false;
        for (const auto& p : gb.gens) {
            if (p.is_zero()) continue;
            const Monomial& m = p.lm();
            if (!m.depends_on(v)) continue;
            bool pure = true;
            for (int w = 0; w < kMaxVars && pure; ++w)
                if (w != v && m.depends_on(w)) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

/// Number of standard monomials (a k-basis of the quotient) of a
/// zero-dimensional ideal in the first `nvars` variables.
template <CoefficientField K>
long vector_space_dimension(const GroebnerBasis<K>& gb, int nvars) {
    check_internal(is_zero_dimensional(gb, nvars), "vector space dimension of a non-finite quotient");
    if (gb.contains_one()) return 0;
    std::vector<Monomial> leads;
    for (const auto& p : gb.gens) leads.push_back(p.lm());
    std::vector<int> cap(nvars, 0);
    for (int v = 0; v < nvars; ++v)
        for (const auto& m : leads) {
            bool pure = m.depends_on(v);
            for (int w = 0; w < kMaxVars && pure; ++w)
                if (w != v && m.depends_on(w)) pure = false;
            if (pure) cap[v] = cap[v] == 0 ? m[v] : std::min(cap[v], m[v]);
        }
    long count = 0;
    std::vector<int> e(nvars, 0);
    for (;;) {
        Monomial m;
        for (int v = 0; v < nvars; ++v) m = m * Monomial::variable(v, e[v]);
        bool standard = true;
        for (const auto& l : leads)
            if (l.divides(m)) {
                standard = false;
                break;
            }
        if (standard) ++count;
        int v = 0;
        for (; v < nvars; ++v) {
            if (++e[v] < cap[v]) break;
            e[v] = 0;
        }
        if (v == nvars) break;
    }
    return count;
}

/// Generator of I intersected with k[var] for a zero-dimensional affine
/// ideal in two variables (slots 0 and 1).
template <CoefficientField K>
std::vector<K> univariate_eliminant(const std::vector<Poly<K>>& gens, int var) {
    int other = var == 0 ? 1 : 0;
    MonomialOrder blk = MonomialOrder::block(static_cast<std::uint8_t>(1u << other));
    std::vector<Poly<K>> in;
    for (const auto& p : gens) in.push_back(p.reordered(blk));
    auto gb = groebner_basis(in, blk);
    for (const auto& p : gb.gens) {
        if (p.is_zero() || p.lm().uses_mask(blk.mask())) continue;
        return detail::uv_from_poly(p, var);
    }
    throw Error("ideal is not zero-dimensional: no univariate eliminant in " + variable_name(var));
}

template <CoefficientField K>
struct ZeroDimRadical {
    std::vector<Poly<K>> radical;  // reduced basis of the radical
    long point_count;              // geometric points over the closure
};

/// Seidenberg: adjoin the squarefree parts of the univariate eliminants in
/// each variable; over a perfect field the result is the radical, and its
/// vector-space dimension counts the geometric points.
template <CoefficientField K>
ZeroDimRadical<K> zero_dim_radical_and_count(const std::vector<Poly<K>>& gens) {
    MonomialOrder ord = MonomialOrder::grevlex();
    auto gb = groebner_basis(gens, ord);
    if (!is_zero_dimensional(gb, 2)) throw Error("ideal is not zero-dimensional");
    std::vector<Poly<K>> enlarged = gb.gens;
    for (int v = 0; v < 2; ++v) {
        auto elim = univariate_eliminant(gb.gens, v);
        enlarged.push_back(detail::uv_to_poly(detail::uv_squarefree_part(elim), v, ord));
    }
    auto rad = groebner_basis(enlarged, ord);
    return {rad.gens, vector_space_dimension(rad, 2)};
}

}  // namespace bourdeg
