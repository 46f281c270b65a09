#pragma once

#include <vector>

#include "bourdeg/graded_matrix.hpp"
#include "bourdeg/groebner.hpp"

namespace bourdeg {

namespace detail {

/// Syzygies of the columns of (rows x cols) polynomial matrix `entry`,
/// computed by a Groebner basis of the graph module F + F0 in which the
/// F block dominates: basis elements supported on the F0 block are exactly
/// the syzygies of the columns. `row_shifts`/`col_shifts` may be zero
/// vectors for affine (inhomogeneous) work.
template <CoefficientField K>
std::vector<MPoly<K>> syzygies_raw(const std::vector<std::vector<Poly<K>>>& entry,
                                   const std::vector<int>& row_shifts,
                                   const std::vector<int>& col_shifts, MonomialOrder ord) {
    int rows = static_cast<int>(row_shifts.size());
    int cols = static_cast<int>(col_shifts.size());
    ModuleOrder o{ord, {}, rows};
    o.shifts = row_shifts;
    o.shifts.insert(o.shifts.end(), col_shifts.begin(), col_shifts.end());

    std::vector<MPoly<K>> input;
    input.reserve(cols);
    for (int j = 0; j < cols; ++j) {
        std::vector<MTerm<K>> ts;
        for (int i = 0; i < rows; ++i)
            for (const auto& t : entry[i][j].terms()) ts.push_back({i, t.m, t.c});
        K one;
        bool have = false;
        for (int i = 0; i < rows && !have; ++i)
            if (!entry[i][j].is_zero()) one = entry[i][j].leading().c.one(), have = true;
        for (int jj = 0; jj < cols && !have; ++jj)
            for (int i = 0; i < rows && !have; ++i)
                if (!entry[i][jj].is_zero()) one = entry[i][jj].leading().c.one(), have = true;
        check_internal(have, "syzygies of the zero matrix are not interesting here");
        ts.push_back({rows + j, Monomial(), one});
        input.push_back(MPoly<K>::from_terms(o, std::move(ts)));
    }
    auto gb = module_groebner(o, std::move(input));
    std::vector<MPoly<K>> syz;
    for (auto& v : gb)
        if (v.lead().comp >= rows) syz.push_back(v.slice(rows, rows + cols));
    return syz;
}

}  // namespace detail

/// Generators of { v : M v = 0 }, each homogeneous w.r.t. the column
/// shifts of M. This is the first-syzygy computation behind resolutions.
template <CoefficientField K>
std::vector<ModVec<K>> kernel_of_map(const GradedMatrix<K>& m,
                                     MonomialOrder ord = MonomialOrder::grevlex()) {
    m.validate();
    std::vector<std::vector<Poly<K>>> entry(m.rows(), std::vector<Poly<K>>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) entry[i][j] = m.at(i, j);
    auto syz = detail::syzygies_raw(entry, m.row_shifts(), m.col_shifts(), ord);
    std::vector<ModVec<K>> out;
    for (auto& v : syz) {
        ModVec<K> mv;
        mv.shifts = m.col_shifts();
        for (int j = 0; j < m.cols(); ++j) mv.comp.push_back(v.component(j, ord));
        auto zero = m.apply(mv);
        check_internal(zero.is_zero(), "kernel_of_map produced a non-syzygy");
        out.push_back(std::move(mv));
    }
    return out;
}

/// Ideal quotient I : g for a single nonzero g: coefficients of g in the
/// syzygies of the row [g, gens...].
template <CoefficientField K>
std::vector<Poly<K>> ideal_quotient(const std::vector<Poly<K>>& gens, const Poly<K>& g,
                                    MonomialOrder ord = MonomialOrder::grevlex()) {
    if (g.is_zero()) throw Error("ideal quotient by zero");
    std::vector<std::vector<Poly<K>>> entry(1);
    entry[0].push_back(g);
    std::vector<int> csh{0};
    for (const auto& p : gens) {
        if (p.is_zero()) continue;
        entry[0].push_back(p);
        csh.push_back(0);
    }
    std::vector<int> rsh{0};
    auto syz = detail::syzygies_raw(entry, rsh, csh, ord);
    std::vector<Poly<K>> out;
    for (auto& v : syz) {
        Poly<K> a = v.component(0, ord);
        if (!a.is_zero()) out.push_back(std::move(a));
    }
    return groebner_basis(out, ord).gens;
}

/// Intersection of two ideals via the kernel of R -> R/I + R/J: first
/// components of the syzygies of [[1, gens(I), 0], [1, 0, gens(J)]].
template <CoefficientField K>
std::vector<Poly<K>> ideal_intersect(const std::vector<Poly<K>>& a, const std::vector<Poly<K>>& b,
                                     MonomialOrder ord = MonomialOrder::grevlex()) {
    K one;
    bool have = false;
    for (const auto& p : a)
        if (!p.is_zero()) one = p.leading().c.one(), have = true;
    for (const auto& p : b)
        if (!have && !p.is_zero()) one = p.leading().c.one(), have = true;
    if (!have) return {};
    Poly<K> unit(ord, one, Monomial());

    std::vector<std::vector<Poly<K>>> entry(2);
    std::vector<int> csh{0};
    entry[0].push_back(unit);
    entry[1].push_back(unit);
    for (const auto& p : a) {
        if (p.is_zero()) continue;
        entry[0].push_back(p);
        entry[1].push_back(Poly<K>(ord));
        csh.push_back(0);
    }
    for (const auto& p : b) {
        if (p.is_zero()) continue;
        entry[0].push_back(Poly<K>(ord));
        entry[1].push_back(p);
        csh.push_back(0);
    }
    std::vector<int> rsh{0, 0};
    auto syz = detail::syzygies_raw(entry, rsh, csh, ord);
    std::vector<Poly<K>> out;
    for (auto& v : syz) {
        Poly<K> h = v.component(0, ord);
        if (!h.is_zero()) out.push_back(std::move(h));
    }
    return groebner_basis(out, ord).gens;
}

/// General ideal quotient I : J (intersection of the principal quotients).
template <CoefficientField K>
std::vector<Poly<K>> ideal_quotient(const std::vector<Poly<K>>& gens,
                                    const std::vector<Poly<K>>& by,
                                    MonomialOrder ord = MonomialOrder::grevlex()) {
    std::vector<Poly<K>> acc;
    bool first = true;
    for (const auto& g : by) {
        if (g.is_zero()) continue;
        auto q = ideal_quotient(gens, g, ord);
        acc = first ? std::move(q) : ideal_intersect(acc, q, ord);
        first = false;
    }
    if (first) throw Error("ideal quotient by the zero ideal");
    return acc;
}

/// Saturation I : J^infinity by iterating the quotient until the reduced
/// bases stabilize.
template <CoefficientField K>
std::vector<Poly<K>> saturate(const std::vector<Poly<K>>& gens, const std::vector<Poly<K>>& by,
                              MonomialOrder ord = MonomialOrder::grevlex()) {
    std::vector<Poly<K>> cur = groebner_basis(gens, ord).gens;
    for (;;) {
        auto next = ideal_quotient(cur, by, ord);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

/// Saturation by a single element.
template <CoefficientField K>
std::vector<Poly<K>> saturate(const std::vector<Poly<K>>& gens, const Poly<K>& by,
                              MonomialOrder ord = MonomialOrder::grevlex()) {
    return saturate(gens, std::vector<Poly<K>>{by}, ord);
}

/// I intersected with the subring avoiding the first `tag_count` tag
/// variables (the input must live in the block order with the tags first).
template <CoefficientField K>
std::vector<Poly<K>> eliminate(const std::vector<Poly<K>>& gens, int tag_count) {
    MonomialOrder blk = MonomialOrder::elimination(tag_count);
    std::vector<Poly<K>> in;
    for (const auto& p : gens) in.push_back(p.reordered(blk));
    auto gb = groebner_basis(in, blk);
    std::vector<Poly<K>> out;
    for (const auto& p : gb.gens)
        if (!p.is_zero() && !p.lm().uses_mask(blk.mask())) out.push_back(p.reordered(MonomialOrder::grevlex()));
    return out;
}

/// Krull dimension of R/I for R a polynomial ring in the first `nvars`
/// variables: the maximal number of variables independent modulo the
/// initial ideal. dim R/(1) is reported as -1.
template <CoefficientField K>
int krull_dimension(const GroebnerBasis<K>& gb, int nvars = 3) {
    for (const auto& p : gb.gens)
        if (p.is_constant() && !p.is_zero()) return -1;
    std::vector<Monomial> leads;
    for (const auto& p : gb.gens)
        if (!p.is_zero()) leads.push_back(p.lm());
    int best = -1;
    for (unsigned s = 0; s < (1u << nvars); ++s) {
        bool independent = true;
        for (const auto& m : leads) {
            bool support_inside = true;
            for (int v = 0; v < kMaxVars && support_inside; ++v)
                if (m.depends_on(v) && (v >= nvars || !(s & (1u << v)))) support_inside = false;
            if (support_inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

template <CoefficientField K>
int krull_dimension(const std::vector<Poly<K>>& gens, int nvars = 3,
                    MonomialOrder ord = MonomialOrder::grevlex()) {
    return krull_dimension(groebner_basis(gens, ord), nvars);
}

/// Rabinowitsch test: g lies in the radical of I iff 1 lies in
/// I + (1 - t g) in the ring extended by one tag variable.
template <CoefficientField K>
bool radical_membership(const Poly<K>& g, const std::vector<Poly<K>>& gens) {
    if (g.is_zero()) return true;
    MonomialOrder blk = MonomialOrder::elimination(1);
    for (const auto& p : gens)
        for (const auto& t : p.terms())
            check_internal(!t.m.depends_on(kTagBase), "radical_membership: tag variable already in use");
    std::vector<Poly<K>> in;
    for (const auto& p : gens)
        if (!p.is_zero()) in.push_back(p.reordered(blk));
    K one = g.leading().c.one();
    Poly<K> t(blk, one, Monomial::variable(kTagBase));
    Poly<K> unit(blk, one, Monomial());
    in.push_back(unit - t * g.reordered(blk));
    return groebner_basis(in, blk).contains_one();
}

}  // namespace bourdeg
