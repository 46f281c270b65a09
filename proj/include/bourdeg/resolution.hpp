#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bourdeg/ideal_ops.hpp"

namespace bourdeg {

/// Chain of graded differentials diff[k] : F_{k+1} -> F_k resolving either
/// coker(diff[0]) (presentations) or, together with a separate generator
/// matrix, a submodule of a free module. target_shifts are the basis
/// degrees of F_0.
template <CoefficientField K>
struct FreeResolution {
    std::vector<int> target_shifts;
    std::vector<GradedMatrix<K>> diff;

    int length() const { return static_cast<int>(diff.size()); }
    int rank(int level) const {
        if (level == 0) return static_cast<int>(target_shifts.size());
        return level <= length() ? diff[level - 1].cols() : 0;
    }
    const std::vector<int>& shifts(int level) const {
        return level == 0 ? target_shifts : diff[level - 1].col_shifts();
    }

    /// d_k composed with d_{k+1} must vanish.
    bool is_complex() const {
        for (std::size_t k = 0; k + 1 < diff.size(); ++k)
            if (!diff[k].compose(diff[k + 1]).is_zero()) return false;
        return true;
    }
    bool is_minimal() const {
        for (const auto& m : diff)
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j)
                    if (!m.at(i, j).is_zero() && m.col_shifts()[j] == m.row_shifts()[i]) return false;
        return true;
    }
};

/// Graded Betti numbers beta_{level, internal degree} of a minimal chain.
struct BettiTable {
    std::map<std::pair<int, int>, long> entries;

    long total(int level) const {
        long n = 0;
        for (const auto& [key, v] : entries)
            if (key.first == level) n += v;
        return n;
    }
    int levels() const {
        int n = 0;
        for (const auto& [key, v] : entries) n = std::max(n, key.first + 1);
        return n;
    }
    bool operator==(const BettiTable&) const = default;
};

template <CoefficientField K>
BettiTable betti_table(const FreeResolution<K>& res) {
    check_internal(res.is_minimal(), "betti table requested for a non-minimal resolution");
    BettiTable t;
    for (int d : res.target_shifts) ++t.entries[{0, d}];
    for (int k = 0; k < res.length(); ++k)
        for (int d : res.diff[k].col_shifts()) ++t.entries[{k + 1, d}];
    return t;
}

namespace detail {

template <CoefficientField K>
struct MutChain {
    // level k matrix entries e[k][i][j]; rsh[0] are the target shifts
    std::vector<std::vector<std::vector<Poly<K>>>> e;
    std::vector<std::vector<int>> rsh, csh;

    static MutChain from(const std::vector<GradedMatrix<K>>& ms) {
        MutChain c;
        for (const auto& m : ms) {
            c.rsh.push_back(m.row_shifts());
            c.csh.push_back(m.col_shifts());
            std::vector<std::vector<Poly<K>>> rows(m.rows(), std::vector<Poly<K>>(m.cols()));
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
            c.e.push_back(std::move(rows));
        }
        return c;
    }
    std::vector<GradedMatrix<K>> to_matrices() const {
        std::vector<GradedMatrix<K>> out;
        for (std::size_t k = 0; k < e.size(); ++k) {
            std::vector<Poly<K>> flat;
            for (const auto& row : e[k])
                for (const auto& p : row) flat.push_back(p);
            out.emplace_back(rsh[k], csh[k], std::move(flat));
        }
        return out;
    }
    int rows(std::size_t k) const { return static_cast<int>(rsh[k].size()); }
    int cols(std::size_t k) const { return static_cast<int>(csh[k].size()); }

    void delete_row(std::size_t k, int i) {
        rsh[k].erase(rsh[k].begin() + i);
        e[k].erase(e[k].begin() + i);
    }
    void delete_col(std::size_t k, int j) {
        csh[k].erase(csh[k].begin() + j);
        for (auto& row : e[k]) row.erase(row.begin() + j);
    }
};

/// Cancel the unit entry at (i, j) of level k and delete the matching
/// row/column pair, updating the neighbouring differentials.
template <CoefficientField K>
void pivot(MutChain<K>& c, std::size_t k, int i, int j) {
    const Poly<K> pivot_poly = c.e[k][i][j];
    const K inv = pivot_poly.lc().one() / pivot_poly.lc();

    // column operations on level k: clear row i
    for (int j2 = 0; j2 < c.cols(k); ++j2) {
        if (j2 == j || c.e[k][i][j2].is_zero()) continue;
        Poly<K> lambda = c.e[k][i][j2].scaled(inv);
        for (int r = 0; r < c.rows(k); ++r) c.e[k][r][j2] = c.e[k][r][j2] - lambda * c.e[k][r][j];
        if (k + 1 < c.e.size())
            for (int s = 0; s < c.cols(k + 1); ++s)
                c.e[k + 1][j][s] = c.e[k + 1][j][s] + lambda * c.e[k + 1][j2][s];
    }
    // row operations on level k: clear column j
    for (int i2 = 0; i2 < c.rows(k); ++i2) {
        if (i2 == i || c.e[k][i2][j].is_zero()) continue;
        Poly<K> lambda = c.e[k][i2][j].scaled(inv);
        for (int s = 0; s < c.cols(k); ++s) c.e[k][i2][s] = c.e[k][i2][s] - lambda * c.e[k][i][s];
        if (k > 0)
            for (int r = 0; r < c.rows(k - 1); ++r)
                c.e[k - 1][r][i] = c.e[k - 1][r][i] + lambda * c.e[k - 1][r][i2];
    }
    if (k + 1 < c.e.size()) {
        for (int s = 0; s < c.cols(k + 1); ++s)
            check_internal(c.e[k + 1][j][s].is_zero(), "minimalize: surviving entry in deleted row");
        c.delete_row(k + 1, j);
    }
    if (k > 0) {
        for (int r = 0; r < c.rows(k - 1); ++r)
            check_internal(c.e[k - 1][r][i].is_zero(), "minimalize: surviving entry in deleted column");
        c.delete_col(k - 1, i);
    }
    c.delete_row(k, i);
    c.delete_col(k, j);
}

/// Remove all unit entries at levels >= first_level; deterministic pivot
/// order: level, then column, then row.
template <CoefficientField K>
void minimalize_chain(MutChain<K>& c, std::size_t first_level) {
    for (bool again = true; again;) {
        again = false;
        for (std::size_t k = first_level; k < c.e.size() && !again; ++k)
            for (int j = 0; j < c.cols(k) && !again; ++j)
                for (int i = 0; i < c.rows(k) && !again; ++i) {
                    const Poly<K>& p = c.e[k][i][j];
                    if (p.is_zero() || c.csh[k][j] != c.rsh[k][i]) continue;
                    check_internal(p.is_constant(), "graded entry of degree zero is not constant");
                    pivot(c, k, i, j);
                    again = true;
                }
    }
    while (c.e.size() > 1 && c.cols(c.e.size() - 1) == 0) {
        c.e.pop_back();
        c.rsh.pop_back();
        c.csh.pop_back();
    }
}

template <CoefficientField K>
std::vector<GradedMatrix<K>> kernel_chain(GradedMatrix<K> first, int length_cap, MonomialOrder ord) {
    std::vector<GradedMatrix<K>> chain{std::move(first)};
    for (int step = 1; step < length_cap; ++step) {
        auto ker = kernel_of_map(chain.back(), ord);
        if (ker.empty()) break;
        chain.push_back(GradedMatrix<K>::from_columns(ker));
    }
    if (static_cast<int>(chain.size()) == length_cap) {
        auto ker = kernel_of_map(chain.back(), ord);
        check_internal(ker.empty(), "free resolution exceeded the length cap");
    }
    return chain;
}

}  // namespace detail

/// Minimal graded free resolution of coker(presentation). Over k[x,y,z]
/// the length never exceeds 3 (Hilbert syzygy theorem); the cap is a
/// safety net.
template <CoefficientField K>
FreeResolution<K> free_resolution(const GradedMatrix<K>& presentation, int length_cap = 5,
                                  MonomialOrder ord = MonomialOrder::grevlex()) {
    presentation.validate();
    auto chain = detail::kernel_chain(presentation, length_cap, ord);
    auto mut = detail::MutChain<K>::from(chain);
    detail::minimalize_chain(mut, 0);
    FreeResolution<K> res;
    res.target_shifts = mut.rsh[0];
    res.diff = mut.to_matrices();
    check_internal(res.is_complex(), "resolution is not a complex");
    return res;
}

/// Remove unit entries from an exact chain without recomputing kernels.
template <CoefficientField K>
FreeResolution<K> minimalize(const FreeResolution<K>& res) {
    auto mut = detail::MutChain<K>::from(res.diff);
    detail::minimalize_chain(mut, 0);
    FreeResolution<K> out;
    out.target_shifts = mut.rsh.empty() ? res.target_shifts : mut.rsh[0];
    out.diff = mut.to_matrices();
    check_internal(out.is_complex(), "minimalized chain is not a complex");
    return out;
}

/// Minimal generators and minimal free resolution of the submodule of a
/// free module spanned by the columns of `generators` (the ambient rows
/// are fixed, so level 0 is exempt from pivoting).
template <CoefficientField K>
struct SubmoduleResolution {
    GradedMatrix<K> generators;   // columns = minimal generators in the ambient module
    FreeResolution<K> res;        // resolution of the submodule itself
};

template <CoefficientField K>
SubmoduleResolution<K> resolve_submodule(const GradedMatrix<K>& generators, int length_cap = 5,
                                         MonomialOrder ord = MonomialOrder::grevlex()) {
    generators.validate();
    auto chain = detail::kernel_chain(generators, length_cap, ord);
    auto mut = detail::MutChain<K>::from(chain);
    detail::minimalize_chain(mut, 1);
    auto ms = mut.to_matrices();
    SubmoduleResolution<K> out{ms[0], {}};
    out.res.target_shifts = ms[0].col_shifts();
    for (std::size_t k = 1; k < ms.size(); ++k) out.res.diff.push_back(ms[k]);
    check_internal(out.res.is_complex(), "submodule resolution is not a complex");
    return out;
}

}  // namespace bourdeg
