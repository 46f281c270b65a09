#pragma once

#include <cstdint>
#include <set>
#include <unordered_set>
#include <vector>

#include "bourdeg/mpoly.hpp"

namespace bourdeg {

namespace detail {

/// Fully reduce v modulo basis: no surviving term is divisible by a basis
/// lead in the same component.
template <CoefficientField K>
MPoly<K> reduce_full(const ModuleOrder& o, MPoly<K> v, const std::vector<MPoly<K>>& basis) {
    std::size_t i = 0;
    while (i < v.terms().size()) {
        const MTerm<K>& t = v.terms()[i];
        const MPoly<K>* red = nullptr;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const MTerm<K>& l = g.lead();
            if (l.comp == t.comp && l.m.divides(t.m)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            ++i;
            continue;
        }
        const MTerm<K>& l = red->lead();
        v = v.axpy(o, t.c / l.c, l.m.quotient_of(t.m), *red);
        // terms before position i are untouched by the subtraction
    }
    return v;
}

template <CoefficientField K>
struct SPair {
    int deg;  // shifted degree of the lcm
    Monomial lcm;
    int i, j;
};

inline std::uint64_t pair_key(int i, int j) {
    if (i > j) std::swap(i, j);
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
}

}  // namespace detail

/// Buchberger with the normal selection strategy and the product/chain
/// criteria; returns the reduced basis in canonical scaling, sorted by
/// ascending lead term.
template <CoefficientField K>
std::vector<MPoly<K>> module_groebner(const ModuleOrder& o, std::vector<MPoly<K>> gens) {
    std::vector<MPoly<K>> g;
    for (auto& v : gens)
        if (!v.is_zero()) g.push_back(make_canonical(v));

    const bool rank_one = o.rank() - o.elim == 1 && o.elim == 0;

    auto pair_cmp = [&o](const detail::SPair<K>& a, const detail::SPair<K>& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (int c = o.mono.cmp(a.lcm, b.lcm)) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<detail::SPair<K>, decltype(pair_cmp)> queue(pair_cmp);
    std::unordered_set<std::uint64_t> considered;

    auto push_pairs = [&](std::size_t jnew) {
        const auto& lj = g[jnew].lead();
        for (std::size_t i = 0; i < jnew; ++i) {
            if (g[i].is_zero()) continue;
            const auto& li = g[i].lead();
            if (li.comp != lj.comp) continue;
            Monomial l = Monomial::lcm(li.m, lj.m);
            queue.insert({l.degree() + o.shifts[li.comp], l, static_cast<int>(i), static_cast<int>(jnew)});
        }
    };
    for (std::size_t j = 0; j < g.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        detail::SPair<K> p = *queue.begin();
        queue.erase(queue.begin());
        considered.insert(detail::pair_key(p.i, p.j));
        const auto& li = g[p.i].lead();
        const auto& lj = g[p.j].lead();

        if (rank_one && Monomial::coprime(li.m, lj.m)) continue;  // product criterion
        // chain criterion: a third lead divides the lcm and both linking
        // pairs were already considered
        bool skip = false;
        for (std::size_t k = 0; k < g.size() && !skip; ++k) {
            if (k == static_cast<std::size_t>(p.i) || k == static_cast<std::size_t>(p.j) || g[k].is_zero())
                continue;
            const auto& lk = g[k].lead();
            if (lk.comp != li.comp || !lk.m.divides(p.lcm)) continue;
            if (considered.count(detail::pair_key(p.i, static_cast<int>(k))) &&
                considered.count(detail::pair_key(p.j, static_cast<int>(k))))
                skip = true;
        }
        if (skip) continue;

        // fraction-free S-vector
        MPoly<K> s = g[p.i]
                         .scaled(lj.c, li.m.quotient_of(p.lcm))
                         .axpy(o, li.c, lj.m.quotient_of(p.lcm), g[p.j]);
        s = detail::reduce_full(o, std::move(s), g);
        if (s.is_zero()) continue;
        g.push_back(make_canonical(s));
        push_pairs(g.size() - 1);
    }

    // interreduce to the unique reduced basis (up to canonical scaling)
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i].is_zero()) continue;
            MPoly<K> self = std::move(g[i]);
            g[i] = MPoly<K>();
            MPoly<K> r = detail::reduce_full(o, self, g);
            if (!r.is_zero()) r = make_canonical(r);
            if (!(r == self)) changed = true;
            g[i] = std::move(r);
        }
    }
    std::vector<MPoly<K>> out;
    for (auto& v : g)
        if (!v.is_zero()) out.push_back(std::move(v));
    std::sort(out.begin(), out.end(), [&o](const MPoly<K>& a, const MPoly<K>& b) {
        return o.cmp(a.lead().comp, a.lead().m, b.lead().comp, b.lead().m) < 0;
    });
    return out;
}

/// Reduced Groebner basis of an ideal, as polynomials.
template <CoefficientField K>
struct GroebnerBasis {
    std::vector<Poly<K>> gens;
    MonomialOrder ord;

    bool contains_one() const {
        return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero();
    }
    Poly<K> normal_form(const Poly<K>& p) const {
        check_internal(p.order() == ord, "normal form: order mismatch");
        ModuleOrder o{ord, {0}, 0};
        std::vector<MPoly<K>> b;
        b.reserve(gens.size());
        for (const auto& q : gens) b.push_back(MPoly<K>::wrap_poly(q));
        return detail::reduce_full(o, MPoly<K>::wrap_poly(p), b).component(0, ord);
    }
    bool contains(const Poly<K>& p) const { return normal_form(p).is_zero(); }

    /// Re-checks the defining property: every S-pair reduces to zero.
    bool verify_spairs() const {
        ModuleOrder o{ord, {0}, 0};
        std::vector<MPoly<K>> b;
        for (const auto& q : gens) b.push_back(MPoly<K>::wrap_poly(q));
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                Monomial l = Monomial::lcm(b[i].lead().m, b[j].lead().m);
                MPoly<K> s = b[i]
                                 .scaled(b[j].lead().c, b[i].lead().m.quotient_of(l))
                                 .axpy(o, b[i].lead().c, b[j].lead().m.quotient_of(l), b[j]);
                if (!detail::reduce_full(o, std::move(s), b).is_zero()) return false;
            }
        return true;
    }
};

/// Reduced Groebner basis of the ideal generated by `gens` under `ord`.
/// Membership of every input generator is re-verified by normal form.
template <CoefficientField K>
GroebnerBasis<K> groebner_basis(const std::vector<Poly<K>>& gens, MonomialOrder ord) {
    ModuleOrder o{ord, {0}, 0};
    std::vector<MPoly<K>> in;
    in.reserve(gens.size());
    for (const auto& p : gens) in.push_back(MPoly<K>::wrap_poly(p.reordered(ord)));
    auto gb = module_groebner(o, std::move(in));
    GroebnerBasis<K> out;
    out.ord = ord;
    for (auto& v : gb) out.gens.push_back(v.component(0, ord));
    for (const auto& p : gens)
        check_internal(out.contains(p.reordered(ord)), "groebner basis lost an input generator");
    return out;
}

template <CoefficientField K>
Poly<K> normal_form(const Poly<K>& p, const GroebnerBasis<K>& basis) {
    return basis.normal_form(p);
}

}  // namespace bourdeg
