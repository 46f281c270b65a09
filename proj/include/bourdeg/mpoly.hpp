#pragma once

#include <vector>

#include "bourdeg/poly.hpp"

namespace bourdeg {

template <CoefficientField K>
struct MTerm {
    int comp;
    Monomial m;
    K c;
};

/// Order on free-module terms (comp, monomial). Components below `elim`
/// dominate everything else, which turns kernel computations into an
/// elimination problem. Within a block the comparison is
/// term-over-position graded by the component shifts (Schreyer style).
struct ModuleOrder {
    MonomialOrder mono;
    std::vector<int> shifts;
    int elim = 0;

    int rank() const { return static_cast<int>(shifts.size()); }

    int cmp(int ci, const Monomial& mi, int cj, const Monomial& mj) const {
        bool bi = ci < elim, bj = cj < elim;
        if (bi != bj) return bi ? 1 : -1;
        if (mono.kind() == OrderKind::Grevlex) {
            // shift-graded refinement; only sound on top of a graded order
            int di = mi.degree() + shifts[ci], dj = mj.degree() + shifts[cj];
            if (di != dj) return di > dj ? 1 : -1;
        }
        if (int c = mono.cmp(mi, mj)) return c;
        if (ci != cj) return ci < cj ? 1 : -1;
        return 0;
    }
};

/// Element of a free module, terms strictly descending under a ModuleOrder
/// supplied by the surrounding computation.
template <CoefficientField K>
class MPoly {
  public:
    MPoly() = default;

    static MPoly from_terms(const ModuleOrder& o, std::vector<MTerm<K>> terms) {
        std::sort(terms.begin(), terms.end(), [&o](const MTerm<K>& a, const MTerm<K>& b) {
            return o.cmp(a.comp, a.m, b.comp, b.m) > 0;
        });
        MPoly v;
        for (auto& t : terms) {
            if (t.c.is_zero()) continue;
            if (!v.t_.empty() && v.t_.back().comp == t.comp && v.t_.back().m == t.m)
                v.t_.back().c = v.t_.back().c + t.c;
            else
                v.t_.push_back(std::move(t));
            if (v.t_.back().c.is_zero()) v.t_.pop_back();
        }
        return v;
    }

    const std::vector<MTerm<K>>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    const MTerm<K>& lead() const { return t_.front(); }

    /// Degree of a homogeneous vector w.r.t. the order shifts (-1 if zero).
    int degree(const ModuleOrder& o) const {
        return t_.empty() ? -1 : t_[0].m.degree() + o.shifts[t_[0].comp];
    }
    bool is_homogeneous(const ModuleOrder& o) const {
        if (t_.empty()) return true;
        int d = degree(o);
        for (const auto& t : t_)
            if (t.m.degree() + o.shifts[t.comp] != d) return false;
        return true;
    }

    MPoly scaled(const K& c, const Monomial& m) const {
        MPoly r;
        if (c.is_zero()) return r;
        r.t_.reserve(t_.size());
        for (const auto& t : t_) r.t_.push_back({t.comp, t.m * m, t.c * c});
        return r;
    }

    /// this - c * x^m * g, orders preserved (merge).
    MPoly axpy(const ModuleOrder& o, const K& c, const Monomial& m, const MPoly& g) const {
        MPoly r;
        r.t_.reserve(t_.size() + g.t_.size());
        std::size_t i = 0, j = 0;
        while (i < t_.size() && j < g.t_.size()) {
            Monomial gm = g.t_[j].m * m;
            int cc = o.cmp(t_[i].comp, t_[i].m, g.t_[j].comp, gm);
            if (cc > 0)
                r.t_.push_back(t_[i++]);
            else if (cc < 0) {
                K v = -(c * g.t_[j].c);
                if (!v.is_zero()) r.t_.push_back({g.t_[j].comp, gm, std::move(v)});
                ++j;
            } else {
                K v = t_[i].c - c * g.t_[j].c;
                if (!v.is_zero()) r.t_.push_back({t_[i].comp, t_[i].m, std::move(v)});
                ++i, ++j;
            }
        }
        for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
        for (; j < g.t_.size(); ++j) {
            K v = -(c * g.t_[j].c);
            if (!v.is_zero()) r.t_.push_back({g.t_[j].comp, g.t_[j].m * m, std::move(v)});
        }
        return r;
    }

    bool operator==(const MPoly& o) const {
        if (t_.size() != o.t_.size()) return false;
        for (std::size_t i = 0; i < t_.size(); ++i)
            if (t_[i].comp != o.t_[i].comp || !(t_[i].m == o.t_[i].m) || !(t_[i].c == o.t_[i].c))
                return false;
        return true;
    }

    /// Restrict to components [from, to) and renumber them starting at 0.
    MPoly slice(int from, int to) const {
        MPoly r;
        for (const auto& t : t_)
            if (t.comp >= from && t.comp < to) r.t_.push_back({t.comp - from, t.m, t.c});
        return r;
    }

    static MPoly wrap_poly(const Poly<K>& p, int comp = 0) {
        MPoly r;
        r.t_.reserve(p.size());
        for (const auto& t : p.terms()) r.t_.push_back({comp, t.m, t.c});
        return r;
    }
    Poly<K> component(int comp, MonomialOrder mono) const {
        std::vector<Term<K>> ts;
        for (const auto& t : t_)
            if (t.comp == comp) ts.push_back({t.m, t.c});
        return Poly<K>::from_terms(mono, std::move(ts));
    }

  private:
    std::vector<MTerm<K>> t_;
};

template <CoefficientField K>
MPoly<K> make_canonical(const MPoly<K>& v) {
    if (v.is_zero()) return v;
    std::vector<K> cs;
    cs.reserve(v.terms().size());
    for (const auto& t : v.terms()) cs.push_back(t.c);
    return v.scaled(canonical_scale(cs), Monomial());
}

}  // namespace bourdeg
