#pragma once

#include <optional>
#include <vector>

#include "bourdeg/mpoly.hpp"

namespace bourdeg {

/// Homogeneous vector in a graded free module: one polynomial per
/// component, plus the ambient shifts (degrees of the basis elements).
template <CoefficientField K>
struct ModVec {
    std::vector<Poly<K>> comp;
    std::vector<int> shifts;

    bool is_zero() const {
        for (const auto& p : comp)
            if (!p.is_zero()) return false;
        return true;
    }
    /// Common degree (component degree + shift) of a homogeneous vector.
    std::optional<int> degree() const {
        std::optional<int> d;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            if (comp[i].is_zero()) continue;
            auto h = comp[i].homogeneous_degree().degree();
            if (!h) return std::nullopt;
            int di = *h + shifts[i];
            if (d && *d != di) return std::nullopt;
            d = di;
        }
        return d;
    }
};

/// Matrix between graded free modules. Entry (i,j) is zero or homogeneous
/// of degree col_shift[j] - row_shift[i].
template <CoefficientField K>
class GradedMatrix {
  public:
    GradedMatrix() = default;
    GradedMatrix(std::vector<int> row_shifts, std::vector<int> col_shifts,
                 std::vector<Poly<K>> entries, bool validate_grading = true)
        : rsh_(std::move(row_shifts)), csh_(std::move(col_shifts)), e_(std::move(entries)) {
        check_internal(e_.size() == rsh_.size() * csh_.size(), "graded matrix: shape mismatch");
        if (validate_grading) validate();
    }

    static GradedMatrix from_columns(const std::vector<ModVec<K>>& cols) {
        check_internal(!cols.empty(), "from_columns: need at least one column");
        std::vector<int> rsh = cols[0].shifts;
        std::vector<int> csh;
        std::vector<Poly<K>> entries(rsh.size() * cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            auto d = cols[j].degree();
            check_internal(d.has_value(), "from_columns: inhomogeneous column");
            csh.push_back(*d);
        }
        for (std::size_t i = 0; i < rsh.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) entries[i * cols.size() + j] = cols[j].comp[i];
        return GradedMatrix(std::move(rsh), std::move(csh), std::move(entries));
    }

    int rows() const { return static_cast<int>(rsh_.size()); }
    int cols() const { return static_cast<int>(csh_.size()); }
    const std::vector<int>& row_shifts() const { return rsh_; }
    const std::vector<int>& col_shifts() const { return csh_; }
    const Poly<K>& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * csh_.size() + j]; }
    Poly<K>& at(int i, int j) { return e_[static_cast<std::size_t>(i) * csh_.size() + j]; }

    void validate() const {
        for (int i = 0; i < rows(); ++i)
            for (int j = 0; j < cols(); ++j) {
                const auto& p = at(i, j);
                if (p.is_zero()) continue;
                auto h = p.homogeneous_degree().degree();
                check_internal(h.has_value() && *h == csh_[j] - rsh_[i],
                               "graded matrix: inconsistent grading at entry (" + std::to_string(i) +
                                   "," + std::to_string(j) + ")");
            }
    }

    ModVec<K> column(int j) const {
        ModVec<K> v;
        v.shifts = rsh_;
        for (int i = 0; i < rows(); ++i) v.comp.push_back(at(i, j));
        return v;
    }

    ModVec<K> apply(const ModVec<K>& v) const {
        check_internal(static_cast<int>(v.comp.size()) == cols(), "matrix apply: size mismatch");
        ModVec<K> out;
        out.shifts = rsh_;
        for (int i = 0; i < rows(); ++i) {
            Poly<K> s;
            for (int j = 0; j < cols(); ++j) s = s + at(i, j) * v.comp[j];
            out.comp.push_back(std::move(s));
        }
        return out;
    }

    GradedMatrix compose(const GradedMatrix& right) const {
        check_internal(cols() == right.rows() && csh_ == right.rsh_,
                       "matrix composition: shift mismatch");
        std::vector<Poly<K>> entries(rsh_.size() * right.csh_.size());
        for (int i = 0; i < rows(); ++i)
            for (int j = 0; j < right.cols(); ++j) {
                Poly<K> s;
                bool first = true;
                for (int k = 0; k < cols(); ++k) {
                    Poly<K> prod = at(i, k) * right.at(k, j);
                    s = first ? std::move(prod) : s + prod;
                    first = false;
                }
                entries[static_cast<std::size_t>(i) * right.csh_.size() + j] = std::move(s);
            }
        return GradedMatrix(rsh_, right.csh_, std::move(entries), false);
    }

    bool is_zero() const {
        for (const auto& p : e_)
            if (!p.is_zero()) return false;
        return true;
    }

    /// Uniform shift: every row and column shift decreased by s, entries
    /// unchanged (this is tensoring with R(s)).
    GradedMatrix twisted(int s) const {
        GradedMatrix r = *this;
        for (auto& v : r.rsh_) v -= s;
        for (auto& v : r.csh_) v -= s;
        return r;
    }

  private:
    std::vector<int> rsh_, csh_;
    std::vector<Poly<K>> e_;
};

}  // namespace bourdeg
