#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "bourdeg/errors.hpp"

namespace bourdeg {

// Slots 0..2 are the curve variables x, y, z; slots 3.. hold tag variables
// for elimination tricks.
inline constexpr int kMaxVars = 8;
inline constexpr int kTagBase = 3;

inline std::string variable_name(int i) {
    static const char* xyz[] = {"x", "y", "z"};
    if (i < kTagBase) return xyz[i];
    return "t" + std::to_string(i - kTagBase);
}

class Monomial {
  public:
    Monomial() = default;
    static Monomial variable(int i, int k = 1) {
        Monomial m;
        m.e_[i] = static_cast<std::uint16_t>(k);
        m.deg_ = static_cast<std::uint32_t>(k);
        return m;
    }

    int operator[](int i) const { return e_[i]; }
    int degree() const { return static_cast<int>(deg_); }
    int degree_in(std::uint8_t mask) const {
        int d = 0;
        for (int i = 0; i < kMaxVars; ++i)
            if (mask & (1u << i)) d += e_[i];
        return d;
    }
    bool is_one() const { return deg_ == 0; }
    bool depends_on(int i) const { return e_[i] != 0; }
    bool uses_mask(std::uint8_t mask) const {
        for (int i = 0; i < kMaxVars; ++i)
            if ((mask & (1u << i)) && e_[i]) return true;
        return false;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] + o.e_[i]);
        r.deg_ = deg_ + o.deg_;
        return r;
    }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    /// Requires divisibility: o / *this.
    Monomial quotient_of(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::uint16_t>(o.e_[i] - e_[i]);
        r.deg_ = o.deg_ - deg_;
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        std::uint32_t d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
            d += r.e_[i];
        }
        r.deg_ = d;
        return r;
    }
    static bool coprime(const Monomial& a, const Monomial& b) {
        for (int i = 0; i < kMaxVars; ++i)
            if (a.e_[i] && b.e_[i]) return false;
        return true;
    }
    Monomial with_exponent(int i, int k) const {
        Monomial r = *this;
        r.deg_ += static_cast<std::uint32_t>(k) - r.e_[i];
        r.e_[i] = static_cast<std::uint16_t>(k);
        return r;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }

    std::string str() const {
        if (is_one()) return "1";
        std::string s;
        for (int i = 0; i < kMaxVars; ++i) {
            if (!e_[i]) continue;
            if (!s.empty()) s += "*";
            s += variable_name(i);
            if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
        }
        return s;
    }

  private:
    std::array<std::uint16_t, kMaxVars> e_{};
    std::uint32_t deg_ = 0;
};

enum class OrderKind : std::uint8_t { Grevlex, Lex, Block };

/// Total order on monomials. Grevlex and lex use precedence x > y > z > t0 > ...;
/// a block order compares the masked variables first (graded reverse lex within
/// the mask), which makes it an elimination order for the mask.
class MonomialOrder {
  public:
    MonomialOrder() = default;
    static MonomialOrder grevlex() { return MonomialOrder{OrderKind::Grevlex, 0}; }
    static MonomialOrder lex() { return MonomialOrder{OrderKind::Lex, 0}; }
    static MonomialOrder block(std::uint8_t elim_mask) { return MonomialOrder{OrderKind::Block, elim_mask}; }
    /// Tag variables t0..t_{count-1} first, grevlex inside.
    static MonomialOrder elimination(int tag_count) {
        std::uint8_t m = 0;
        for (int i = 0; i < tag_count; ++i) m |= static_cast<std::uint8_t>(1u << (kTagBase + i));
        return block(m);
    }

    OrderKind kind() const { return kind_; }
    std::uint8_t mask() const { return mask_; }

    /// +1 if a > b, -1 if a < b.
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case OrderKind::Grevlex:
                return cmp_grevlex(a, b, 0xff);
            case OrderKind::Lex: {
                for (int i = 0; i < kMaxVars; ++i)
                    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
                return 0;
            }
            case OrderKind::Block: {
                if (int c = cmp_grevlex(a, b, mask_)) return c;
                return cmp_grevlex(a, b, static_cast<std::uint8_t>(~mask_));
            }
        }
        return 0;
    }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    bool operator==(const MonomialOrder&) const = default;

  private:
    MonomialOrder(OrderKind k, std::uint8_t m) : kind_(k), mask_(m) {}

    static int cmp_grevlex(const Monomial& a, const Monomial& b, std::uint8_t mask) {
        int da = a.degree_in(mask), db = b.degree_in(mask);
        if (da != db) return da > db ? 1 : -1;
        for (int i = kMaxVars - 1; i >= 0; --i) {
            if (!(mask & (1u << i))) continue;
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    }

    OrderKind kind_ = OrderKind::Grevlex;
    std::uint8_t mask_ = 0;
};

}  // namespace bourdeg
