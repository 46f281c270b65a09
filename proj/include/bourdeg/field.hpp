#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

#include "bourdeg/errors.hpp"

namespace bourdeg {

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
  public:
    Rational() : v_(0) {}
    explicit Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw BadFieldError("zero denominator");
        v_.canonicalize();
    }
    static Rational from_strings(const std::string& num, const std::string& den) {
        mpz_class n(num), d(den);
        if (d == 0) throw BadFieldError("zero denominator");
        Rational r;
        r.v_ = mpq_class(n) / mpq_class(d);
        return r;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }
    Rational from_int(long n) const { return Rational(n); }
    unsigned long characteristic() const { return 0; }

    Rational operator+(const Rational& o) const { return wrap(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return wrap(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return wrap(v_ * o.v_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw Error("division by zero");
        return wrap(v_ / o.v_);
    }
    Rational operator-() const { return wrap(-v_); }
    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    bool operator==(const Rational& o) const { return v_ == o.v_; }
    int cmp(const Rational& o) const { return ::cmp(v_, o.v_); }

    std::string str() const { return v_.get_str(); }
    const mpq_class& raw() const { return v_; }
    static Rational wrap(mpq_class q) {
        Rational r;
        r.v_ = std::move(q);
        return r;
    }

  private:
    mpq_class v_;
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace detail

/// Element of a prime field F_p. A default-constructed value is an inert
/// zero with no modulus attached; it adopts the modulus of whatever it is
/// combined with.
class GFp {
  public:
    GFp() = default;
    GFp(std::uint64_t value, std::uint64_t p) : p_(p) {
        if (p == 0) throw BadFieldError("prime field needs a modulus");
        v_ = value % p;
    }
    static GFp from_int_mod(long n, std::uint64_t p) {
        long r = n % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return GFp(static_cast<std::uint64_t>(r), p);
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    GFp zero() const { return p_ == 0 ? GFp() : GFp(0, p_); }
    GFp one() const {
        check_internal(p_ != 0, "one() on detached prime-field zero");
        return GFp(1, p_);
    }
    GFp from_int(long n) const {
        check_internal(p_ != 0, "from_int() on detached prime-field zero");
        return from_int_mod(n, p_);
    }
    unsigned long characteristic() const { return p_; }
    std::uint64_t value() const { return v_; }

    GFp operator+(const GFp& o) const {
        std::uint64_t p = join(o);
        if (p == 0) return GFp();
        std::uint64_t s = v_ + o.v_;
        if (s >= p) s -= p;
        return GFp(s, p);
    }
    GFp operator-(const GFp& o) const {
        std::uint64_t p = join(o);
        if (p == 0) return GFp();
        std::uint64_t s = v_ + p - o.v_;
        if (s >= p) s -= p;
        return GFp(s, p);
    }
    GFp operator*(const GFp& o) const {
        std::uint64_t p = join(o);
        if (p == 0 || v_ == 0 || o.v_ == 0) return p ? GFp(0, p) : GFp();
        return GFp(detail::mulmod(v_, o.v_, p), p);
    }
    GFp operator/(const GFp& o) const {
        if (o.is_zero()) throw Error("division by zero");
        std::uint64_t p = join(o);
        return *this * GFp(detail::powmod(o.v_, p - 2, p), p);
    }
    GFp operator-() const { return p_ == 0 ? GFp() : GFp(v_ == 0 ? 0 : p_ - v_, p_); }
    GFp& operator+=(const GFp& o) {
        *this = *this + o;
        return *this;
    }
    bool operator==(const GFp& o) const { return v_ == o.v_ && (v_ == 0 || p_ == o.p_); }
    int cmp(const GFp& o) const { return v_ < o.v_ ? -1 : (v_ > o.v_ ? 1 : 0); }

    std::string str() const { return std::to_string(v_); }

  private:
    std::uint64_t join(const GFp& o) const {
        if (p_ != 0 && o.p_ != 0) {
            check_internal(p_ == o.p_, "mixed prime-field moduli");
            return p_;
        }
        return p_ ? p_ : o.p_;
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

template <class K>
concept CoefficientField = std::regular<K> && requires(const K a, const K b) {
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a* b } -> std::same_as<K>;
    { a / b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a.zero() } -> std::same_as<K>;
    { a.one() } -> std::same_as<K>;
    { a.from_int(long{}) } -> std::same_as<K>;
    { a.cmp(b) } -> std::convertible_to<int>;
    { a.str() } -> std::convertible_to<std::string>;
    { a.characteristic() } -> std::convertible_to<unsigned long>;
};

/// Which coefficient field a computation runs over.
struct FieldSpec {
    bool rational = true;
    std::uint64_t p = 0;

    static FieldSpec q() { return {}; }
    static FieldSpec fp(std::uint64_t p) {
        if (!detail::is_prime_u64(p)) throw BadFieldError("modulus " + std::to_string(p) + " is not prime");
        return {false, p};
    }
    /// Accepts "q" or "fp:<p>".
    static FieldSpec parse(const std::string& s) {
        if (s == "q" || s == "Q") return q();
        if (s.rfind("fp:", 0) == 0) {
            try {
                return fp(std::stoull(s.substr(3)));
            } catch (const std::invalid_argument&) {
            } catch (const std::out_of_range&) {
            }
        }
        throw BadFieldError("bad field spec '" + s + "' (expected q or fp:<p>)");
    }
    std::string str() const { return rational ? "q" : "fp:" + std::to_string(p); }
    bool operator==(const FieldSpec&) const = default;
};

}  // namespace bourdeg
