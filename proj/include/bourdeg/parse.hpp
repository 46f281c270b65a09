#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "bourdeg/poly.hpp"

namespace bourdeg {

namespace detail {

// Grammar (offsets in errors are 0-based byte positions):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := number | 'x' | 'y' | 'z' | '(' expr ')'
//   number := nat ('/' nat)?
template <CoefficientField K>
class PolyParser {
  public:
    PolyParser(const std::string& text, const K& proto, MonomialOrder ord)
        : s_(text), proto_(proto), ord_(ord) {}

    Poly<K> run() {
        skip_ws();
        Poly<K> p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected character", pos_);
        return p;
    }

  private:
    static constexpr int kMaxExponent = 4096;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek_is(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool eat(char c) {
        if (peek_is(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly<K> expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly<K> acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('-'))
                acc = acc - term();
            else if (eat('+'))
                acc = acc + term();
            else
                break;
        }
        return acc;
    }

    Poly<K> term() {
        Poly<K> acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Poly<K> factor() {
        Poly<K> b = base();
        if (eat('^')) {
            int k = nat("exponent");
            Poly<K> r(ord_, proto_.one(), Monomial());
            if (b.size() == 1) {
                // fast path: power of a single term
                if (k > 0) {
                    Monomial m;
                    K c = proto_.one();
                    for (int i = 0; i < k; ++i) m = m * b.lm();
                    for (int i = 0; i < k; ++i) c = c * b.lc();
                    return Poly<K>(ord_, c, m);
                }
                return r;
            }
            for (int i = 0; i < k; ++i) r = r * b;
            return r;
        }
        return b;
    }

    Poly<K> base() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly<K> p = expr();
            skip_ws();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            ++pos_;
            return Poly<K>(ord_, proto_.one(), Monomial::variable(c == 'x' ? 0 : c == 'y' ? 1 : 2));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            std::string den = "1";
            if (pos_ < s_.size() && s_[pos_] == '/') {
                std::size_t slash = pos_;
                ++pos_;
                skip_ws();
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    throw ParseError("expected integer denominator", pos_);
                den = digits();
                if (all_zero(den)) throw ParseError("zero denominator", slash + 1);
            }
            return Poly<K>(ord_, literal(num, den), Monomial());
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }
    static bool all_zero(const std::string& d) {
        for (char c : d)
            if (c != '0') return false;
        return true;
    }

    int nat(const char* what) {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError(std::string("expected nonnegative integer ") + what, pos_);
        std::size_t start = pos_;
        std::string d = digits();
        if (d.size() > 4) throw ParseError("exponent overflow", start);
        int v = std::stoi(d);
        if (v > kMaxExponent) throw ParseError("exponent overflow", start);
        return v;
    }

    K literal(const std::string& num, const std::string& den);

    const std::string& s_;
    std::size_t pos_ = 0;
    K proto_;
    MonomialOrder ord_;
};

template <>
inline Rational PolyParser<Rational>::literal(const std::string& num, const std::string& den) {
    return Rational::from_strings(num, den);
}

template <>
inline GFp PolyParser<GFp>::literal(const std::string& num, const std::string& den) {
    auto p = proto_.characteristic();
    mpz_class n(num), d(den);
    std::uint64_t nv = mpz_fdiv_ui(n.get_mpz_t(), p);
    std::uint64_t dv = mpz_fdiv_ui(d.get_mpz_t(), p);
    if (dv == 0) throw BadFieldError("denominator vanishes modulo " + std::to_string(p));
    return GFp(nv, p) / GFp(dv, p);
}

}  // namespace detail

template <CoefficientField K>
Poly<K> parse_poly(const std::string& text, const K& proto,
                   MonomialOrder ord = MonomialOrder::grevlex()) {
    return detail::PolyParser<K>(text, proto, ord).run();
}

inline Poly<Rational> parse_poly_q(const std::string& text,
                                   MonomialOrder ord = MonomialOrder::grevlex()) {
    return parse_poly<Rational>(text, Rational(), ord);
}

}  // namespace bourdeg
