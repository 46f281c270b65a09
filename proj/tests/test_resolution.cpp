#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "bourdeg/hilbert.hpp"
#include "bourdeg/parse.hpp"
#include "bourdeg/resolution.hpp"

using namespace bourdeg;

namespace {

Poly<Rational> q(const std::string& s) { return parse_poly_q(s); }

std::vector<Poly<Rational>> qs(std::initializer_list<const char*> ss) {
    std::vector<Poly<Rational>> v;
    for (auto* s : ss) v.push_back(q(s));
    return v;
}

std::vector<Poly<Rational>> gradient(const Poly<Rational>& f) {
    return {f.derivative(0), f.derivative(1), f.derivative(2)};
}

std::multiset<int> shifts_at(const FreeResolution<Rational>& res, int level) {
    auto& v = res.shifts(level);
    return {v.begin(), v.end()};
}

/// dim of the degree-n piece of the ideal spanned by `gens`, via Macaulay
/// ranks; `min_mult_degree` restricts to multiples by monomials of at
/// least that degree (1 gives the piece of m*I).
long ideal_piece_rank(const std::vector<Poly<Rational>>& gens, int n, int min_mult_degree) {
    auto cols = monomials_of_degree(n);
    std::map<std::string, std::size_t> col_of;
    for (std::size_t j = 0; j < cols.size(); ++j) col_of[cols[j].str()] = j;
    std::vector<std::vector<Rational>> rows;
    for (const auto& g : gens) {
        auto gd = g.homogeneous_degree().degree();
        REQUIRE(gd.has_value());
        int md = n - *gd;
        if (md < min_mult_degree) continue;
        for (const auto& m : monomials_of_degree(md)) {
            std::vector<Rational> row(cols.size());
            for (const auto& t : g.terms()) row[col_of.at((t.m * m).str())] = t.c;
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) return 0;
    DenseMatrix<Rational> mat(rows.size(), cols.size(), Rational());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) mat.at(i, j) = rows[i][j];
    return static_cast<long>(mat.rref());
}

/// Minimal generator degrees of an ideal, computed with dense linear
/// algebra only: beta_j = dim I_j - dim (m I)_j.
std::multiset<int> minimal_generator_degrees_oracle(const std::vector<Poly<Rational>>& gens,
                                                    int max_deg) {
    std::multiset<int> out;
    for (int j = 0; j <= max_deg; ++j) {
        long all = ideal_piece_rank(gens, j, 0);
        long trimmed = ideal_piece_rank(gens, j, 1);
        for (long k = 0; k < all - trimmed; ++k) out.insert(j);
    }
    return out;
}

}  // namespace

TEST_CASE("Koszul complex of the irrelevant ideal") {
    auto res = free_resolution(ideal_presentation(qs({"x", "y", "z"})));
    REQUIRE(res.length() == 3);
    CHECK(res.rank(0) == 1);
    CHECK(res.rank(1) == 3);
    CHECK(res.rank(2) == 3);
    CHECK(res.rank(3) == 1);
    CHECK(res.is_complex());
    CHECK(res.is_minimal());
    auto b = betti_table(res);
    CHECK(b.entries == std::map<std::pair<int, int>, long>{
                           {{0, 0}, 1}, {{1, 1}, 3}, {{2, 2}, 3}, {{3, 3}, 1}});
    CHECK(hilbert_numerator(res) ==
          ZPoly::one() - ZPoly::monomial(1, 3) + ZPoly::monomial(2, 3) - ZPoly::monomial(3, 1));

    // alternating rank sum vanishes for a module of rank 0
    CHECK(res.rank(0) - res.rank(1) + res.rank(2) - res.rank(3) == 0);

    // a minimal complex is a fixed point of minimalization
    auto again = minimalize(res);
    CHECK(betti_table(again) == b);
}

TEST_CASE("resolution of the quintic gradient ideal quotient") {
    auto f = q("x^5+x^4*y+x^3*z^2+y^2*z^3");
    auto res = free_resolution(ideal_presentation(gradient(f)));
    REQUIRE(res.length() == 2);
    CHECK(shifts_at(res, 0) == std::multiset<int>{0});
    CHECK(shifts_at(res, 1) == std::multiset<int>{4, 4, 4});
    // first syzygies in standard degrees {3,3,4,4}, i.e. internal {7,7,8,8}
    CHECK(shifts_at(res, 2) == std::multiset<int>{7, 7, 8, 8});
    CHECK(res.is_minimal());
}

TEST_CASE("resolution shape of the cusp family") {
    for (int d = 2; d <= 5; ++d) {
        auto f = q("y^" + std::to_string(d) + "*z + x^" + std::to_string(d + 1));
        auto res = free_resolution(ideal_presentation(gradient(f)));
        REQUIRE(res.length() == 3);
        CHECK(shifts_at(res, 1) == std::multiset<int>{d, d, d});
        CHECK(shifts_at(res, 2) == std::multiset<int>{d + 1, 2 * d, 2 * d});
        CHECK(shifts_at(res, 3) == std::multiset<int>{2 * d + 1});
        CHECK(res.is_minimal());
        CHECK(res.is_complex());
    }
}

TEST_CASE("minimalization trims a redundant generator") {
    // (x, y) presented by {x, y, x+y}
    GradedMatrix<Rational> gens({0}, {1, 1, 1}, qs({"x", "y", "x+y"}));
    auto sub = resolve_submodule(gens);
    CHECK(sub.generators.cols() == 2);
    CHECK(sub.res.length() == 1);  // Koszul relation between the two survivors
    CHECK(sub.res.diff[0].cols() == 1);
    // the span is unchanged
    auto gb = groebner_basis(qs({"x", "y"}), MonomialOrder::grevlex());
    for (int j = 0; j < 2; ++j) {
        auto col = sub.generators.column(j);
        CHECK(gb.contains(col.comp[0]));
    }
}

TEST_CASE("betti table rejects non-minimal chains") {
    GradedMatrix<Rational> pres({0}, {0}, qs({"1"}));
    FreeResolution<Rational> res;
    res.target_shifts = {0};
    res.diff.push_back(pres);
    CHECK_THROWS_AS(betti_table(res), InternalInconsistencyError);
}

TEST_CASE("minimal resolutions match the linear-algebra generator oracle") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> dc(-4, 4), dd(1, 3), dn(2, 4);
    int done = 0;
    while (done < 12) {
        // random ideal with deliberately redundant generators
        std::vector<Poly<Rational>> gens;
        int n = dn(rng);
        for (int i = 0; i < n; ++i) {
            std::vector<Term<Rational>> ts;
            int deg = dd(rng);
            for (int a = 0; a <= deg; ++a)
                for (int b = 0; a + b <= deg; ++b)
                    ts.push_back({Monomial::variable(0, a) * Monomial::variable(1, b) *
                                      Monomial::variable(2, deg - a - b),
                                  Rational(dc(rng))});
            gens.push_back(Poly<Rational>::from_terms(MonomialOrder::grevlex(), ts));
        }
        bool zero = false;
        for (auto& g : gens) zero |= g.is_zero();
        if (zero) continue;
        // pad with combinations to force non-minimality
        gens.push_back(gens[0] * q("x + 2*y") + gens[gens.size() > 1 ? 1 : 0] * q("z"));

        auto res = free_resolution(ideal_presentation(gens));
        CHECK(res.is_minimal());
        CHECK(res.is_complex());
        std::multiset<int> from_res = shifts_at(res, 1);
        int max_deg = *from_res.rbegin();
        CHECK(from_res == minimal_generator_degrees_oracle(gens, max_deg));

        // Hilbert function from the numerator equals the Macaulay oracle
        ZPoly num = hilbert_numerator(res);
        for (int deg = 0; deg <= 8; ++deg) {
            // expand num / (1-t)^3 up to degree `deg`
            ZPoly series = num;
            for (int i = 0; i < 3; ++i) {
                ZPoly acc;
                long long run = 0;
                for (int e = 0; e <= deg; ++e) {
                    run += series.coeff(e);
                    acc.add(e, run);
                }
                series = acc;
            }
            CHECK(series.coeff(deg) == hilbert_function_oracle(gens, deg));
        }
        ++done;
    }
}

TEST_CASE("hilbert numerator of shifted free modules") {
    FreeResolution<Rational> free_mod;
    free_mod.target_shifts = {5};
    CHECK(hilbert_numerator(free_mod) == ZPoly::monomial(5));
}

TEST_CASE("degree and length") {
    auto two_lines = degree_or_length(qs({"x", "y"}));
    CHECK(two_lines.dim == 1);
    CHECK(two_lines.value == 1);

    auto sextic = degree_or_length(gradient(q("x*y^4*z+x^6+y^6")));
    CHECK(sextic.dim == 1);
    CHECK(sextic.value == 18);

    auto quintic = degree_or_length(gradient(q("x^5+x^4*y+x^3*z^2+y^2*z^3")));
    CHECK(quintic.dim == 1);
    CHECK(quintic.value == 8);

    auto point_fat = degree_or_length(qs({"x^2", "y", "z"}));
    CHECK(point_fat.dim == 0);
    CHECK(point_fat.value == 2);

    // smooth Fermat quartic: m-primary gradient, honest length d^3
    auto fermat = degree_or_length(gradient(q("x^4+y^4+z^4")));
    CHECK(fermat.dim == 0);
    CHECK(fermat.value == 27);

    CHECK_THROWS_AS(degree_or_length(qs({"1"})), Error);
}

TEST_CASE("degree is invariant under coordinate change") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<long> dd(-3, 3);
    auto J = gradient(q("x*y^4*z+x^6+y^6"));
    int checked = 0;
    while (checked < 3) {
        std::vector<std::vector<Rational>> rows(3, std::vector<Rational>(3));
        for (auto& r : rows)
            for (auto& v : r) v = Rational(dd(rng));
        auto inv = invert_matrix(rows, Rational());
        if (inv.empty()) continue;
        CoordinateChange<Rational> c;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) c.a[i][j] = rows[i][j], c.inv[i][j] = inv[i][j];
        std::vector<Poly<Rational>> moved;
        for (const auto& g : J) moved.push_back(apply_change(g, c));
        CHECK(degree_or_length(moved).value == 18);
        ++checked;
    }
}
