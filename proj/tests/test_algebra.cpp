#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidaug/algebra.hpp"

using namespace braidaug;

namespace {

LaurentPoly P(const std::string& s) { return poly_parse(s); }

LaurentPoly random_poly(std::mt19937_64& rng, const std::vector<VarId>& vars, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<size_t> pick(0, vars.size() - 1);
    std::uniform_int_distribution<int> exp_b(1, 3), exp_inv(-2, 2);
    LaurentPoly out;
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        std::uniform_int_distribution<int> nfac(0, 3);
        int facs = nfac(rng);
        for (int f = 0; f < facs; ++f) {
            VarId v = vars[pick(rng)];
            int e = v.invertible() ? exp_inv(rng) : exp_b(rng);
            m = mono_mul(m, mono_var(v, e == 0 ? 1 : e));
        }
        out = poly_add(out, poly_from_mono(m));
    }
    return out;
}

}  // namespace

TEST_CASE("characteristic-2 addition") {
    CHECK(poly_add(P("b1 + b2"), P("b2 + b3")) == P("b1 + b3"));
    LaurentPoly p = P("b1 b2 + t1^-1 + 1");
    CHECK(poly_add(p, p).is_zero());
    CHECK(poly_add(P("1 + b1 b3"), P("1")) == P("b1 b3"));
}

TEST_CASE("multiplication") {
    CHECK(poly_mul(P("t1"), P("t1^-1")) == P("1"));
    CHECK(poly_mul(P("b1 + b2"), P("b1 + b2")) == P("b1^2 + b2^2"));
    CHECK(poly_mul(P("b1"), P("1 + b1 b3")) == P("b1 + b1^2 b3"));
}

TEST_CASE("exact division") {
    CHECK(*poly_div_exact(P("b1 b2 + b1"), P("b1")) == P("b2 + 1"));
    CHECK(!poly_div_exact(P("b1 b2 + 1"), P("b1")).has_value());
    LaurentPoly p = P("b5 + b1 b4 + b1 b3 b5");
    CHECK(*poly_div_exact(p, P("1")) == p);

    SUBCASE("laurent shifts in invertible variables") {
        CHECK(*poly_div_exact(P("b1 + 1"), P("t1")) == P("b1 t1^-1 + t1^-1"));
        CHECK(*poly_div_exact(P("t1 b1 + t1"), P("t1^2")) == P("b1 t1^-1 + t1^-1"));
    }

    SUBCASE("round trip on random instances") {
        std::mt19937_64 rng(7);
        std::vector<VarId> vars{reeb_b(1), reeb_b(2), marker_t(1), curve_p(1)};
        int checked = 0;
        for (int round = 0; round < 200; ++round) {
            LaurentPoly q = random_poly(rng, vars, 4);
            LaurentPoly d = random_poly(rng, vars, 3);
            if (d.is_zero()) continue;
            LaurentPoly p = poly_mul(q, d);
            auto back = poly_div_exact(p, d);
            REQUIRE(back.has_value());
            CHECK(*back == q);
            ++checked;
        }
        CHECK(checked > 100);
    }
}

TEST_CASE("ring axioms on random instances") {
    std::mt19937_64 rng(11);
    std::vector<VarId> vars{reeb_b(1), reeb_b(2), reeb_b(3), marker_t(1), curve_p(2)};
    for (int round = 0; round < 50; ++round) {
        LaurentPoly p = random_poly(rng, vars, 4);
        LaurentPoly q = random_poly(rng, vars, 4);
        LaurentPoly r = random_poly(rng, vars, 4);
        CHECK(poly_add(p, q) == poly_add(q, p));
        CHECK(poly_add(p, p).is_zero());
        CHECK(poly_mul(p, poly_add(q, r)) == poly_add(poly_mul(p, q), poly_mul(p, r)));
    }
}

TEST_CASE("canonical text form") {
    CHECK(poly_to_string(P("b1 b3 + b2")) == "b2 + b1 b3");
    CHECK(poly_to_string(poly_zero()) == "0");
    CHECK(poly_to_string(poly_one()) == "1");
    LaurentPoly a7 = P("1 + b1 b3 + b1 b4 b7 + b5 b7 + b1 b3 b5 b7");
    CHECK(poly_to_string(a7) == "1 + b1 b3 + b5 b7 + b1 b4 b7 + b1 b3 b5 b7");
    CHECK(poly_parse(poly_to_string(a7)) == a7);
    CHECK(poly_to_string(P("t1^-1 + b1")) == "t1^-1 + b1");
}

TEST_CASE("rational functions") {
    RationalFn a = frac(P("b1 b2 + b1"), P("b1"));
    CHECK(frac_eq(a, frac_poly(P("b2 + 1"))));
    CHECK(frac_is_poly(a));  // exact division happens eagerly
    CHECK(!frac_eq(frac_poly(P("b1")), frac_poly(P("b2"))));
    CHECK(frac_eq(frac(poly_zero(), P("b1")), frac(poly_zero(), P("b2 + 1"))));
    RationalFn r = frac(P("b1 b2 + 1"), P("b1"));
    CHECK(!frac_is_poly(r));
    CHECK(frac_eq(frac_mul(r, frac_poly(P("b1"))), frac_poly(P("b1 b2 + 1"))));
    CHECK(frac_parse(frac_to_string(r)).num == r.num);
}

TEST_CASE("GF(2^16) field") {
    gf_check_modulus();
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<uint32_t> any(0, 65535);
    for (int round = 0; round < 10000; ++round) {
        Gf a{uint16_t(any(rng))}, b{uint16_t(any(rng))}, c{uint16_t(any(rng))};
        CHECK(gf_add(a, b) == gf_add(b, a));
        CHECK(gf_mul(a, b) == gf_mul(b, a));
        CHECK(gf_mul(a, gf_add(b, c)) == gf_add(gf_mul(a, b), gf_mul(a, c)));
        CHECK(gf_mul(gf_mul(a, b), c) == gf_mul(a, gf_mul(b, c)));
    }
    for (int round = 0; round < 100; ++round) {
        Gf a{uint16_t(any(rng))};
        CHECK(gf_pow(a, 65536) == a);  // x^(2^16) = x
        if (!a.is_zero()) CHECK(gf_mul(a, gf_inv(a)) == Gf{1});
    }
}

TEST_CASE("polynomial evaluation") {
    std::mt19937_64 rng(5);
    CHECK(poly_eval(poly_zero(), {}).is_zero());
    Assignment pt{{marker_t(1), Gf{17}}};
    CHECK(poly_eval(P("t1 t1^-1"), pt) == Gf{1});
    CHECK(poly_eval(poly_add(P("b1 t1"), P("b1 t1")), {{reeb_b(1), Gf{3}}, {marker_t(1), Gf{9}}})
              .is_zero());
    CHECK_THROWS_AS(poly_eval(P("b9"), pt), Error);
    CHECK_THROWS_AS(poly_eval(P("t1"), Assignment{{marker_t(1), Gf{0}}}), Error);

    SUBCASE("evaluation is a ring homomorphism") {
        std::vector<VarId> vars{reeb_b(1), reeb_b(2), marker_t(1)};
        for (int round = 0; round < 50; ++round) {
            LaurentPoly p = random_poly(rng, vars, 4);
            LaurentPoly q = random_poly(rng, vars, 4);
            Assignment at = random_point(vars, rng);
            CHECK(poly_eval(poly_add(p, q), at) == gf_add(poly_eval(p, at), poly_eval(q, at)));
            CHECK(poly_eval(poly_mul(p, q), at) == gf_mul(poly_eval(p, at), poly_eval(q, at)));
        }
    }
}

TEST_CASE("random points avoid the given polynomials") {
    std::mt19937_64 rng(13);
    std::vector<VarId> vars{reeb_b(1), marker_t(1)};
    Assignment a = random_point(vars, rng);
    CHECK(!a.at(marker_t(1)).is_zero());
    Assignment b = random_point(vars, rng, {P("b1")});
    CHECK(!b.at(reeb_b(1)).is_zero());
    CHECK_THROWS_AS(random_point(vars, rng, {poly_zero()}), Error);
}

TEST_CASE("matrices and minors") {
    PolyMatrix m(2, 2);
    m.at(0, 0) = P("b1");
    m.at(0, 1) = P("1");
    m.at(1, 0) = P("1");
    CHECK(principal_minor(m, 1) == P("b1"));
    CHECK(principal_minor(m, 2) == P("1"));  // -1 = 1 in characteristic 2

    PolyMatrix a(3, 3);
    const char* rows[3][3] = {{"b1", "b2", "b3"}, {"b4", "b5", "b6"}, {"0", "0", "1"}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a.at(i, j) = P(rows[i][j]);
    CHECK(submatrix_det(a, {1, 2}, {1, 2}) == principal_minor(a, 2));
    CHECK(submatrix_det(a, {1, 3}, {1, 2}) == P("0"));
    PolyMatrix b(3, 3);
    const char* rows2[3][3] = {{"b1", "b2", "b3"}, {"b4", "b5", "b6"}, {"0", "0", "1"}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b.at(i, j) = P(rows2[i][j]);
    // cofactor expansion in characteristic 2
    CHECK(submatrix_det(b, {1, 3}, {1, 2}) == poly_zero());
    CHECK(submatrix_det(b, {1, 2}, {1, 3}) == P("b1 b6 + b3 b4"));
    CHECK_THROWS_AS(submatrix_det(b, {1, 2}, {1}), Error);

    SUBCASE("determinant matches numeric elimination") {
        std::mt19937_64 rng(17);
        std::vector<VarId> vars{reeb_b(1), reeb_b(2), marker_t(1)};
        for (int round = 0; round < 20; ++round) {
            PolyMatrix r(3, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) r.at(i, j) = random_poly(rng, vars, 2);
            Assignment pt = random_point(vars, rng);
            CHECK(poly_eval(mat_det(r), pt) == gfmat_det(gfmat_eval(r, pt)));
        }
    }
}
