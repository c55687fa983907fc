#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidaug/ncalg.hpp"

using namespace braidaug;

namespace {

NCPoly N(const std::string& s) { return nc_parse(s); }

NCPoly random_word_poly(std::mt19937_64& rng, int max_words) {
    std::vector<VarId> gens{reeb_b(1), reeb_b(2), marker_t(1), curve_p(1)};
    std::uniform_int_distribution<int> nwords(0, max_words), nletters(0, 4);
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    NCPoly out;
    int words = nwords(rng);
    for (int w = 0; w < words; ++w) {
        std::vector<NCLetter> letters;
        int len = nletters(rng);
        for (int i = 0; i < len; ++i) {
            VarId g = gens[pick(rng)];
            letters.push_back({g, g.invertible() && coin(rng) ? -1 : 1});
        }
        out = nc_add(out, nc_from_word(ncword_reduce(std::move(letters))));
    }
    return out;
}

}  // namespace

TEST_CASE("reduced multiplication") {
    CHECK(nc_mul(N("t1"), N("t1^-1 b1")) == N("b1"));
    CHECK(nc_mul(N("b1 + b2"), N("b1 + b2")) == N("b1 b1 + b1 b2 + b2 b1 + b2 b2"));
    NCPoly w = N("t2 p8 p1^-1 p3");
    CHECK(nc_mul(nc_one(), w) == w);
    CHECK(nc_to_string(w) == "t2 p8 p1^-1 p3");
}

TEST_CASE("associativity on random triples") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 60; ++round) {
        NCPoly a = random_word_poly(rng, 3);
        NCPoly b = random_word_poly(rng, 3);
        NCPoly c = random_word_poly(rng, 3);
        CHECK(nc_mul(nc_mul(a, b), c) == nc_mul(a, nc_mul(b, c)));
    }
}

TEST_CASE("reduction is confluent under inverse-pair insertion") {
    std::mt19937_64 rng(29);
    std::vector<VarId> inv{marker_t(1), marker_t(2), curve_p(3)};
    std::uniform_int_distribution<size_t> pick(0, inv.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int round = 0; round < 100; ++round) {
        NCPoly base = random_word_poly(rng, 1);
        if (base.is_zero()) continue;
        std::vector<NCLetter> letters = base.words[0].letters;
        std::uniform_int_distribution<size_t> at(0, letters.size());
        size_t where = at(rng);
        VarId g = inv[pick(rng)];
        int s = coin(rng) ? 1 : -1;
        letters.insert(letters.begin() + long(where), {g, -s});
        letters.insert(letters.begin() + long(where), {g, s});
        CHECK(ncword_reduce(std::move(letters)) == base.words[0]);
    }
}

TEST_CASE("Z-matrices") {
    NCMatrix z = nc_Z(2, N("b1"), 4);
    CHECK(z.at(1, 1) == N("b1"));
    CHECK(z.at(1, 2) == nc_one());
    CHECK(z.at(2, 1) == nc_one());
    CHECK(z.at(2, 2) == nc_zero());
    CHECK(z.at(0, 0) == nc_one());
    CHECK(z.at(3, 3) == nc_one());
    CHECK(z.at(0, 3) == nc_zero());

    CHECK(nc_mat_mul(nc_Z(2, N("b1"), 4), nc_Z_inv(2, N("b1"), 4)) == nc_identity(4));
    NCMatrix s1 = nc_Z(1, nc_zero(), 2);
    CHECK(s1.at(0, 0) == nc_zero());
    CHECK(s1.at(0, 1) == nc_one());
    CHECK_THROWS_AS(nc_Z(4, N("b1"), 4), Error);
}

TEST_CASE("triangular truncations") {
    NCMatrix id = nc_identity(3);
    NCMatrix zero(3);
    CHECK(nc_truncate(id, TruncSide::Upper) == zero);
    std::mt19937_64 rng(31);
    NCMatrix m(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = random_word_poly(rng, 2);
    NCMatrix diag(3);
    for (int i = 0; i < 3; ++i) diag.at(i, i) = m.at(i, i);
    NCMatrix sum(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            sum.at(i, j) = nc_add(nc_add(nc_truncate(m, TruncSide::Upper).at(i, j),
                                         nc_truncate(m, TruncSide::Lower).at(i, j)),
                                  diag.at(i, j));
    CHECK(sum == m);
    NCMatrix upper = nc_truncate(m, TruncSide::Upper);
    CHECK(nc_truncate(upper, TruncSide::Upper) == upper);
}

TEST_CASE("abelianization") {
    CHECK(nc_abelianize(N("t1 b1 t1^-1")) == poly_parse("b1"));
    CHECK(nc_abelianize(N("b1 b2 + b2 b1")).is_zero());
    CHECK(nc_abelianize(N("t1 b1 + t1 t2 + t1 b1 b4 t2")) ==
          poly_parse("b1 t1 + t1 t2 + b1 b4 t1 t2"));

    SUBCASE("ring homomorphism on random instances") {
        std::mt19937_64 rng(37);
        for (int round = 0; round < 60; ++round) {
            NCPoly a = random_word_poly(rng, 3);
            NCPoly b = random_word_poly(rng, 3);
            CHECK(nc_abelianize(nc_add(a, b)) ==
                  poly_add(nc_abelianize(a), nc_abelianize(b)));
            CHECK(nc_abelianize(nc_mul(a, b)) ==
                  poly_mul(nc_abelianize(a), nc_abelianize(b)));
        }
    }
}
