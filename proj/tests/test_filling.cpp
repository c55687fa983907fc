#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "braidaug/filling.hpp"

using namespace braidaug;

namespace {

LaurentPoly P(const std::string& s) { return poly_parse(s); }
NCPoly N(const std::string& s) { return nc_parse(s); }

PolyMatrix z_block(const std::string& b) {
    PolyMatrix m(2, 2);
    m.at(0, 0) = poly_parse(b);
    m.at(0, 1) = poly_one();
    m.at(1, 0) = poly_one();
    return m;
}

std::vector<Plan> all_pinch_orders(int l) {
    std::vector<int> order(size_t(l), 0);
    std::iota(order.begin(), order.end(), 1);
    std::vector<Plan> plans;
    do {
        Plan plan;
        std::vector<bool> pinched(size_t(l + 1), false);
        for (int original : order) {
            int pos = 0;
            for (int j = 1; j <= original; ++j) pos += !pinched[size_t(j)];
            plan.push_back(pinch(pos));
            pinched[size_t(original)] = true;
        }
        plans.push_back(plan);
    } while (std::next_permutation(order.begin(), order.end()));
    return plans;
}

}  // namespace

TEST_CASE("ledger bookkeeping") {
    BraidWord w = make_word(4, {1, 3, 1, 2, 1, 3, 1, 2});
    Ledger led = initial_ledger(w);
    CHECK(led.unfrozen[1] == std::vector<int>{1, 3, 5});
    CHECK(led.unfrozen[2] == std::vector<int>{4});
    CHECK(led.unfrozen[3] == std::vector<int>{2});
    CHECK(led.lookup(1, 2) == 3);
    CHECK_THROWS_AS(led.lookup(1, 4), Error);
    CHECK_THROWS_AS(led.lookup(9, 1), Error);
}

TEST_CASE("compiled mutation sequences for the worked example") {
    BraidWord w = make_word(4, {1, 3, 1, 2, 1, 3, 1, 2});
    CHECK(compile_mutation_sequence(w, {pinch(6)}).sequence ==
          std::vector<int>{1, 3, 2, 3, 1});
    // across the two pinches the boundary pair mu_1 mu_1 and then mu_3 mu_3 cancel
    CHECK(compile_mutation_sequence(w, {pinch(6), pinch(6)}).sequence ==
          std::vector<int>{1, 3, 2, 5, 1, 3, 1, 3, 5, 3});
    Plan full = {pinch(6), pinch(6), pinch(1), braid_move(2), rotate_forward(),
                 pinch(5), pinch(4), pinch(3), pinch(2), pinch(1)};
    PlanCompilation comp = compile_mutation_sequence(w, full);
    CHECK(comp.sequence == std::vector<int>{1, 3, 2, 5, 1, 3, 1, 3, 5, 3});
    CHECK(comp.consumed == std::set<int>{1, 2, 3, 4, 5});

    SUBCASE("empty and involutive plans") {
        CHECK(compile_mutation_sequence(w, {}).sequence.empty());
        BraidWord trefoil = make_word(2, {1, 1, 1});
        CHECK(compile_mutation_sequence(trefoil, {pinch(1), pinch(1), pinch(1)})
                  .sequence.empty());
    }
}

TEST_CASE("pinch scan golden entries") {
    BraidWord w = make_word(4, {2, 1, 3, 2, 2, 1, 3, 2});
    PinchScan scan = pinch_scan(w, 1);
    CHECK(scan.images.at(reeb_b(1)) == N("p1"));
    CHECK(scan.images.at(reeb_b(4)) == N("b4 + b2 p1^-1 b3"));
    CHECK(scan.images.at(reeb_b(8)) ==
          N("b8 + p1^-1 + p1^-1 b3 b7 + b6 b2 p1^-1 + p1^-1 b3 b5 b2 p1^-1"));
    NCMatrix u4 = scan.u_seq[2];
    CHECK(u4.at(0, 2) == N("p1^-1 b3"));
    CHECK(u4.at(1, 2) == N("b2 p1^-1 b3"));

    SUBCASE("pinching the last crossing uses only the lower scan") {
        PinchScan last = pinch_scan(w, 8);
        CHECK(last.u_seq.empty());
        CHECK(last.l_seq.size() == 7);
        CHECK(last.images.at(reeb_b(8)) == N("p8"));
    }
    CHECK_THROWS_AS(pinch_scan(w, 9), Error);
}

TEST_CASE("marker push block identities") {
    // D_1(p) Z_1(b) = Z_1(p^2 b) D_1(p^-1) as 2x2 matrices
    PolyMatrix d(2, 2), d_swapped(2, 2);
    d.at(0, 0) = P("p1");
    d.at(1, 1) = P("p1^-1");
    d_swapped.at(0, 0) = P("p1^-1");
    d_swapped.at(1, 1) = P("p1");
    CHECK(mat_mul(d, z_block("b1")) == mat_mul(z_block("b1 p1^2"), d_swapped));

    MarkerPush same_level = marker_push(1, curve_p(1), {{1, P("b1")}});
    CHECK(same_level.rescaled[0] == P("b1 p1^2"));
    CHECK(same_level.plus_level == 2);
    CHECK(same_level.minus_level == 1);

    // crossing one level below: D_2(p) at levels (2,3), crossing at level 1
    PolyMatrix d3(3, 3), d3_after(3, 3), z1(3, 3), z1_scaled(3, 3);
    d3 = mat_identity(3);
    d3.at(1, 1) = P("p1");
    d3.at(2, 2) = P("p1^-1");
    d3_after = mat_identity(3);
    d3_after.at(0, 0) = P("p1");
    d3_after.at(2, 2) = P("p1^-1");
    z1 = mat_identity(3);
    z1.at(0, 0) = P("b1");
    z1.at(0, 1) = P("1");
    z1.at(1, 0) = P("1");
    z1.at(1, 1) = P("0");
    z1_scaled = z1;
    z1_scaled.at(0, 0) = P("b1 p1^-1");
    CHECK(mat_mul(d3, z1) == mat_mul(z1_scaled, d3_after));

    MarkerPush below = marker_push(2, curve_p(1), {{1, P("b1")}});
    CHECK(below.rescaled[0] == P("b1 p1^-1"));
    CHECK(below.plus_level == 1);
    CHECK(below.minus_level == 3);

    MarkerPush empty = marker_push(2, curve_p(4), {});
    CHECK(empty.rescaled.empty());
    CHECK(empty.plus_level == 2);
    CHECK(empty.minus_level == 3);
}

TEST_CASE("rotation map") {
    RotationMap single = rotation_map(make_word(2, {1}), RotateDir::LastToFront);
    CHECK(single.rotated.letters == std::vector<int>{1});
    CHECK(single.moved_image == P("t1"));

    RotationMap two = rotation_map(make_word(2, {1, 1}), RotateDir::LastToFront);
    CHECK(two.moved_image == P("b2 t1"));

    CHECK_THROWS_AS(rotation_map(make_word(2, {1}), RotateDir::FrontToLast), Error);
    CHECK_THROWS_AS(rotation_map(make_word(2, {}), RotateDir::LastToFront), Error);
}

TEST_CASE("braid move substitution is an involution") {
    auto subst = braid_move_map(reeb_b(3), reeb_b(4), reeb_b(5));
    CHECK(subst.at(reeb_b(3)) == P("b5"));
    CHECK(subst.at(reeb_b(4)) == P("b4 + b3 b5"));
    CHECK(subst.at(reeb_b(5)) == P("b3"));
    for (const auto& [var, image] : subst)
        CHECK(poly_subst(image, subst) == poly_var(var));

    SUBCASE("middle generator is fixed when the first value vanishes") {
        LaurentPoly mid = subst.at(reeb_b(4));
        LaurentPoly with_zero = poly_subst(mid, {{reeb_b(3), poly_zero()}});
        CHECK(with_zero == P("b4"));
    }
}

TEST_CASE("run_filling on simple plans") {
    BraidWord trefoil = make_word(2, {1, 1, 1});

    SUBCASE("left-to-right pinching gives the initial chart") {
        FillingResult r = run_filling(trefoil, {pinch(1), pinch(1), pinch(1)});
        CHECK(r.compilation.sequence.empty());
        Seed s = initial_seed(trefoil);
        for (int id : {1, 2, 3}) CHECK(frac_eq(r.final_seed.var_of(id), s.var_of(id)));
        CHECK(r.chart.chord_images.at(reeb_b(1)) == P("p1"));
        CHECK(r.chart.chord_images.at(reeb_b(2)) == P("p2 + p1^-1"));
        CHECK(r.chart.exponents.at(1) == std::vector<int>{1, 0, 0});
        // A2 = 1 + b1 b2 collapses to a monomial on the chart
        CHECK(r.chart.exponents.at(2) == std::vector<int>{1, 1, 0});
        CHECK(r.chart.relations.size() == 2);
        CHECK(r.chart.relations[0].monomial == poly_parse("t1 p1 p2 p3").terms[0]);
        CHECK(r.chart.relations[1].monomial == poly_parse("t2 p1^-1 p2^-1 p3^-1").terms[0]);
    }

    SUBCASE("incomplete plans are rejected") {
        CHECK_THROWS_AS(run_filling(trefoil, {pinch(1)}), Error);
    }

    SUBCASE("backward rotation is compile-only") {
        CHECK_THROWS_AS(run_filling(trefoil, {rotate_backward(), pinch(1), pinch(1), pinch(1)}),
                        Error);
        PlanCompilation comp = compile_mutation_sequence(
            trefoil, {rotate_backward(), rotate_forward()});
        CHECK(comp.sequence.empty());  // R then R^-1 cancels
    }
}

TEST_CASE("pinch-first property on the trefoil") {
    BraidWord trefoil = make_word(2, {1, 1, 1});
    for (int k = 1; k <= 3; ++k) {
        Plan plan{pinch(k), pinch(1), pinch(1)};
        FillingResult r = run_filling(trefoil, plan);
        CHECK(r.chart.chord_images.at(reeb_b(k)) == poly_var(curve_p(k)));
    }
}

TEST_CASE("random admissible plans satisfy the augmentation equations") {
    // the chart must send Delta_m to the inverse product of the marker images
    std::mt19937_64 rng(97);
    int rotations = 0, braid_moves = 0;
    for (int round = 0; round < 40; ++round) {
        std::uniform_int_distribution<int> pick_n(2, 4);
        int n = pick_n(rng);
        std::uniform_int_distribution<int> pick_l(n - 1, 6);
        int l = pick_l(rng);
        std::vector<int> letters;
        for (int level = 1; level < n; ++level) letters.push_back(level);
        std::uniform_int_distribution<int> pl(1, n - 1);
        while (int(letters.size()) < l) letters.push_back(pl(rng));
        std::shuffle(letters.begin(), letters.end(), rng);
        BraidWord w = make_word(n, letters);

        Plan plan;
        std::vector<int> cur = letters;
        std::uniform_int_distribution<int> act(0, 9);
        int guard = 0, rot_here = 0;
        while (!cur.empty() && ++guard < 60) {
            int a = act(rng);
            if (a < 2 && int(cur.size()) >= 3) {
                std::vector<int> sites;
                for (int pos = 1; pos + 2 <= int(cur.size()); ++pos)
                    if (cur[size_t(pos + 1)] == cur[size_t(pos - 1)] &&
                        std::abs(cur[size_t(pos - 1)] - cur[size_t(pos)]) == 1)
                        sites.push_back(pos);
                if (!sites.empty()) {
                    std::uniform_int_distribution<size_t> ps(0, sites.size() - 1);
                    int pos = sites[ps(rng)];
                    plan.push_back(braid_move(pos));
                    int i = cur[size_t(pos - 1)], j = cur[size_t(pos)];
                    cur[size_t(pos - 1)] = j;
                    cur[size_t(pos)] = i;
                    cur[size_t(pos + 1)] = j;
                    ++braid_moves;
                    continue;
                }
            }
            if (a < 4 && rot_here < 4) {
                plan.push_back(rotate_forward());
                int last = cur.back();
                cur.pop_back();
                cur.insert(cur.begin(), last);
                ++rotations, ++rot_here;
                continue;
            }
            std::uniform_int_distribution<int> pp(1, int(cur.size()));
            int pos = pp(rng);
            plan.push_back(pinch(pos));
            cur.erase(cur.begin() + (pos - 1));
        }

        FillingResult r = run_filling(w, plan);
        std::map<VarId, LaurentPoly> sub = r.chart.chord_images;
        for (auto& [g, e] : r.chart.marker_images) sub[g] = e;
        PolyMatrix m = commutative_transfer(w);
        LaurentPoly expect = poly_one();
        for (int k = 1; k <= w.n; ++k) {
            LaurentPoly lhs = poly_subst(principal_minor(m, k), sub);
            LaurentPoly tk = r.chart.marker_images.at(marker_t(k));
            REQUIRE(tk.is_monomial());
            expect = poly_mul(expect, poly_from_mono(mono_inv(tk.terms[0])));
            CHECK(lhs == expect);
        }
    }
    CHECK(rotations > 10);
    CHECK(braid_moves > 2);
}

TEST_CASE("distinct seeds of trefoil pinch orders") {
    BraidWord trefoil = make_word(2, {1, 1, 1});
    std::vector<Plan> plans = all_pinch_orders(3);
    REQUIRE(plans.size() == 6);
    std::mt19937_64 rng(67);
    SeedPartition part = distinct_seeds(trefoil, plans, rng);
    CHECK(part.groups.size() == 5);
    // lexicographic orders (1,3,2) and (3,1,2) reach the same seed
    int g13 = -1, g31 = -1;
    for (size_t g = 0; g < part.groups.size(); ++g)
        for (int idx : part.groups[g]) {
            if (idx == 1) g13 = int(g);
            if (idx == 4) g31 = int(g);
        }
    CHECK(g13 == g31);

    SUBCASE("identical plans group together") {
        std::vector<Plan> two{plans[0], plans[0]};
        CHECK(distinct_seeds(trefoil, two, rng).groups.size() == 1);
    }
}
