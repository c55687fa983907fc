#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "braidaug/cli.hpp"
#include "braidaug/io.hpp"

using namespace braidaug;

TEST_CASE("word JSON round trip") {
    BraidWord w = make_word(4, {1, 3, 1, 2, 1, 3, 1, 2});
    CHECK(word_from_json(word_to_json(w)) == w);
    CHECK_THROWS_AS(word_from_json(Json{{"letters", {1}}}), Error);
}

TEST_CASE("plan JSON round trip") {
    Plan plan = {pinch(6), braid_move(2), rotate_forward(), rotate_backward(), pinch(1)};
    Plan back = plan_from_json(plan_to_json(plan));
    REQUIRE(back.size() == plan.size());
    for (size_t i = 0; i < plan.size(); ++i) {
        CHECK(back[i].kind == plan[i].kind);
        CHECK(back[i].pos == plan[i].pos);
    }
    CHECK_THROWS_AS(plan_from_json(Json{{"moves", {{{"op", "fly"}}}}}), Error);
}

TEST_CASE("seed JSON round trip") {
    Seed s = initial_seed(make_word(3, {1, 2, 1, 2}));
    Seed back = seed_from_json(seed_to_json(s));
    CHECK(back.quiver.eps2 == s.quiver.eps2);
    REQUIRE(back.vars.size() == s.vars.size());
    for (size_t i = 0; i < s.vars.size(); ++i) {
        CHECK(frac_eq(back.vars[i], s.vars[i]));
        CHECK(back.quiver.vertices[i].frozen == s.quiver.vertices[i].frozen);
        CHECK(back.quiver.vertices[i].level == s.quiver.vertices[i].level);
    }
}

TEST_CASE("dot output") {
    std::string dot = quiver_to_dot(initial_quiver(make_word(4, {1, 3, 1, 2, 1, 3, 1, 2})));
    CHECK(dot.find("v6 [shape=box]") != std::string::npos);
    CHECK(dot.find("v1 [shape=circle]") != std::string::npos);
    CHECK(dot.find("v1 -> v3;") != std::string::npos);
    CHECK(dot.find("v8 -> v7 [style=dashed];") != std::string::npos);
}

TEST_CASE("relation rendering") {
    TorusRelation rel{1, poly_parse("t1 p1 p4 p7").terms[0]};
    CHECK(relation_to_string(rel) == "p1 p4 p7 t1 = 1");
    TorusRelation rel2{2, poly_parse("t2 p1^-1 p3").terms[0]};
    CHECK(relation_to_string(rel2) == "p1^-1 p3 t2 = 1");
}

TEST_CASE("dga command") {
    Config cfg;
    cfg.braid = "1,2,1,2";
    std::ostringstream out, err;
    CHECK(cmd_dga(cfg, out, err) == 0);
    CHECK(out.str().find("da1 = b1 b3 + b2 + t1^-1") != std::string::npos);

    SUBCASE("json output parses") {
        Config jcfg = cfg;
        jcfg.format = "json";
        std::ostringstream jout, jerr;
        CHECK(cmd_dga(jcfg, jout, jerr) == 0);
        Json j = Json::parse(jout.str());
        CHECK(j["differentials"]["a1"] == "b1 b3 + b2 + t1^-1");
        CHECK(word_from_json(j["word"]) == make_word(3, {1, 2, 1, 2}));
    }

    SUBCASE("bad input exits 2") {
        Config bad;
        bad.braid = "";
        std::ostringstream bout, berr;
        CHECK(cmd_dga(bad, bout, berr) == 2);
        CHECK(!berr.str().empty());
    }
}

TEST_CASE("seed and mutate commands") {
    Config cfg;
    cfg.braid = "1,3,1,2,1,3,1,2";
    std::ostringstream out, err;
    CHECK(cmd_seed(cfg, out, err) == 0);
    CHECK(out.str().find("A5 (level 1) = b5 + b1 b4 + b1 b3 b5") != std::string::npos);

    SUBCASE("deterministic output") {
        std::ostringstream again, aerr;
        CHECK(cmd_seed(cfg, again, aerr) == 0);
        CHECK(again.str() == out.str());
    }

    SUBCASE("mutation sequence") {
        Config mcfg = cfg;
        mcfg.braid = "1,1,1";
        mcfg.seq = "1";
        std::ostringstream mout, merr;
        CHECK(cmd_mutate(mcfg, mout, merr) == 0);
        CHECK(mout.str().find("A1 (level 1) = b2") != std::string::npos);

        mcfg.seq = "3";  // frozen vertex: module error, exit 1
        std::ostringstream fout, ferr;
        CHECK(cmd_mutate(mcfg, fout, ferr) == 1);
    }
}

TEST_CASE("filling command") {
    std::string plan_path = "worked_plan_test.json";
    {
        Plan plan = {pinch(6), pinch(6), pinch(1), braid_move(2), rotate_forward(),
                     pinch(5), pinch(4), pinch(3), pinch(2), pinch(1)};
        std::ofstream out(plan_path);
        out << plan_to_json(plan).dump(2);
    }
    Config cfg;
    cfg.braid = "1,3,1,2,1,3,1,2";
    cfg.plan_file = plan_path;
    cfg.format = "json";
    std::ostringstream out, err;
    REQUIRE(cmd_filling(cfg, out, err) == 0);
    Json j = Json::parse(out.str());
    CHECK(j["mutation_sequence"] == Json::array({1, 3, 2, 5, 1, 3, 1, 3, 5, 3}));
    CHECK(j["chart"]["A'1"] == Json{{"p7", 1}});
    CHECK(j["relations"][0] == "p1 p4 p7 t1 = 1");
    std::remove(plan_path.c_str());

    SUBCASE("missing plan file exits 2") {
        Config bad = cfg;
        bad.plan_file = "does_not_exist.json";
        std::ostringstream bout, berr;
        CHECK(cmd_filling(bad, bout, berr) == 2);
    }
}

TEST_CASE("census command") {
    Config cfg;
    cfg.braid = "1,1,1";
    cfg.format = "json";
    std::ostringstream out, err;
    REQUIRE(cmd_census(cfg, out, err) == 0);
    Json j = Json::parse(out.str());
    CHECK(j["plans"] == 6);
    CHECK(j["groups"] <= 5);

    Config big;
    big.braid = "1,1,1,1,1,1,1,1";
    std::ostringstream bout, berr;
    CHECK(cmd_census(big, bout, berr) == 2);
}
