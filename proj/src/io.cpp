#include "braidaug/io.hpp"

#include <algorithm>

namespace braidaug {

Json word_to_json(const BraidWord& w) {
    return Json{{"n", w.n}, {"letters", w.letters}};
}

BraidWord word_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("letters")) fail(Errc::BadSyntax, "bad word JSON");
    return make_word(j["n"].get<int>(), j["letters"].get<std::vector<int>>());
}

Json plan_to_json(const Plan& plan) {
    Json moves = Json::array();
    for (const Move& mv : plan) {
        switch (mv.kind) {
            case Move::Kind::Pinch: moves.push_back({{"op", "pinch"}, {"pos", mv.pos}}); break;
            case Move::Kind::BraidMove: moves.push_back({{"op", "braid"}, {"pos", mv.pos}}); break;
            case Move::Kind::RotateForward:
                moves.push_back({{"op", "rotate"}, {"dir", "last_to_front"}});
                break;
            case Move::Kind::RotateBackward:
                moves.push_back({{"op", "rotate"}, {"dir", "front_to_last"}});
                break;
        }
    }
    return Json{{"moves", moves}};
}

Plan plan_from_json(const Json& j) {
    if (!j.contains("moves") || !j["moves"].is_array()) fail(Errc::BadSyntax, "bad plan JSON");
    Plan plan;
    for (const Json& mv : j["moves"]) {
        std::string op = mv.value("op", "");
        if (op == "pinch")
            plan.push_back(pinch(mv.at("pos").get<int>()));
        else if (op == "braid")
            plan.push_back(braid_move(mv.at("pos").get<int>()));
        else if (op == "rotate") {
            std::string dir = mv.value("dir", "last_to_front");
            if (dir == "last_to_front")
                plan.push_back(rotate_forward());
            else if (dir == "front_to_last")
                plan.push_back(rotate_backward());
            else
                fail(Errc::BadSyntax, "bad rotation direction '" + dir + "'");
        } else
            fail(Errc::BadSyntax, "bad move op '" + op + "'");
    }
    return plan;
}

Json seed_to_json(const Seed& s) {
    Json vertices = Json::array();
    for (size_t i = 0; i < s.quiver.vertices.size(); ++i) {
        const QuiverVertex& v = s.quiver.vertices[i];
        vertices.push_back({{"id", v.id},
                            {"level", v.level},
                            {"frozen", v.frozen},
                            {"var", frac_to_string(s.vars[i])}});
    }
    return Json{{"vertices", vertices}, {"eps2", s.quiver.eps2}};
}

Seed seed_from_json(const Json& j) {
    if (!j.contains("vertices") || !j.contains("eps2")) fail(Errc::BadSyntax, "bad seed JSON");
    Seed s;
    for (const Json& v : j["vertices"]) {
        s.quiver.vertices.push_back(
            {v.at("id").get<int>(), v.at("level").get<int>(), v.at("frozen").get<bool>(), true});
        s.vars.push_back(frac_parse(v.at("var").get<std::string>()));
    }
    s.quiver.eps2 = j["eps2"].get<std::vector<std::vector<int>>>();
    size_t m = s.quiver.vertices.size();
    if (s.quiver.eps2.size() != m) fail(Errc::BadSyntax, "eps2 size mismatch");
    for (const auto& row : s.quiver.eps2)
        if (row.size() != m) fail(Errc::BadSyntax, "eps2 row size mismatch");
    return s;
}

std::string quiver_to_dot(const Quiver& q) {
    std::string out = "digraph quiver {\n";
    for (const QuiverVertex& v : q.vertices) {
        out += "  v" + std::to_string(v.id);
        out += v.frozen ? " [shape=box]" : " [shape=circle]";
        out += ";\n";
    }
    for (size_t i = 0; i < q.vertices.size(); ++i)
        for (size_t j = 0; j < q.vertices.size(); ++j) {
            int e = q.eps2[i][j];
            if (e <= 0) continue;
            out += "  v" + std::to_string(q.vertices[i].id) + " -> v" +
                   std::to_string(q.vertices[j].id);
            if (e % 2 == 1) {
                out += " [style=dashed";
                if (e > 1) out += ", label=\"" + std::to_string(e) + "/2\"";
                out += "]";
            } else if (e > 2) {
                out += " [label=\"" + std::to_string(e / 2) + "\"]";
            }
            out += ";\n";
        }
    out += "}\n";
    return out;
}

std::string relation_to_string(const TorusRelation& rel) {
    std::vector<VarPow> curves, markers;
    for (const VarPow& f : rel.monomial.factors)
        (f.var.kind == VarKind::CurveP ? curves : markers).push_back(f);
    std::string out;
    for (const VarPow& f : curves) {
        if (!out.empty()) out += " ";
        out += var_name(f.var);
        if (f.exp != 1) out += "^" + std::to_string(f.exp);
    }
    for (const VarPow& f : markers) {
        if (!out.empty()) out += " ";
        out += var_name(f.var);
        if (f.exp != 1) out += "^" + std::to_string(f.exp);
    }
    return out + " = 1";
}

Json dga_to_json(const BraidWord& w) {
    Differentials d = differentials(w);
    AugPresentation pres = aug_equations(w);
    Json diff = Json::object();
    for (size_t k = 0; k < d.da.size(); ++k)
        diff["a" + std::to_string(k + 1)] = nc_to_string(d.da[k]);
    Json equations = Json::array();
    for (const LaurentPoly& e : pres.equations) equations.push_back(poly_to_string(e));
    return Json{{"word", word_to_json(w)},
                {"differentials", diff},
                {"equations", equations},
                {"eliminated", poly_to_string(pres.eliminated)}};
}

Json aug_to_json(const BraidWord& w) {
    AugPresentation pres = aug_equations(w);
    Json minors = Json::array(), equations = Json::array();
    for (const LaurentPoly& m : pres.minors) minors.push_back(poly_to_string(m));
    for (const LaurentPoly& e : pres.equations) equations.push_back(poly_to_string(e));
    return Json{{"word", word_to_json(w)},
                {"minors", minors},
                {"equations", equations},
                {"eliminated", poly_to_string(pres.eliminated)}};
}

Json filling_to_json(const BraidWord& w, const FillingResult& result) {
    Json relations = Json::array();
    for (const TorusRelation& rel : result.chart.relations)
        relations.push_back(relation_to_string(rel));
    Json chart = Json::object();
    for (const auto& [id, exps] : result.chart.exponents) {
        Json entry = Json::object();
        for (size_t c = 0; c < result.chart.p_vars.size(); ++c)
            if (exps[c] != 0) entry[var_name(result.chart.p_vars[c])] = exps[c];
        chart["A'" + std::to_string(id)] = entry;
    }
    return Json{{"word", word_to_json(w)},
                {"mutation_sequence", result.compilation.sequence},
                {"final_seed", seed_to_json(result.final_seed)},
                {"relations", relations},
                {"chart", chart}};
}

}  // namespace braidaug
