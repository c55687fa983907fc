#include "braidaug/cli.hpp"

#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "braidaug/acceptance.hpp"
#include "braidaug/io.hpp"

namespace braidaug {

namespace {

BraidWord parse_input_word(const Config& cfg) { return parse_braid(cfg.braid, cfg.n); }

int usage_error(std::ostream& err, const std::string& msg) {
    err << "error: " << msg << "\n";
    return 2;
}

int check_error(std::ostream& err, const std::string& msg) {
    err << "error: " << msg << "\n";
    return 1;
}

std::vector<int> parse_sequence(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) fail(Errc::BadSyntax, "empty entry in mutation sequence");
        out.push_back(std::stoi(tok));
    }
    return out;
}

void print_seed_text(const Seed& s, std::ostream& out) {
    for (size_t i = 0; i < s.quiver.vertices.size(); ++i) {
        const QuiverVertex& v = s.quiver.vertices[i];
        out << "A" << v.id << (v.frozen ? " (frozen, level " : " (level ") << v.level
            << ") = " << frac_to_string(s.vars[i]) << "\n";
    }
    out << "arrows:";
    bool any = false;
    for (size_t i = 0; i < s.quiver.vertices.size(); ++i)
        for (size_t j = 0; j < s.quiver.vertices.size(); ++j) {
            int e = s.quiver.eps2[i][j];
            if (e <= 0) continue;
            any = true;
            out << " " << s.quiver.vertices[i].id << "->" << s.quiver.vertices[j].id;
            if (e != 2) out << "(" << e << "/2)";
        }
    out << (any ? "\n" : " none\n");
}

}  // namespace

int cmd_dga(const Config& cfg, std::ostream& out, std::ostream& err) {
    try {
        BraidWord w = parse_input_word(cfg);
        if (cfg.format == "json") {
            out << dga_to_json(w).dump(2) << "\n";
        } else {
            Differentials d = differentials(w);
            AugPresentation pres = aug_equations(w);
            for (size_t k = 0; k < d.da.size(); ++k)
                out << "da" << k + 1 << " = " << nc_to_string(d.da[k]) << "\n";
            for (size_t m = 0; m < pres.equations.size(); ++m)
                out << "E" << m + 1 << " = " << poly_to_string(pres.equations[m]) << "\n";
            out << "eliminated = " << poly_to_string(pres.eliminated) << "\n";
        }
        return 0;
    } catch (const Error& e) {
        return usage_error(err, e.what());
    }
}

int cmd_aug(const Config& cfg, std::ostream& out, std::ostream& err) {
    try {
        BraidWord w = parse_input_word(cfg);
        if (cfg.format == "json") {
            out << aug_to_json(w).dump(2) << "\n";
        } else {
            AugPresentation pres = aug_equations(w);
            for (size_t m = 0; m < pres.minors.size(); ++m)
                out << "Delta" << m + 1 << " = " << poly_to_string(pres.minors[m]) << "\n";
            out << "eliminated = " << poly_to_string(pres.eliminated) << "\n";
        }
        return 0;
    } catch (const Error& e) {
        return usage_error(err, e.what());
    }
}

int cmd_seed(const Config& cfg, std::ostream& out, std::ostream& err) {
    try {
        BraidWord w = parse_input_word(cfg);
        Seed s = initial_seed(w);
        if (cfg.format == "json")
            out << seed_to_json(s).dump(2) << "\n";
        else if (cfg.format == "dot")
            out << quiver_to_dot(s.quiver);
        else
            print_seed_text(s, out);
        return 0;
    } catch (const Error& e) {
        return usage_error(err, e.what());
    }
}

int cmd_mutate(const Config& cfg, std::ostream& out, std::ostream& err) {
    BraidWord w;
    std::vector<int> seq;
    try {
        w = parse_input_word(cfg);
        seq = parse_sequence(cfg.seq);
    } catch (const Error& e) {
        return usage_error(err, e.what());
    }
    try {
        Seed s = apply_mutation_sequence(initial_seed(w), seq);
        if (cfg.format == "json")
            out << seed_to_json(s).dump(2) << "\n";
        else if (cfg.format == "dot")
            out << quiver_to_dot(s.quiver);
        else {
            out << "applied (in application order):";
            for (int k : seq) out << " " << k;
            out << "\n";
            print_seed_text(s, out);
        }
        return 0;
    } catch (const Error& e) {
        return check_error(err, e.what());
    }
}

int cmd_filling(const Config& cfg, std::ostream& out, std::ostream& err) {
    BraidWord w;
    Plan plan;
    try {
        w = parse_input_word(cfg);
        std::ifstream in(cfg.plan_file);
        if (!in) fail(Errc::BadSyntax, "cannot open plan file '" + cfg.plan_file + "'");
        Json j = Json::parse(in, nullptr, true);
        plan = plan_from_json(j);
    } catch (const Json::exception& e) {
        return usage_error(err, e.what());
    } catch (const Error& e) {
        return usage_error(err, e.what());
    }
    try {
        FillingResult result = run_filling(w, plan);
        if (cfg.format == "json") {
            out << filling_to_json(w, result).dump(2) << "\n";
        } else {
            out << "mutation sequence (application order; the usual composition reads "
                   "right to left):";
            for (int k : result.compilation.sequence) out << " " << k;
            out << "\n";
            print_seed_text(result.final_seed, out);
            for (const TorusRelation& rel : result.chart.relations)
                out << "relation: " << relation_to_string(rel) << "\n";
            for (const auto& [id, exps] : result.chart.exponents) {
                out << "A'" << id << " =";
                bool any = false;
                for (size_t col = 0; col < result.chart.p_vars.size(); ++col)
                    if (exps[col] != 0) {
                        out << " " << var_name(result.chart.p_vars[col]);
                        if (exps[col] != 1) out << "^" << exps[col];
                        any = true;
                    }
                out << (any ? "\n" : " 1\n");
            }
        }
        return 0;
    } catch (const Error& e) {
        return check_error(err, e.what());
    }
}

int cmd_census(const Config& cfg, std::ostream& out, std::ostream& err) {
    BraidWord w;
    try {
        w = parse_input_word(cfg);
        if (w.length() > 7) fail(Errc::BadSyntax, "census supports words up to length 7");
    } catch (const Error& e) {
        return usage_error(err, e.what());
    }
    try {
        std::vector<int> order(size_t(w.length()), 0);
        std::iota(order.begin(), order.end(), 1);
        std::vector<Plan> plans;
        std::vector<std::vector<int>> orders;
        do {
            Plan plan;
            std::vector<bool> pinched(size_t(w.length() + 1), false);
            for (int original : order) {
                int pos = 0;
                for (int j = 1; j <= original; ++j) pos += !pinched[size_t(j)];
                plan.push_back(pinch(pos));
                pinched[size_t(original)] = true;
            }
            plans.push_back(plan);
            orders.push_back(order);
        } while (std::next_permutation(order.begin(), order.end()));

        std::mt19937_64 rng(cfg.seed);
        SeedPartition partition = distinct_seeds(w, plans, rng);
        Json groups = Json::array();
        for (const std::vector<int>& group : partition.groups) {
            Json entry = Json::object();
            entry["size"] = group.size();
            entry["representative_order"] = orders[size_t(group[0])];
            groups.push_back(entry);
        }
        Json output{{"word", word_to_json(w)},
                    {"plans", plans.size()},
                    {"groups", partition.groups.size()},
                    {"group_details", groups}};
        if (cfg.format == "json") {
            out << output.dump(2) << "\n";
        } else {
            out << "plans: " << plans.size() << "\n";
            out << "distinct seeds: " << partition.groups.size() << "\n";
            for (const std::vector<int>& group : partition.groups) {
                out << "group of " << group.size() << ", pinch order:";
                for (int original : orders[size_t(group[0])]) out << " " << original;
                out << "\n";
            }
        }
        return 0;
    } catch (const Error& e) {
        return check_error(err, e.what());
    }
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream&) {
    std::vector<acceptance::CriterionResult> results =
        acceptance::run_all(cfg.seed, cfg.trials);
    bool all = true;
    for (const acceptance::CriterionResult& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << " criterion " << r.number << ": " << r.name;
        if (!r.passed) out << " -- " << r.detail;
        out << "\n";
        all = all && r.passed;
    }
    return all ? 0 : 1;
}

}  // namespace braidaug
