#include <CLI11.hpp>
#include <iostream>

#include "braidaug/algebra.hpp"
#include "braidaug/cli.hpp"

int main(int argc, char** argv) {
    braidaug::gf_check_modulus();
    CLI::App app{"augmentation varieties and cluster seeds of positive braid links"};
    app.require_subcommand(1);

    braidaug::Config cfg;

    auto add_common = [&](CLI::App* sub, bool needs_word) {
        if (needs_word)
            sub->add_option("word", cfg.braid, "braid word, e.g. 1,3,1,2,1,3,1,2")->required();
        sub->add_option("--n", cfg.n, "strand count (default: max letter + 1)");
        sub->add_option("--format", cfg.format, "output format: text, json, dot");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--trials", cfg.trials, "random trials per identity")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* dga = app.add_subcommand("dga", "differentials and augmentation equations");
    add_common(dga, true);
    CLI::App* aug = app.add_subcommand("aug", "augmentation-variety presentation");
    add_common(aug, true);
    CLI::App* seed = app.add_subcommand("seed", "initial cluster seed");
    add_common(seed, true);
    CLI::App* mutate = app.add_subcommand("mutate", "apply a mutation sequence");
    add_common(mutate, true);
    mutate->add_option("--seq", cfg.seq, "mutation sequence in application order")->required();
    CLI::App* filling = app.add_subcommand("filling", "run an admissible filling plan");
    add_common(filling, true);
    filling->add_option("--plan", cfg.plan_file, "plan JSON file")->required();
    CLI::App* census = app.add_subcommand("census", "group all pinch orders by final seed");
    add_common(census, true);
    CLI::App* verify = app.add_subcommand("verify", "run the acceptance suite");
    add_common(verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    if (dga->parsed()) return braidaug::cmd_dga(cfg, std::cout, std::cerr);
    if (aug->parsed()) return braidaug::cmd_aug(cfg, std::cout, std::cerr);
    if (seed->parsed()) return braidaug::cmd_seed(cfg, std::cout, std::cerr);
    if (mutate->parsed()) return braidaug::cmd_mutate(cfg, std::cout, std::cerr);
    if (filling->parsed()) return braidaug::cmd_filling(cfg, std::cout, std::cerr);
    if (census->parsed()) return braidaug::cmd_census(cfg, std::cout, std::cerr);
    if (verify->parsed()) return braidaug::cmd_verify(cfg, std::cout, std::cerr);
    return 2;
}
