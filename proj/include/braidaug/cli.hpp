#pragma once

#include <iosfwd>
#include <string>

namespace braidaug {

struct Config {
    std::string braid;
    int n = 0;                    // 0 = infer as max(letter) + 1
    std::string format = "text";  // text | json | dot
    uint64_t seed = 20240801;
    int trials = 20;
    std::string plan_file;
    std::string seq;
};

// Exit codes: 0 ok, 1 check failure, 2 usage error.
int cmd_dga(const Config& cfg, std::ostream& out, std::ostream& err);
int cmd_aug(const Config& cfg, std::ostream& out, std::ostream& err);
int cmd_seed(const Config& cfg, std::ostream& out, std::ostream& err);
int cmd_mutate(const Config& cfg, std::ostream& out, std::ostream& err);
int cmd_filling(const Config& cfg, std::ostream& out, std::ostream& err);
int cmd_census(const Config& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err);

}  // namespace braidaug
