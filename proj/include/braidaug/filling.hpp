#pragma once

#include "braidaug/cluster.hpp"

namespace braidaug {

/******** Plans ********/

struct Move {
    enum class Kind { Pinch, BraidMove, RotateForward, RotateBackward };
    Kind kind;
    int pos = 0;  // 1-based position in the current word (Pinch, BraidMove)
};

using Plan = std::vector<Move>;

inline Move pinch(int pos) { return {Move::Kind::Pinch, pos}; }
inline Move braid_move(int pos) { return {Move::Kind::BraidMove, pos}; }
inline Move rotate_forward() { return {Move::Kind::RotateForward, 0}; }
inline Move rotate_backward() { return {Move::Kind::RotateBackward, 0}; }

/******** Ledger ********/

// Ordered unfrozen vertex ids per level; <i, m> is the m-th entry from the left.
struct Ledger {
    std::map<int, std::vector<int>> unfrozen;
    std::set<int> consumed;
    int lookup(int level, int m) const;
};

Ledger initial_ledger(const BraidWord& w);

struct PlanCompilation {
    std::vector<int> sequence;  // application order, adjacent involutive pairs cancelled
    std::set<int> consumed;
};

PlanCompilation compile_mutation_sequence(const BraidWord& w, const Plan& plan);

/******** Matrix scanning ********/

struct PinchScan {
    std::vector<NCMatrix> u_seq;     // U^(k+1) .. U^(l)
    std::vector<NCMatrix> l_seq;     // L^(k-1) .. L^(1)
    std::map<VarId, NCPoly> images;  // every chord of the word
};

PinchScan pinch_scan(const BraidWord& w, int k);

/******** Marked-point motion ********/

// Pushes the diagonal pair (p at level i, p^-1 at level i+1) rightward through
// crossings carrying the given (level, value) entries.
struct MarkerPush {
    std::vector<LaurentPoly> rescaled;
    int plus_level = 0;
    int minus_level = 0;
};

MarkerPush marker_push(int i, VarId p, const std::vector<std::pair<int, LaurentPoly>>& suffix);

/******** Rotation ********/

// Forward rotation beta.s_i -> s_i.beta: chord k of the rotated word stands for
// chord k-1 of the old word, and the moved chord maps to t_i M^(i)_{i,i+1} of the
// rotated word's transfer matrix.
struct RotationMap {
    BraidWord rotated;
    LaurentPoly moved_image;
};

RotationMap rotation_map(const BraidWord& w, RotateDir dir);

// b1 -> b3, b2 -> b2 + b1 b3, b3 -> b1 with ids reused positionally.
std::map<VarId, LaurentPoly> braid_move_map(VarId b1, VarId b2, VarId b3);

/******** Full filling pipeline ********/

struct TorusRelation {
    int level = 0;         // carries t_level with exponent 1
    Monomial monomial;     // the product that equals 1, including t_level
};

struct TorusChart {
    std::vector<TorusRelation> relations;         // one per level 1..n
    std::vector<VarId> p_vars;                    // chart coordinates, sorted
    std::map<VarId, LaurentPoly> chord_images;    // original b_k after t-elimination
    std::map<VarId, LaurentPoly> marker_images;   // original t_j (rotations permute markers)
    std::map<int, std::vector<int>> exponents;    // vertex id -> exponents over p_vars
};

struct FillingResult {
    PlanCompilation compilation;
    Seed final_seed;  // consumed vertices marked inactive
    TorusChart chart;
};

// The plan must pinch every crossing; minimum cobordisms are implicit.
FillingResult run_filling(const BraidWord& w, const Plan& plan);

/******** Seed census ********/

struct SeedPartition {
    std::vector<std::vector<int>> groups;  // indices into the plan list
};

SeedPartition distinct_seeds(const BraidWord& w, const std::vector<Plan>& plans,
                             std::mt19937_64& rng);

Seed final_seed_of_plan(const BraidWord& w, const Plan& plan);

}  // namespace braidaug
