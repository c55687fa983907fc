#pragma once

#include <set>

#include "braidaug/braid.hpp"
#include "braidaug/dga.hpp"

namespace braidaug {

struct QuiverVertex {
    int id = 0;
    int level = 0;
    bool frozen = false;
    bool active = true;  // cleared when a pinch consumes the vertex
};

// eps2 stores twice the exchange matrix so frozen-frozen half weights stay integral.
struct Quiver {
    std::vector<QuiverVertex> vertices;  // sorted by id
    std::vector<std::vector<int>> eps2;  // skew-symmetric, indexed like vertices

    int index_of(int id) const;
    const QuiverVertex& vertex(int id) const { return vertices[size_t(index_of(id))]; }
    QuiverVertex& vertex(int id) { return vertices[size_t(index_of(id))]; }
    int eps2_at(int id_i, int id_j) const { return eps2[size_t(index_of(id_i))][size_t(index_of(id_j))]; }
};

struct Seed {
    Quiver quiver;
    std::vector<RationalFn> vars;  // parallel to quiver.vertices
    const RationalFn& var_of(int id) const { return vars[size_t(quiver.index_of(id))]; }
};

// One vertex per crossing, on the crossing's level; the last crossing per level
// is frozen. Arrows from the wiring-diagram region pattern.
Quiver initial_quiver(const BraidWord& w);

// A_k = Delta_{i_k}(Z_{i_1}(b_1)...Z_{i_k}(b_k)).
Seed initial_seed(const BraidWord& w);

Quiver mutate_quiver(const Quiver& q, int k);
Seed mutate_seed(const Seed& s, int k);
// Marks NotDivisible exchange divisions if a counter is supplied.
Seed mutate_seed(const Seed& s, int k, int* not_divisible_count);

// seq[0] is applied first.
Seed apply_mutation_sequence(const Seed& s, const std::vector<int>& seq);
Quiver apply_mutation_sequence(const Quiver& q, const std::vector<int>& seq);

// Bijection over unfrozen vertices (consumed ones included, status preserved)
// fixing frozen vertices pointwise; variables matched by frac_eq, eps2 matched on
// pairs not touching consumed vertices. Pre-screened by shared random evaluations.
bool seeds_equal(const Seed& a, const Seed& b, std::mt19937_64& rng);

// p*(X_k) = prod_j A_j^{eps_kj} for unfrozen k.
RationalFn poisson_pullback(const Seed& s, int k);

// Markers kept after reduction, one per link component.
struct ReductionSpec {
    std::set<int> kept;
};

struct ReductionResult {
    Quiver quiver;
    std::vector<LaurentPoly> relations;  // Delta_i + Delta_{i-1} per dropped marker
};

// Dropping t_1 or t_n deletes the level-1 or level-(n-1) frozen vertex; dropping a
// middle t_i merges the level-(i-1) and level-i frozen vertices (rows/columns added).
ReductionResult reduce_marked_points(const Seed& s, const BraidWord& w, const ReductionSpec& r);

}  // namespace braidaug
