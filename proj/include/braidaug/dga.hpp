#pragma once

#include "braidaug/braid.hpp"
#include "braidaug/ncalg.hpp"

namespace braidaug {

// M^(1) = Z_{i_1}(b_1)...Z_{i_l}(b_l) and the recursion
// M^(k+1)_{ij} = M^(k)_{ij} + M^(k)_{ik} t_k M^(k)_{kj}, together with
// commutative shadows. level_matrix(k) is (n-k+1)x(n-k+1), indexed by {k..n}.
struct TransferTower {
    BraidWord word;
    std::vector<NCMatrix> levels;       // levels[k-1] = M^(k), k = 1..n
    std::vector<PolyMatrix> shadows;    // abelianized
    const NCPoly& entry(int k, int i, int j) const;  // 1-based, k <= i, j <= n
};

TransferTower transfer_tower(const BraidWord& w);

// Commutative shadow of M^(1) alone (no tower).
PolyMatrix commutative_transfer(const BraidWord& w);

// da_k = M^(k)_{kk} + t_k^-1 for k = 1..n; degree-0 chords have zero differential.
struct Differentials {
    BraidWord word;
    std::vector<NCPoly> da;  // da[k-1] for cusp chord a_k
};

Differentials differentials(const BraidWord& w);

// Equations E_m = Delta_m(M) + prod_{k<=m} t_k^-1 over the commutative shadow,
// plus the eliminated polynomial prod_m Delta_m(M) in b-variables only.
struct AugPresentation {
    BraidWord word;
    std::vector<LaurentPoly> minors;     // Delta_m(M), m = 1..n
    std::vector<LaurentPoly> equations;  // E_m
    LaurentPoly eliminated;
};

AugPresentation aug_equations(const BraidWord& w);

struct AugCheck {
    bool ok = false;
    std::vector<Gf> t_values;  // t_m = Delta_{m-1}/Delta_m when ok
};

// pt assigns every b-variable of the word.
AugCheck is_augmentation(const BraidWord& w, const Assignment& pt);

// Verifies the commutative shadow of M^(k)_{ij}, with t_m = Delta_{m-1}/Delta_m,
// against the ratio det(rows {1..k-1,i}, cols {1..k-1,j}) / det(rows/cols {1..k-1})
// at random points avoiding all Delta_m = 0.
bool quasidet_shadow_check(const BraidWord& w, int trials, std::mt19937_64& rng);

}  // namespace braidaug
