#include "braidaug/dga.hpp"

namespace braidaug {

const NCPoly& TransferTower::entry(int k, int i, int j) const {
    const NCMatrix& m = levels[size_t(k - 1)];
    return m.at(i - k, j - k);
}

TransferTower transfer_tower(const BraidWord& w) {
    TransferTower tower;
    tower.word = w;
    int n = w.n;
    NCMatrix m1 = nc_identity(n);
    for (int k = 0; k < w.length(); ++k)
        m1 = nc_mat_mul(m1, nc_Z(w.letters[size_t(k)], nc_gen(reeb_b(k + 1)), n));
    tower.levels.push_back(m1);
    for (int k = 1; k < n; ++k) {
        const NCMatrix& prev = tower.levels.back();  // M^(k), indexed by {k..n}
        NCPoly tk = nc_gen(marker_t(k));
        NCMatrix next(n - k);  // M^(k+1), indexed by {k+1..n}
        for (int i = 0; i < n - k; ++i)
            for (int j = 0; j < n - k; ++j)
                next.at(i, j) = nc_add(prev.at(i + 1, j + 1),
                                       nc_mul(prev.at(i + 1, 0), nc_mul(tk, prev.at(0, j + 1))));
        tower.levels.push_back(std::move(next));
    }
    for (const NCMatrix& m : tower.levels) tower.shadows.push_back(nc_mat_abelianize(m));
    return tower;
}

PolyMatrix commutative_transfer(const BraidWord& w) {
    PolyMatrix m = mat_identity(w.n);
    for (int k = 0; k < w.length(); ++k) {
        PolyMatrix z = mat_identity(w.n);
        int i = w.letters[size_t(k)];
        z.at(i - 1, i - 1) = poly_var(reeb_b(k + 1));
        z.at(i - 1, i) = poly_one();
        z.at(i, i - 1) = poly_one();
        z.at(i, i) = poly_zero();
        m = mat_mul(m, z);
    }
    return m;
}

Differentials differentials(const BraidWord& w) {
    TransferTower tower = transfer_tower(w);
    Differentials d;
    d.word = w;
    for (int k = 1; k <= w.n; ++k)
        d.da.push_back(nc_add(tower.entry(k, k, k), nc_gen(marker_t(k), -1)));
    return d;
}

AugPresentation aug_equations(const BraidWord& w) {
    AugPresentation pres;
    pres.word = w;
    PolyMatrix m = commutative_transfer(w);
    LaurentPoly t_prod = poly_one();
    pres.eliminated = poly_one();
    for (int k = 1; k <= w.n; ++k) {
        LaurentPoly minor = principal_minor(m, k);
        t_prod = poly_mul(t_prod, poly_var(marker_t(k), -1));
        pres.equations.push_back(poly_add(minor, t_prod));
        pres.eliminated = poly_mul(pres.eliminated, minor);
        pres.minors.push_back(std::move(minor));
    }
    return pres;
}

AugCheck is_augmentation(const BraidWord& w, const Assignment& pt) {
    AugCheck out;
    GfMatrix m = gfmat_eval(commutative_transfer(w), pt);
    std::vector<Gf> minors;
    for (int k = 1; k <= w.n; ++k) {
        std::vector<int> idx(size_t(k), 0);
        for (int i = 0; i < k; ++i) idx[size_t(i)] = i + 1;
        Gf d = gfmat_submatrix_det(m, idx, idx);
        if (d.is_zero()) return out;
        minors.push_back(d);
    }
    out.ok = true;
    Gf prev{1};
    for (int k = 0; k < w.n; ++k) {
        out.t_values.push_back(gf_mul(prev, gf_inv(minors[size_t(k)])));
        prev = minors[size_t(k)];
    }
    return out;
}

bool quasidet_shadow_check(const BraidWord& w, int trials, std::mt19937_64& rng) {
    if (trials < 1) fail(Errc::BadSyntax, "trials must be at least 1");
    int n = w.n;
    PolyMatrix m = commutative_transfer(w);
    std::vector<LaurentPoly> avoid;
    for (int k = 1; k <= n; ++k) avoid.push_back(principal_minor(m, k));
    std::vector<VarId> vars;
    for (int k = 1; k <= w.length(); ++k) vars.push_back(reeb_b(k));

    for (int trial = 0; trial < trials; ++trial) {
        Assignment pt = random_point(vars, rng, avoid);
        GfMatrix base = gfmat_eval(m, pt);
        AugCheck aug = is_augmentation(w, pt);
        if (!aug.ok) return false;

        // numeric tower with the induced t-values
        std::vector<GfMatrix> tower{base};
        for (int k = 1; k < n; ++k) {
            const GfMatrix& prev = tower.back();
            GfMatrix next(n - k, n - k);
            Gf tk = aug.t_values[size_t(k - 1)];
            for (int i = 0; i < n - k; ++i)
                for (int j = 0; j < n - k; ++j)
                    next.at(i, j) =
                        gf_add(prev.at(i + 1, j + 1),
                               gf_mul(prev.at(i + 1, 0), gf_mul(tk, prev.at(0, j + 1))));
            tower.push_back(std::move(next));
        }

        for (int k = 1; k <= n; ++k)
            for (int i = k; i <= n; ++i)
                for (int j = k; j <= n; ++j) {
                    std::vector<int> rows, cols;
                    for (int r = 1; r < k; ++r) rows.push_back(r), cols.push_back(r);
                    Gf denom = gfmat_submatrix_det(base, rows, cols);
                    if (denom.is_zero()) return false;
                    rows.push_back(i);
                    cols.push_back(j);
                    Gf numer = gfmat_submatrix_det(base, rows, cols);
                    Gf expected = gf_mul(numer, gf_inv(denom));
                    if (!(tower[size_t(k - 1)].at(i - k, j - k) == expected)) return false;
                }
    }
    return true;
}

}  // namespace braidaug
