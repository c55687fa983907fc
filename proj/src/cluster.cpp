#include "braidaug/cluster.hpp"

#include <algorithm>
#include <map>

namespace braidaug {

int Quiver::index_of(int id) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return int(i);
    fail(Errc::IndexOutOfRange, "no quiver vertex with id " + std::to_string(id));
}

namespace {

void add_arrow(Quiver& q, int id_from, int id_to, int weight2) {
    int i = q.index_of(id_from), j = q.index_of(id_to);
    q.eps2[size_t(i)][size_t(j)] += weight2;
    q.eps2[size_t(j)][size_t(i)] -= weight2;
}

}  // namespace

Quiver initial_quiver(const BraidWord& w) {
    int l = w.length();
    Quiver q;
    std::map<int, int> last_on_level;  // level -> position of last crossing
    for (int k = 1; k <= l; ++k) last_on_level[w.letters[size_t(k - 1)]] = k;
    for (int k = 1; k <= l; ++k) {
        int level = w.letters[size_t(k - 1)];
        q.vertices.push_back({k, level, last_on_level[level] == k, true});
    }
    q.eps2.assign(size_t(l), std::vector<int>(size_t(l), 0));

    // previous crossing on a level, scanned left to right
    std::map<int, int> prev_on_level;
    for (int k = 1; k <= l; ++k) {
        int level = w.letters[size_t(k - 1)];
        int west = prev_on_level.count(level) ? prev_on_level[level] : 0;
        int east = k;
        for (int nb_level : {level - 1, level + 1}) {
            if (nb_level < 1 || nb_level >= w.n) continue;
            if (!prev_on_level.count(nb_level)) continue;
            int nb = prev_on_level[nb_level];
            add_arrow(q, east, nb, 1);
            if (west) add_arrow(q, nb, west, 1);
        }
        if (west) add_arrow(q, west, east, 2);
        prev_on_level[level] = k;
    }
    return q;
}

Seed initial_seed(const BraidWord& w) {
    Seed s;
    s.quiver = initial_quiver(w);
    PolyMatrix prefix = mat_identity(w.n);
    for (int k = 1; k <= w.length(); ++k) {
        int level = w.letters[size_t(k - 1)];
        PolyMatrix z = mat_identity(w.n);
        z.at(level - 1, level - 1) = poly_var(reeb_b(k));
        z.at(level - 1, level) = poly_one();
        z.at(level, level - 1) = poly_one();
        z.at(level, level) = poly_zero();
        prefix = mat_mul(prefix, z);
        s.vars.push_back(frac_poly(principal_minor(prefix, level)));
    }
    return s;
}

Quiver mutate_quiver(const Quiver& q, int k) {
    int kk = q.index_of(k);
    if (q.vertices[size_t(kk)].frozen) fail(Errc::FrozenVertex, "cannot mutate frozen vertex");
    if (!q.vertices[size_t(kk)].active) fail(Errc::InactiveVertex, "cannot mutate consumed vertex");
    int m = int(q.vertices.size());
    Quiver out = q;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == kk || j == kk) {
                out.eps2[size_t(i)][size_t(j)] = -q.eps2[size_t(i)][size_t(j)];
            } else {
                // row/column k of eps2 is even because k is unfrozen
                int eik = q.eps2[size_t(i)][size_t(kk)] / 2;
                int ekj = q.eps2[size_t(kk)][size_t(j)] / 2;
                int delta = std::max(eik, 0) * std::max(ekj, 0) -
                            std::max(-eik, 0) * std::max(-ekj, 0);
                out.eps2[size_t(i)][size_t(j)] = q.eps2[size_t(i)][size_t(j)] + 2 * delta;
            }
        }
    return out;
}

Seed mutate_seed(const Seed& s, int k) { return mutate_seed(s, k, nullptr); }

Seed mutate_seed(const Seed& s, int k, int* not_divisible_count) {
    int kk = s.quiver.index_of(k);
    if (s.quiver.vertices[size_t(kk)].frozen) fail(Errc::FrozenVertex, "cannot mutate frozen vertex");
    if (!s.quiver.vertices[size_t(kk)].active)
        fail(Errc::InactiveVertex, "cannot mutate consumed vertex");
    RationalFn pos = frac_poly(poly_one());
    RationalFn neg = frac_poly(poly_one());
    for (size_t j = 0; j < s.quiver.vertices.size(); ++j) {
        int e = s.quiver.eps2[size_t(kk)][j] / 2;
        if (e > 0) pos = frac_mul(pos, frac_pow(s.vars[j], e));
        if (e < 0) neg = frac_mul(neg, frac_pow(s.vars[j], -e));
    }
    RationalFn exchanged = frac_div(frac_add(pos, neg), s.vars[size_t(kk)]);
    if (not_divisible_count && !frac_is_poly(exchanged)) ++*not_divisible_count;
    Seed out;
    out.quiver = mutate_quiver(s.quiver, k);
    out.vars = s.vars;
    out.vars[size_t(kk)] = exchanged;
    return out;
}

Seed apply_mutation_sequence(const Seed& s, const std::vector<int>& seq) {
    Seed out = s;
    for (int k : seq) out = mutate_seed(out, k);
    return out;
}

Quiver apply_mutation_sequence(const Quiver& q, const std::vector<int>& seq) {
    Quiver out = q;
    for (int k : seq) out = mutate_quiver(out, k);
    return out;
}

namespace {

using Fingerprint = std::vector<std::pair<bool, Gf>>;  // (defined, value) per point

Fingerprint fingerprint(const RationalFn& f, const std::vector<Assignment>& pts) {
    Fingerprint fp;
    for (const Assignment& pt : pts) {
        Gf den = poly_eval(f.den, pt);
        if (den.is_zero())
            fp.push_back({false, Gf{0}});
        else
            fp.push_back({true, gf_mul(poly_eval(f.num, pt), gf_inv(den))});
    }
    return fp;
}

// undefined entries act as wildcards; the exact frac_eq decides afterwards
bool fp_compatible(const Fingerprint& a, const Fingerprint& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].first && b[i].first && !(a[i].second == b[i].second)) return false;
    return true;
}

struct MatchState {
    const Seed* a;
    const Seed* b;
    std::vector<int> unfrozen_a, unfrozen_b;  // indices into vertices
    std::vector<int> assign;                  // unfrozen_a slot -> unfrozen_b slot or -1
    std::vector<bool> used_b;
    std::vector<Fingerprint> fp_a, fp_b;

    bool eps2_consistent(int slot, int b_slot) const {
        int ai = unfrozen_a[size_t(slot)], bi = unfrozen_b[size_t(b_slot)];
        const QuiverVertex& va = a->quiver.vertices[size_t(ai)];
        if (!va.active) return true;  // arrows at consumed vertices are not compared
        // against frozen vertices (identity on those) and earlier assignments
        for (size_t j = 0; j < a->quiver.vertices.size(); ++j) {
            const QuiverVertex& other = a->quiver.vertices[j];
            if (!other.frozen) continue;
            int bj = b->quiver.index_of(other.id);
            if (a->quiver.eps2[size_t(ai)][j] != b->quiver.eps2[size_t(bi)][size_t(bj)])
                return false;
        }
        for (size_t s = 0; s < assign.size(); ++s) {
            if (assign[s] < 0 || int(s) == slot) continue;
            int aj = unfrozen_a[s];
            if (!a->quiver.vertices[size_t(aj)].active) continue;
            int bj = unfrozen_b[size_t(assign[s])];
            if (a->quiver.eps2[size_t(ai)][size_t(aj)] != b->quiver.eps2[size_t(bi)][size_t(bj)])
                return false;
        }
        return true;
    }

    bool search(size_t slot) {
        if (slot == unfrozen_a.size()) return true;
        int ai = unfrozen_a[slot];
        for (size_t cand = 0; cand < unfrozen_b.size(); ++cand) {
            if (used_b[cand]) continue;
            int bi = unfrozen_b[cand];
            if (a->quiver.vertices[size_t(ai)].active != b->quiver.vertices[size_t(bi)].active)
                continue;
            if (!fp_compatible(fp_a[slot], fp_b[cand])) continue;
            if (!frac_eq(a->vars[size_t(ai)], b->vars[size_t(bi)])) continue;
            assign[slot] = int(cand);
            used_b[cand] = true;
            if (eps2_consistent(int(slot), int(cand)) && search(slot + 1)) return true;
            assign[slot] = -1;
            used_b[cand] = false;
        }
        return false;
    }
};

}  // namespace

bool seeds_equal(const Seed& a, const Seed& b, std::mt19937_64& rng) {
    if (a.quiver.vertices.size() != b.quiver.vertices.size()) return false;

    // frozen vertices are canonical per level and compared pointwise
    std::vector<int> frozen_ids;
    for (const QuiverVertex& v : a.quiver.vertices)
        if (v.frozen) frozen_ids.push_back(v.id);
    for (int id : frozen_ids) {
        bool found = false;
        for (const QuiverVertex& v : b.quiver.vertices)
            if (v.id == id && v.frozen) found = true;
        if (!found) return false;
        if (!frac_eq(a.var_of(id), b.var_of(id))) return false;
    }
    for (int id1 : frozen_ids)
        for (int id2 : frozen_ids)
            if (a.quiver.eps2_at(id1, id2) != b.quiver.eps2_at(id1, id2)) return false;

    // shared random points over all variables present
    std::vector<VarId> vars;
    for (const RationalFn& f : a.vars)
        for (VarId v : poly_vars(poly_add(f.num, f.den))) vars.push_back(v);
    for (const RationalFn& f : b.vars)
        for (VarId v : poly_vars(poly_add(f.num, f.den))) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    std::vector<Assignment> pts;
    for (int i = 0; i < 5; ++i) pts.push_back(random_point(vars, rng));

    MatchState st;
    st.a = &a;
    st.b = &b;
    for (size_t i = 0; i < a.quiver.vertices.size(); ++i)
        if (!a.quiver.vertices[i].frozen) st.unfrozen_a.push_back(int(i));
    for (size_t i = 0; i < b.quiver.vertices.size(); ++i)
        if (!b.quiver.vertices[i].frozen) st.unfrozen_b.push_back(int(i));
    if (st.unfrozen_a.size() != st.unfrozen_b.size()) return false;
    for (int i : st.unfrozen_a) st.fp_a.push_back(fingerprint(a.vars[size_t(i)], pts));
    for (int i : st.unfrozen_b) st.fp_b.push_back(fingerprint(b.vars[size_t(i)], pts));
    st.assign.assign(st.unfrozen_a.size(), -1);
    st.used_b.assign(st.unfrozen_b.size(), false);
    return st.search(0);
}

RationalFn poisson_pullback(const Seed& s, int k) {
    int kk = s.quiver.index_of(k);
    if (s.quiver.vertices[size_t(kk)].frozen)
        fail(Errc::FrozenVertex, "poisson_pullback at a frozen vertex");
    RationalFn out = frac_poly(poly_one());
    for (size_t j = 0; j < s.quiver.vertices.size(); ++j) {
        int e = s.quiver.eps2[size_t(kk)][j] / 2;
        if (e != 0) out = frac_mul(out, frac_pow(s.vars[j], e));
    }
    return out;
}

namespace {

void delete_vertex(Quiver& q, int id) {
    int idx = q.index_of(id);
    q.vertices.erase(q.vertices.begin() + idx);
    q.eps2.erase(q.eps2.begin() + idx);
    for (auto& row : q.eps2) row.erase(row.begin() + idx);
}

}  // namespace

ReductionResult reduce_marked_points(const Seed& s, const BraidWord& w, const ReductionSpec& r) {
    LinkStats stats = link_stats(w);
    for (int i : r.kept)
        if (i < 1 || i > w.n) fail(Errc::InvalidReduction, "kept marker out of range");
    if (int(r.kept.size()) != stats.components)
        fail(Errc::InvalidReduction, "need exactly one kept marker per link component");
    // component of strand j = cycle of the closure permutation containing j
    std::vector<int> component(size_t(w.n), -1);
    int comp = 0;
    for (int i = 0; i < w.n; ++i) {
        if (component[size_t(i)] >= 0) continue;
        for (int j = i; component[size_t(j)] < 0; j = stats.permutation[size_t(j)] - 1)
            component[size_t(j)] = comp;
        ++comp;
    }
    std::set<int> seen;
    for (int i : r.kept) {
        int c = component[size_t(i - 1)];
        if (seen.count(c)) fail(Errc::InvalidReduction, "two kept markers on one component");
        seen.insert(c);
    }

    ReductionResult out;
    out.quiver = s.quiver;
    PolyMatrix m = commutative_transfer(w);
    std::vector<LaurentPoly> minors{poly_one()};  // Delta_0 = 1
    for (int k = 1; k <= w.n; ++k) minors.push_back(principal_minor(m, k));

    // slot m holds the vertex currently carrying A_m; 0 once it is forced to 1
    std::vector<int> slot(size_t(w.n), 0);
    for (const QuiverVertex& v : s.quiver.vertices)
        if (v.frozen && v.level >= 1 && v.level < w.n) slot[size_t(v.level)] = v.id;

    auto erase_slot_vertex = [&](int id) {
        delete_vertex(out.quiver, id);
        for (int& sl : slot)
            if (sl == id) sl = 0;
    };

    for (int i = 1; i <= w.n; ++i) {
        if (r.kept.count(i)) continue;
        out.relations.push_back(poly_add(minors[size_t(i)], minors[size_t(i - 1)]));
        if (i == 1 || i == w.n) {
            int target = slot[size_t(i == 1 ? 1 : w.n - 1)];
            if (target) erase_slot_vertex(target);
        } else {
            int va = slot[size_t(i - 1)], vb = slot[size_t(i)];
            if (va && vb && va != vb) {
                int ia = out.quiver.index_of(va), ib = out.quiver.index_of(vb);
                for (size_t j = 0; j < out.quiver.vertices.size(); ++j) {
                    out.quiver.eps2[size_t(ia)][j] += out.quiver.eps2[size_t(ib)][j];
                    out.quiver.eps2[j][size_t(ia)] += out.quiver.eps2[j][size_t(ib)];
                }
                out.quiver.eps2[size_t(ia)][size_t(ia)] = 0;
                delete_vertex(out.quiver, vb);
                for (int& sl : slot)
                    if (sl == vb) sl = va;
            } else if (va != vb) {
                // one side already forced to 1, so the other is as well
                int alive = va ? va : vb;
                erase_slot_vertex(alive);
            }
        }
    }
    return out;
}

}  // namespace braidaug
