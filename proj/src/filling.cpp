#include "braidaug/filling.hpp"

#include <algorithm>

namespace braidaug {

int Ledger::lookup(int level, int m) const {
    auto it = unfrozen.find(level);
    if (it == unfrozen.end() || m < 1 || m > int(it->second.size()))
        fail(Errc::LedgerUnderflow, "no ledger entry <" + std::to_string(level) + "," +
                                        std::to_string(m) + ">");
    return it->second[size_t(m - 1)];
}

Ledger initial_ledger(const BraidWord& w) {
    Ledger ledger;
    std::map<int, int> last;
    for (int k = 1; k <= w.length(); ++k) last[w.letters[size_t(k - 1)]] = k;
    for (int k = 1; k <= w.length(); ++k) {
        int level = w.letters[size_t(k - 1)];
        if (last[level] != k)
            ledger.unfrozen[level].push_back(k);
        else
            ledger.unfrozen.try_emplace(level);
    }
    return ledger;
}

namespace {

/******** Marked-pair motion ********/

struct PairPos {
    int plus = 0;   // level carrying p
    int minus = 0;  // level carrying p^-1
};

// Push the pair rightward through one crossing on the given level; returns the
// exponent of p acquired by the crossing value, and updates the pair position.
int push_past_crossing(PairPos& pos, int level) {
    int e = (level == pos.plus) - (level == pos.minus) - (level + 1 == pos.plus) +
            (level + 1 == pos.minus);
    if (pos.plus == level)
        pos.plus = level + 1;
    else if (pos.plus == level + 1)
        pos.plus = level;
    if (pos.minus == level)
        pos.minus = level + 1;
    else if (pos.minus == level + 1)
        pos.minus = level;
    return e;
}

/******** Evolving decorated diagram ********/

// A crossing carrying a chord variable, or a resolved crossing carrying the
// marked-curve pair (p at level plus, p^-1 at level minus).
struct Item {
    bool is_pair = false;
    int level = 0;  // crossing level, or plus-level of the pair
    int minus_level = 0;
    VarId var;
};

NCMatrix item_pair_diag(const Item& item, int n, bool inverse) {
    NCMatrix m = nc_identity(n);
    m.at(item.level - 1, item.level - 1) = nc_gen(item.var, inverse ? -1 : 1);
    m.at(item.minus_level - 1, item.minus_level - 1) = nc_gen(item.var, inverse ? 1 : -1);
    return m;
}

struct Executor {
    int n = 0;
    std::vector<Item> items;
    Ledger ledger;
    std::vector<int> raw_sequence;
    bool track = false;
    std::map<VarId, LaurentPoly> sigma;  // original chords -> current expressions

    int crossing_count() const {
        int c = 0;
        for (const Item& it : items) c += !it.is_pair;
        return c;
    }

    int crossing_item(int pos) const {  // 1-based word position -> item index
        int seen = 0;
        for (size_t i = 0; i < items.size(); ++i) {
            if (items[i].is_pair) continue;
            if (++seen == pos) return int(i);
        }
        fail(Errc::InvalidMove, "word position " + std::to_string(pos) + " out of range");
    }

    std::vector<int> word_letters() const {
        std::vector<int> out;
        for (const Item& it : items)
            if (!it.is_pair) out.push_back(it.level);
        return out;
    }

    void substitute(const std::map<VarId, LaurentPoly>& images) {
        for (auto& [g, expr] : sigma) expr = poly_subst(expr, images);
    }

    void emit(int vertex) { raw_sequence.push_back(vertex); }

    void do_pinch(int pos);
    void do_braid_move(int pos);
    void do_rotate_forward();
    void do_rotate_backward();
    void run(const Plan& plan);
};

/******** Scanning over a decorated item list ********/

struct ScanResult {
    std::vector<NCMatrix> u_seq, l_seq;
    std::map<VarId, NCPoly> images;
};

// Pinch at item index c; records images of every chord in the diagram.
ScanResult scan_items(const std::vector<Item>& items, int n, int c, VarId p) {
    ScanResult out;
    int i = items[size_t(c)].level;
    out.images[items[size_t(c)].var] = nc_gen(p);

    NCMatrix u(n);
    u.at(i - 1, i) = nc_gen(p, -1);
    for (size_t idx = size_t(c) + 1; idx < items.size(); ++idx) {
        const Item& item = items[idx];
        if (item.is_pair) {
            u = nc_truncate(nc_mat_mul(item_pair_diag(item, n, true),
                                       nc_mat_mul(u, item_pair_diag(item, n, false))),
                            TruncSide::Upper);
            continue;
        }
        out.u_seq.push_back(u);
        NCPoly image = nc_add(nc_gen(item.var), u.at(item.level - 1, item.level));
        out.images[item.var] = image;
        u = nc_truncate(nc_mat_mul(nc_Z_inv(item.level, image, n),
                                   nc_mat_mul(u, nc_Z(item.level, nc_gen(item.var), n))),
                        TruncSide::Upper);
    }

    NCMatrix l(n);
    l.at(i, i - 1) = nc_gen(p, -1);
    for (int idx = c - 1; idx >= 0; --idx) {
        const Item& item = items[size_t(idx)];
        if (item.is_pair) {
            l = nc_truncate(nc_mat_mul(item_pair_diag(item, n, false),
                                       nc_mat_mul(l, item_pair_diag(item, n, true))),
                            TruncSide::Lower);
            continue;
        }
        out.l_seq.push_back(l);
        NCPoly image = nc_add(nc_gen(item.var), l.at(item.level, item.level - 1));
        out.images[item.var] = image;
        l = nc_truncate(nc_mat_mul(nc_Z(item.level, nc_gen(item.var), n),
                                   nc_mat_mul(l, nc_Z_inv(item.level, image, n))),
                        TruncSide::Lower);
    }
    return out;
}

/******** Moves ********/

void Executor::do_pinch(int pos) {
    int c = crossing_item(pos);
    int level = items[size_t(c)].level;
    std::vector<int> letters = word_letters();

    // V_1 .. V_{k-1} then W_{k-1} .. W_1 in application order
    std::vector<int> tcount(size_t(pos), 0);
    for (int j = 1; j < pos; ++j)
        for (int m = j + 1; m <= pos; ++m)
            if (letters[size_t(m - 1)] == letters[size_t(j - 1)]) ++tcount[size_t(j - 1)];
    for (int j = 1; j < pos; ++j)
        for (int m = 1; m <= tcount[size_t(j - 1)]; ++m)
            emit(ledger.lookup(letters[size_t(j - 1)], m));
    for (int j = pos - 1; j >= 1; --j) {
        int low = letters[size_t(j - 1)] == level ? 2 : 1;
        for (int m = tcount[size_t(j - 1)]; m >= low; --m)
            emit(ledger.lookup(letters[size_t(j - 1)], m));
    }

    // the first unfrozen vertex on the pinched level is consumed, if any remains
    auto list = ledger.unfrozen.find(level);
    if (list != ledger.unfrozen.end() && !list->second.empty()) {
        ledger.consumed.insert(list->second.front());
        list->second.erase(list->second.begin());
    }

    VarId chord = items[size_t(c)].var;
    VarId curve = curve_p(chord.index);
    if (track) {
        ScanResult scan = scan_items(items, n, c, curve);
        std::map<VarId, LaurentPoly> images;
        for (const auto& [var, image] : scan.images) images[var] = nc_abelianize(image);
        substitute(images);
    }
    items[size_t(c)] = {true, level, level + 1, curve};
}

void Executor::do_braid_move(int pos) {
    std::vector<int> letters = word_letters();
    if (pos < 1 || pos + 2 > int(letters.size()))
        fail(Errc::InvalidMove, "braid move position out of range");
    int i = letters[size_t(pos - 1)], j = letters[size_t(pos)];
    if (letters[size_t(pos + 1)] != i || std::abs(i - j) != 1)
        fail(Errc::PatternMismatch, "no braid-move pattern at position " + std::to_string(pos));

    int c1 = crossing_item(pos), c3 = crossing_item(pos + 2);

    // marked pairs inside the triple are pushed out to its right first
    for (int idx = c1 + 1; idx < c3;) {
        if (!items[size_t(idx)].is_pair) {
            ++idx;
            continue;
        }
        Item pair = items[size_t(idx)];
        PairPos pp{pair.level, pair.minus_level};
        std::map<VarId, LaurentPoly> images;
        for (int m = idx + 1; m <= c3; ++m) {
            if (items[size_t(m)].is_pair) continue;
            int e = push_past_crossing(pp, items[size_t(m)].level);
            if (e != 0)
                // new chord coordinate = p^e * old, so old maps to p^-e * reused id
                images[items[size_t(m)].var] = poly_from_mono(
                    mono_mul(mono_var(pair.var, -e), mono_var(items[size_t(m)].var)));
        }
        if (track && !images.empty()) substitute(images);
        Item moved{true, pp.plus, pp.minus, pair.var};
        items.erase(items.begin() + idx);
        items.insert(items.begin() + c3, moved);  // c3 already shifted by the erase
        c1 = crossing_item(pos);
        c3 = crossing_item(pos + 2);
    }
    int c2 = crossing_item(pos + 1);

    int r = 0;
    for (int m = 1; m <= pos; ++m) r += letters[size_t(m - 1)] == i;
    int v = ledger.lookup(i, r);
    emit(v);

    items[size_t(c1)].level = j;
    items[size_t(c2)].level = i;
    items[size_t(c3)].level = j;

    std::vector<int>& from = ledger.unfrozen[i];
    from.erase(std::find(from.begin(), from.end(), v));
    std::vector<int> new_letters = word_letters();
    int s = 0;
    for (int m = 1; m <= pos; ++m) s += new_letters[size_t(m - 1)] == j;
    std::vector<int>& to = ledger.unfrozen[j];
    if (s < 1 || s > int(to.size()) + 1)
        fail(Errc::LedgerUnderflow, "braid move reinsertion index out of range");
    to.insert(to.begin() + (s - 1), v);

    if (track) {
        VarId x1 = items[size_t(c1)].var, x2 = items[size_t(c2)].var, x3 = items[size_t(c3)].var;
        substitute(braid_move_map(x1, x2, x3));
    }
}

void Executor::do_rotate_forward() {
    int last = -1;
    for (size_t idx = 0; idx < items.size(); ++idx)
        if (!items[idx].is_pair) last = int(idx);
    if (last < 0) fail(Errc::EmptyWord, "cannot rotate the empty word");
    int level = items[size_t(last)].level;

    auto list = ledger.unfrozen.find(level);
    if (list != ledger.unfrozen.end())
        for (auto it = list->second.rbegin(); it != list->second.rend(); ++it) emit(*it);

    // the crossing first slides right through any marked pairs in its way,
    // rescaling its coordinate and swapping the pair levels
    for (size_t idx = size_t(last) + 1; idx < items.size(); ++idx) {
        Item& pair = items[idx];
        PairPos pp{pair.level, pair.minus_level};
        int e = push_past_crossing(pp, level);
        pair.level = pp.plus;
        pair.minus_level = pp.minus;
        if (track && e != 0)
            substitute({{items[size_t(last)].var,
                         poly_from_mono(mono_mul(mono_var(pair.var, -e),
                                                 mono_var(items[size_t(last)].var)))}});
    }

    Item moved = items[size_t(last)];
    items.erase(items.begin() + last);
    items.insert(items.begin(), moved);

    if (track) {
        // commutative decorated transfer matrix of the rotated diagram
        PolyMatrix m = mat_identity(n);
        for (const Item& item : items) {
            PolyMatrix f = mat_identity(n);
            if (item.is_pair) {
                f.at(item.level - 1, item.level - 1) = poly_var(item.var);
                f.at(item.minus_level - 1, item.minus_level - 1) = poly_var(item.var, -1);
            } else {
                f.at(item.level - 1, item.level - 1) = poly_var(item.var);
                f.at(item.level - 1, item.level) = poly_one();
                f.at(item.level, item.level - 1) = poly_one();
                f.at(item.level, item.level) = poly_zero();
            }
            m = mat_mul(m, f);
        }
        for (int k = 1; k < level; ++k) {
            PolyMatrix next(n - k, n - k);
            LaurentPoly tk = poly_var(marker_t(k));
            for (int a = 0; a < n - k; ++a)
                for (int b = 0; b < n - k; ++b)
                    next.at(a, b) =
                        poly_add(m.at(a + 1, b + 1),
                                 poly_mul(poly_mul(m.at(a + 1, 0), tk), m.at(0, b + 1)));
            m = std::move(next);
        }
        LaurentPoly image = poly_mul(poly_var(marker_t(level)), m.at(0, 1));
        // the crossing passes between two cusps, exchanging their markers
        substitute({{moved.var, image},
                    {marker_t(level), poly_var(marker_t(level + 1))},
                    {marker_t(level + 1), poly_var(marker_t(level))}});
    }
}

void Executor::do_rotate_backward() {
    if (track) fail(Errc::BackwardUnsupported, "backward rotation has no chord-level map");
    int first = -1;
    for (size_t idx = 0; idx < items.size(); ++idx)
        if (!items[idx].is_pair) {
            first = int(idx);
            break;
        }
    if (first < 0) fail(Errc::EmptyWord, "cannot rotate the empty word");
    int level = items[size_t(first)].level;
    auto list = ledger.unfrozen.find(level);
    if (list != ledger.unfrozen.end())
        for (int id : list->second) emit(id);
    Item moved = items[size_t(first)];
    items.erase(items.begin() + first);
    items.push_back(moved);
}

void Executor::run(const Plan& plan) {
    for (const Move& mv : plan) {
        switch (mv.kind) {
            case Move::Kind::Pinch: do_pinch(mv.pos); break;
            case Move::Kind::BraidMove: do_braid_move(mv.pos); break;
            case Move::Kind::RotateForward: do_rotate_forward(); break;
            case Move::Kind::RotateBackward: do_rotate_backward(); break;
        }
    }
}

std::vector<int> cancel_involutions(const std::vector<int>& seq) {
    std::vector<int> out;
    for (int k : seq) {
        if (!out.empty() && out.back() == k)
            out.pop_back();
        else
            out.push_back(k);
    }
    return out;
}

Executor make_executor(const BraidWord& w, bool track) {
    Executor ex;
    ex.n = w.n;
    ex.track = track;
    for (int k = 1; k <= w.length(); ++k)
        ex.items.push_back({false, w.letters[size_t(k - 1)], 0, reeb_b(k)});
    ex.ledger = initial_ledger(w);
    if (track) {
        for (int k = 1; k <= w.length(); ++k) ex.sigma[reeb_b(k)] = poly_var(reeb_b(k));
        for (int j = 1; j <= w.n; ++j) ex.sigma[marker_t(j)] = poly_var(marker_t(j));
    }
    return ex;
}

}  // namespace

PlanCompilation compile_mutation_sequence(const BraidWord& w, const Plan& plan) {
    Executor ex = make_executor(w, false);
    ex.run(plan);
    return {cancel_involutions(ex.raw_sequence), ex.ledger.consumed};
}

PinchScan pinch_scan(const BraidWord& w, int k) {
    if (k < 1 || k > w.length()) fail(Errc::IndexOutOfRange, "pinch position out of range");
    std::vector<Item> items;
    for (int m = 1; m <= w.length(); ++m)
        items.push_back({false, w.letters[size_t(m - 1)], 0, reeb_b(m)});
    ScanResult scan = scan_items(items, w.n, k - 1, curve_p(k));
    return {scan.u_seq, scan.l_seq, scan.images};
}

MarkerPush marker_push(int i, VarId p,
                       const std::vector<std::pair<int, LaurentPoly>>& suffix) {
    PairPos pos{i, i + 1};
    MarkerPush out;
    for (const auto& [level, value] : suffix) {
        int e = push_past_crossing(pos, level);
        out.rescaled.push_back(poly_mul(value, mono_var(p, e)));
    }
    out.plus_level = pos.plus;
    out.minus_level = pos.minus;
    return out;
}

RotationMap rotation_map(const BraidWord& w, RotateDir dir) {
    if (dir != RotateDir::LastToFront)
        fail(Errc::BackwardUnsupported, "only forward rotation has a chord-level map");
    if (w.letters.empty()) fail(Errc::EmptyWord, "cannot rotate the empty word");
    Executor ex = make_executor(w, true);
    ex.do_rotate_forward();
    RotationMap out;
    out.rotated = rotate_word(w, RotateDir::LastToFront);
    out.moved_image = ex.sigma.at(reeb_b(w.length()));
    return out;
}

std::map<VarId, LaurentPoly> braid_move_map(VarId b1, VarId b2, VarId b3) {
    std::map<VarId, LaurentPoly> images;
    images[b1] = poly_var(b3);
    images[b2] = poly_add(poly_var(b2), poly_mul(poly_var(b1), poly_var(b3)));
    images[b3] = poly_var(b1);
    return images;
}

FillingResult run_filling(const BraidWord& w, const Plan& plan) {
    Executor ex = make_executor(w, true);
    ex.run(plan);
    if (ex.crossing_count() != 0)
        fail(Errc::InvalidMove, "plan must pinch every crossing");

    FillingResult out;
    out.compilation = {cancel_involutions(ex.raw_sequence), ex.ledger.consumed};

    // one t-minimum relation per level
    std::vector<Monomial> tau(size_t(w.n + 1), mono_one());
    for (const Item& item : ex.items) {
        tau[size_t(item.level)] = mono_mul(tau[size_t(item.level)], mono_var(item.var));
        if (item.minus_level >= 1 && item.minus_level <= w.n)
            tau[size_t(item.minus_level)] =
                mono_mul(tau[size_t(item.minus_level)], mono_var(item.var, -1));
    }
    std::map<VarId, LaurentPoly> t_solution;
    for (int j = 1; j <= w.n; ++j) {
        Monomial rel = mono_mul(tau[size_t(j)], mono_var(marker_t(j)));
        for (const VarPow& f : rel.factors)
            if (f.var.kind == VarKind::MarkerT && !(f.var == marker_t(j) && f.exp == 1))
                fail(Errc::UnsolvableRelations, "relation has an unexpected marker");
        out.chart.relations.push_back({j, rel});
        t_solution[marker_t(j)] = poly_from_mono(mono_inv(tau[size_t(j)]));
    }

    for (auto& [g, expr] : ex.sigma) expr = poly_subst(expr, t_solution);
    for (const auto& [g, expr] : ex.sigma)
        (g.kind == VarKind::ReebB ? out.chart.chord_images : out.chart.marker_images)[g] = expr;
    for (const Item& item : ex.items) out.chart.p_vars.push_back(item.var);
    std::sort(out.chart.p_vars.begin(), out.chart.p_vars.end());

    out.final_seed = apply_mutation_sequence(initial_seed(w), out.compilation.sequence);
    for (QuiverVertex& v : out.final_seed.quiver.vertices)
        if (out.compilation.consumed.count(v.id)) v.active = false;

    for (const QuiverVertex& v : out.final_seed.quiver.vertices) {
        const RationalFn& var = out.final_seed.var_of(v.id);
        LaurentPoly num = poly_subst(var.num, ex.sigma);
        LaurentPoly den = poly_subst(var.den, ex.sigma);
        std::optional<LaurentPoly> ratio = poly_div_exact(num, den);
        if (!ratio || !ratio->is_monomial())
            fail(Errc::NonMonomial,
                 "final variable A'" + std::to_string(v.id) + " is not a Laurent monomial");
        std::vector<int> exps;
        for (VarId pv : out.chart.p_vars) exps.push_back(ratio->terms[0].exponent(pv));
        out.chart.exponents[v.id] = std::move(exps);
    }
    return out;
}

Seed final_seed_of_plan(const BraidWord& w, const Plan& plan) {
    PlanCompilation comp = compile_mutation_sequence(w, plan);
    Seed s = apply_mutation_sequence(initial_seed(w), comp.sequence);
    for (QuiverVertex& v : s.quiver.vertices)
        if (comp.consumed.count(v.id)) v.active = false;
    return s;
}

SeedPartition distinct_seeds(const BraidWord& w, const std::vector<Plan>& plans,
                             std::mt19937_64& rng) {
    std::vector<Seed> seeds;
    seeds.reserve(plans.size());
    for (const Plan& plan : plans) seeds.push_back(final_seed_of_plan(w, plan));
    SeedPartition out;
    for (size_t i = 0; i < seeds.size(); ++i) {
        int found = -1;
        for (size_t g = 0; g < out.groups.size() && found < 0; ++g)
            if (seeds_equal(seeds[size_t(out.groups[g][0])], seeds[i], rng)) found = int(g);
        if (found < 0) {
            found = int(out.groups.size());
            out.groups.push_back({});
        }
        out.groups[size_t(found)].push_back(int(i));
    }
    return out;
}

}  // namespace braidaug
