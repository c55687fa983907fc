#include "braidaug/algebra.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace braidaug {

void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

std::string var_name(VarId v) {
    static const char* prefix[] = {"b", "t", "p"};
    return prefix[int(v.kind)] + std::to_string(v.index);
}

/******** Monomials ********/

int Monomial::degree() const {
    int d = 0;
    for (const VarPow& f : factors) d += f.exp;
    return d;
}

int Monomial::exponent(VarId v) const {
    for (const VarPow& f : factors)
        if (f.var == v) return f.exp;
    return 0;
}

Monomial mono_one() { return {}; }

Monomial mono_var(VarId v, int exp) {
    if (exp == 0) return {};
    if (!v.invertible() && exp < 0) fail(Errc::BadSyntax, "negative exponent on " + var_name(v));
    return Monomial{{{v, exp}}};
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto i = a.factors.begin(), j = b.factors.begin();
    while (i != a.factors.end() && j != b.factors.end()) {
        if (i->var < j->var)
            out.factors.push_back(*i++);
        else if (j->var < i->var)
            out.factors.push_back(*j++);
        else {
            int e = i->exp + j->exp;
            if (e != 0) out.factors.push_back({i->var, e});
            ++i, ++j;
        }
    }
    out.factors.insert(out.factors.end(), i, a.factors.end());
    out.factors.insert(out.factors.end(), j, b.factors.end());
    return out;
}

Monomial mono_inv(const Monomial& m) {
    Monomial out = m;
    for (VarPow& f : out.factors) {
        if (!f.var.invertible()) fail(Errc::BadSyntax, "cannot invert " + var_name(f.var));
        f.exp = -f.exp;
    }
    return out;
}

Monomial mono_inv_unchecked(const Monomial& m) {
    Monomial out = m;
    for (VarPow& f : out.factors) f.exp = -f.exp;
    return out;
}

std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b) {
    Monomial out = mono_mul(a, mono_inv_unchecked(b));
    for (const VarPow& f : out.factors)
        if (!f.var.invertible() && f.exp < 0) return std::nullopt;
    return out;
}

bool mono_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    auto i = a.factors.begin(), j = b.factors.begin();
    while (i != a.factors.end() && j != b.factors.end()) {
        if (i->var == j->var) {
            if (i->exp != j->exp) return i->exp > j->exp;
            ++i, ++j;
        } else if (i->var < j->var) {
            return i->exp > 0;  // a has the earlier variable
        } else {
            return j->exp < 0;
        }
    }
    if (i != a.factors.end()) return i->exp > 0;
    if (j != b.factors.end()) return j->exp < 0;
    return false;
}

/******** LaurentPoly ********/

LaurentPoly poly_zero() { return {}; }
LaurentPoly poly_one() { return {{mono_one()}}; }
LaurentPoly poly_var(VarId v, int exp) { return {{mono_var(v, exp)}}; }
LaurentPoly poly_from_mono(const Monomial& m) { return {{m}}; }

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly out;
    std::set_symmetric_difference(p.terms.begin(), p.terms.end(), q.terms.begin(), q.terms.end(),
                                  std::back_inserter(out.terms), mono_less);
    return out;
}

LaurentPoly poly_mul(const LaurentPoly& p, const Monomial& m) {
    LaurentPoly out;
    out.terms.reserve(p.terms.size());
    for (const Monomial& t : p.terms) out.terms.push_back(mono_mul(t, m));
    std::sort(out.terms.begin(), out.terms.end(), mono_less);
    return out;
}

LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly out;
    for (const Monomial& t : q.terms) out = poly_add(out, poly_mul(p, t));
    return out;
}

LaurentPoly poly_pow(const LaurentPoly& p, int n) {
    if (n < 0) fail(Errc::BadSyntax, "poly_pow: negative power");
    LaurentPoly out = poly_one();
    LaurentPoly base = p;
    while (n) {
        if (n & 1) out = poly_mul(out, base);
        n >>= 1;
        if (n) base = poly_mul(base, base);
    }
    return out;
}

namespace {

// Smallest exponent of each invertible variable across the terms; factoring it
// out leaves a polynomial with nonnegative exponents everywhere.
Monomial laurent_content(const LaurentPoly& p) {
    std::map<VarId, int> mins;
    for (VarId v : poly_vars(p))
        if (v.invertible()) mins[v] = INT_MAX;
    for (auto& [v, e] : mins)
        for (const Monomial& t : p.terms) e = std::min(e, t.exponent(v));
    Monomial out;
    for (auto& [v, e] : mins)
        if (e != 0) out.factors.push_back({v, e});
    return out;
}

}  // namespace

std::optional<LaurentPoly> poly_div_exact(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) fail(Errc::ZeroDenominator, "division by zero polynomial");
    if (p.is_zero()) return poly_zero();
    Monomial cp = laurent_content(p), cd = laurent_content(d);
    LaurentPoly rem = poly_mul(p, mono_inv_unchecked(cp));
    LaurentPoly div = poly_mul(d, mono_inv_unchecked(cd));
    const Monomial lead_d = div.terms.back();
    LaurentPoly quot;
    while (!rem.is_zero()) {
        std::optional<Monomial> q = mono_div(rem.terms.back(), lead_d);
        if (!q) return std::nullopt;
        for (const VarPow& f : q->factors)
            if (f.exp < 0) return std::nullopt;
        quot = poly_add(quot, poly_from_mono(*q));
        rem = poly_add(rem, poly_mul(div, *q));
    }
    Monomial shift = mono_mul(cp, mono_inv_unchecked(cd));
    return poly_mul(quot, shift);
}

std::vector<VarId> poly_vars(const LaurentPoly& p) {
    std::vector<VarId> out;
    for (const Monomial& t : p.terms)
        for (const VarPow& f : t.factors) out.push_back(f.var);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LaurentPoly poly_subst(const LaurentPoly& p, const std::map<VarId, LaurentPoly>& images) {
    LaurentPoly out;
    for (const Monomial& t : p.terms) {
        LaurentPoly term = poly_one();
        Monomial fixed;
        for (const VarPow& f : t.factors) {
            auto it = images.find(f.var);
            if (it == images.end()) {
                fixed = mono_mul(fixed, mono_var(f.var, f.exp));
            } else if (it->second.is_monomial()) {
                Monomial m = it->second.terms[0];
                for (VarPow& g : m.factors) g.exp *= f.exp;
                fixed = mono_mul(fixed, m);
            } else {
                if (f.exp < 0) fail(Errc::NonMonomial, "negative power of non-monomial image");
                term = poly_mul(term, poly_pow(it->second, f.exp));
            }
        }
        out = poly_add(out, poly_mul(term, fixed));
    }
    return out;
}

std::string poly_to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < p.terms.size(); ++i) {
        if (i) out += " + ";
        const Monomial& t = p.terms[i];
        if (t.is_one()) {
            out += "1";
            continue;
        }
        for (size_t j = 0; j < t.factors.size(); ++j) {
            if (j) out += " ";
            out += var_name(t.factors[j].var);
            if (t.factors[j].exp != 1) out += "^" + std::to_string(t.factors[j].exp);
        }
    }
    return out;
}

namespace {

VarId parse_var(const std::string& tok, size_t& pos) {
    VarKind kind;
    switch (tok[pos]) {
        case 'b': kind = VarKind::ReebB; break;
        case 't': kind = VarKind::MarkerT; break;
        case 'p': kind = VarKind::CurveP; break;
        default: fail(Errc::BadSyntax, "bad variable in '" + tok + "'");
    }
    ++pos;
    size_t start = pos;
    while (pos < tok.size() && isdigit(tok[pos])) ++pos;
    if (pos == start) fail(Errc::BadSyntax, "missing variable index in '" + tok + "'");
    return {kind, std::stoi(tok.substr(start, pos - start))};
}

Monomial parse_mono(const std::string& text) {
    Monomial out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;
        size_t pos = 0;
        VarId v = parse_var(tok, pos);
        int exp = 1;
        if (pos < tok.size()) {
            if (tok[pos] != '^') fail(Errc::BadSyntax, "bad factor '" + tok + "'");
            exp = std::stoi(tok.substr(pos + 1));
        }
        out = mono_mul(out, mono_var(v, exp));
    }
    return out;
}

std::vector<std::string> split_terms(const std::string& text) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t plus = text.find(" + ", start);
        if (plus == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, plus - start));
        start = plus + 3;
    }
}

}  // namespace

LaurentPoly poly_parse(const std::string& text) {
    std::string trimmed = text;
    if (trimmed == "0") return poly_zero();
    LaurentPoly out;
    for (const std::string& part : split_terms(trimmed))
        out = poly_add(out, poly_from_mono(parse_mono(part)));
    return out;
}

/******** RationalFn ********/

RationalFn frac(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) fail(Errc::ZeroDenominator, "rational function with zero denominator");
    if (num.is_zero()) return {poly_zero(), poly_one()};
    if (den.is_one()) return {num, den};
    if (auto q = poly_div_exact(num, den)) return {*q, poly_one()};
    return {num, den};
}

RationalFn frac_poly(const LaurentPoly& p) { return {p, poly_one()}; }

RationalFn frac_add(const RationalFn& a, const RationalFn& b) {
    return frac(poly_add(poly_mul(a.num, b.den), poly_mul(b.num, a.den)), poly_mul(a.den, b.den));
}

RationalFn frac_mul(const RationalFn& a, const RationalFn& b) {
    return frac(poly_mul(a.num, b.num), poly_mul(a.den, b.den));
}

RationalFn frac_div(const RationalFn& a, const RationalFn& b) {
    if (b.num.is_zero()) fail(Errc::ZeroDenominator, "division by zero rational function");
    return frac(poly_mul(a.num, b.den), poly_mul(a.den, b.num));
}

RationalFn frac_pow(const RationalFn& a, int n) {
    if (n >= 0) return {poly_pow(a.num, n), poly_pow(a.den, n)};
    if (a.num.is_zero()) fail(Errc::ZeroDenominator, "negative power of zero");
    return {poly_pow(a.den, -n), poly_pow(a.num, -n)};
}

bool frac_eq(const RationalFn& a, const RationalFn& b) {
    return poly_mul(a.num, b.den) == poly_mul(b.num, a.den);
}

bool frac_is_poly(const RationalFn& a) { return a.den.is_one(); }

std::string frac_to_string(const RationalFn& a) {
    if (frac_is_poly(a)) return poly_to_string(a.num);
    return "(" + poly_to_string(a.num) + ") / (" + poly_to_string(a.den) + ")";
}

RationalFn frac_parse(const std::string& text) {
    if (!text.empty() && text[0] == '(') {
        size_t close = text.find(") / (");
        if (close == std::string::npos || text.back() != ')')
            fail(Errc::BadSyntax, "bad rational function '" + text + "'");
        return frac(poly_parse(text.substr(1, close - 1)),
                    poly_parse(text.substr(close + 5, text.size() - close - 6)));
    }
    return frac_poly(poly_parse(text));
}

/******** GF(2^16) ********/

Gf gf_add(Gf a, Gf b) { return {uint16_t(a.v ^ b.v)}; }

Gf gf_mul(Gf a, Gf b) {
    uint32_t x = a.v, y = b.v, acc = 0;
    while (y) {
        if (y & 1) acc ^= x;
        y >>= 1;
        x <<= 1;
        if (x & 0x10000) x ^= kGfModulus;
    }
    return {uint16_t(acc)};
}

Gf gf_pow(Gf a, uint64_t e) {
    Gf out{1};
    while (e) {
        if (e & 1) out = gf_mul(out, a);
        a = gf_mul(a, a);
        e >>= 1;
    }
    return out;
}

Gf gf_inv(Gf a) {
    if (a.is_zero()) fail(Errc::ZeroAtInvertible, "inverse of zero in GF(2^16)");
    return gf_pow(a, 65534);  // a^(2^16 - 2)
}

namespace {

// Remainder of polynomial division over GF(2), bit-packed.
uint64_t gf2_poly_mod(uint64_t a, uint64_t m) {
    int dm = 63;
    while (dm > 0 && !((m >> dm) & 1)) --dm;
    for (int d = 63; d >= dm; --d)
        if ((a >> d) & 1) a ^= m << (d - dm);
    return a;
}

}  // namespace

void gf_check_modulus() {
    for (uint64_t f = 2; f < (1u << 9); ++f) {
        if (f == 1) continue;
        uint64_t deg = 0;
        for (uint64_t x = f; x > 1; x >>= 1) ++deg;
        if (deg < 1 || deg > 8) continue;
        if (gf2_poly_mod(kGfModulus, f) == 0)
            fail(Errc::BadSyntax, "GF(2^16) modulus is reducible");
    }
}

Gf poly_eval(const LaurentPoly& p, const Assignment& pt) {
    Gf acc{0};
    for (const Monomial& t : p.terms) {
        Gf val{1};
        for (const VarPow& f : t.factors) {
            auto it = pt.find(f.var);
            if (it == pt.end()) fail(Errc::MissingVariable, "unassigned " + var_name(f.var));
            Gf base = it->second;
            if (f.var.invertible() && base.is_zero())
                fail(Errc::ZeroAtInvertible, "zero value for " + var_name(f.var));
            val = gf_mul(val, f.exp >= 0 ? gf_pow(base, uint64_t(f.exp))
                                         : gf_pow(gf_inv(base), uint64_t(-f.exp)));
        }
        acc = gf_add(acc, val);
    }
    return acc;
}

Gf frac_eval(const RationalFn& f, const Assignment& pt) {
    Gf d = poly_eval(f.den, pt);
    if (d.is_zero()) fail(Errc::ZeroDenominator, "denominator vanishes at the point");
    return gf_mul(poly_eval(f.num, pt), gf_inv(d));
}

Assignment random_point(const std::vector<VarId>& vars, std::mt19937_64& rng,
                        const std::vector<LaurentPoly>& avoid) {
    std::uniform_int_distribution<uint32_t> full(0, 65535), nonzero(1, 65535);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Assignment pt;
        for (VarId v : vars)
            pt[v] = Gf{uint16_t(v.invertible() ? nonzero(rng) : full(rng))};
        bool ok = true;
        for (const LaurentPoly& g : avoid)
            if (poly_eval(g, pt).is_zero()) {
                ok = false;
                break;
            }
        if (ok) return pt;
    }
    fail(Errc::SamplingExhausted, "no point avoids the given polynomials");
}

/******** PolyMatrix ********/

PolyMatrix mat_identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = poly_one();
    return m;
}

PolyMatrix mat_mul(const PolyMatrix& A, const PolyMatrix& B) {
    if (A.cols != B.rows) fail(Errc::DimensionMismatch, "mat_mul: dimension mismatch");
    PolyMatrix C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            if (A.at(i, k).is_zero()) continue;
            for (int j = 0; j < B.cols; ++j) {
                if (B.at(k, j).is_zero()) continue;
                C.at(i, j) = poly_add(C.at(i, j), poly_mul(A.at(i, k), B.at(k, j)));
            }
        }
    return C;
}

LaurentPoly mat_det(const PolyMatrix& A) {
    if (A.rows != A.cols) fail(Errc::DimensionMismatch, "mat_det: not square");
    int n = A.rows;
    if (n == 0) return poly_one();
    // In characteristic 2 the determinant is the permanent; DP over column sets.
    std::vector<LaurentPoly> dp(size_t(1) << n);
    dp[0] = poly_one();
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        int row = __builtin_popcount(mask) - 1;
        LaurentPoly acc;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (1u << j)) || A.at(row, j).is_zero()) continue;
            acc = poly_add(acc, poly_mul(A.at(row, j), dp[mask ^ (1u << j)]));
        }
        dp[mask] = std::move(acc);
    }
    return dp[(size_t(1) << n) - 1];
}

LaurentPoly principal_minor(const PolyMatrix& A, int m) {
    if (m < 0 || m > A.rows || m > A.cols) fail(Errc::DimensionMismatch, "principal_minor: bad size");
    PolyMatrix sub(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) sub.at(i, j) = A.at(i, j);
    return mat_det(sub);
}

LaurentPoly submatrix_det(const PolyMatrix& A, const std::vector<int>& I,
                          const std::vector<int>& J) {
    if (I.size() != J.size()) fail(Errc::SizeMismatch, "submatrix_det: |I| != |J|");
    int m = int(I.size());
    PolyMatrix sub(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (I[i] < 1 || I[i] > A.rows || J[j] < 1 || J[j] > A.cols)
                fail(Errc::IndexOutOfRange, "submatrix_det: index out of range");
            sub.at(i, j) = A.at(I[i] - 1, J[j] - 1);
        }
    return mat_det(sub);
}

/******** GfMatrix ********/

GfMatrix gfmat_eval(const PolyMatrix& A, const Assignment& pt) {
    GfMatrix M(A.rows, A.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) M.at(i, j) = poly_eval(A.at(i, j), pt);
    return M;
}

Gf gfmat_det(GfMatrix A) {
    if (A.rows != A.cols) fail(Errc::DimensionMismatch, "gfmat_det: not square");
    int n = A.rows;
    Gf det{1};
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!A.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Gf{0};
        if (pivot != col)
            for (int j = 0; j < n; ++j) std::swap(A.at(pivot, j), A.at(col, j));
        det = gf_mul(det, A.at(col, col));
        Gf inv = gf_inv(A.at(col, col));
        for (int r = col + 1; r < n; ++r) {
            if (A.at(r, col).is_zero()) continue;
            Gf factor = gf_mul(A.at(r, col), inv);
            for (int j = col; j < n; ++j)
                A.at(r, j) = gf_add(A.at(r, j), gf_mul(factor, A.at(col, j)));
        }
    }
    return det;
}

Gf gfmat_submatrix_det(const GfMatrix& A, const std::vector<int>& I, const std::vector<int>& J) {
    if (I.size() != J.size()) fail(Errc::SizeMismatch, "gfmat_submatrix_det: |I| != |J|");
    int m = int(I.size());
    GfMatrix sub(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) sub.at(i, j) = A.at(I[i] - 1, J[j] - 1);
    return gfmat_det(sub);
}

}  // namespace braidaug
