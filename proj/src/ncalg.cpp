#include "braidaug/ncalg.hpp"

#include <algorithm>
#include <sstream>

namespace braidaug {

NCWord ncword_reduce(std::vector<NCLetter> letters) {
    std::vector<NCLetter> out;
    for (const NCLetter& l : letters) {
        if (l.sign == -1 && !l.var.invertible())
            fail(Errc::BadSyntax, "inverse of non-invertible " + var_name(l.var));
        if (!out.empty() && out.back().var == l.var && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return {out};
}

NCWord ncword_concat(const NCWord& a, const NCWord& b) {
    std::vector<NCLetter> letters = a.letters;
    letters.insert(letters.end(), b.letters.begin(), b.letters.end());
    return ncword_reduce(std::move(letters));
}

NCPoly nc_zero() { return {}; }
NCPoly nc_one() { return {{NCWord{}}}; }

NCPoly nc_gen(VarId v, int sign) {
    return nc_from_word(ncword_reduce({{v, sign}}));
}

NCPoly nc_from_word(const NCWord& w) { return {{w}}; }

NCPoly nc_add(const NCPoly& u, const NCPoly& v) {
    NCPoly out;
    std::set_symmetric_difference(u.words.begin(), u.words.end(), v.words.begin(), v.words.end(),
                                  std::back_inserter(out.words));
    return out;
}

NCPoly nc_mul(const NCPoly& u, const NCPoly& v) {
    NCPoly out;
    for (const NCWord& a : u.words) {
        NCPoly row;
        row.words.reserve(v.words.size());
        for (const NCWord& b : v.words) row.words.push_back(ncword_concat(a, b));
        std::sort(row.words.begin(), row.words.end());
        out = nc_add(out, row);
    }
    return out;
}

LaurentPoly nc_abelianize(const NCPoly& u) {
    LaurentPoly out;
    for (const NCWord& w : u.words) {
        Monomial m;
        for (const NCLetter& l : w.letters) m = mono_mul(m, mono_var(l.var, l.sign));
        out = poly_add(out, poly_from_mono(m));
    }
    return out;
}

std::string nc_to_string(const NCPoly& u) {
    if (u.is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < u.words.size(); ++i) {
        if (i) out += " + ";
        const NCWord& w = u.words[i];
        if (w.is_empty()) {
            out += "1";
            continue;
        }
        for (size_t j = 0; j < w.letters.size(); ++j) {
            if (j) out += " ";
            out += var_name(w.letters[j].var);
            if (w.letters[j].sign < 0) out += "^-1";
        }
    }
    return out;
}

namespace {

std::vector<std::string> split_on_plus(const std::string& text) {
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

NCPoly nc_parse(const std::string& text) {
    if (text == "0") return nc_zero();
    NCPoly out;
    for (const std::string& part : split_on_plus(text)) {
        std::vector<NCLetter> letters;
        std::istringstream in(part);
        std::string tok;
        while (in >> tok) {
            if (tok == "1") continue;
            VarKind kind;
            switch (tok[0]) {
                case 'b': kind = VarKind::ReebB; break;
                case 't': kind = VarKind::MarkerT; break;
                case 'p': kind = VarKind::CurveP; break;
                default: fail(Errc::BadSyntax, "bad letter '" + tok + "'");
            }
            size_t pos = 1;
            while (pos < tok.size() && isdigit(tok[pos])) ++pos;
            if (pos == 1) fail(Errc::BadSyntax, "missing index in '" + tok + "'");
            int index = std::stoi(tok.substr(1, pos - 1));
            int sign = 1;
            if (pos < tok.size()) {
                if (tok.substr(pos) != "^-1") fail(Errc::BadSyntax, "bad letter '" + tok + "'");
                sign = -1;
            }
            letters.push_back({{kind, index}, sign});
        }
        out = nc_add(out, nc_from_word(ncword_reduce(std::move(letters))));
    }
    return out;
}

NCMatrix nc_identity(int n) {
    NCMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = nc_one();
    return m;
}

NCMatrix nc_mat_mul(const NCMatrix& A, const NCMatrix& B) {
    if (A.n != B.n) fail(Errc::DimensionMismatch, "nc_mat_mul: size mismatch");
    NCMatrix C(A.n);
    for (int i = 0; i < A.n; ++i)
        for (int k = 0; k < A.n; ++k) {
            if (A.at(i, k).is_zero()) continue;
            for (int j = 0; j < A.n; ++j) {
                if (B.at(k, j).is_zero()) continue;
                C.at(i, j) = nc_add(C.at(i, j), nc_mul(A.at(i, k), B.at(k, j)));
            }
        }
    return C;
}

NCMatrix nc_Z(int i, const NCPoly& x, int n) {
    if (i < 1 || i >= n) fail(Errc::IndexOutOfRange, "nc_Z: bad row index");
    NCMatrix m = nc_identity(n);
    m.at(i - 1, i - 1) = x;
    m.at(i - 1, i) = nc_one();
    m.at(i, i - 1) = nc_one();
    m.at(i, i) = nc_zero();
    return m;
}

NCMatrix nc_Z_inv(int i, const NCPoly& x, int n) {
    if (i < 1 || i >= n) fail(Errc::IndexOutOfRange, "nc_Z_inv: bad row index");
    NCMatrix m = nc_identity(n);
    m.at(i - 1, i - 1) = nc_zero();
    m.at(i - 1, i) = nc_one();
    m.at(i, i - 1) = nc_one();
    m.at(i, i) = x;
    return m;
}

NCMatrix nc_D(int i, VarId q, int n) {
    if (i < 1 || i >= n) fail(Errc::IndexOutOfRange, "nc_D: bad row index");
    NCMatrix m = nc_identity(n);
    m.at(i - 1, i - 1) = nc_gen(q, 1);
    m.at(i, i) = nc_gen(q, -1);
    return m;
}

NCMatrix nc_D_inv(int i, VarId q, int n) {
    if (i < 1 || i >= n) fail(Errc::IndexOutOfRange, "nc_D_inv: bad row index");
    NCMatrix m = nc_identity(n);
    m.at(i - 1, i - 1) = nc_gen(q, -1);
    m.at(i, i) = nc_gen(q, 1);
    return m;
}

NCMatrix nc_truncate(const NCMatrix& M, TruncSide side) {
    NCMatrix out(M.n);
    for (int i = 0; i < M.n; ++i)
        for (int j = 0; j < M.n; ++j)
            if (side == TruncSide::Upper ? i < j : i > j) out.at(i, j) = M.at(i, j);
    return out;
}

PolyMatrix nc_mat_abelianize(const NCMatrix& M) {
    PolyMatrix out(M.n, M.n);
    for (int i = 0; i < M.n; ++i)
        for (int j = 0; j < M.n; ++j) out.at(i, j) = nc_abelianize(M.at(i, j));
    return out;
}

}  // namespace braidaug
