#pragma once

#include "braidaug/algebra.hpp"

namespace braidaug {

/******** Reduced words in non-commuting generators ********/

struct NCLetter {
    VarId var;
    int sign;  // +1 or -1; -1 only on invertible variables
    auto operator<=>(const NCLetter&) const = default;
};

// Reduced: no adjacent g g^-1 or g^-1 g pair.
struct NCWord {
    std::vector<NCLetter> letters;
    auto operator<=>(const NCWord&) const = default;
    bool is_empty() const { return letters.empty(); }
};

NCWord ncword_reduce(std::vector<NCLetter> letters);
NCWord ncword_concat(const NCWord& a, const NCWord& b);

/******** GF(2)-span of reduced words ********/

struct NCPoly {
    std::vector<NCWord> words;  // sorted, distinct
    bool operator==(const NCPoly&) const = default;
    bool is_zero() const { return words.empty(); }
};

NCPoly nc_zero();
NCPoly nc_one();
NCPoly nc_gen(VarId v, int sign = 1);
NCPoly nc_from_word(const NCWord& w);
NCPoly nc_add(const NCPoly& u, const NCPoly& v);
NCPoly nc_mul(const NCPoly& u, const NCPoly& v);
LaurentPoly nc_abelianize(const NCPoly& u);

std::string nc_to_string(const NCPoly& u);
NCPoly nc_parse(const std::string& text);

inline NCPoly operator+(const NCPoly& a, const NCPoly& b) { return nc_add(a, b); }
inline NCPoly operator*(const NCPoly& a, const NCPoly& b) { return nc_mul(a, b); }

/******** Square matrices over NCPoly ********/

struct NCMatrix {
    int n = 0;
    std::vector<NCPoly> a;
    NCMatrix() = default;
    explicit NCMatrix(int size) : n(size), a(size_t(size) * size) {}
    NCPoly& at(int i, int j) { return a[size_t(i) * n + j]; }
    const NCPoly& at(int i, int j) const { return a[size_t(i) * n + j]; }
    bool operator==(const NCMatrix&) const = default;
};

NCMatrix nc_identity(int n);
NCMatrix nc_mat_mul(const NCMatrix& A, const NCMatrix& B);

// Identity with the 2x2 block [[x,1],[1,0]] at rows/cols i, i+1 (1-based i < n).
NCMatrix nc_Z(int i, const NCPoly& x, int n);
// Inverse block [[0,1],[1,x]] (characteristic 2).
NCMatrix nc_Z_inv(int i, const NCPoly& x, int n);
// Diagonal with q at slot i and q^-1 at slot i+1.
NCMatrix nc_D(int i, VarId q, int n);
NCMatrix nc_D_inv(int i, VarId q, int n);

enum class TruncSide { Upper, Lower };
NCMatrix nc_truncate(const NCMatrix& M, TruncSide side);

PolyMatrix nc_mat_abelianize(const NCMatrix& M);

}  // namespace braidaug
