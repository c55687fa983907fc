#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidaug {

/******** Errors ********/

enum class Errc {
    MissingVariable,
    ZeroAtInvertible,
    DimensionMismatch,
    SizeMismatch,
    SamplingExhausted,
    LetterOutOfRange,
    EmptyLevel,
    BadSyntax,
    IndexOutOfRange,
    PatternMismatch,
    EmptyWord,
    FrozenVertex,
    InactiveVertex,
    InvalidReduction,
    InvalidMove,
    LedgerUnderflow,
    BackwardUnsupported,
    NonMonomial,
    UnsolvableRelations,
    ZeroDenominator,
};

struct Error : std::runtime_error {
    Errc code;
    Error(Errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] void fail(Errc c, const std::string& msg);

/******** Variables ********/

// b<k>: degree-0 Reeb chords (never inverted); t<k>: marked points; p<k>: marked curves.
enum class VarKind : uint8_t { ReebB = 0, MarkerT = 1, CurveP = 2 };

struct VarId {
    VarKind kind;
    int index;
    bool invertible() const { return kind != VarKind::ReebB; }
    auto operator<=>(const VarId&) const = default;
};

inline VarId reeb_b(int i) { return {VarKind::ReebB, i}; }
inline VarId marker_t(int i) { return {VarKind::MarkerT, i}; }
inline VarId curve_p(int i) { return {VarKind::CurveP, i}; }

std::string var_name(VarId v);

/******** Monomials ********/

struct VarPow {
    VarId var;
    int exp;
    auto operator<=>(const VarPow&) const = default;
};

// Factors sorted by variable, no zero exponents; b-variables keep exp > 0.
struct Monomial {
    std::vector<VarPow> factors;
    bool operator==(const Monomial&) const = default;
    bool is_one() const { return factors.empty(); }
    int degree() const;
    int exponent(VarId v) const;
};

Monomial mono_one();
Monomial mono_var(VarId v, int exp = 1);
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_inv(const Monomial& m);            // requires all factors invertible
Monomial mono_inv_unchecked(const Monomial& m);  // formal sign flip
// Quotient a/b, or nullopt when a non-invertible variable would go negative.
std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b);

// Order used for storage, printing and division: total degree first, then the
// first differing variable (in VarId order) with the larger exponent wins.
bool mono_less(const Monomial& a, const Monomial& b);

/******** Laurent polynomials over GF(2) ********/

// Term set with coefficient-1 semantics; addition is symmetric difference.
struct LaurentPoly {
    std::vector<Monomial> terms;  // sorted by mono_less, distinct
    bool operator==(const LaurentPoly&) const = default;
    bool is_zero() const { return terms.empty(); }
    bool is_one() const { return terms.size() == 1 && terms[0].is_one(); }
    bool is_monomial() const { return terms.size() == 1; }
};

LaurentPoly poly_zero();
LaurentPoly poly_one();
LaurentPoly poly_var(VarId v, int exp = 1);
LaurentPoly poly_from_mono(const Monomial& m);
LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly poly_mul(const LaurentPoly& p, const Monomial& m);
LaurentPoly poly_pow(const LaurentPoly& p, int n);
// Exact quotient with Laurent shifts in invertible variables only.
std::optional<LaurentPoly> poly_div_exact(const LaurentPoly& p, const LaurentPoly& d);
std::vector<VarId> poly_vars(const LaurentPoly& p);
// Simultaneous substitution; variables absent from the map stay fixed.
LaurentPoly poly_subst(const LaurentPoly& p, const std::map<VarId, LaurentPoly>& images);

std::string poly_to_string(const LaurentPoly& p);
LaurentPoly poly_parse(const std::string& text);

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return poly_add(a, b); }
inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return poly_mul(a, b); }

/******** Rational functions ********/

// Never reduced by gcd; equality is cross-multiplication.
struct RationalFn {
    LaurentPoly num;
    LaurentPoly den;  // nonzero
};

RationalFn frac(const LaurentPoly& num, const LaurentPoly& den);
RationalFn frac_poly(const LaurentPoly& p);
RationalFn frac_add(const RationalFn& a, const RationalFn& b);
RationalFn frac_mul(const RationalFn& a, const RationalFn& b);
RationalFn frac_div(const RationalFn& a, const RationalFn& b);
RationalFn frac_pow(const RationalFn& a, int n);
bool frac_eq(const RationalFn& a, const RationalFn& b);
bool frac_is_poly(const RationalFn& a);
std::string frac_to_string(const RationalFn& a);
RationalFn frac_parse(const std::string& text);

/******** GF(2^16) ********/

// Fixed field for randomized identity testing; x^16 + x^12 + x^3 + x + 1.
struct Gf {
    uint16_t v = 0;
    bool operator==(const Gf&) const = default;
    bool is_zero() const { return v == 0; }
};

constexpr uint32_t kGfModulus = 0x1100B;

Gf gf_add(Gf a, Gf b);
Gf gf_mul(Gf a, Gf b);
Gf gf_pow(Gf a, uint64_t e);
Gf gf_inv(Gf a);  // a != 0
// Trial division by every polynomial of degree 1..8; throws if reducible.
void gf_check_modulus();

using Assignment = std::map<VarId, Gf>;

Gf poly_eval(const LaurentPoly& p, const Assignment& pt);
Gf frac_eval(const RationalFn& f, const Assignment& pt);  // den(pt) != 0

// Point with invertible variables nonzero and every avoid-polynomial nonzero;
// at most 1000 resampling attempts.
Assignment random_point(const std::vector<VarId>& vars, std::mt19937_64& rng,
                        const std::vector<LaurentPoly>& avoid = {});

/******** Matrices of polynomials ********/

struct PolyMatrix {
    int rows = 0, cols = 0;
    std::vector<LaurentPoly> a;
    PolyMatrix() = default;
    PolyMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
    LaurentPoly& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const LaurentPoly& at(int i, int j) const { return a[size_t(i) * cols + j]; }
    bool operator==(const PolyMatrix&) const = default;
};

PolyMatrix mat_identity(int n);
PolyMatrix mat_mul(const PolyMatrix& A, const PolyMatrix& B);
// Determinant over GF(2) (signs vanish); subset dynamic programming.
LaurentPoly mat_det(const PolyMatrix& A);
LaurentPoly principal_minor(const PolyMatrix& A, int m);
// Rows I and columns J, 1-based, |I| == |J|.
LaurentPoly submatrix_det(const PolyMatrix& A, const std::vector<int>& I,
                          const std::vector<int>& J);

/******** Numeric matrices over GF(2^16) ********/

struct GfMatrix {
    int rows = 0, cols = 0;
    std::vector<Gf> a;
    GfMatrix() = default;
    GfMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
    Gf& at(int i, int j) { return a[size_t(i) * cols + j]; }
    Gf at(int i, int j) const { return a[size_t(i) * cols + j]; }
};

GfMatrix gfmat_eval(const PolyMatrix& A, const Assignment& pt);
Gf gfmat_det(GfMatrix A);
Gf gfmat_submatrix_det(const GfMatrix& A, const std::vector<int>& I, const std::vector<int>& J);

}  // namespace braidaug
