#pragma once

// Exact multivariate Laurent polynomials with arbitrary-precision integer
// coefficients.  Terms are kept in a canonically ordered sparse map keyed by
// exponent vector, so structural equality is semantic equality and rendering
// is deterministic.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cluskit {

/// Exponents of a Laurent monomial, or a dimension/denominator vector.
/// Length is the ambient variable count n, fixed per algebra instance.
/// std::vector's operator< is the lexicographic order used throughout.
using ExponentVec = std::vector<int>;

class LaurentPoly {
public:
    using TermMap = std::map<ExponentVec, mpz_class>;

    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, const mpz_class& c);
    /// The coordinate variable x_{i+1} (i is 0-based).
    static LaurentPoly variable(int nvars, int i);
    static LaurentPoly monomial(int nvars, const ExponentVec& e, const mpz_class& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;

    /// Nonnegative integer power by repeated squaring.
    LaurentPoly pow(int k) const;

    bool operator==(const LaurentPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Per-variable minimum/maximum exponent over the support.  Nonzero input only.
    ExponentVec min_exponents() const;
    ExponentVec max_exponents() const;

    /// True when every exponent is >= 0 (a genuine polynomial).
    bool is_polynomial() const;

    /// If this is exactly the coordinate variable x_{i+1}, returns i.
    std::optional<int> as_single_variable() const;

    /// Canonical text: terms in increasing lexicographic exponent order,
    /// e.g. "1 + x1*x2^-1".  Used in reports and golden files.
    std::string str() const;

    /// Inverse of str(); accepts the canonical rendering.
    static LaurentPoly parse(const std::string& text, int nvars);

private:
    void add_term(const ExponentVec& e, const mpz_class& c);
    void check_same_space(const LaurentPoly& o) const;

    int nvars_;
    TermMap terms_;
};

/// Total order on polynomials: term count first, then lexicographic on the
/// canonical (exponent, coefficient) term list.  Cheap, stable, and total;
/// used to sort clusters and variable registries.
int compare(const LaurentPoly& a, const LaurentPoly& b);

inline bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    return compare(a, b) < 0;
}

/// A nonzero element split as numerator / monomial: numerator has all
/// exponents >= 0 and per-variable minimum exponent exactly 0;
/// numerator * x^(-denom_vector) reconstructs the input.  Initial variables
/// get denom_vector = -e_i (the almost-positive-root convention).
struct ReducedForm {
    LaurentPoly numerator;
    ExponentVec denom_vector;
};

/// Exact quotient a / b over the Laurent ring, or std::nullopt when the
/// division is not exact.  On failure the undividable remainder is stored in
/// *remainder when given (diagnostic witness).  b must be nonzero.
std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b,
                                     LaurentPoly* remainder = nullptr);

ReducedForm reduced_form(const LaurentPoly& u);

/// True iff f evaluates strictly positively at every point
/// e_i = (1,...,1,0,1,...,1) (0 in slot i).  Precondition: f is a polynomial.
bool positivity_check(const LaurentPoly& f);

/// x^d for a nonnegative vector d (the monomial whose exponents list the
/// composition factors of the module with dimension vector d).
LaurentPoly monomial_of_dimvector(const ExponentVec& d);

}  // namespace cluskit
