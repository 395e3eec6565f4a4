#ifndef NLDIC_POLYNOMIAL_HPP
#define NLDIC_POLYNOMIAL_HPP

#include <span>
#include <string>
#include <vector>

#include <nldic/common.hpp>
#include <nldic/error.hpp>

namespace nldic {

struct Monomial {
    i64 coeff = 0;              // never zero in a stored term
    std::vector<u32> exps;      // exponent of X(i+1) at position i

    u32 total_degree() const;
    bool operator==(const Monomial&) const = default;
};

struct DegreeProfile {
    std::vector<u32> per_variable;
    u32 total_degree = 0;
    u32 min_total_degree = 0;
};

/// Sparse multivariate polynomial with integer coefficients over X1..XK.
/// Terms are kept in a canonical graded-lexicographic order (total degree
/// ascending, ties broken by exponent vector, X1-heavy first), which makes
/// printing and comparison deterministic.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}
    MultiPoly(int nvars, std::vector<Monomial> terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Monomial>& terms() const { return terms_; }

    /// Adds coeff * X^exps and re-canonicalizes (like terms combined,
    /// zero terms dropped).
    void add_term(i64 coeff, std::vector<u32> exps);

    std::string to_string() const;

    DegreeProfile degree_profile() const;          // throws ZeroPolynomial
    std::vector<Monomial> min_degree_terms() const; // throws ZeroPolynomial

    /// Fixes variable `var` (1-based) to `value`; result keeps all K slots.
    MultiPoly substitute(int var, i64 value) const;

    /// True iff the polynomial evaluates to 0 at every point of Z_q^K.
    /// Exhaustive evaluation when q^K <= 10^6, formal reduction (coefficients
    /// mod q, exponents folded via X^q = X) otherwise.
    bool functionally_zero(u64 q) const;

    bool operator==(const MultiPoly&) const = default;

private:
    int nvars_ = 0;
    std::vector<Monomial> terms_;

    void canonicalize();
    friend MultiPoly poly_sum(const MultiPoly&, const MultiPoly&);
};

/// Parses the flat sum-of-monomials grammar:
///   poly   := term (('+'|'-') term)*
///   term   := [integer '*']? factor ('*' factor)* | integer
///   factor := 'X' index ('^' exponent)?
/// Whitespace is ignored; a leading '-' is allowed on the first term.
/// Throws SyntaxError (byte position in detail_a) and IndexOutOfRange.
MultiPoly parse_poly(const std::string& text, int nvars);

/// Same grammar, with the variable count taken from the largest index used.
MultiPoly parse_poly_infer(const std::string& text, int& nvars_out);

/// Evaluates at a point of nonnegative integers.  ModQ semantics reduce into
/// [0, q); Integer semantics return the exact value and throw Overflow if it
/// leaves the 128-bit range.
i128 eval_poly(const MultiPoly& p, std::span<const u64> point, Semantics sem, u64 q);

inline u64 eval_mod(const MultiPoly& p, std::span<const u64> point, u64 q) {
    return static_cast<u64>(eval_poly(p, point, Semantics::ModQ, q));
}
inline i128 eval_int(const MultiPoly& p, std::span<const u64> point) {
    return eval_poly(p, point, Semantics::Integer, 0);
}

MultiPoly poly_sum(const MultiPoly& a, const MultiPoly& b);

} // namespace nldic

#endif // NLDIC_POLYNOMIAL_HPP
