#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace graphpoly {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Var : int { x = 0, y = 1, z = 2, w = 3 };
inline constexpr int kNumVars = 4;

/// Exponent vector indexed by Var. Unused variables carry exponent 0.
using Exponents = std::array<std::uint32_t, kNumVars>;

/// Lexicographic order with w > z > y > x. This is a monomial order, so the
/// largest term under it serves as the leading term for division.
struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const {
        for (int v = kNumVars - 1; v >= 0; --v) {
            if (a[v] != b[v]) return a[v] < b[v];
        }
        return false;
    }
};

using Assignment = std::map<Var, Rational>;

class MPoly;
using Substitution = std::map<Var, MPoly>;

/// Sparse polynomial in x, y, z (and w, used only for the four-parameter
/// chromatic-invariant check) over arbitrary-precision integers.
/// Zero coefficients are never stored; the zero polynomial has no terms.
class MPoly {
public:
    using TermMap = std::map<Exponents, Integer, TermOrder>;

    MPoly() = default;
    MPoly(long c) { add_term(Exponents{}, Integer(c)); }  // NOLINT: constants read naturally
    MPoly(const Integer& c) { add_term(Exponents{}, c); }  // NOLINT

    static MPoly variable(Var v);
    static MPoly monomial(const Integer& c, const Exponents& e);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Integer coefficient(const Exponents& e) const;

    unsigned degree(Var v) const;
    unsigned total_degree() const;
    bool uses(Var v) const { return degree(v) > 0; }

    /// Largest term under TermOrder. Precondition: nonzero.
    const TermMap::value_type& leading_term() const { return *terms_.rbegin(); }

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator-() const;
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

    MPoly pow(unsigned k) const;

    /// Exact value at a rational point. Throws std::invalid_argument when a
    /// variable occurring in the polynomial is not assigned.
    Rational eval(const Assignment& point) const;

    /// Replace each mapped variable by a polynomial; unmapped variables stay.
    MPoly substitute(const Substitution& sub) const;

    /// Terms ascending under TermOrder, e.g. "1 + 4x + 2x^2", "x^2 + x*y + z".
    std::string to_string() const;

    /// [[coeff, [a, b, c]], ...] in the same order as to_string(). A fourth
    /// exponent is emitted only when w occurs. Coefficients beyond 64 bits are
    /// rendered as decimal strings.
    nlohmann::json to_json() const;

private:
    void add_term(const Exponents& e, const Integer& c);

    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

/// Shorthand constructors for the indeterminates.
inline MPoly X() { return MPoly::variable(Var::x); }
inline MPoly Y() { return MPoly::variable(Var::y); }
inline MPoly Z() { return MPoly::variable(Var::z); }
inline MPoly W() { return MPoly::variable(Var::w); }

/// p / q in the integer polynomial ring. Throws std::invalid_argument when q is
/// zero and IdentityViolation when q does not divide p exactly.
MPoly exact_div(const MPoly& p, const MPoly& q);

/// x(x-1)...(x-i+1) in the monomial basis; falling_factorial(0) == 1.
MPoly falling_factorial(unsigned i);

/// b_1..b_n, the partition counts that weight the falling factorials.
struct FallingCoeffs {
    std::vector<Integer> values;  // values[i-1] == b_i

    std::size_t size() const { return values.size(); }
    /// b_i with 1-based index; b_0 and indices past the end are 0.
    Integer at(std::size_t i) const {
        return (i == 0 || i > values.size()) ? Integer(0) : values[i - 1];
    }
    friend bool operator==(const FallingCoeffs&, const FallingCoeffs&) = default;
};

/// Sum of b_i * x_(i).
MPoly assemble_from_falling(const FallingCoeffs& b);

/// Integer -> JSON number when it fits in 64 bits, decimal string otherwise.
nlohmann::json integer_to_json(const Integer& v);
/// Rational -> JSON number for integers that fit, "p/q" string otherwise.
nlohmann::json rational_to_json(const Rational& v);

}  // namespace graphpoly
