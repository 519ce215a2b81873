#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "verifier/interval.hpp"
#include "verifier/quadext.hpp"

namespace hv {

/// Exponent vector, one entry per variable of the owning polynomial.
using Exp = std::vector<unsigned>;

/**
 * Sparse multivariate polynomial over Q(sqrt(3)).
 *
 * Variables are kept sorted by name and exponent vectors follow that order;
 * binary operations align variable sets automatically. Terms live in a map
 * keyed lexicographically, which doubles as the monomial order for exact
 * division. Total degree is capped; exceeding the cap throws.
 */
class SparsePoly {
public:
    static constexpr unsigned kDegreeCap = 64;

    SparsePoly() = default;
    SparsePoly(long v) { *this = constant(v); }  // lets Eigen write Scalar(0)

    static SparsePoly constant(QuadExt c);
    static SparsePoly constant(BigRational c) { return constant(QuadExt(std::move(c))); }
    static SparsePoly constant(long c) { return constant(QuadExt(BigRational(c))); }
    static SparsePoly variable(const std::string& name);
    static SparsePoly from_terms(std::vector<std::string> vars,
                                 std::vector<std::pair<Exp, QuadExt>> terms);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exp, QuadExt>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    QuadExt constant_value() const;
    bool rational_coeffs() const;

    unsigned degree(const std::string& var) const;
    unsigned total_degree() const;

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(const QuadExt& c, const SparsePoly& p);
    /// Division by a constant polynomial only.
    friend SparsePoly operator/(const SparsePoly& a, const SparsePoly& b);
    friend bool operator==(const SparsePoly& a, const SparsePoly& b);
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    SparsePoly pow(unsigned e) const;
    SparsePoly deriv(const std::string& var) const;

    /// Full evaluation; every variable must be bound.
    QuadExt eval(const std::map<std::string, QuadExt>& point) const;
    /// Enclosure of the range contribution termwise; every variable must be bound.
    Interval eval_interval(const std::map<std::string, Interval>& point) const;
    /// Bind a subset of the variables, returning a polynomial in the rest.
    SparsePoly eval_partial(const std::map<std::string, QuadExt>& point) const;

    /// Substitute a polynomial for one variable.
    SparsePoly subs(const std::string& var, const SparsePoly& repl) const;
    /// Rewrite var^(2k+r) as square^k * var^r; used for relations like s^2 = 1-c^2.
    SparsePoly reduce_square(const std::string& var, const SparsePoly& square) const;

    /// Coefficients of powers of var; each coefficient drops var from its set.
    std::map<unsigned, SparsePoly> collect(const std::string& var) const;
    /// Re-embed into a variable superset (names must include all current vars).
    SparsePoly with_vars(std::vector<std::string> names) const;
    /// Remove variables the polynomial does not actually use.
    SparsePoly trimmed() const;

    /// gcd of the rational coefficients; requires rational_coeffs and nonzero.
    BigRational content() const;
    /// Exact quotient; throws if the division leaves a remainder.
    SparsePoly divide_exact(const SparsePoly& divisor) const;

    std::string canonical_str() const;
    std::uint64_t hash() const;

    nlohmann::json to_json() const;
    /// Accepts {"vars":[...],"terms":[[coeff,[e...]],...]} with rational coeffs.
    static SparsePoly from_json(const nlohmann::json& j);
    /// Rational and sqrt(3) parts as two such objects (either may be null).
    static SparsePoly from_json_pair(const nlohmann::json& rational, const nlohmann::json& sqrt3);

private:
    std::vector<std::string> vars_;
    std::map<Exp, QuadExt> terms_;

    void insert_term(const Exp& e, QuadExt c);
    void check_cap() const;
    static std::pair<SparsePoly, SparsePoly> aligned(const SparsePoly& a, const SparsePoly& b);
};

}  // namespace hv
