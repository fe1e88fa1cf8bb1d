/**
 * @file laurent.hpp
 * @brief Exact multivariable Laurent polynomials over arbitrary-precision
 *        integers.
 *
 * A LaurentPoly is a finitely supported map from integer exponent vectors
 * to nonzero cpp_int coefficients, over a sorted list of named variables.
 * Terms are kept in lexicographic-descending exponent order; that order is
 * the canonical serialization order. All arithmetic is exact.
 */
#ifndef SWLINK_LAURENT_HPP
#define SWLINK_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swlink/errors.hpp"

namespace swlink {

using Int = boost::multiprecision::cpp_int;
using ExpVec = std::vector<int>;

/// Substitution target for one variable: exponents of the target variables.
/// An empty map is the constant monomial 1.
using MonomialMap = std::map<std::string, int>;

class LaurentPoly {
public:
    using TermMap = std::map<ExpVec, Int, std::greater<ExpVec>>;

    LaurentPoly() = default; // zero over the empty alphabet
    explicit LaurentPoly(long c);
    explicit LaurentPoly(Int c);
    LaurentPoly(std::vector<std::string> vars, TermMap terms);

    static LaurentPoly zero(std::vector<std::string> vars);
    static LaurentPoly constant(Int c);
    static LaurentPoly variable(const std::string& name, int exp = 1);
    static LaurentPoly monomial(Int c, const MonomialMap& m);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Nonzero and a single term.
    bool is_monomial() const { return terms_.size() == 1; }
    int var_index(const std::string& name) const; // -1 if absent

    /// Coefficient at an exponent vector (0 if absent).
    const Int& coeff(const ExpVec& e) const;
    /// Constant term, i.e. coefficient at the all-zero exponent vector.
    Int constant_term() const;

    /// Per-variable minimum exponent over the support (zeros for 0).
    ExpVec min_exponents() const;
    ExpVec max_exponents() const;

    /// Same polynomial over a variable superset (must contain vars()).
    LaurentPoly aligned_to(const std::vector<std::string>& superset) const;
    /// Drop variables whose exponent is zero in every term.
    LaurentPoly pruned() const;
    /// Multiply by the monomial with the given exponent vector.
    LaurentPoly shifted(const ExpVec& by) const;
    /// Multiply every exponent by k (k = 2 moves to the doubled lattice).
    LaurentPoly exponents_scaled(int k) const;
    /// Substitute v -> v^-1 for every variable.
    LaurentPoly inverted_vars() const;
    LaurentPoly pow(unsigned k) const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /// Structural equality after aligning the two variable lists.
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Human-readable rendering (diagnostics and test failure messages).
    std::string str() const;

private:
    std::vector<std::string> vars_; // sorted, unique
    TermMap terms_;                 // no zero coefficients
    void add_term(const ExpVec& e, Int c);
    friend LaurentPoly specialize(const LaurentPoly&, const std::map<std::string, MonomialMap>&);
};

/// Sorted union of two variable lists.
std::vector<std::string> merged_vars(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b);

/// Canonical associate: multiply by the monomial making the minimum exponent
/// of every variable 0, then by ±1 so the lexicographically largest term has
/// a positive coefficient. Zero maps to zero.
LaurentPoly normalize_units(const LaurentPoly& p);

/// Symmetric representative on the doubled exponent lattice: normalize,
/// double all exponents, shift so the support is centered at 0. Throws
/// AsymmetricSupport if the centered polynomial is not (±)-palindromic.
LaurentPoly symmetrize(const LaurentPoly& p);

/// 0 if q(v^-1..) == q, 1 if == -q; nullopt otherwise.
std::optional<int> symmetry_sign(const LaurentPoly& q);

/// Ring homomorphism sending each variable to a monomial in target
/// variables. Every variable of p must be mapped (UnmappedVariable).
LaurentPoly specialize(const LaurentPoly& p, const std::map<std::string, MonomialMap>& sigma);

/// Rename a single variable, leaving the others fixed.
LaurentPoly rename_var(const LaurentPoly& p, const std::string& from, const std::string& to);

/// Exact quotient f/g in the Laurent ring; throws NotDivisible.
LaurentPoly divexact(const LaurentPoly& f, const LaurentPoly& g);

/// Determinant of a square matrix by fraction-free (Bareiss) elimination:
/// rows are first cleared to the non-negative exponent cone by factoring a
/// monomial, all divisions are exact. det of the 0x0 matrix is 1.
LaurentPoly exact_determinant(std::vector<std::vector<LaurentPoly>> m);

/// A Laurent polynomial modulo multiplication by ±(monomial). The stored
/// representative is normalize_units of the pruned input.
class AssociateClass {
public:
    AssociateClass() = default; // class of 0
    explicit AssociateClass(const LaurentPoly& p) : rep_(normalize_units(p).pruned()) {}
    const LaurentPoly& rep() const { return rep_; }
    friend bool operator==(const AssociateClass& a, const AssociateClass& b) {
        return a.rep_ == b.rep_;
    }
    friend bool operator!=(const AssociateClass& a, const AssociateClass& b) { return !(a == b); }

private:
    LaurentPoly rep_;
};

} // namespace swlink

#endif
