#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace splitbound {

using Int = boost::multiprecision::cpp_int;

// Exponent vector, one slot per variable. Entries may be negative.
using Monomial = std::vector<int>;

// Sparse integer Laurent polynomial in a fixed number of variables.
// Invariant: no stored zero coefficients; all keys have size == arity().
class LaurentPoly {
public:
    LaurentPoly() : arity_(0) {}
    explicit LaurentPoly(int arity) : arity_(arity) {}

    static LaurentPoly constant(int arity, Int c);
    // c * x_var^power
    static LaurentPoly term(int arity, int var, int power, Int c = 1);
    static LaurentPoly monomial(Monomial m, Int c);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    // Coefficient of a monomial (zero if absent).
    Int coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const Int& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    bool operator==(const LaurentPoly& rhs) const = default;

    // Substitute 1 for variable `var`, keeping the arity (the slot stays, exponent 0).
    LaurentPoly substitute_one(int var) const;
    // Substitute 1 for variable `var` and drop its slot; result has arity()-1.
    LaurentPoly eliminate_var(int var) const;
    // Substitute x_var -> x_var^-1.
    LaurentPoly invert_var(int var) const;
    // Reinterpret an arity-1 polynomial in slot `var` of an arity-n ring.
    LaurentPoly embed(int arity, int var) const;
    // Permute variable slots: slot i of the result is slot perm[i] of *this.
    LaurentPoly permute_vars(const std::vector<int>& perm) const;

    // Evaluate with every variable set to the given integers.
    Int evaluate(const std::vector<Int>& values) const;

    // Unit normal form: n(p) == n(u*p) for every unit u = +-(monomial),
    // minimal exponent 0 in every variable, lex-leading coefficient positive.
    LaurentPoly normalize() const;

    std::string to_string() const;                 // human form, paper style
    std::string machine_string() const;            // sorted "e1,e2,..:c" lines
    static LaurentPoly parse(const std::string& text, int arity);

private:
    int arity_;
    std::map<Monomial, Int> terms_;
};

// True iff p and q agree up to a unit +-(monomial).
bool unit_equal(const LaurentPoly& p, const LaurentPoly& q);

// Divisibility in Z[x1^{+-1},..,xk^{+-1}]: true iff n = d*q for some Laurent q.
// Throws std::invalid_argument when d == 0.
bool divides(const LaurentPoly& d, const LaurentPoly& n);

// Exact quotient n/d; throws std::domain_error when d does not divide n.
LaurentPoly exact_quotient(const LaurentPoly& n, const LaurentPoly& d);

// Square-matrix determinant, exact. Fraction-free (Bareiss) elimination with
// cofactor expansion for dimension <= 4. Throws on non-square input.
LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m);

// Variable display names: t | s,t | s,t,u | t1..tk.
std::vector<std::string> variable_names(int arity);

}  // namespace splitbound
