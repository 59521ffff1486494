#ifndef KOSTKA_GRADED_POLY_HPP
#define KOSTKA_GRADED_POLY_HPP

#include <map>
#include <string>

#include "kostka/numeric.hpp"

namespace kostka {

// Univariate polynomial in the grading variable q with exact rational
// coefficients, stored sparsely; zero coefficients are never kept.
class GradedPolynomial {
public:
    GradedPolynomial() = default;
    static GradedPolynomial constant(const Rational& c);
    static GradedPolynomial monomial(long exponent, const Rational& coeff);
    static GradedPolynomial one() { return constant(1); }

    bool is_zero() const { return c_.empty(); }
    long degree() const;     // -1 for zero
    long valuation() const;  // -1 for zero
    Rational coeff(long exponent) const;
    const std::map<long, Rational>& terms() const { return c_; }

    void add_term(long exponent, const Rational& coeff);

    GradedPolynomial& operator+=(const GradedPolynomial& rhs);
    GradedPolynomial& operator-=(const GradedPolynomial& rhs);
    GradedPolynomial operator+(const GradedPolynomial& rhs) const;
    GradedPolynomial operator-(const GradedPolynomial& rhs) const;
    GradedPolynomial operator*(const GradedPolynomial& rhs) const;
    GradedPolynomial operator*(const Rational& s) const;
    GradedPolynomial operator-() const;
    bool operator==(const GradedPolynomial&) const = default;

    // q -> q^k; used by the Phi regrading.
    GradedPolynomial stretched(long k) const;
    // multiply by q^s; s may push exponents negative, which is rejected.
    GradedPolynomial shifted(long s) const;

    bool has_integer_coeffs() const;
    bool has_nonnegative_coeffs() const;
    Rational evaluate_at_one() const;

    // Ascending-exponent rendering: "1+q+2q^2"; "^" and juxtaposition match
    // the table style, so the string doubles as LaTeX math content.
    std::string str() const;

private:
    std::map<long, Rational> c_;
};

} // namespace kostka

#endif
