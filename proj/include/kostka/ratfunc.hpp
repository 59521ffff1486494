#ifndef KOSTKA_RATFUNC_HPP
#define KOSTKA_RATFUNC_HPP

#include <string>
#include <vector>

#include "kostka/cyclotomic.hpp"
#include "kostka/graded_poly.hpp"

namespace kostka {

// Dense polynomial in q over Q(zeta_ell), ascending coefficients, no
// trailing zeros. Only the operations the rational-function field needs.
struct CycPoly {
    long order = 1;
    std::vector<Cyclotomic> c;

    static CycPoly zero(long order) { return CycPoly{order, {}}; }
    static CycPoly one(long order);
    static CycPoly constant(const Cyclotomic& a);
    static CycPoly from_graded(const GradedPolynomial& p, long order);

    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Cyclotomic& leading() const { return c.back(); }
    void normalize();

    CycPoly operator+(const CycPoly& rhs) const;
    CycPoly operator-(const CycPoly& rhs) const;
    CycPoly operator*(const CycPoly& rhs) const;
    CycPoly operator*(const Cyclotomic& s) const;
    bool operator==(const CycPoly&) const = default;

    // Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<CycPoly, CycPoly> divmod(const CycPoly& d) const;
    bool is_rational() const;
    std::string str() const;
};

CycPoly poly_gcd(CycPoly a, CycPoly b);  // monic gcd

// Reduced ratio of CycPoly with monic denominator. The canonical form makes
// equality a coefficient comparison.
class RationalFunction {
public:
    explicit RationalFunction(long order = 1)
        : num_(CycPoly::zero(order)), den_(CycPoly::one(order)) {}
    RationalFunction(CycPoly num, CycPoly den);
    static RationalFunction zero(long order) { return RationalFunction(order); }
    static RationalFunction one(long order);
    static RationalFunction from_poly(const CycPoly& p);
    static RationalFunction from_graded(const GradedPolynomial& p, long order);

    long order() const { return num_.order; }
    const CycPoly& num() const { return num_; }
    const CycPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    // true iff all coefficients of num and den lie in Q.
    bool is_rational() const { return num_.is_rational() && den_.is_rational(); }

    RationalFunction operator+(const RationalFunction& rhs) const;
    RationalFunction operator-(const RationalFunction& rhs) const;
    RationalFunction operator*(const RationalFunction& rhs) const;
    RationalFunction operator/(const RationalFunction& rhs) const;
    RationalFunction operator-() const;
    RationalFunction inverse() const;
    RationalFunction& operator+=(const RationalFunction& rhs) { return *this = *this + rhs; }
    RationalFunction& operator-=(const RationalFunction& rhs) { return *this = *this - rhs; }
    RationalFunction& operator*=(const RationalFunction& rhs) { return *this = *this * rhs; }
    bool operator==(const RationalFunction&) const = default;

    // Taylor coefficients up to q^D; requires den(0) != 0 and a rational
    // series (each coefficient must land in Q).
    GradedPolynomial series(long D) const;

    // Conversion when the value is a genuine polynomial with rational
    // coefficients; rejects otherwise.
    GradedPolynomial as_graded_polynomial() const;

    std::string str() const;

private:
    CycPoly num_, den_;
    void reduce();
};

} // namespace kostka

#endif
