#ifndef KOSTKA_CYCLOTOMIC_HPP
#define KOSTKA_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "kostka/numeric.hpp"

namespace kostka {

// Element of Q(zeta_ell), stored as the residue of a rational polynomial in
// zeta modulo the ell-th cyclotomic polynomial; coordinate vector has length
// phi(ell). ell = 1 degenerates to Q itself. Arithmetic between different
// orders is rejected.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), c_(1, Rational(0)) {}
    Cyclotomic(long order, const Rational& rational_value);
    static Cyclotomic zeta_power(long order, long k);
    static Cyclotomic zero(long order) { return Cyclotomic(order, 0); }
    static Cyclotomic one(long order) { return Cyclotomic(order, 1); }

    long order() const { return order_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    bool is_integral() const;  // all coordinates in Z (power basis of Z[zeta])
    Rational rational_value() const;  // requires is_rational()

    Cyclotomic operator+(const Cyclotomic& rhs) const;
    Cyclotomic operator-(const Cyclotomic& rhs) const;
    Cyclotomic operator*(const Cyclotomic& rhs) const;
    Cyclotomic operator-() const;
    Cyclotomic inverse() const;  // rejects zero
    Cyclotomic& operator+=(const Cyclotomic& rhs) { return *this = *this + rhs; }
    Cyclotomic& operator-=(const Cyclotomic& rhs) { return *this = *this - rhs; }
    Cyclotomic& operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }
    bool operator==(const Cyclotomic&) const = default;

    // Complex conjugation, i.e. the automorphism zeta -> zeta^(ell-1).
    Cyclotomic conj() const;

    std::string str() const;  // "1-1/2z+z^2" with z = zeta_ell

private:
    long order_;
    std::vector<Rational> c_;

    void check_same_order(const Cyclotomic& rhs) const;
};

long euler_phi(long n);
// Coefficients of the n-th cyclotomic polynomial, ascending degree.
const std::vector<Integer>& cyclotomic_polynomial(long n);

} // namespace kostka

#endif
