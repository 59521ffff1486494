#include "kostka/graded_poly.hpp"

#include <sstream>

#include "kostka/errors.hpp"

namespace kostka {

GradedPolynomial GradedPolynomial::constant(const Rational& c) {
    return monomial(0, c);
}

GradedPolynomial GradedPolynomial::monomial(long exponent, const Rational& coeff) {
    GradedPolynomial p;
    p.add_term(exponent, coeff);
    return p;
}

long GradedPolynomial::degree() const {
    return c_.empty() ? -1 : c_.rbegin()->first;
}

long GradedPolynomial::valuation() const {
    return c_.empty() ? -1 : c_.begin()->first;
}

Rational GradedPolynomial::coeff(long exponent) const {
    auto it = c_.find(exponent);
    return it == c_.end() ? Rational(0) : it->second;
}

void GradedPolynomial::add_term(long exponent, const Rational& coeff) {
    if (coeff == 0) return;
    if (exponent < 0)
        throw invariant_error("negative_exponent", "graded polynomial exponent < 0");
    auto [it, inserted] = c_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) c_.erase(it);
    }
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& rhs) {
    for (const auto& [e, c] : rhs.c_) add_term(e, c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& rhs) {
    for (const auto& [e, c] : rhs.c_) add_term(e, -c);
    return *this;
}

GradedPolynomial GradedPolynomial::operator+(const GradedPolynomial& rhs) const {
    GradedPolynomial out = *this;
    out += rhs;
    return out;
}

GradedPolynomial GradedPolynomial::operator-(const GradedPolynomial& rhs) const {
    GradedPolynomial out = *this;
    out -= rhs;
    return out;
}

GradedPolynomial GradedPolynomial::operator*(const GradedPolynomial& rhs) const {
    GradedPolynomial out;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : rhs.c_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

GradedPolynomial GradedPolynomial::operator*(const Rational& s) const {
    GradedPolynomial out;
    if (s == 0) return out;
    for (const auto& [e, c] : c_) out.c_.emplace(e, c * s);
    return out;
}

GradedPolynomial GradedPolynomial::operator-() const {
    return *this * Rational(-1);
}

GradedPolynomial GradedPolynomial::stretched(long k) const {
    GradedPolynomial out;
    for (const auto& [e, c] : c_) out.add_term(e * k, c);
    return out;
}

GradedPolynomial GradedPolynomial::shifted(long s) const {
    GradedPolynomial out;
    for (const auto& [e, c] : c_) out.add_term(e + s, c);
    return out;
}

bool GradedPolynomial::has_integer_coeffs() const {
    for (const auto& [e, c] : c_)
        if (!is_integer(c)) return false;
    return true;
}

bool GradedPolynomial::has_nonnegative_coeffs() const {
    for (const auto& [e, c] : c_)
        if (c < 0) return false;
    return true;
}

Rational GradedPolynomial::evaluate_at_one() const {
    Rational s = 0;
    for (const auto& [e, c] : c_) s += c;
    return s;
}

std::string GradedPolynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? '-' : '+');
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << rational_to_string(a);
        } else {
            if (a != 1) os << rational_to_string(a);
            os << 'q';
            if (e != 1) os << '^' << e;
        }
    }
    return os.str();
}

} // namespace kostka
