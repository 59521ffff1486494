#include "kostka/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "kostka/errors.hpp"

namespace kostka {

long euler_phi(long n) {
    long result = n, p = 2, m = n;
    while (p * p <= m) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
        ++p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Exact division of integer polynomials, ascending coefficients.
std::vector<Integer> poly_div_exact(std::vector<Integer> num,
                                    const std::vector<Integer>& den) {
    std::vector<Integer> q(num.size() - den.size() + 1, Integer(0));
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        Integer lead = num[i + den.size() - 1];
        if (lead == 0) continue;
        q[i] = lead / den.back();
        for (std::size_t j = 0; j < den.size(); ++j)
            num[i + j] -= q[i] * den[j];
    }
    return q;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(long n) {
    static std::map<long, std::vector<Integer>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // (x^n - 1) divided by the product of Phi_d over proper divisors d.
    std::function<std::vector<Integer>(long)> build = [&](long k) -> std::vector<Integer> {
        auto got = cache.find(k);
        if (got != cache.end()) return got->second;
        std::vector<Integer> num(static_cast<std::size_t>(k) + 1, Integer(0));
        num.front() = -1;
        num.back() = 1;
        for (long d = 1; d < k; ++d) {
            if (k % d != 0) continue;
            num = poly_div_exact(std::move(num), build(d));
        }
        cache.emplace(k, num);
        return num;
    };
    build(n);
    return cache.at(n);
}

Cyclotomic::Cyclotomic(long order, const Rational& rational_value) : order_(order) {
    if (order < 1) throw input_error("bad_order", "cyclotomic order must be >= 1");
    c_.assign(static_cast<std::size_t>(euler_phi(order)), Rational(0));
    c_[0] = rational_value;
}

void Cyclotomic::check_same_order(const Cyclotomic& rhs) const {
    if (order_ != rhs.order_)
        throw input_error("order_mismatch", "cyclotomic orders differ");
}

namespace {

// Reduce a rational polynomial (ascending, any degree) mod Phi_order.
std::vector<Rational> reduce_mod_cyclotomic(std::vector<Rational> v, long order) {
    const auto& phi = cyclotomic_polynomial(order);
    const std::size_t deg = phi.size() - 1;  // = euler_phi(order)
    while (v.size() > deg) {
        Rational lead = v.back();
        v.pop_back();
        if (lead == 0) continue;
        // x^(len) = -(phi_0 + ... + phi_{deg-1} x^{deg-1}) x^(len-deg), monic phi
        const std::size_t base = v.size() - deg;
        for (std::size_t j = 0; j < deg; ++j)
            v[base + j] -= lead * Rational(phi[j]);
    }
    v.resize(deg, Rational(0));
    return v;
}

} // namespace

Cyclotomic Cyclotomic::zeta_power(long order, long k) {
    k %= order;
    if (k < 0) k += order;
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v.back() = 1;
    Cyclotomic z(order, 0);
    z.c_ = reduce_mod_cyclotomic(std::move(v), order);
    return z;
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Cyclotomic::is_integral() const {
    for (const auto& x : c_)
        if (!is_integer(x)) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational())
        throw invariant_error("not_rational", "cyclotomic value is irrational: " + str());
    return c_[0];
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
    check_same_order(rhs);
    Cyclotomic out = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] += rhs.c_[i];
    return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const {
    check_same_order(rhs);
    Cyclotomic out = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] -= rhs.c_[i];
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
    check_same_order(rhs);
    std::vector<Rational> conv(2 * c_.size(), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
            if (rhs.c_[j] == 0) continue;
            conv[i + j] += c_[i] * rhs.c_[j];
        }
    }
    Cyclotomic out(order_, 0);
    out.c_ = reduce_mod_cyclotomic(std::move(conv), order_);
    return out;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero())
        throw input_error("division_by_zero", "inverse of zero cyclotomic");
    // Extended Euclid in Q[x] for gcd(residue, Phi) = 1.
    const auto& phi_int = cyclotomic_polynomial(order_);
    std::vector<Rational> r0(phi_int.begin(), phi_int.end());
    std::vector<Rational> r1(c_.begin(), c_.end());
    auto strip = [](std::vector<Rational>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    strip(r1);
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // coeff of residue
    while (true) {
        strip(r1);
        if (r1.empty())
            throw invariant_error("not_invertible", "gcd with cyclotomic modulus not 1");
        if (r1.size() == 1) break;
        // r0 = q * r1 + r2
        std::vector<Rational> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1,
                                Rational(0));
        std::vector<Rational> rem = r0;
        for (long i = static_cast<long>(rem.size()) - static_cast<long>(r1.size());
             i >= 0; --i) {
            Rational coef = rem[i + r1.size() - 1] / r1.back();
            if (coef == 0) continue;
            q[static_cast<std::size_t>(i)] = coef;
            for (std::size_t j = 0; j < r1.size(); ++j)
                rem[static_cast<std::size_t>(i) + j] -= coef * r1[j];
        }
        strip(rem);
        // s2 = s0 - q*s1
        std::vector<Rational> s2(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    const Rational unit = r1[0];
    for (auto& x : s1) x /= unit;
    Cyclotomic out(order_, 0);
    out.c_ = reduce_mod_cyclotomic(std::move(s1), order_);
    return out;
}

Cyclotomic Cyclotomic::conj() const {
    // zeta^i -> zeta^(i * (ell-1)).
    Cyclotomic out(order_, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Cyclotomic term = zeta_power(order_, static_cast<long>(i) * (order_ - 1));
        for (std::size_t j = 0; j < out.c_.size(); ++j)
            out.c_[j] += c_[i] * term.c_[j];
    }
    return out;
}

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational a = c_[i];
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
        if (i == 0) {
            os << rational_to_string(a);
        } else {
            if (a != 1) os << rational_to_string(a);
            os << 'z';
            if (i != 1) os << '^' << i;
        }
    }
    return os.str();
}

} // namespace kostka
