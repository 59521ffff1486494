#include "kostka/ratfunc.hpp"

#include <sstream>

#include "kostka/errors.hpp"

namespace kostka {

CycPoly CycPoly::one(long order) {
    return CycPoly{order, {Cyclotomic::one(order)}};
}

CycPoly CycPoly::constant(const Cyclotomic& a) {
    CycPoly p{a.order(), {a}};
    p.normalize();
    return p;
}

CycPoly CycPoly::from_graded(const GradedPolynomial& p, long order) {
    CycPoly out = CycPoly::zero(order);
    if (p.is_zero()) return out;
    out.c.assign(static_cast<std::size_t>(p.degree()) + 1, Cyclotomic::zero(order));
    for (const auto& [e, coef] : p.terms())
        out.c[static_cast<std::size_t>(e)] = Cyclotomic(order, coef);
    return out;
}

void CycPoly::normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

CycPoly CycPoly::operator+(const CycPoly& rhs) const {
    CycPoly out{order, {}};
    out.c.resize(std::max(c.size(), rhs.c.size()), Cyclotomic::zero(order));
    for (std::size_t i = 0; i < c.size(); ++i) out.c[i] += c[i];
    for (std::size_t i = 0; i < rhs.c.size(); ++i) out.c[i] += rhs.c[i];
    out.normalize();
    return out;
}

CycPoly CycPoly::operator-(const CycPoly& rhs) const {
    CycPoly out{order, {}};
    out.c.resize(std::max(c.size(), rhs.c.size()), Cyclotomic::zero(order));
    for (std::size_t i = 0; i < c.size(); ++i) out.c[i] += c[i];
    for (std::size_t i = 0; i < rhs.c.size(); ++i) out.c[i] -= rhs.c[i];
    out.normalize();
    return out;
}

CycPoly CycPoly::operator*(const CycPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return zero(order);
    CycPoly out{order, {}};
    out.c.assign(c.size() + rhs.c.size() - 1, Cyclotomic::zero(order));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.c.size(); ++j) {
            if (rhs.c[j].is_zero()) continue;
            out.c[i + j] += c[i] * rhs.c[j];
        }
    }
    out.normalize();
    return out;
}

CycPoly CycPoly::operator*(const Cyclotomic& s) const {
    if (s.is_zero()) return zero(order);
    CycPoly out = *this;
    for (auto& x : out.c) x *= s;
    out.normalize();
    return out;
}

std::pair<CycPoly, CycPoly> CycPoly::divmod(const CycPoly& d) const {
    if (d.is_zero())
        throw input_error("division_by_zero", "polynomial division by zero");
    CycPoly rem = *this;
    CycPoly quo = zero(order);
    if (degree() >= d.degree())
        quo.c.assign(static_cast<std::size_t>(degree() - d.degree()) + 1,
                     Cyclotomic::zero(order));
    const Cyclotomic lead_inv = d.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        const long shift = rem.degree() - d.degree();
        const Cyclotomic coef = rem.leading() * lead_inv;
        quo.c[static_cast<std::size_t>(shift)] = coef;
        for (std::size_t j = 0; j < d.c.size(); ++j)
            rem.c[static_cast<std::size_t>(shift) + j] -= coef * d.c[j];
        rem.normalize();
    }
    quo.normalize();
    return {quo, rem};
}

bool CycPoly::is_rational() const {
    for (const auto& x : c)
        if (!x.is_rational()) return false;
    return true;
}

std::string CycPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << '(' << c[i].str() << ')';
        if (i == 1) os << "q";
        if (i > 1) os << "q^" << i;
    }
    return os.str();
}

CycPoly poly_gcd(CycPoly a, CycPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * a.leading().inverse();  // monic
}

RationalFunction::RationalFunction(CycPoly num, CycPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.order != den_.order)
        throw input_error("order_mismatch", "rational function orders differ");
    if (den_.is_zero())
        throw input_error("division_by_zero", "zero denominator");
    reduce();
}

RationalFunction RationalFunction::one(long order) {
    return from_poly(CycPoly::one(order));
}

RationalFunction RationalFunction::from_poly(const CycPoly& p) {
    return RationalFunction(p, CycPoly::one(p.order));
}

RationalFunction RationalFunction::from_graded(const GradedPolynomial& p, long order) {
    return from_poly(CycPoly::from_graded(p, order));
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = CycPoly::one(num_.order);
        return;
    }
    CycPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    const Cyclotomic lead_inv = den_.leading().inverse();
    num_ = num_ * lead_inv;
    den_ = den_ * lead_inv;
}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
    return RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const {
    if (rhs.is_zero())
        throw input_error("division_by_zero", "division by zero rational function");
    return RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = out.num_ * (-Cyclotomic::one(order()));
    return out;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero())
        throw input_error("division_by_zero", "inverse of zero rational function");
    return RationalFunction(den_, num_);
}

GradedPolynomial RationalFunction::series(long D) const {
    if (den_.c.empty() || den_.c[0].is_zero())
        throw input_error("pole_at_zero", "series expansion needs den(0) != 0");
    const Cyclotomic d0_inv = den_.c[0].inverse();
    std::vector<Cyclotomic> s(static_cast<std::size_t>(D) + 1,
                              Cyclotomic::zero(order()));
    for (long k = 0; k <= D; ++k) {
        Cyclotomic acc = (k <= num_.degree()) ? num_.c[static_cast<std::size_t>(k)]
                                              : Cyclotomic::zero(order());
        for (long j = 1; j <= std::min<long>(k, den_.degree()); ++j)
            acc -= den_.c[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(k - j)];
        s[static_cast<std::size_t>(k)] = acc * d0_inv;
    }
    GradedPolynomial out;
    for (long k = 0; k <= D; ++k)
        out.add_term(k, s[static_cast<std::size_t>(k)].rational_value());
    return out;
}

GradedPolynomial RationalFunction::as_graded_polynomial() const {
    if (!is_polynomial())
        throw invariant_error("not_polynomial",
                              "rational function is not a polynomial: " + str());
    GradedPolynomial out;
    for (std::size_t i = 0; i < num_.c.size(); ++i) {
        // den is the monic constant 1 after reduction
        out.add_term(static_cast<long>(i), num_.c[i].rational_value());
    }
    return out;
}

std::string RationalFunction::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

} // namespace kostka
