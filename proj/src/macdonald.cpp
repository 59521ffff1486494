#include "kostka/macdonald.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "kostka/errors.hpp"

namespace kostka {

BlockCharacter BlockCharacter::one(std::size_t n_vars) {
    return monomial(Exponents(n_vars, 0));
}

BlockCharacter BlockCharacter::monomial(const Exponents& e, GradedPolynomial c) {
    BlockCharacter f(e.size());
    f.add_term(e, c);
    return f;
}

GradedPolynomial BlockCharacter::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GradedPolynomial() : it->second;
}

void BlockCharacter::add_term(const Exponents& e, const GradedPolynomial& c) {
    if (c.is_zero()) return;
    if (e.size() != n_vars_)
        throw input_error("arity_mismatch", "exponent vector length mismatch");
    for (int x : e)
        if (x < 0)
            throw invariant_error("negative_exponent", "block character exponent < 0");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BlockCharacter BlockCharacter::operator+(const BlockCharacter& rhs) const {
    BlockCharacter out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

BlockCharacter BlockCharacter::operator-(const BlockCharacter& rhs) const {
    BlockCharacter out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
    return out;
}

BlockCharacter BlockCharacter::operator*(const BlockCharacter& rhs) const {
    if (n_vars_ != rhs.n_vars_)
        throw input_error("arity_mismatch", "block character arity mismatch");
    BlockCharacter out(n_vars_);
    Exponents e(n_vars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : rhs.terms_) {
            for (std::size_t k = 0; k < n_vars_; ++k) e[k] = e1[k] + e2[k];
            out.add_term(e, c1 * c2);
        }
    }
    return out;
}

BlockCharacter BlockCharacter::operator*(const GradedPolynomial& s) const {
    BlockCharacter out(n_vars_);
    for (const auto& [e, c] : terms_) out.add_term(e, c * s);
    return out;
}

BlockCharacter BlockCharacter::swapped(std::size_t i) const {
    if (i < 1 || i >= n_vars_)
        throw input_error("bad_position", "swap position out of range");
    BlockCharacter out(n_vars_);
    for (const auto& [e, c] : terms_) {
        Exponents h = e;
        std::swap(h[i - 1], h[i]);
        out.add_term(h, c);
    }
    return out;
}

bool BlockCharacter::symmetric_in(std::size_t i) const {
    return swapped(i) == *this;
}

long BlockCharacter::homogeneous_degree() const {
    long deg = -1;
    for (const auto& [e, c] : terms_) {
        const long d = std::accumulate(e.begin(), e.end(), 0L);
        if (deg == -1) deg = d;
        else if (d != deg) return -1;
    }
    return deg;
}

std::string BlockCharacter::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.str() << ')';
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            os << "x" << (k + 1);
            if (e[k] != 1) os << '^' << e[k];
        }
    }
    return os.str();
}

BlockCharacter demazure_step(const BlockCharacter& f, std::size_t i) {
    if (i < 1 || i >= f.n_vars())
        throw input_error("bad_position", "Demazure position out of range");
    BlockCharacter out(f.n_vars());
    for (const auto& [e, c] : f.terms()) {
        const int a = e[i - 1], b = e[i];
        Exponents h = e;
        if (a >= b) {
            for (int k = b; k <= a; ++k) {
                h[i - 1] = k;
                h[i] = a + b - k;
                out.add_term(h, c);
            }
        } else {
            for (int k = a + 1; k <= b - 1; ++k) {
                h[i - 1] = k;
                h[i] = a + b - k;
                out.add_term(h, -c);
            }
        }
    }
    return out;
}

BlockCharacter demazure_step_by_division(const BlockCharacter& f, std::size_t i) {
    // numerator g = x_i f - s_i(x_i f), divisible by (x_i - x_{i+1})
    BlockCharacter xi_f(f.n_vars());
    for (const auto& [e, c] : f.terms()) {
        Exponents h = e;
        ++h[i - 1];
        xi_f.add_term(h, c);
    }
    BlockCharacter g = xi_f - xi_f.swapped(i);
    // long division along x_i, treating x_{i+1} as part of the coefficient
    BlockCharacter quotient(f.n_vars());
    while (!g.is_zero()) {
        // leading term by x_i-degree (any on ties)
        auto lead = g.terms().begin();
        for (auto it = g.terms().begin(); it != g.terms().end(); ++it)
            if (it->first[i - 1] > lead->first[i - 1]) lead = it;
        Exponents h = lead->first;
        if (h[i - 1] == 0)
            throw invariant_error("not_divisible", "division remainder has no x_i factor");
        --h[i - 1];
        const GradedPolynomial c = lead->second;
        quotient.add_term(h, c);
        // subtract c * x^h * (x_i - x_{i+1})
        Exponents t1 = h, t2 = h;
        ++t1[i - 1];
        ++t2[i];
        g.add_term(t1, -c);
        g.add_term(t2, c);
    }
    return quotient;
}

std::string RaiseConvention::describe() const {
    std::ostringstream os;
    os << (rotate_right ? "rotate-right" : "rotate-left") << ", q^" << subst_sign
       << " substitution, prefactor q^(nu_out" << (prefactor_extra ? "+1" : "") << ")";
    return os.str();
}

Composition raise_composition(const Composition& mu, const RaiseConvention& conv) {
    const std::size_t n = mu.size();
    Composition out(n);
    if (conv.rotate_right) {
        out[0] = mu[n - 1] + 1;
        for (std::size_t i = 1; i < n; ++i) out[i] = mu[i - 1];
    } else {
        for (std::size_t i = 0; i + 1 < n; ++i) out[i] = mu[i + 1];
        out[n - 1] = mu[0] + 1;
    }
    return out;
}

namespace {

// Applies one raising step under an arbitrary candidate convention.
// Throws invariant_error when the step would produce a negative q-power,
// which disqualifies the candidate during the anchored scan.
BlockCharacter raise_with(const BlockCharacter& f, const Composition& mu,
                          const RaiseConvention& conv) {
    const std::size_t n = f.n_vars();
    BlockCharacter out(n);
    const int nu_out = conv.rotate_right ? mu[n - 1] : mu[0];
    for (const auto& [e, c] : f.terms()) {
        Exponents h(n);
        int recycled;
        if (conv.rotate_right) {
            recycled = e[n - 1];
            h[0] = recycled + 1;
            for (std::size_t i = 1; i < n; ++i) h[i] = e[i - 1];
        } else {
            recycled = e[0];
            for (std::size_t i = 0; i + 1 < n; ++i) h[i] = e[i + 1];
            h[n - 1] = recycled + 1;
        }
        const long shift = nu_out + conv.prefactor_extra +
                           static_cast<long>(conv.subst_sign) * recycled;
        GradedPolynomial coeff;
        try {
            coeff = c.shifted(shift);
        } catch (const invariant_error&) {
            throw invariant_error("raise_negative_power",
                                  "raising step produced a negative q-power");
        }
        out.add_term(h, coeff);
    }
    return out;
}

bool has_ascent(const Composition& mu, std::size_t* pos, AscentRule rule) {
    bool found = false;
    for (std::size_t i = 0; i + 1 < mu.size(); ++i) {
        if (mu[i] < mu[i + 1]) {
            *pos = i + 1;  // 1-based
            found = true;
            if (rule == AscentRule::leftmost) return true;
        }
    }
    return found;
}

BlockCharacter macdonald_rec(const Composition& mu, MacdonaldCache& cache,
                             const Budgets& budgets, AscentRule rule,
                             const RaiseConvention& conv) {
    if (const BlockCharacter* hit = cache.find(mu)) return *hit;
    const long weight = std::accumulate(mu.begin(), mu.end(), 0L);
    if (weight * static_cast<long>(mu.size()) > budgets.macdonald_weight)
        throw budget_error("macdonald_budget", "|mu| * N exceeds budget");
    BlockCharacter result(mu.size());
    std::size_t pos = 0;
    if (weight == 0) {
        result = BlockCharacter::one(mu.size());
    } else if (has_ascent(mu, &pos, rule)) {
        Composition swapped = mu;
        std::swap(swapped[pos - 1], swapped[pos]);
        result = demazure_step(macdonald_rec(swapped, cache, budgets, rule, conv), pos);
    } else {
        // weakly decreasing, nonzero: un-raise
        Composition nu(mu.size());
        if (conv.rotate_right) {
            for (std::size_t i = 0; i + 1 < mu.size(); ++i) nu[i] = mu[i + 1];
            nu[mu.size() - 1] = mu[0] - 1;
        } else {
            nu[0] = mu[mu.size() - 1] - 1;
            for (std::size_t i = 1; i < mu.size(); ++i) nu[i] = mu[i - 1];
        }
        for (int x : nu)
            if (x < 0)
                throw invariant_error("raise_unreachable",
                                      "composition cannot be un-raised");
        result = raise_with(macdonald_rec(nu, cache, budgets, rule, conv), nu, conv);
    }
    if (static_cast<long>(result.monomial_count()) > budgets.monomials)
        throw budget_error("monomial_budget", "monomial count exceeds budget");
    cache.insert(mu, result);
    return result;
}

struct Anchor {
    Composition mu;
    BlockCharacter value;
};

std::vector<Anchor> anchor_values() {
    std::vector<Anchor> anchors;
    {
        // E_{(1,0,0)} = x_1
        anchors.push_back({{1, 0, 0}, BlockCharacter::monomial({1, 0, 0})});
    }
    {
        // E_{(0,1,0,1)} = x1 x2 + (x1 + x2)(x3 + x4)
        BlockCharacter v(4);
        v.add_term({1, 1, 0, 0}, GradedPolynomial::one());
        v.add_term({1, 0, 1, 0}, GradedPolynomial::one());
        v.add_term({1, 0, 0, 1}, GradedPolynomial::one());
        v.add_term({0, 1, 1, 0}, GradedPolynomial::one());
        v.add_term({0, 1, 0, 1}, GradedPolynomial::one());
        anchors.push_back({{0, 1, 0, 1}, v});
    }
    {
        // E_{(0,2,0,0)} = (x1^2 + x1 x2 + x2^2) + q (x1 x2 + (x1+x2)(x3+x4))
        BlockCharacter v(4);
        const GradedPolynomial q = GradedPolynomial::monomial(1, 1);
        v.add_term({2, 0, 0, 0}, GradedPolynomial::one());
        v.add_term({1, 1, 0, 0}, GradedPolynomial::one() + q);
        v.add_term({0, 2, 0, 0}, GradedPolynomial::one());
        v.add_term({1, 0, 1, 0}, q);
        v.add_term({1, 0, 0, 1}, q);
        v.add_term({0, 1, 1, 0}, q);
        v.add_term({0, 1, 0, 1}, q);
        anchors.push_back({{0, 2, 0, 0}, v});
    }
    return anchors;
}

bool candidate_passes(const RaiseConvention& conv) {
    const Budgets budgets;
    for (const auto& anchor : anchor_values()) {
        try {
            MacdonaldCache cache;
            const BlockCharacter got =
                macdonald_rec(anchor.mu, cache, budgets, AscentRule::leftmost, conv);
            if (!(got == anchor.value)) return false;
            // monic triangular leading term
            Exponents lead(anchor.mu.begin(), anchor.mu.end());
            if (!(got.coeff(lead) == GradedPolynomial::one())) return false;
        } catch (const error&) {
            return false;
        }
    }
    return true;
}

} // namespace

const RaiseConvention& anchored_convention() {
    static RaiseConvention frozen;
    static std::once_flag once;
    std::call_once(once, [] {
        std::vector<RaiseConvention> survivors;
        int id = 0;
        for (bool rot : {true, false})
            for (int subst : {-1, +1})
                for (int extra : {0, 1}) {
                    RaiseConvention c{rot, subst, extra, id++};
                    if (candidate_passes(c)) survivors.push_back(c);
                }
        if (survivors.size() != 1) {
            std::string listing;
            for (const auto& s : survivors) listing += s.describe() + "; ";
            throw invariant_error("convention_scan",
                                  "anchored-convention scan found " +
                                      std::to_string(survivors.size()) +
                                      " survivors: " + listing);
        }
        frozen = survivors.front();
        // Hard-coded expectation: rotate-right, q^{-1} substitution, q^{nu_out}.
        if (!frozen.rotate_right || frozen.subst_sign != -1 || frozen.prefactor_extra != 0)
            throw invariant_error("convention_drift",
                                  "anchored convention differs from the frozen one: " +
                                      frozen.describe());
    });
    return frozen;
}

std::pair<BlockCharacter, Composition> raise_step(const BlockCharacter& f,
                                                  const Composition& mu) {
    const RaiseConvention& conv = anchored_convention();
    return {raise_with(f, mu, conv), raise_composition(mu, conv)};
}

const BlockCharacter* MacdonaldCache::find(const Composition& mu) const {
    auto it = memo_.find(mu);
    return it == memo_.end() ? nullptr : &it->second;
}

void MacdonaldCache::insert(const Composition& mu, BlockCharacter value) {
    memo_.emplace(mu, std::move(value));
}

BlockCharacter nonsym_macdonald_t0(const Composition& mu, MacdonaldCache* cache,
                                   const Budgets& budgets, AscentRule rule) {
    for (int x : mu)
        if (x < 0)
            throw input_error("negative_composition",
                              "composition entries must be non-negative");
    if (mu.empty()) throw input_error("empty_composition", "composition is empty");
    const RaiseConvention& conv = anchored_convention();
    MacdonaldCache local;
    MacdonaldCache& memo = cache ? *cache : local;
    return macdonald_rec(mu, memo, budgets, rule, conv);
}

} // namespace kostka
