#ifndef KOSTKA_MACDONALD_HPP
#define KOSTKA_MACDONALD_HPP

#include <map>
#include <string>
#include <vector>

#include "kostka/budgets.hpp"
#include "kostka/graded_poly.hpp"

namespace kostka {

using Composition = std::vector<int>;  // non-negative entries
using Exponents = std::vector<int>;

// Sparse multivariate polynomial in x_1..x_N with GradedPolynomial (q)
// coefficients; zero coefficients never stored.
class BlockCharacter {
public:
    explicit BlockCharacter(std::size_t n_vars = 0) : n_vars_(n_vars) {}
    static BlockCharacter one(std::size_t n_vars);
    static BlockCharacter monomial(const Exponents& e,
                                   GradedPolynomial c = GradedPolynomial::one());

    std::size_t n_vars() const { return n_vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t monomial_count() const { return terms_.size(); }
    const std::map<Exponents, GradedPolynomial>& terms() const { return terms_; }
    GradedPolynomial coeff(const Exponents& e) const;

    void add_term(const Exponents& e, const GradedPolynomial& c);

    BlockCharacter operator+(const BlockCharacter& rhs) const;
    BlockCharacter operator-(const BlockCharacter& rhs) const;
    BlockCharacter operator*(const BlockCharacter& rhs) const;
    BlockCharacter operator*(const GradedPolynomial& s) const;
    bool operator==(const BlockCharacter&) const = default;

    // Swap variables i, i+1 (1-based i).
    BlockCharacter swapped(std::size_t i) const;
    bool symmetric_in(std::size_t i) const;
    // -1 when inhomogeneous, else the common total x-degree.
    long homogeneous_degree() const;
    std::string str() const;

private:
    std::size_t n_vars_;
    std::map<Exponents, GradedPolynomial> terms_;
};

// Isobaric Demazure operator pi_i, computed monomial-wise: for exponents
// (a, b) at positions (i, i+1), a >= b contributes sum_{k=b}^{a} of the
// (k, a+b-k) spread, a < b contributes minus the interior sum. Idempotent.
BlockCharacter demazure_step(const BlockCharacter& f, std::size_t i);

// Division-based evaluation of the same operator, kept as an independent
// cross-check: pi_i f = (x_i f - s_i(x_i f)) / (x_i - x_{i+1}).
BlockCharacter demazure_step_by_division(const BlockCharacter& f, std::size_t i);

// The rotate-and-increment companion of the Demazure recursion. The exact
// convention (rotation direction, q-substitution sign, prefactor power) is
// fixed once by the anchored-convention scan and validated on every run.
struct RaiseConvention {
    bool rotate_right = true;  // Phi(nu) = (nu_N + 1, nu_1, ..., nu_{N-1})
    int subst_sign = -1;       // recycled variable enters as q^{subst_sign} x
    int prefactor_extra = 0;   // q-power offset added to nu_out
    int id = 0;
    std::string describe() const;
};

// Runs the candidate scan against the anchored character values and returns
// the unique survivor; throws invariant_error if the survivor is not unique
// or differs from the hard-coded expectation.
const RaiseConvention& anchored_convention();

Composition raise_composition(const Composition& mu, const RaiseConvention& conv);
// Given f = E_mu(x;q,0), returns (E_{Phi mu}, Phi mu).
std::pair<BlockCharacter, Composition> raise_step(const BlockCharacter& f,
                                                  const Composition& mu);

enum class AscentRule { leftmost, rightmost };

class MacdonaldCache {
public:
    const BlockCharacter* find(const Composition& mu) const;
    void insert(const Composition& mu, BlockCharacter value);

private:
    std::map<Composition, BlockCharacter> memo_;
};

// Nonsymmetric Macdonald polynomial specialized at t = 0. Recursion: an
// ascent mu_i < mu_{i+1} is resolved through pi_i applied to E_{s_i mu};
// a weakly decreasing nonzero mu is un-raised through the rotate-and-
// increment step. Monic with leading monomial x^mu; homogeneous of degree
// |mu|; coefficients in Z_{>=0}[q].
BlockCharacter nonsym_macdonald_t0(const Composition& mu,
                                   MacdonaldCache* cache = nullptr,
                                   const Budgets& budgets = Budgets{},
                                   AscentRule rule = AscentRule::leftmost);

} // namespace kostka

#endif
