#ifndef KOSTKA_MOLIEN_HPP
#define KOSTKA_MOLIEN_HPP

#include <string>
#include <vector>

#include "kostka/characters.hpp"
#include "kostka/matrix.hpp"

namespace kostka {

// det(1 - q w|_{C^m}) = prod over colored cycles (length r, color c) of
// (1 - zeta^c q^r).
CycPoly reflection_det(const ColoredClass& c, long ell);

// Graded multiplicity matrix of the smash product CW x C[X]:
// Omega_{lam,mu} = sum_i q^i dim Hom_W(L_mu, C[X]_i (x) L_lam), assembled
// from the character table by the Molien class sum
//   Omega_{lam,mu} = (1/|W|) sum_C (|W|/z_C) chi_lam(C^{-1}) chi_mu(C) / det(1 - qC).
// Every entry is a rational function fixed by zeta-conjugation and expands
// to a non-negative integer series with Omega(0) = I.
struct OmegaMatrix {
    long m = 0;
    long ell = 1;
    std::vector<MultiPartition> index;  // canonical order
    std::vector<long> a_values;
    FieldMatrix entries;

    std::size_t index_of(const MultiPartition& label) const;
};

OmegaMatrix omega_matrix(long m, long ell, Exec exec = Exec::serial,
                         const Budgets& budgets = Budgets{});
OmegaMatrix omega_matrix(const CharacterTable& table, Exec exec = Exec::serial);

// For the row of the trivial label ((1^m)(empty)^(ell-1)): the entry in
// column lam^vee must have series valuation a(lam) with coefficient 1.
struct MinimalDegreeReport {
    bool ok = true;
    std::vector<std::string> failures;
};
MinimalDegreeReport minimal_degree_check(const OmegaMatrix& omega);

// Degree-wise truncation of Omega computed from the explicit group action
// on monomials; independent of the Molien closed form.
// result[i][j] = truncated series of Omega_{i,j} up to degree D.
std::vector<std::vector<GradedPolynomial>> omega_oracle(long m, long ell, long D,
                                                        const Budgets& budgets = Budgets{});

// Runs the oracle against the closed form; throws invariant_error naming
// the first offending (entry, degree) on a mismatch.
void omega_oracle_check(const OmegaMatrix& omega, long D,
                        const Budgets& budgets = Budgets{});

} // namespace kostka

#endif
