#ifndef KOSTKA_LUSZTIG_SHOJI_HPP
#define KOSTKA_LUSZTIG_SHOJI_HPP

#include <string>
#include <vector>

#include "kostka/graded_poly.hpp"
#include "kostka/molien.hpp"

namespace kostka {

// Solution of (K+)^sigma Lambda tK- = Omega under the a-function
// unitriangularity constraints:
//   K-_{lam,mu} = delta whenever a(lam) >= a(mu),
//   K+_{lam,mu} = delta whenever a(lam^vee) >= a(mu^vee),
//   Lambda_{lam,mu} = 0 whenever a(lam) != a(mu).
struct KostkaSolution {
    std::vector<MultiPartition> index;
    std::vector<long> a_values;
    std::vector<std::size_t> vee_perm;  // i -> position of index[i]^vee
    std::vector<std::vector<GradedPolynomial>> k_plus, k_minus;
    FieldMatrix lambda;
    bool residual_ok = false;
};

// (M^sigma)_{lam,mu} = M_{lam^vee, mu^vee}; involutive.
FieldMatrix sigma_permute(const FieldMatrix& m, const std::vector<std::size_t>& vee_perm);

// Reverse-order block elimination: with indices grouped into equal-a blocks
// B_1 < ... < B_r, peel the top block B_r first (Lambda_rr = residual there),
// divide out the mixed rows/columns, subtract the rank-|B_r| update, recurse.
// The (index, a-value, involution) interface is abstract so the degenerate
// ell = 1 classical case runs through the same code path.
KostkaSolution solve_core(const FieldMatrix& omega,
                          std::vector<MultiPartition> labels,
                          std::vector<long> a_values,
                          std::vector<std::size_t> vee_perm);

KostkaSolution solve(const OmegaMatrix& omega);

// Exact function-field verification of the matrix equation plus the delta
// constraints. On failure, *diagnostic names the first offending entry.
bool residual_check(const KostkaSolution& sol, const FieldMatrix& omega,
                    std::string* diagnostic = nullptr);

// m = n = 1 closed forms: K-_{i,j} = q^(i-j) for i >= j;
// K+ = 1 on the diagonal, q at (ell, ell-1), q^(i+1) at (i, ell-1) for
// i < ell-1, zero elsewhere (indices in the {i} labelling).
struct Rank1Report {
    bool ok = true;
    std::string detail;
};
Rank1Report closed_form_check_rank1(long ell);

} // namespace kostka

#endif
