#ifndef KOSTKA_LIMIT_KOSTKA_HPP
#define KOSTKA_LIMIT_KOSTKA_HPP

#include <map>
#include <string>
#include <vector>

#include "kostka/lusztig_shoji.hpp"
#include "kostka/macdonald.hpp"

namespace kostka {

// Schur polynomial s_lambda in the width-n variable block block_index
// (0-based) of N = n*ell variables, by semistandard-tableau generation.
BlockCharacter schur_polynomial(const Partition& lambda, std::size_t block_index,
                                long n, long ell);

// ch V_mu = prod_k s_{mu^(k)}(block k).
BlockCharacter product_character(const MultiPartition& mu, long n);

// multiplicities[mu] = graded multiplicity of ch V_mu.
struct IsotypicDecomposition {
    std::map<MultiPartition, GradedPolynomial> multiplicities;
};

// Greedy peeling along the dominance order: repeatedly strip a
// triangularity-maximal dominant monomial. The result is independent of the
// tie-break among incomparable maxima; reverse_tiebreak exists to assert
// that in tests.
IsotypicDecomposition block_schur_decompose(const BlockCharacter& f, long n, long ell,
                                            bool reverse_tiebreak = false);

// A V_mu at z-degree d moves to degree ell*d + c(lambda) - c(mu), where
// c(nu) = sum_k (k-1)|nu^(k)|. Negative degrees signal a convention fault.
std::map<MultiPartition, GradedPolynomial> phi_regrade(const IsotypicDecomposition& dec,
                                                       const MultiPartition& lambda,
                                                       long ell);

long color_charge(const MultiPartition& mp);  // c(nu) above

// The Demazure-route K-: column lambda holds the regraded multiplicities of
// E_{tot(lambda)}(x;q,0). Head, socle degree, triangular support and
// positivity are validated per column.
struct KminusCandidate {
    long m = 0;
    long ell = 1;
    long n = 0;
    std::vector<MultiPartition> index;
    std::vector<std::vector<GradedPolynomial>> entries;  // [row][col]
};

KminusCandidate kminus_demazure(long m, long ell, long n = 0,
                                Exec exec = Exec::serial,
                                const Budgets& budgets = Budgets{});

enum class Relabeling { identity, conjugate };

// The label identification between the two routes, frozen after the
// fixture runs; cross_check re-derives it and reports what it used.
constexpr Relabeling kFrozenRelabeling = Relabeling::identity;

struct CrossCheckVerdict {
    bool equal = false;
    Relabeling used = Relabeling::identity;
    std::string diff;
};

// Verifies that the Demazure-route K- matches the Lusztig-Shoji K-
// entrywise, trying the identity identification first and the
// componentwise-conjugation relabeling second.
CrossCheckVerdict cross_check(const KminusCandidate& demazure,
                              const KostkaSolution& ls);
CrossCheckVerdict cross_check(long m, long ell, Exec exec = Exec::serial,
                              const Budgets& budgets = Budgets{});

} // namespace kostka

#endif
