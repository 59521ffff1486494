#include "kostka/lusztig_shoji.hpp"

#include <algorithm>
#include <map>

#include "kostka/errors.hpp"

namespace kostka {

FieldMatrix sigma_permute(const FieldMatrix& m, const std::vector<std::size_t>& vee_perm) {
    FieldMatrix out(m.rows(), m.cols(), m.order());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = m.at(vee_perm[i], vee_perm[j]);
    return out;
}

namespace {

std::vector<std::vector<GradedPolynomial>> to_polynomial_matrix(
    const FieldMatrix& m, const std::vector<MultiPartition>& labels, const char* which) {
    std::vector<std::vector<GradedPolynomial>> out(
        m.rows(), std::vector<GradedPolynomial>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            GradedPolynomial p;
            try {
                p = m.at(i, j).as_graded_polynomial();
            } catch (const invariant_error&) {
                throw invariant_error(
                    "kostka_not_polynomial",
                    std::string(which) + " entry (" + to_string(labels[i]) + ", " +
                        to_string(labels[j]) + ") is not a polynomial: " +
                        m.at(i, j).str());
            }
            if (!p.has_integer_coeffs() || !p.has_nonnegative_coeffs())
                throw invariant_error(
                    "kostka_positivity",
                    std::string(which) + " entry (" + to_string(labels[i]) + ", " +
                        to_string(labels[j]) + ") violates positivity: " + p.str());
            out[i][j] = std::move(p);
        }
    }
    return out;
}

} // namespace

KostkaSolution solve_core(const FieldMatrix& omega,
                          std::vector<MultiPartition> labels,
                          std::vector<long> a_values,
                          std::vector<std::size_t> vee_perm) {
    const std::size_t n = omega.rows();
    const long order = omega.order();
    if (omega.cols() != n)
        throw input_error("shape_mismatch", "omega must be square");

    // Equal-a blocks, processed from the largest a-value downward.
    std::map<long, std::vector<std::size_t>, std::greater<long>> blocks;
    for (std::size_t i = 0; i < n; ++i) blocks[a_values[i]].push_back(i);

    FieldMatrix residual = omega;
    FieldMatrix u = FieldMatrix::identity(n, order);
    FieldMatrix l = FieldMatrix::identity(n, order);
    FieldMatrix lambda(n, n, order);

    for (const auto& [a, block] : blocks) {
        std::vector<std::size_t> lower;
        for (std::size_t i = 0; i < n; ++i)
            if (a_values[i] < a) lower.push_back(i);

        const FieldMatrix lam_block = residual.submatrix(block, block);
        FieldMatrix lam_inv;
        try {
            lam_inv = lam_block.inverse("a = " + std::to_string(a));
        } catch (const invariant_error&) {
            throw invariant_error("lambda_singular",
                                  "Lambda block for a = " + std::to_string(a) +
                                      " is singular; Omega violates the unique-solution premise");
        }
        for (std::size_t bi = 0; bi < block.size(); ++bi)
            for (std::size_t bj = 0; bj < block.size(); ++bj)
                lambda.at(block[bi], block[bj]) = lam_block.at(bi, bj);

        if (lower.empty()) continue;
        const FieldMatrix top = residual.submatrix(lower, block);    // rows P, cols B
        const FieldMatrix left = residual.submatrix(block, lower);   // rows B, cols P
        const FieldMatrix u_pb = top * lam_inv;
        const FieldMatrix l_bp = lam_inv * left;
        for (std::size_t pi = 0; pi < lower.size(); ++pi)
            for (std::size_t bj = 0; bj < block.size(); ++bj)
                u.at(lower[pi], block[bj]) = u_pb.at(pi, bj);
        for (std::size_t bi = 0; bi < block.size(); ++bi)
            for (std::size_t pj = 0; pj < lower.size(); ++pj)
                l.at(block[bi], lower[pj]) = l_bp.at(bi, pj);

        const FieldMatrix update = u_pb * lam_block * l_bp;
        for (std::size_t pi = 0; pi < lower.size(); ++pi)
            for (std::size_t pj = 0; pj < lower.size(); ++pj)
                residual.at(lower[pi], lower[pj]) -= update.at(pi, pj);
    }

    KostkaSolution sol;
    sol.index = std::move(labels);
    sol.a_values = std::move(a_values);
    sol.vee_perm = std::move(vee_perm);
    sol.lambda = std::move(lambda);

    // K+ = U^sigma and K- = transpose(L), as polynomial matrices.
    FieldMatrix k_plus_field = sigma_permute(u, sol.vee_perm);
    FieldMatrix k_minus_field(n, n, order);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) k_minus_field.at(i, j) = l.at(j, i);
    sol.k_plus = to_polynomial_matrix(k_plus_field, sol.index, "K+");
    sol.k_minus = to_polynomial_matrix(k_minus_field, sol.index, "K-");
    sol.residual_ok = residual_check(sol, omega);
    if (!sol.residual_ok)
        throw invariant_error("residual", "solver output fails to reproduce Omega");
    return sol;
}

KostkaSolution solve(const OmegaMatrix& omega) {
    std::vector<std::size_t> vee_perm;
    vee_perm.reserve(omega.index.size());
    for (const auto& label : omega.index)
        vee_perm.push_back(omega.index_of(involution_vee(label)));
    return solve_core(omega.entries, omega.index, omega.a_values, vee_perm);
}

bool residual_check(const KostkaSolution& sol, const FieldMatrix& omega,
                    std::string* diagnostic) {
    const std::size_t n = omega.rows();
    const long order = omega.order();
    auto fail = [&](const std::string& msg) {
        if (diagnostic) *diagnostic = msg;
        return false;
    };
    // delta constraints first.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const GradedPolynomial delta =
                i == j ? GradedPolynomial::one() : GradedPolynomial();
            if (sol.a_values[i] >= sol.a_values[j] && sol.k_minus[i][j] != delta)
                return fail("K- delta constraint fails at (" + to_string(sol.index[i]) +
                            ", " + to_string(sol.index[j]) + ")");
            if (sol.a_values[sol.vee_perm[i]] >= sol.a_values[sol.vee_perm[j]] &&
                sol.k_plus[i][j] != delta)
                return fail("K+ delta constraint fails at (" + to_string(sol.index[i]) +
                            ", " + to_string(sol.index[j]) + ")");
            if (sol.a_values[i] != sol.a_values[j] && !sol.lambda.at(i, j).is_zero())
                return fail("Lambda block constraint fails at (" +
                            to_string(sol.index[i]) + ", " + to_string(sol.index[j]) + ")");
        }
    // exact function-field product.
    FieldMatrix u(n, n, order), lt(n, n, order);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            u.at(i, j) = RationalFunction::from_graded(
                sol.k_plus[sol.vee_perm[i]][sol.vee_perm[j]], order);
            lt.at(i, j) = RationalFunction::from_graded(sol.k_minus[j][i], order);
        }
    const FieldMatrix product = u * sol.lambda * lt;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(product.at(i, j) == omega.at(i, j)))
                return fail("product differs from Omega at (" + to_string(sol.index[i]) +
                            ", " + to_string(sol.index[j]) + "): " +
                            product.at(i, j).str() + " vs " + omega.at(i, j).str());
    return true;
}

Rank1Report closed_form_check_rank1(long ell) {
    if (ell < 2)
        throw input_error("bad_order", "rank-1 closed forms need ell >= 2");
    Rank1Report report;
    const KostkaSolution sol = solve(omega_matrix(1, ell));
    // Label {i} = ((empty)^(ell-i) (1) (empty)^(i-1)) has the box in
    // component ell - i + 1; canonical order sorts by component, so the
    // index holding {i} is ell - i.
    auto box_position = [&](long i) { return static_cast<std::size_t>(ell - i); };
    auto expect = [&](const char* which, const GradedPolynomial& got, long i, long j,
                      const GradedPolynomial& want) {
        if (got == want) return;
        report.ok = false;
        report.detail += std::string(which) + "_{" + std::to_string(i) + "," +
                         std::to_string(j) + "} = " + got.str() + ", expected " +
                         want.str() + "; ";
    };
    for (long i = 1; i <= ell; ++i) {
        for (long j = 1; j <= ell; ++j) {
            const GradedPolynomial got_minus =
                sol.k_minus[box_position(i)][box_position(j)];
            const GradedPolynomial want_minus =
                i >= j ? GradedPolynomial::monomial(i - j, 1) : GradedPolynomial();
            expect("K-", got_minus, i, j, want_minus);

            GradedPolynomial want_plus;
            if (i == j)
                want_plus = GradedPolynomial::one();
            else if (i == ell && j == ell - 1)
                want_plus = GradedPolynomial::monomial(1, 1);
            else if (i < ell - 1 && j == ell - 1)
                want_plus = GradedPolynomial::monomial(i + 1, 1);
            expect("K+", sol.k_plus[box_position(i)][box_position(j)], i, j, want_plus);
        }
    }
    return report;
}

} // namespace kostka
