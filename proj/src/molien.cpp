#include "kostka/molien.hpp"

#include <algorithm>

#include "kostka/errors.hpp"

namespace kostka {

CycPoly reflection_det(const ColoredClass& c, long ell) {
    CycPoly det = CycPoly::one(ell);
    for (int k = 1; k <= c.data.level(); ++k) {
        const long color = k - 1;
        for (int r : c.data.components[static_cast<std::size_t>(k - 1)].parts) {
            // 1 - zeta^color q^r
            CycPoly factor = CycPoly::zero(ell);
            factor.c.assign(static_cast<std::size_t>(r) + 1, Cyclotomic::zero(ell));
            factor.c.front() = Cyclotomic::one(ell);
            factor.c.back() = -Cyclotomic::zeta_power(ell, color);
            det = det * factor;
        }
    }
    return det;
}

std::size_t OmegaMatrix::index_of(const MultiPartition& label) const {
    for (std::size_t i = 0; i < index.size(); ++i)
        if (index[i] == label) return i;
    throw input_error("unknown_label", "label not in omega index: " + to_string(label));
}

OmegaMatrix omega_matrix(long m, long ell, Exec exec, const Budgets& budgets) {
    return omega_matrix(character_table(m, ell, exec, budgets), exec);
}

OmegaMatrix omega_matrix(const CharacterTable& table, Exec exec) {
    const long ell = table.ell;
    const std::size_t n = table.labels.size();
    OmegaMatrix omega;
    omega.m = table.m;
    omega.ell = ell;
    omega.index = table.labels;
    omega.a_values.reserve(n);
    for (const auto& label : omega.index) omega.a_values.push_back(a_function(label));

    std::vector<CycPoly> dets;
    std::vector<Rational> inv_z;
    dets.reserve(n);
    inv_z.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
        dets.push_back(reflection_det(ColoredClass{table.labels[c]}, ell));
        inv_z.push_back(Rational(1) / Rational(table.centralizers[c]));
    }
    // Accumulate every entry over one common denominator so the class sum is
    // a polynomial multiply-add with a single reduction at the end.
    CycPoly common = CycPoly::one(ell);
    for (const auto& det : dets) {
        const CycPoly g = poly_gcd(common, det);
        common = common * det.divmod(g).first;
    }
    std::vector<CycPoly> cofactors;
    cofactors.reserve(n);
    for (const auto& det : dets) cofactors.push_back(common.divmod(det).first);

    omega.entries = FieldMatrix(n, n, ell);
    parallel_for(exec, n * n, [&](std::size_t idx) {
        const std::size_t i = idx / n, j = idx % n;
        CycPoly num_sum = CycPoly::zero(ell);
        for (std::size_t c = 0; c < n; ++c) {
            Cyclotomic num = table.value(i, table.inverse_class[c]) * table.value(j, c);
            num *= Cyclotomic(ell, inv_z[c]);
            if (num.is_zero()) continue;
            num_sum = num_sum + cofactors[c] * num;
        }
        const RationalFunction acc(num_sum, common);
        if (!acc.is_rational())
            throw invariant_error("omega_irrational",
                                  "Omega entry (" + to_string(omega.index[i]) + ", " +
                                      to_string(omega.index[j]) +
                                      ") is not fixed by zeta-conjugation");
        omega.entries.at(i, j) = std::move(acc);
    });

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational c0 = omega.entries.at(i, j).series(0).coeff(0);
            if (c0 != Rational(i == j ? 1 : 0))
                throw invariant_error("omega_degree_zero",
                                      "Omega(0) is not the identity at (" +
                                          to_string(omega.index[i]) + ", " +
                                          to_string(omega.index[j]) + ")");
        }
    return omega;
}

MinimalDegreeReport minimal_degree_check(const OmegaMatrix& omega) {
    MinimalDegreeReport report;
    // Trivial-module label ((1^m)(empty)^(ell-1)) is the unique a = 0 label.
    std::vector<Partition> triv_comps(static_cast<std::size_t>(omega.ell));
    triv_comps[0] = Partition(std::vector<int>(static_cast<std::size_t>(omega.m), 1));
    const std::size_t row = omega.index_of(MultiPartition(std::move(triv_comps)));
    for (std::size_t k = 0; k < omega.index.size(); ++k) {
        const MultiPartition& lam = omega.index[k];
        const long a = a_function(lam);
        const std::size_t col = omega.index_of(involution_vee(lam));
        const GradedPolynomial s = omega.entries.at(row, col).series(a);
        bool ok = s.coeff(a) == 1;
        for (long i = 0; ok && i < a; ++i) ok = s.coeff(i) == 0;
        if (!ok) {
            report.ok = false;
            report.failures.push_back(
                "column " + to_string(involution_vee(lam)) + ": expected valuation " +
                std::to_string(a) + " with coefficient 1, series " + s.str());
        }
    }
    return report;
}

namespace {

// Monomials of total degree d in m variables, lexicographic enumeration.
void monomials_of_degree(long m, long d, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if (static_cast<long>(cur.size()) == m - 1) {
        cur.push_back(static_cast<int>(d));
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (long e = d; e >= 0; --e) {
        cur.push_back(static_cast<int>(e));
        monomials_of_degree(m, d - e, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<GradedPolynomial>> omega_oracle(long m, long ell, long D,
                                                        const Budgets& budgets) {
    const BruteForceGroup group = brute_force_group(m, ell, budgets);
    const CharacterTable table = character_table(m, ell, Exec::serial, budgets);
    const std::size_t n = table.labels.size();

    // tr[w][d] = trace of w on the degree-d monomials of the dual action
    // X_j -> zeta^{-color_j} X_{perm_j}.
    std::vector<std::vector<Cyclotomic>> traces(
        group.elements.size(),
        std::vector<Cyclotomic>(static_cast<std::size_t>(D) + 1, Cyclotomic::zero(ell)));
    for (long d = 0; d <= D; ++d) {
        std::vector<std::vector<int>> monomials;
        std::vector<int> cur;
        monomials_of_degree(m, d, cur, monomials);
        for (std::size_t w = 0; w < group.elements.size(); ++w) {
            const GroupElement& g = group.elements[w];
            Cyclotomic tr = Cyclotomic::zero(ell);
            for (const auto& alpha : monomials) {
                // image exponent vector: beta[perm[j]] = alpha[j]
                bool fixed = true;
                for (std::size_t j = 0; j < alpha.size(); ++j) {
                    if (alpha[g.perm[j]] != alpha[j]) {
                        fixed = false;
                        break;
                    }
                }
                if (!fixed) continue;
                long phase = 0;
                for (std::size_t j = 0; j < alpha.size(); ++j)
                    phase += static_cast<long>(g.color[j]) * alpha[j];
                tr += Cyclotomic::zeta_power(ell, -phase);
            }
            traces[w][static_cast<std::size_t>(d)] = tr;
        }
    }

    const Rational inv_order(Rational(1) / Rational(integer_pow(ell, m) * factorial(m)));
    std::vector<std::vector<GradedPolynomial>> result(
        n, std::vector<GradedPolynomial>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (long d = 0; d <= D; ++d) {
                Cyclotomic acc = Cyclotomic::zero(ell);
                for (std::size_t w = 0; w < group.elements.size(); ++w) {
                    const std::size_t cls = group.class_of[w];
                    // chi_i on w, chi_j on w^{-1}; the dual-action trace.
                    acc += table.value(i, cls) *
                           table.value(j, table.inverse_class[cls]) *
                           traces[w][static_cast<std::size_t>(d)];
                }
                Rational value = acc.rational_value() * inv_order;
                if (!is_integer(value) || value < 0)
                    throw invariant_error("oracle_multiplicity",
                                          "oracle multiplicity not in Z_{>=0}: " +
                                              rational_to_string(value));
                result[i][j].add_term(d, value);
            }
        }
    }
    return result;
}

void omega_oracle_check(const OmegaMatrix& omega, long D, const Budgets& budgets) {
    const auto oracle = omega_oracle(omega.m, omega.ell, D, budgets);
    for (std::size_t i = 0; i < omega.index.size(); ++i)
        for (std::size_t j = 0; j < omega.index.size(); ++j) {
            const GradedPolynomial closed = omega.entries.at(i, j).series(D);
            if (closed == oracle[i][j]) continue;
            long degree = 0;
            while (degree <= D && closed.coeff(degree) == oracle[i][j].coeff(degree))
                ++degree;
            throw invariant_error(
                "oracle_mismatch",
                "trace oracle disagrees with the closed form at entry (" +
                    to_string(omega.index[i]) + ", " + to_string(omega.index[j]) +
                    "), degree " + std::to_string(degree) + ": oracle " +
                    oracle[i][j].str() + " vs " + closed.str());
        }
}

} // namespace kostka
