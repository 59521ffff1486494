#include <doctest.h>

#include <algorithm>
#include <map>

#include "kostka/errors.hpp"
#include "kostka/lusztig_shoji.hpp"

using namespace kostka;

namespace {

Partition p(std::vector<int> v) { return Partition(std::move(v)); }

MultiPartition mp(std::vector<std::vector<int>> comps) {
    std::vector<Partition> c;
    for (auto& v : comps) c.push_back(Partition(std::move(v)));
    return MultiPartition(std::move(c));
}

GradedPolynomial gp(std::vector<std::pair<long, long>> terms) {
    GradedPolynomial poly;
    for (const auto& [e, c] : terms) poly.add_term(e, c);
    return poly;
}

GradedPolynomial q_power(long k) { return GradedPolynomial::monomial(k, 1); }

// --- independent charge-statistic oracle for classical Kostka polynomials ---

// All semistandard tableaux of the given shape and content, returned as
// reading words (row by row, bottom row first).
void ssyt_words(const Partition& shape, const Partition& content,
                std::vector<std::vector<int>>& out) {
    const int rows = shape.length();
    std::vector<std::vector<int>> t(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r)
        t[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(shape.part(r + 1)), 0);
    std::vector<int> remaining(static_cast<std::size_t>(content.length()));
    for (int i = 0; i < content.length(); ++i)
        remaining[static_cast<std::size_t>(i)] = content.part(i + 1);
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            std::vector<int> word;
            for (int row = rows - 1; row >= 0; --row)
                for (int x : t[static_cast<std::size_t>(row)]) word.push_back(x);
            out.push_back(std::move(word));
            return;
        }
        if (c == shape.part(r + 1)) {
            self(self, r + 1, 0);
            return;
        }
        int low = 1;
        if (c > 0) low = std::max(low, t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
        if (r > 0) low = std::max(low, t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        for (int v = low; v <= content.length(); ++v) {
            if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
            --remaining[static_cast<std::size_t>(v - 1)];
            t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            self(self, r, c + 1);
            ++remaining[static_cast<std::size_t>(v - 1)];
        }
    };
    rec(rec, 0, 0);
}

// Charge of a word with partition content: repeatedly extract standard
// subwords right-to-left (cyclically) and sum their charges.
long charge(std::vector<int> word) {
    long total = 0;
    while (!word.empty()) {
        const int max_letter = *std::max_element(word.begin(), word.end());
        std::vector<std::size_t> picked;
        long pos = static_cast<long>(word.size()) - 1;
        for (int letter = 1; letter <= max_letter; ++letter) {
            long found = -1;
            for (long step = 0; step < static_cast<long>(word.size()); ++step) {
                const long i =
                    (pos - step % static_cast<long>(word.size()) +
                     static_cast<long>(word.size())) %
                    static_cast<long>(word.size());
                if (word[static_cast<std::size_t>(i)] == letter &&
                    std::find(picked.begin(), picked.end(), static_cast<std::size_t>(i)) ==
                        picked.end()) {
                    found = i;
                    break;
                }
            }
            REQUIRE(found >= 0);
            picked.push_back(static_cast<std::size_t>(found));
            pos = found - 1;
            if (pos < 0) pos += static_cast<long>(word.size());
        }
        // charge of the standard subword, in original left-to-right order
        std::vector<std::size_t> order = picked;
        std::sort(order.begin(), order.end());
        std::vector<int> sub;
        for (std::size_t i : order) sub.push_back(word[i]);
        std::vector<long> position(static_cast<std::size_t>(max_letter) + 1);
        for (std::size_t i = 0; i < sub.size(); ++i)
            position[static_cast<std::size_t>(sub[i])] = static_cast<long>(i);
        long index = 0;
        for (int letter = 2; letter <= max_letter; ++letter) {
            if (position[static_cast<std::size_t>(letter)] >
                position[static_cast<std::size_t>(letter - 1)])
                ++index;
            total += index;
        }
        std::sort(picked.begin(), picked.end(), std::greater<std::size_t>());
        for (std::size_t i : picked) word.erase(word.begin() + static_cast<long>(i));
    }
    return total;
}

GradedPolynomial charge_kostka(const Partition& lam, const Partition& mu) {
    std::vector<std::vector<int>> words;
    ssyt_words(lam, mu, words);
    GradedPolynomial out;
    for (const auto& w : words) out.add_term(charge(w), 1);
    return out;
}

} // namespace

TEST_CASE("charge oracle sanity") {
    CHECK(charge_kostka(p({2}), p({1, 1})) == q_power(1));
    CHECK(charge_kostka(p({2, 1}), p({1, 1, 1})) == gp({{1, 1}, {2, 1}}));
    CHECK(charge_kostka(p({3}), p({1, 1, 1})) == q_power(3));
    CHECK(charge_kostka(p({1, 1, 1}), p({1, 1, 1})) == GradedPolynomial::one());
    CHECK(charge_kostka(p({2, 2}), p({2, 1, 1})) == q_power(1));
    CHECK(charge_kostka(p({1, 1}), p({2})).is_zero());
}

TEST_CASE("sigma permutation") {
    const auto idx = enumerate_multipartitions(2, 3);
    std::vector<std::size_t> vee(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const MultiPartition v = involution_vee(idx[i]);
        vee[i] = static_cast<std::size_t>(
            std::find(idx.begin(), idx.end(), v) - idx.begin());
    }
    FieldMatrix m(idx.size(), idx.size(), 3);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            m.at(i, j) = RationalFunction::from_graded(
                GradedPolynomial::monomial(static_cast<long>(i + 2 * j), 1), 3);
    CHECK(sigma_permute(sigma_permute(m, vee), vee) == m);
    CHECK(sigma_permute(FieldMatrix::identity(idx.size(), 3), vee).is_identity());
}

TEST_CASE("degenerate single index") {
    const KostkaSolution sol = solve(omega_matrix(1, 1));
    CHECK(sol.k_minus[0][0] == GradedPolynomial::one());
    CHECK(sol.k_plus[0][0] == GradedPolynomial::one());
    CHECK(sol.lambda.at(0, 0) ==
          RationalFunction(CycPoly::one(1),
                           CycPoly::from_graded(gp({{0, 1}, {1, -1}}), 1)));
}

TEST_CASE("tables at m = 1, ell = 3") {
    const KostkaSolution sol = solve(omega_matrix(1, 3));
    // canonical index: box in component 1, 2, 3
    REQUIRE(sol.index ==
            std::vector<MultiPartition>{mp({{1}, {}, {}}), mp({{}, {1}, {}}),
                                        mp({{}, {}, {1}})});
    const std::vector<std::vector<GradedPolynomial>> want_minus = {
        {GradedPolynomial::one(), q_power(1), q_power(2)},
        {{}, GradedPolynomial::one(), q_power(1)},
        {{}, {}, GradedPolynomial::one()}};
    CHECK(sol.k_minus == want_minus);
    const std::vector<std::vector<GradedPolynomial>> want_plus = {
        {GradedPolynomial::one(), q_power(1), {}},
        {{}, GradedPolynomial::one(), {}},
        {{}, q_power(2), GradedPolynomial::one()}};
    CHECK(sol.k_plus == want_plus);
}

TEST_CASE("K- at m = 2, ell = 2 reproduces the 5x5 table") {
    const KostkaSolution sol = solve(omega_matrix(2, 2));
    auto at = [&](const MultiPartition& row, const MultiPartition& col) {
        const std::size_t i = static_cast<std::size_t>(
            std::find(sol.index.begin(), sol.index.end(), row) - sol.index.begin());
        const std::size_t j = static_cast<std::size_t>(
            std::find(sol.index.begin(), sol.index.end(), col) - sol.index.begin());
        return sol.k_minus[i][j];
    };
    const MultiPartition l11 = mp({{1, 1}, {}}), l1_1 = mp({{1}, {1}}),
                         l_11 = mp({{}, {1, 1}}), l2 = mp({{2}, {}}), l_2 = mp({{}, {2}});
    CHECK(at(l_2, l_2) == GradedPolynomial::one());
    CHECK(at(l2, l_2) == q_power(2));
    CHECK(at(l_11, l_2) == q_power(2));
    CHECK(at(l1_1, l_2) == gp({{1, 1}, {3, 1}}));
    CHECK(at(l11, l_2) == q_power(4));
    CHECK(at(l1_1, l2) == q_power(1));
    CHECK(at(l1_1, l_11) == q_power(1));
    CHECK(at(l11, l2) == q_power(2));
    CHECK(at(l11, l_11) == q_power(2));
    CHECK(at(l11, l1_1) == q_power(1));
    CHECK(at(l_11, l2).is_zero());
    CHECK(at(l2, l_11).is_zero());
    CHECK(sol.residual_ok);
}

TEST_CASE("rank one closed forms") {
    for (long ell : {2L, 3L, 4L, 5L, 6L}) {
        const Rank1Report report = closed_form_check_rank1(ell);
        INFO("ell=", ell, " detail=", report.detail);
        CHECK(report.ok);
    }
}

TEST_CASE("residual check catches mutations") {
    const OmegaMatrix omega = omega_matrix(2, 2);
    KostkaSolution sol = solve(omega);
    CHECK(residual_check(sol, omega.entries));
    {
        KostkaSolution bad = sol;
        bad.k_minus[0][2] += q_power(1);
        std::string diag;
        CHECK_FALSE(residual_check(bad, omega.entries, &diag));
        CHECK(!diag.empty());
    }
    {
        // transposing K- breaks the product
        KostkaSolution bad = sol;
        for (std::size_t i = 0; i < bad.index.size(); ++i)
            for (std::size_t j = 0; j < bad.index.size(); ++j)
                bad.k_minus[i][j] = sol.k_minus[j][i];
        CHECK_FALSE(residual_check(bad, omega.entries));
    }
}

TEST_CASE("solution is independent of the tie-break order inside a-blocks") {
    const OmegaMatrix omega = omega_matrix(2, 2);
    const KostkaSolution sol = solve(omega);
    // permute within equal-a blocks: swap the two a = 2 labels
    const std::size_t n = omega.index.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::swap(perm[2], perm[3]);
    REQUIRE(omega.a_values[2] == omega.a_values[3]);

    FieldMatrix shuffled(n, n, 2);
    std::vector<MultiPartition> labels(n);
    std::vector<long> a_values(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = omega.index[perm[i]];
        a_values[i] = omega.a_values[perm[i]];
        for (std::size_t j = 0; j < n; ++j)
            shuffled.at(i, j) = omega.entries.at(perm[i], perm[j]);
    }
    std::vector<std::size_t> vee(n);
    for (std::size_t i = 0; i < n; ++i) {
        const MultiPartition v = involution_vee(labels[i]);
        vee[i] = static_cast<std::size_t>(
            std::find(labels.begin(), labels.end(), v) - labels.begin());
    }
    const KostkaSolution shuffled_sol = solve_core(shuffled, labels, a_values, vee);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(shuffled_sol.k_minus[i][j] == sol.k_minus[perm[i]][perm[j]]);
            CHECK(shuffled_sol.k_plus[i][j] == sol.k_plus[perm[i]][perm[j]]);
            CHECK(shuffled_sol.lambda.at(i, j) == sol.lambda.at(perm[i], perm[j]));
        }
}

TEST_CASE("positivity and triangularity across the contract range") {
    std::vector<std::pair<long, long>> sizes;
    for (long m = 1; m <= 3; ++m)
        for (long ell = 2; ell <= 4; ++ell) sizes.push_back({m, ell});
    sizes.push_back({4, 2});
    for (const auto& [m, ell] : sizes) {
        const KostkaSolution sol = solve(omega_matrix(m, ell, Exec::parallel));
        const std::size_t n = sol.index.size();
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(sol.k_minus[i][i] == GradedPolynomial::one());
            CHECK(sol.k_plus[i][i] == GradedPolynomial::one());
            for (std::size_t j = 0; j < n; ++j) {
                // positivity is enforced by the solver; re-check here
                CHECK(sol.k_minus[i][j].has_nonnegative_coeffs());
                CHECK(sol.k_minus[i][j].has_integer_coeffs());
                CHECK(sol.k_plus[i][j].has_nonnegative_coeffs());
                if (i != j && !sol.k_minus[i][j].is_zero())
                    CHECK(sol.a_values[i] < sol.a_values[j]);
            }
        }
    }
}

TEST_CASE("degenerate ell = 1 equals charge Kostka polynomials") {
    for (long m = 1; m <= 4; ++m) {
        const KostkaSolution sol = solve(omega_matrix(m, 1));
        const std::size_t n = sol.index.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Partition li = sol.index[i].components[0];
                const Partition lj = sol.index[j].components[0];
                INFO("m=", m, " (", to_string(li), ", ", to_string(lj), ")");
                CHECK(sol.k_minus[i][j] == charge_kostka(conjugate(li), conjugate(lj)));
            }
    }
}
