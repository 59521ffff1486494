#include <doctest.h>

#include <algorithm>
#include <set>

#include "kostka/errors.hpp"
#include "kostka/partition.hpp"

using namespace kostka;

namespace {

Partition p(std::vector<int> v) { return Partition(std::move(v)); }

MultiPartition mp(std::vector<std::vector<int>> comps) {
    std::vector<Partition> c;
    for (auto& v : comps) c.push_back(Partition(std::move(v)));
    return MultiPartition(std::move(c));
}

// Independent transpose oracle: count diagram cells column by column.
Partition conjugate_by_diagram(const Partition& lam) {
    std::vector<int> cols;
    for (int r = 1; r <= lam.length(); ++r)
        for (int c = 1; c <= lam.part(r); ++c) {
            if (static_cast<int>(cols.size()) < c) cols.resize(static_cast<std::size_t>(c), 0);
            ++cols[static_cast<std::size_t>(c - 1)];
        }
    return Partition(std::move(cols));
}

// Second defining formula: sum_j (j-1) (lambda')_j.
long u_by_conjugate(const Partition& lam) {
    const Partition c = conjugate(lam);
    long u = 0;
    for (int j = 1; j <= c.length(); ++j) u += static_cast<long>(j - 1) * c.part(j);
    return u;
}

} // namespace

TEST_CASE("conjugate") {
    CHECK(conjugate(p({3})) == p({1, 1, 1}));
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(p({2, 1})) == p({2, 1}));
    for (long m = 0; m <= 8; ++m)
        for (const auto& lam : partitions_of(m)) {
            CHECK(conjugate(lam) == conjugate_by_diagram(lam));
            CHECK(conjugate(conjugate(lam)) == lam);
        }
}

TEST_CASE("u statistic") {
    CHECK(u_statistic(p({1, 1, 1, 1})) == 0);
    CHECK(u_statistic(p({2})) == 1);
    CHECK(u_statistic(p({3, 1})) == 3);
    for (long m = 0; m <= 12; ++m)
        for (const auto& lam : partitions_of(m))
            CHECK(u_statistic(lam) == u_by_conjugate(lam));
}

TEST_CASE("a function") {
    for (long ell = 2; ell <= 4; ++ell)
        for (long m = 1; m <= 4; ++m) {
            std::vector<Partition> bottom(static_cast<std::size_t>(ell));
            bottom[0] = Partition(std::vector<int>(static_cast<std::size_t>(m), 1));
            CHECK(a_function(MultiPartition(std::move(bottom))) == 0);
            std::vector<Partition> top(static_cast<std::size_t>(ell));
            top.back() = p({static_cast<int>(m)});
            CHECK(a_function(MultiPartition(std::move(top))) == ell * m * (m + 1) / 2 - m);
        }
    CHECK(a_function(mp({{}, {2}})) == 4);
}

TEST_CASE("tot") {
    CHECK(tot(mp({{1}, {1}}), 2) == WeightVector{0, 1, 0, 1});
    CHECK(tot(mp({{}, {}, {3}}), 3) == WeightVector{0, 0, 0, 0, 0, 0, 0, 0, 3});
    CHECK(tot(mp({{}, {}, {1}}), 1) == WeightVector{0, 0, 1});
    CHECK_THROWS_AS(tot(mp({{1, 1, 1}, {}}), 2), input_error);
}

TEST_CASE("norm") {
    CHECK(norm(mp({{1}, {1}})) == p({1, 1}));
    CHECK(norm(mp({{2}, {1, 1}})) == p({2, 1, 1}));
    CHECK(norm(mp({{}, {}})) == Partition{});
}

TEST_CASE("compare fixtures") {
    const std::vector<MultiPartition> chain22 = {
        mp({{1, 1}, {}}), mp({{1}, {1}}), mp({{}, {1, 1}}), mp({{2}, {}}), mp({{}, {2}})};
    for (std::size_t i = 0; i + 1 < chain22.size(); ++i)
        for (std::size_t j = i + 1; j < chain22.size(); ++j)
            CHECK(compare(chain22[i], chain22[j]) == Ordering::less);
    CHECK(compare(mp({{1}, {}, {}}), mp({{}, {1}, {}})) == Ordering::less);
    CHECK(compare(mp({{}, {1}, {}}), mp({{}, {}, {1}})) == Ordering::less);
    CHECK(compare(mp({{2}, {1}}), mp({{2}, {1}})) == Ordering::equal);
    CHECK_THROWS_AS(compare(mp({{1}, {}}), mp({{1}, {}, {}})), input_error);
}

TEST_CASE("compare is a strict partial order") {
    for (long ell = 1; ell <= 3; ++ell)
        for (long m = 1; m <= 3; ++m) {
            const auto idx = enumerate_multipartitions(m, ell);
            for (const auto& x : idx)
                for (const auto& y : idx) {
                    const Ordering xy = compare(x, y);
                    const Ordering yx = compare(y, x);
                    if (x == y) {
                        CHECK(xy == Ordering::equal);
                    } else {
                        CHECK(xy != Ordering::equal);
                        if (xy == Ordering::less) CHECK(yx == Ordering::greater);
                        if (xy == Ordering::greater) CHECK(yx == Ordering::less);
                    }
                    if (xy != Ordering::less) continue;
                    for (const auto& z : idx)
                        if (compare(y, z) == Ordering::less)
                            CHECK(compare(x, z) == Ordering::less);
                }
        }
}

TEST_CASE("norm-equal pairs with cone-related tot vectors are comparable") {
    for (long ell = 2; ell <= 3; ++ell)
        for (long m = 2; m <= 3; ++m) {
            const auto idx = enumerate_multipartitions(m, ell);
            const int n = static_cast<int>(m);
            std::vector<std::vector<int>> block_perms;
            {
                std::vector<int> bp(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) bp[static_cast<std::size_t>(i)] = i;
                do block_perms.push_back(bp);
                while (std::next_permutation(bp.begin(), bp.end()));
            }
            for (const auto& lam : idx)
                for (const auto& mu : idx) {
                    if (norm(lam) != norm(mu)) continue;
                    const WeightVector tl = tot(lam, n), tm = tot(mu, n);
                    std::vector<std::size_t> choice(static_cast<std::size_t>(ell), 0);
                    bool related = false;
                    while (!related) {
                        WeightVector sigma_tl(tl.size());
                        for (long k = 0; k < ell; ++k)
                            for (int i = 0; i < n; ++i)
                                sigma_tl[static_cast<std::size_t>(k * n + i)] = tl
                                    [static_cast<std::size_t>(k * n) +
                                     static_cast<std::size_t>(
                                         block_perms[choice[static_cast<std::size_t>(k)]]
                                                    [static_cast<std::size_t>(i)])];
                        std::vector<int> diff(tl.size());
                        for (std::size_t i = 0; i < tl.size(); ++i)
                            diff[i] = tm[i] - sigma_tl[i];
                        if (in_positive_root_cone(diff)) related = true;
                        std::size_t k = 0;
                        while (k < choice.size()) {
                            if (++choice[k] < block_perms.size()) break;
                            choice[k] = 0;
                            ++k;
                        }
                        if (k == choice.size()) break;
                    }
                    if (related) {
                        const Ordering o = compare(mu, lam);
                        CHECK((o == Ordering::less || o == Ordering::equal));
                    }
                }
        }
}

TEST_CASE("involutions") {
    CHECK(involution_vee(mp({{}, {1}, {}})) == mp({{}, {}, {1}}));
    // At ell = 2 the vee involution is the identity; star and theta swap.
    CHECK(involution_vee(mp({{2}, {1}})) == mp({{2}, {1}}));
    CHECK(involution_star(mp({{2}, {1}})) == mp({{1}, {2}}));
    CHECK(involution_theta(mp({{2}, {1}})) == mp({{1}, {2}}));
    for (long ell = 1; ell <= 4; ++ell)
        for (long m = 1; m <= 4; ++m)
            for (const auto& lam : enumerate_multipartitions(m, ell)) {
                CHECK(involution_vee(involution_vee(lam)) == lam);
                CHECK(involution_star(involution_star(lam)) == lam);
                MultiPartition rotated = lam;
                for (long k = 0; k < ell; ++k) rotated = involution_theta(rotated);
                CHECK(rotated == lam);
                CHECK(involution_vee(lam) == involution_theta(involution_star(lam)));
            }
}

TEST_CASE("enumerate") {
    CHECK(enumerate_multipartitions(2, 2).size() == 5);
    CHECK(enumerate_multipartitions(1, 3).size() == 3);
    CHECK(enumerate_multipartitions(3, 2).size() == 10);
    for (long ell = 1; ell <= 3; ++ell)
        for (long m = 1; m <= 4; ++m) {
            const auto idx = enumerate_multipartitions(m, ell);
            std::set<std::string> seen;
            long prev_a = -1;
            for (const auto& lam : idx) {
                CHECK(lam.size() == m);
                CHECK(lam.level() == ell);
                CHECK(seen.insert(to_string(lam)).second);
                CHECK(a_function(lam) >= prev_a);
                prev_a = a_function(lam);
            }
        }
}

TEST_CASE("string round trip") {
    for (const auto& lam : enumerate_multipartitions(3, 3))
        CHECK(multipartition_from_string(to_string(lam)) == lam);
    CHECK(to_string(mp({{1, 1}, {}})) == "1,1|-");
    CHECK(latex_label(mp({{2, 1, 1}, {}})) == "((21^2)(\\emptyset))");
    CHECK_THROWS_AS(multipartition_from_string("1,x|2"), input_error);
}
