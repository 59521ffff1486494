#ifndef KOSTKA_PARTITION_HPP
#define KOSTKA_PARTITION_HPP

#include <compare>
#include <string>
#include <vector>

#include "kostka/errors.hpp"

namespace kostka {

// Weakly decreasing list of positive integers; trailing zeros never stored.
// The empty vector is the empty partition.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    long size() const;
    int length() const { return static_cast<int>(parts.size()); }
    // parts[i-1] with 1-based index; zero beyond the stored length.
    int part(int i) const;
    bool empty() const { return parts.empty(); }

    auto operator<=>(const Partition&) const = default;
};

// An ell-tuple of partitions of total size m. Components are 1-indexed in
// the math (component k carries color k-1); storage is 0-indexed.
struct MultiPartition {
    std::vector<Partition> components;

    MultiPartition() = default;
    explicit MultiPartition(std::vector<Partition> c) : components(std::move(c)) {}

    int level() const { return static_cast<int>(components.size()); }
    long size() const;

    auto operator<=>(const MultiPartition&) const = default;
};

using WeightVector = std::vector<int>;

enum class Ordering { less, greater, equal, incomparable };

Partition conjugate(const Partition& p);
// u(lambda) = sum_j lambda_j (lambda_j - 1) / 2.
long u_statistic(const Partition& p);
// a(lam) = ell * sum_j u(lam^(j)) + sum_j (j-1) |lam^(j)|.
long a_function(const MultiPartition& mp);

// Concatenation over components of the parts in reverse order, zero-padded
// to length n per block. Rejects a component with more than n parts.
WeightVector tot(const MultiPartition& mp, int n);
// Multiset of all parts sorted decreasingly, zeros dropped.
Partition norm(const MultiPartition& mp);

// Dominance order on partitions of equal size.
Ordering dominance_compare(const Partition& a, const Partition& b);

// v in Z^N_+ : nonzero, coordinate sum zero, all prefix sums >= 0.
bool in_positive_root_cone(const std::vector<int>& v);

// Partial order on P_{m,ell}: ||.|| dominance first, then tot difference in
// the positive root cone. Rejects mismatched (m, ell).
Ordering compare(const MultiPartition& a, const MultiPartition& b, int n = 0);

MultiPartition involution_vee(const MultiPartition& mp);
MultiPartition involution_star(const MultiPartition& mp);
MultiPartition involution_theta(const MultiPartition& mp);
MultiPartition componentwise_conjugate(const MultiPartition& mp);

// All partitions of m, deterministic order (reverse lexicographic).
std::vector<Partition> partitions_of(long m);

// Canonical enumeration of P_{m,ell}: a-value ascending, tie-break
// lexicographic on tot(., n=m). Every downstream matrix is indexed by this
// order, which makes all outputs byte-reproducible.
std::vector<MultiPartition> enumerate_multipartitions(long m, long ell);

// Serialization used as the JSON key format everywhere: components joined
// by '|', parts comma-separated, empty component rendered '-'.
// Example: ((1,1)(empty)) -> "1,1|-".
std::string to_string(const MultiPartition& mp);
std::string to_string(const Partition& p);
MultiPartition multipartition_from_string(const std::string& s);

// Compact label in the style used by tables: ((21)(-)) -> "((21)(0))" is not
// used; this renders ((2,1)(empty)) as "((21)(\emptyset))" for LaTeX or
// "((21)())" for plain text.
std::string latex_label(const MultiPartition& mp);

} // namespace kostka

#endif
