#ifndef KOSTKA_CHARACTERS_HPP
#define KOSTKA_CHARACTERS_HPP

#include <cstdint>
#include <vector>

#include "kostka/budgets.hpp"
#include "kostka/cyclotomic.hpp"
#include "kostka/exec.hpp"
#include "kostka/numeric.hpp"
#include "kostka/partition.hpp"

namespace kostka {

// Symmetric group character by Murnaghan-Nakayama, standard convention
// (chi_{(r)} = trivial). Requires |lambda| = |rho|.
long symmetric_character_std(const Partition& lambda, const Partition& rho);

// The native convention here has L_{(1^r)} = triv and L_{(r)} = sgn, which
// is the standard value on the conjugate label.
long symmetric_character(const Partition& lambda, const Partition& rho);

// Conjugacy class of G(ell,1,m): component k of `data` lists the cycle
// lengths of color k-1. Classes are in bijection with P_{m,ell}.
struct ColoredClass {
    MultiPartition data;
    bool operator==(const ColoredClass&) const = default;
};

Integer centralizer_order(const ColoredClass& c, long ell);
// Color c maps to -c mod ell; cycle lengths are preserved.
ColoredClass invert_class(const ColoredClass& c, long ell);

struct CharacterTable {
    long m = 0;
    long ell = 1;
    // One canonical label list indexes both irreducibles (rows) and classes
    // (columns); classes[c] has data = labels[c].
    std::vector<MultiPartition> labels;
    std::vector<Integer> centralizers;
    std::vector<std::size_t> inverse_class;              // c -> index of C^{-1}
    std::vector<std::vector<Cyclotomic>> values;         // [irrep][class]

    Integer group_order() const;
    std::size_t index_of(const MultiPartition& label) const;
    const Cyclotomic& value(std::size_t irrep, std::size_t cls) const {
        return values[irrep][cls];
    }
};

// Exact table of W = G(ell,1,m) built by Murnaghan-Nakayama on the blocks,
// twisting by powers of the order-ell linear character, and the induced
// character formula with combinatorial class fusion.
CharacterTable character_table(long m, long ell, Exec exec = Exec::serial,
                               const Budgets& budgets = Budgets{});

// Element of G(ell,1,m) as a monomial matrix: X_j -> zeta^color[j] X_perm[j].
struct GroupElement {
    std::vector<std::uint8_t> perm;
    std::vector<std::uint8_t> color;
    bool operator==(const GroupElement&) const = default;
};

GroupElement compose(const GroupElement& a, const GroupElement& b, long ell);
GroupElement invert(const GroupElement& a, long ell);
MultiPartition colored_cycle_type(const GroupElement& g, long ell);

// Explicit enumeration of the group with conjugacy classes computed as
// orbits; verifies the bijection with the colored-class labels.
struct BruteForceGroup {
    long m = 0;
    long ell = 1;
    std::vector<GroupElement> elements;
    std::vector<MultiPartition> labels;        // canonical order
    std::vector<std::size_t> class_of;         // element -> label index
    std::vector<long> class_sizes;             // per label index
    std::size_t element_index(const GroupElement& g) const;
};

BruteForceGroup brute_force_group(long m, long ell,
                                  const Budgets& budgets = Budgets{});

} // namespace kostka

#endif
