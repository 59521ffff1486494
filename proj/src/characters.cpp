#include "kostka/characters.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "kostka/errors.hpp"

namespace kostka {

namespace {

// Beta-set form of a partition: first-column hook lengths, descending.
std::vector<int> beta_set(const Partition& p) {
    const int len = p.length();
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 1; i <= len; ++i)
        beta[static_cast<std::size_t>(i - 1)] = p.part(i) + (len - i);
    return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    const int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 1; i <= len; ++i) {
        int part = beta[static_cast<std::size_t>(i - 1)] - (len - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

long mn_recursive(const Partition& lambda, const std::vector<int>& rho, std::size_t ri) {
    if (ri == rho.size()) return lambda.empty() ? 1 : 0;
    const int r = rho[ri];
    const std::vector<int> beta = beta_set(lambda);
    long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - r;
        if (target < 0) continue;
        bool occupied = false;
        int between = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++between;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        const long sign = (between % 2 == 0) ? 1 : -1;
        total += sign * mn_recursive(partition_from_beta(std::move(nb)), rho, ri + 1);
    }
    return total;
}

} // namespace

long symmetric_character_std(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size())
        throw input_error("size_mismatch", "character needs |lambda| = |rho|");
    // Longest cycles first keeps the recursion shallow.
    return mn_recursive(lambda, rho.parts, 0);
}

long symmetric_character(const Partition& lambda, const Partition& rho) {
    return symmetric_character_std(conjugate(lambda), rho);
}

namespace {

Integer cycle_type_centralizer(const Partition& p) {
    // z_mu = prod_i i^{m_i} m_i!
    Integer z = 1;
    std::map<int, int> mult;
    for (int part : p.parts) ++mult[part];
    for (const auto& [part, m] : mult) {
        for (int i = 0; i < m; ++i) z *= part;
        z *= factorial(m);
    }
    return z;
}

} // namespace

Integer centralizer_order(const ColoredClass& c, long ell) {
    Integer z = 1;
    for (const auto& comp : c.data.components) {
        z *= cycle_type_centralizer(comp);
        z *= integer_pow(ell, comp.length());
    }
    return z;
}

ColoredClass invert_class(const ColoredClass& c, long ell) {
    std::vector<Partition> out(static_cast<std::size_t>(ell));
    for (long color = 0; color < ell; ++color) {
        const long target = (ell - color) % ell;
        out[static_cast<std::size_t>(target)] = c.data.components[static_cast<std::size_t>(color)];
    }
    return ColoredClass{MultiPartition(std::move(out))};
}

Integer CharacterTable::group_order() const {
    return integer_pow(ell, m) * factorial(m);
}

std::size_t CharacterTable::index_of(const MultiPartition& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return i;
    throw input_error("unknown_label", "label not in table: " + to_string(label));
}

namespace {

// One way of distributing the colored cycles of a class among the ell
// blocks of the inducing subgroup: per (block, color) a cycle multiset.
struct Distribution {
    // parts[block][color] = cycle lengths (unsorted accumulation)
    std::vector<std::vector<std::vector<int>>> parts;
};

// Enumerates distributions of all colored cycles into blocks subject to the
// per-block capacity (the component sizes of the inducing label). Equal
// cycles of one color are interchangeable; assignments are deduplicated by
// forcing non-decreasing block indices along runs of equal parts.
void enumerate_distributions(const MultiPartition& cls, const std::vector<long>& capacity,
                             long ell, std::vector<Distribution>& out) {
    struct Item {
        int color;
        int length;
    };
    std::vector<Item> items;
    for (int color = 0; color < cls.level(); ++color)
        for (int part : cls.components[static_cast<std::size_t>(color)].parts)
            items.push_back({color, part});

    std::vector<long> remaining = capacity;
    Distribution cur;
    cur.parts.assign(capacity.size(),
                     std::vector<std::vector<int>>(static_cast<std::size_t>(ell)));
    auto rec = [&](auto&& self, std::size_t idx, std::size_t min_block) -> void {
        if (idx == items.size()) {
            out.push_back(cur);
            return;
        }
        const Item& it = items[idx];
        const bool same_as_prev = idx > 0 && items[idx - 1].color == it.color &&
                                  items[idx - 1].length == it.length;
        const std::size_t start = same_as_prev ? min_block : 0;
        for (std::size_t b = start; b < capacity.size(); ++b) {
            if (remaining[b] < it.length) continue;
            remaining[b] -= it.length;
            cur.parts[b][static_cast<std::size_t>(it.color)].push_back(it.length);
            self(self, idx + 1, b);
            cur.parts[b][static_cast<std::size_t>(it.color)].pop_back();
            remaining[b] += it.length;
        }
    };
    rec(rec, 0, 0);
}

Cyclotomic induced_value(const MultiPartition& irrep, const MultiPartition& cls,
                         long ell, const Integer& z_class) {
    std::vector<long> capacity;
    capacity.reserve(irrep.components.size());
    for (const auto& comp : irrep.components) capacity.push_back(comp.size());

    std::vector<Distribution> dists;
    enumerate_distributions(cls, capacity, ell, dists);

    Cyclotomic total = Cyclotomic::zero(ell);
    for (const auto& d : dists) {
        Integer z_sub = 1;
        long zeta_exp = 0;
        long block_sign = 1;
        bool dead = false;
        for (std::size_t b = 0; b < capacity.size() && !dead; ++b) {
            std::vector<int> block_cycles;
            for (long color = 0; color < ell; ++color) {
                const auto& v = d.parts[b][static_cast<std::size_t>(color)];
                Partition nu(std::vector<int>(v.begin(), v.end()));
                z_sub *= cycle_type_centralizer(nu) * integer_pow(ell, nu.length());
                zeta_exp += static_cast<long>(b) * color * nu.length();
                block_cycles.insert(block_cycles.end(), v.begin(), v.end());
            }
            std::sort(block_cycles.begin(), block_cycles.end(), std::greater<int>());
            const long chi = symmetric_character(irrep.components[b],
                                                 Partition(std::move(block_cycles)));
            if (chi == 0) {
                dead = true;
                break;
            }
            block_sign *= chi;
        }
        if (dead) continue;
        Cyclotomic term = Cyclotomic::zeta_power(ell, zeta_exp);
        Rational weight(block_sign);
        weight *= Rational(z_class) / Rational(z_sub);
        total += term * Cyclotomic(ell, weight);
    }
    return total;
}

} // namespace

CharacterTable character_table(long m, long ell, Exec exec, const Budgets& budgets) {
    Integer order = integer_pow(ell, m) * factorial(m);
    if (order > budgets.group_order)
        throw budget_error("group_budget",
                           "group order " + order.get_str() + " exceeds budget " +
                               std::to_string(budgets.group_order));
    CharacterTable t;
    t.m = m;
    t.ell = ell;
    t.labels = enumerate_multipartitions(m, ell);
    const std::size_t n = t.labels.size();
    t.centralizers.resize(n);
    t.inverse_class.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
        t.centralizers[c] = centralizer_order(ColoredClass{t.labels[c]}, ell);
        const ColoredClass inv = invert_class(ColoredClass{t.labels[c]}, ell);
        t.inverse_class[c] = t.index_of(inv.data);
    }
    t.values.assign(n, std::vector<Cyclotomic>(n, Cyclotomic::zero(ell)));
    parallel_for(exec, n * n, [&](std::size_t idx) {
        const std::size_t i = idx / n, c = idx % n;
        t.values[i][c] = induced_value(t.labels[i], t.labels[c], ell, t.centralizers[c]);
    });
    return t;
}

GroupElement compose(const GroupElement& a, const GroupElement& b, long ell) {
    const std::size_t m = a.perm.size();
    GroupElement out;
    out.perm.resize(m);
    out.color.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        out.perm[j] = a.perm[b.perm[j]];
        out.color[j] = static_cast<std::uint8_t>((b.color[j] + a.color[b.perm[j]]) % ell);
    }
    return out;
}

GroupElement invert(const GroupElement& a, long ell) {
    const std::size_t m = a.perm.size();
    GroupElement out;
    out.perm.resize(m);
    out.color.resize(m);
    for (std::size_t j = 0; j < m; ++j) out.perm[a.perm[j]] = static_cast<std::uint8_t>(j);
    for (std::size_t j = 0; j < m; ++j)
        out.color[j] = static_cast<std::uint8_t>((ell - a.color[out.perm[j]] % ell) % ell);
    return out;
}

MultiPartition colored_cycle_type(const GroupElement& g, long ell) {
    const std::size_t m = g.perm.size();
    std::vector<std::vector<int>> per_color(static_cast<std::size_t>(ell));
    std::vector<bool> seen(m, false);
    for (std::size_t j = 0; j < m; ++j) {
        if (seen[j]) continue;
        int len = 0;
        long color = 0;
        std::size_t cur = j;
        do {
            seen[cur] = true;
            ++len;
            color += g.color[cur];
            cur = g.perm[cur];
        } while (cur != j);
        per_color[static_cast<std::size_t>(color % ell)].push_back(len);
    }
    std::vector<Partition> comps;
    comps.reserve(per_color.size());
    for (auto& v : per_color) {
        std::sort(v.begin(), v.end(), std::greater<int>());
        comps.push_back(Partition(std::move(v)));
    }
    return MultiPartition(std::move(comps));
}

namespace {

std::uint64_t encode(const GroupElement& g, long ell) {
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < g.perm.size(); ++j) {
        key = key * g.perm.size() + g.perm[j];
        key = key * static_cast<std::uint64_t>(ell) + g.color[j];
    }
    return key;
}

} // namespace

std::size_t BruteForceGroup::element_index(const GroupElement& g) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == g) return i;
    throw invariant_error("unknown_element", "element not in enumeration");
}

BruteForceGroup brute_force_group(long m, long ell, const Budgets& budgets) {
    Integer order = integer_pow(ell, m) * factorial(m);
    if (order > budgets.brute_force_order)
        throw budget_error("brute_budget",
                           "group order " + order.get_str() +
                               " exceeds brute-force budget " +
                               std::to_string(budgets.brute_force_order));
    BruteForceGroup g;
    g.m = m;
    g.ell = ell;
    g.labels = enumerate_multipartitions(m, ell);

    std::vector<std::uint8_t> perm(static_cast<std::size_t>(m));
    for (std::size_t j = 0; j < perm.size(); ++j) perm[j] = static_cast<std::uint8_t>(j);
    std::unordered_map<std::uint64_t, std::size_t> index;
    do {
        std::vector<std::uint8_t> color(static_cast<std::size_t>(m), 0);
        while (true) {
            GroupElement e{perm, color};
            index.emplace(encode(e, ell), g.elements.size());
            g.elements.push_back(std::move(e));
            std::size_t j = 0;
            while (j < color.size()) {
                if (++color[j] < ell) break;
                color[j] = 0;
                ++j;
            }
            if (j == color.size()) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Generators: adjacent transpositions plus the color twist at slot 0.
    std::vector<GroupElement> gens;
    for (long i = 0; i + 1 < m; ++i) {
        GroupElement s;
        s.perm.resize(static_cast<std::size_t>(m));
        s.color.assign(static_cast<std::size_t>(m), 0);
        for (std::size_t j = 0; j < s.perm.size(); ++j) s.perm[j] = static_cast<std::uint8_t>(j);
        std::swap(s.perm[static_cast<std::size_t>(i)], s.perm[static_cast<std::size_t>(i + 1)]);
        gens.push_back(std::move(s));
    }
    if (ell > 1) {
        GroupElement z;
        z.perm.resize(static_cast<std::size_t>(m));
        z.color.assign(static_cast<std::size_t>(m), 0);
        for (std::size_t j = 0; j < z.perm.size(); ++j) z.perm[j] = static_cast<std::uint8_t>(j);
        z.color[0] = 1;
        gens.push_back(std::move(z));
    }
    std::vector<GroupElement> gen_invs;
    gen_invs.reserve(gens.size());
    for (const auto& x : gens) gen_invs.push_back(invert(x, ell));

    // Conjugacy classes as conjugation orbits under the generators.
    g.class_of.assign(g.elements.size(), SIZE_MAX);
    g.class_sizes.assign(g.labels.size(), 0);
    for (std::size_t start = 0; start < g.elements.size(); ++start) {
        if (g.class_of[start] != SIZE_MAX) continue;
        const MultiPartition label = colored_cycle_type(g.elements[start], ell);
        std::size_t label_idx = SIZE_MAX;
        for (std::size_t i = 0; i < g.labels.size(); ++i)
            if (g.labels[i] == label) {
                label_idx = i;
                break;
            }
        if (label_idx == SIZE_MAX)
            throw invariant_error("class_label", "cycle type not in P_{m,ell}");
        std::vector<std::size_t> stack{start};
        g.class_of[start] = label_idx;
        long size = 0;
        while (!stack.empty()) {
            const std::size_t cur = stack.back();
            stack.pop_back();
            ++size;
            if (colored_cycle_type(g.elements[cur], ell) != label)
                throw invariant_error("class_mislabel",
                                      "conjugation orbit mixes cycle types");
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                GroupElement conj =
                    compose(compose(gens[gi], g.elements[cur], ell), gen_invs[gi], ell);
                const auto it = index.find(encode(conj, ell));
                if (it == index.end())
                    throw invariant_error("closure", "conjugate escaped enumeration");
                if (g.class_of[it->second] == SIZE_MAX) {
                    g.class_of[it->second] = label_idx;
                    stack.push_back(it->second);
                }
            }
        }
        if (g.class_sizes[label_idx] != 0)
            throw invariant_error("class_split",
                                  "two orbits share the label " + to_string(label));
        g.class_sizes[label_idx] = size;
    }
    for (std::size_t i = 0; i < g.labels.size(); ++i) {
        const Integer expected =
            (integer_pow(ell, m) * factorial(m)) /
            centralizer_order(ColoredClass{g.labels[i]}, ell);
        if (expected != g.class_sizes[i])
            throw invariant_error("class_size",
                                  "orbit size disagrees with centralizer formula at " +
                                      to_string(g.labels[i]));
    }
    return g;
}

} // namespace kostka
