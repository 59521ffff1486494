#include "kostka/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kostka/errors.hpp"

namespace kostka {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0 || (i + 1 < parts.size() && parts[i] < parts[i + 1])) {
            throw input_error("bad_partition", "parts must be weakly decreasing and positive");
        }
    }
}

long Partition::size() const {
    return std::accumulate(parts.begin(), parts.end(), 0L);
}

int Partition::part(int i) const {
    if (i < 1 || i > static_cast<int>(parts.size())) return 0;
    return parts[i - 1];
}

long MultiPartition::size() const {
    long s = 0;
    for (const auto& c : components) s += c.size();
    return s;
}

Partition conjugate(const Partition& p) {
    if (p.parts.empty()) return {};
    std::vector<int> out(p.parts[0], 0);
    for (int i = 0; i < static_cast<int>(out.size()); ++i) {
        out[i] = static_cast<int>(std::count_if(p.parts.begin(), p.parts.end(),
                                                [&](int pj) { return pj >= i + 1; }));
    }
    return Partition(std::move(out));
}

long u_statistic(const Partition& p) {
    long u = 0;
    for (int pj : p.parts) u += static_cast<long>(pj) * (pj - 1) / 2;
    return u;
}

long a_function(const MultiPartition& mp) {
    const long ell = mp.level();
    long a = 0;
    for (int j = 1; j <= mp.level(); ++j) {
        a += ell * u_statistic(mp.components[j - 1]);
        a += static_cast<long>(j - 1) * mp.components[j - 1].size();
    }
    return a;
}

WeightVector tot(const MultiPartition& mp, int n) {
    WeightVector w;
    w.reserve(static_cast<std::size_t>(n) * mp.components.size());
    for (const auto& comp : mp.components) {
        if (comp.length() > n) {
            throw input_error("tot_overflow",
                              "component " + to_string(comp) + " has more than n=" +
                                  std::to_string(n) + " parts");
        }
        for (int i = n; i >= 1; --i) w.push_back(comp.part(i));
    }
    return w;
}

Partition norm(const MultiPartition& mp) {
    std::vector<int> all;
    for (const auto& comp : mp.components)
        all.insert(all.end(), comp.parts.begin(), comp.parts.end());
    std::sort(all.begin(), all.end(), std::greater<int>());
    return Partition(std::move(all));
}

Ordering dominance_compare(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw input_error("size_mismatch", "dominance needs equal sizes");
    if (a == b) return Ordering::equal;
    const int len = std::max(a.length(), b.length());
    long pa = 0, pb = 0;
    bool a_le_b = true, b_le_a = true;
    for (int i = 1; i <= len; ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa > pb) a_le_b = false;
        if (pb > pa) b_le_a = false;
    }
    if (a_le_b) return Ordering::less;
    if (b_le_a) return Ordering::greater;
    return Ordering::incomparable;
}

bool in_positive_root_cone(const std::vector<int>& v) {
    long sum = 0, prefix = 0;
    bool nonzero = false;
    for (int x : v) {
        prefix += x;
        sum += x;
        if (prefix < 0) return false;
        if (x != 0) nonzero = true;
    }
    return nonzero && sum == 0;
}

Ordering compare(const MultiPartition& a, const MultiPartition& b, int n) {
    if (a.level() != b.level() || a.size() != b.size())
        throw input_error("index_mismatch", "compare needs equal (m, ell)");
    if (n == 0) n = static_cast<int>(a.size());
    if (n < a.size())
        throw input_error("bad_width", "block width n must be >= m");
    if (a == b) return Ordering::equal;
    const Partition na = norm(a), nb = norm(b);
    if (na != nb) {
        switch (dominance_compare(na, nb)) {
            case Ordering::less: return Ordering::less;
            case Ordering::greater: return Ordering::greater;
            default: return Ordering::incomparable;
        }
    }
    const WeightVector ta = tot(a, n), tb = tot(b, n);
    std::vector<int> diff(ta.size());
    for (std::size_t i = 0; i < ta.size(); ++i) diff[i] = ta[i] - tb[i];
    if (in_positive_root_cone(diff)) return Ordering::less;
    for (auto& d : diff) d = -d;
    if (in_positive_root_cone(diff)) return Ordering::greater;
    return Ordering::incomparable;
}

MultiPartition involution_vee(const MultiPartition& mp) {
    // Keeps component 1, reverses components 2..ell. Identity when ell <= 2.
    std::vector<Partition> c;
    c.reserve(mp.components.size());
    c.push_back(mp.components[0]);
    for (int k = mp.level(); k >= 2; --k) c.push_back(mp.components[k - 1]);
    return MultiPartition(std::move(c));
}

MultiPartition involution_star(const MultiPartition& mp) {
    std::vector<Partition> c(mp.components.rbegin(), mp.components.rend());
    return MultiPartition(std::move(c));
}

MultiPartition involution_theta(const MultiPartition& mp) {
    std::vector<Partition> c;
    c.reserve(mp.components.size());
    c.push_back(mp.components.back());
    for (int k = 1; k < mp.level(); ++k) c.push_back(mp.components[k - 1]);
    return MultiPartition(std::move(c));
}

MultiPartition componentwise_conjugate(const MultiPartition& mp) {
    std::vector<Partition> c;
    c.reserve(mp.components.size());
    for (const auto& comp : mp.components) c.push_back(conjugate(comp));
    return MultiPartition(std::move(c));
}

namespace {

void partitions_rec(long m, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (m == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min<long>(max_part, m); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(m - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(long m) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(m, static_cast<int>(m), cur, out);
    if (m == 0) return {Partition{}};
    return out;
}

std::vector<MultiPartition> enumerate_multipartitions(long m, long ell) {
    if (m < 1 || ell < 1)
        throw input_error("bad_sizes", "enumerate needs m >= 1, ell >= 1");
    std::vector<MultiPartition> out;
    std::vector<Partition> cur(static_cast<std::size_t>(ell));
    // Distribute sizes over components, partitions per size.
    auto rec = [&](auto&& self, int k, long rest) -> void {
        if (k == ell) {
            if (rest == 0) out.push_back(MultiPartition(cur));
            return;
        }
        for (long s = 0; s <= rest; ++s) {
            for (const auto& p : partitions_of(s)) {
                cur[static_cast<std::size_t>(k)] = p;
                self(self, k + 1, rest - s);
            }
        }
    };
    rec(rec, 0, m);
    const int n = static_cast<int>(m);
    std::stable_sort(out.begin(), out.end(),
                     [&](const MultiPartition& x, const MultiPartition& y) {
                         const long ax = a_function(x), ay = a_function(y);
                         if (ax != ay) return ax < ay;
                         return tot(x, n) < tot(y, n);
                     });
    return out;
}

std::string to_string(const Partition& p) {
    if (p.parts.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i) os << ',';
        os << p.parts[i];
    }
    return os.str();
}

std::string to_string(const MultiPartition& mp) {
    std::ostringstream os;
    for (int k = 0; k < mp.level(); ++k) {
        if (k) os << '|';
        os << to_string(mp.components[k]);
    }
    return os.str();
}

MultiPartition multipartition_from_string(const std::string& s) {
    std::vector<Partition> comps;
    std::string chunk;
    std::istringstream in(s);
    while (std::getline(in, chunk, '|')) {
        if (chunk == "-" || chunk.empty()) {
            comps.push_back(Partition{});
            continue;
        }
        std::vector<int> parts;
        std::istringstream pin(chunk);
        std::string tok;
        while (std::getline(pin, tok, ',')) {
            try {
                parts.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw input_error("bad_label", "cannot parse partition part '" + tok + "'");
            }
        }
        comps.push_back(Partition(std::move(parts)));
    }
    if (comps.empty())
        throw input_error("bad_label", "empty multipartition string");
    return MultiPartition(std::move(comps));
}

std::string latex_label(const MultiPartition& mp) {
    // ((2,1)(empty)) -> "((21)(\emptyset))"; repeated parts use exponents,
    // e.g. (1,1) -> 1^2, matching the table style.
    std::ostringstream os;
    os << '(';
    for (const auto& comp : mp.components) {
        os << '(';
        if (comp.empty()) {
            os << "\\emptyset";
        } else {
            std::size_t i = 0;
            while (i < comp.parts.size()) {
                std::size_t j = i;
                while (j < comp.parts.size() && comp.parts[j] == comp.parts[i]) ++j;
                os << comp.parts[i];
                if (j - i > 1) os << '^' << (j - i);
                i = j;
            }
        }
        os << ')';
    }
    os << ')';
    return os.str();
}

} // namespace kostka
