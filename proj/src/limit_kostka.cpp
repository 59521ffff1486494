#include "kostka/limit_kostka.hpp"

#include <algorithm>

#include "kostka/errors.hpp"

namespace kostka {

namespace {

// DFS over semistandard fillings with entries in 1..n; accumulates content
// exponent vectors.
void ssyt_rec(const Partition& shape, long n, std::vector<std::vector<int>>& rows,
              int r, int c, std::vector<int>& content,
              std::vector<Exponents>& out) {
    if (r == shape.length()) {
        out.push_back(content);
        return;
    }
    const int row_len = shape.part(r + 1);
    if (c == row_len) {
        ssyt_rec(shape, n, rows, r + 1, 0, content, out);
        return;
    }
    int low = 1;
    if (c > 0) low = std::max(low, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0) low = std::max(low, rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = low; v <= n; ++v) {
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
        ++content[static_cast<std::size_t>(v - 1)];
        ssyt_rec(shape, n, rows, r, c + 1, content, out);
        --content[static_cast<std::size_t>(v - 1)];
    }
}

} // namespace

BlockCharacter schur_polynomial(const Partition& lambda, std::size_t block_index,
                                long n, long ell) {
    if (lambda.length() > n)
        throw input_error("too_many_parts",
                          "partition " + to_string(lambda) + " has more than n=" +
                              std::to_string(n) + " parts");
    const std::size_t total = static_cast<std::size_t>(n * ell);
    BlockCharacter out(total);
    if (lambda.empty()) return BlockCharacter::one(total);
    std::vector<std::vector<int>> rows;
    for (int r = 1; r <= lambda.length(); ++r)
        rows.emplace_back(static_cast<std::size_t>(lambda.part(r)), 0);
    std::vector<int> content(static_cast<std::size_t>(n), 0);
    std::vector<Exponents> contents;
    ssyt_rec(lambda, n, rows, 0, 0, content, contents);
    for (const auto& ct : contents) {
        Exponents e(total, 0);
        for (std::size_t v = 0; v < ct.size(); ++v)
            e[block_index * static_cast<std::size_t>(n) + v] = ct[v];
        out.add_term(e, GradedPolynomial::one());
    }
    return out;
}

BlockCharacter product_character(const MultiPartition& mu, long n) {
    const long ell = mu.level();
    BlockCharacter out = BlockCharacter::one(static_cast<std::size_t>(n * ell));
    for (int k = 0; k < mu.level(); ++k) {
        if (mu.components[static_cast<std::size_t>(k)].empty()) continue;
        out = out * schur_polynomial(mu.components[static_cast<std::size_t>(k)],
                                     static_cast<std::size_t>(k), n, ell);
    }
    return out;
}

namespace {

// Label of a monomial whose exponents are weakly decreasing inside every
// width-n block; nullopt-style via bool return.
bool dominant_label(const Exponents& e, long n, long ell, MultiPartition* out) {
    std::vector<Partition> comps;
    comps.reserve(static_cast<std::size_t>(ell));
    for (long k = 0; k < ell; ++k) {
        std::vector<int> parts;
        for (long t = 0; t < n; ++t) {
            const int x = e[static_cast<std::size_t>(k * n + t)];
            if (t + 1 < n && x < e[static_cast<std::size_t>(k * n + t + 1)]) return false;
            if (x > 0) parts.push_back(x);
        }
        comps.push_back(Partition(std::move(parts)));
    }
    *out = MultiPartition(std::move(comps));
    return true;
}

Exponents dominant_monomial(const MultiPartition& mu, long n, long ell) {
    Exponents e(static_cast<std::size_t>(n * ell), 0);
    for (int k = 0; k < mu.level(); ++k)
        for (int t = 1; t <= mu.components[static_cast<std::size_t>(k)].length(); ++t)
            e[static_cast<std::size_t>(k * n + t - 1)] =
                mu.components[static_cast<std::size_t>(k)].part(t);
    return e;
}

} // namespace

IsotypicDecomposition block_schur_decompose(const BlockCharacter& f, long n, long ell,
                                            bool reverse_tiebreak) {
    if (static_cast<long>(f.n_vars()) != n * ell)
        throw input_error("arity_mismatch", "expected n*ell variables");
    for (long k = 0; k < ell; ++k)
        for (long t = 1; t < n; ++t)
            if (!f.symmetric_in(static_cast<std::size_t>(k * n + t)))
                throw invariant_error("not_block_symmetric",
                                      "input is not symmetric within block " +
                                          std::to_string(k + 1));

    IsotypicDecomposition dec;
    BlockCharacter residue = f;
    long guard = 0;
    while (!residue.is_zero()) {
        if (++guard > 100000)
            throw invariant_error("peel_divergence", "peeling did not terminate");
        std::vector<MultiPartition> candidates;
        for (const auto& [e, c] : residue.terms()) {
            MultiPartition label;
            if (dominant_label(e, n, ell, &label))
                if (std::find(candidates.begin(), candidates.end(), label) ==
                    candidates.end())
                    candidates.push_back(label);
        }
        if (candidates.empty())
            throw invariant_error("no_dominant_monomial",
                                  "nonzero residue without dominant monomial: " +
                                      residue.str());
        // Keep only order-maximal candidates, then pick deterministically.
        std::vector<MultiPartition> maxima;
        for (const auto& x : candidates) {
            const int width = static_cast<int>(std::max<long>(n, x.size()));
            bool dominated = false;
            for (const auto& y : candidates)
                if (!(x == y) && compare(x, y, width) == Ordering::less) {
                    dominated = true;
                    break;
                }
            if (!dominated) maxima.push_back(x);
        }
        std::sort(maxima.begin(), maxima.end(),
                  [&](const MultiPartition& x, const MultiPartition& y) {
                      const long ax = a_function(x), ay = a_function(y);
                      if (ax != ay) return ax < ay;
                      return tot(x, static_cast<int>(x.size())) <
                             tot(y, static_cast<int>(y.size()));
                  });
        const MultiPartition chosen = reverse_tiebreak ? maxima.back() : maxima.front();
        const GradedPolynomial coeff = residue.coeff(dominant_monomial(chosen, n, ell));
        if (coeff.is_zero())
            throw invariant_error("peel_zero", "chosen dominant monomial has no coefficient");
        dec.multiplicities[chosen] += coeff;
        residue = residue - product_character(chosen, n) * coeff;
    }
    for (auto it = dec.multiplicities.begin(); it != dec.multiplicities.end();) {
        if (it->second.is_zero()) {
            it = dec.multiplicities.erase(it);
            continue;
        }
        if (!it->second.has_integer_coeffs())
            throw invariant_error("fractional_multiplicity",
                                  "multiplicity of " + to_string(it->first) +
                                      " is not integral: " + it->second.str());
        if (!it->second.has_nonnegative_coeffs())
            throw invariant_error("negative_multiplicity",
                                  "multiplicity of " + to_string(it->first) +
                                      " is negative: " + it->second.str());
        ++it;
    }
    return dec;
}

long color_charge(const MultiPartition& mp) {
    long c = 0;
    for (int k = 1; k <= mp.level(); ++k)
        c += static_cast<long>(k - 1) * mp.components[static_cast<std::size_t>(k - 1)].size();
    return c;
}

std::map<MultiPartition, GradedPolynomial> phi_regrade(const IsotypicDecomposition& dec,
                                                       const MultiPartition& lambda,
                                                       long ell) {
    std::map<MultiPartition, GradedPolynomial> out;
    const long c_lambda = color_charge(lambda);
    for (const auto& [mu, g] : dec.multiplicities) {
        const long shift = c_lambda - color_charge(mu);
        GradedPolynomial regraded;
        try {
            regraded = g.stretched(ell).shifted(shift);
        } catch (const invariant_error&) {
            throw invariant_error("regrade_negative",
                                  "Phi regrading of " + to_string(mu) + " in column " +
                                      to_string(lambda) + " hit a negative degree");
        }
        out[mu] = std::move(regraded);
    }
    return out;
}

KminusCandidate kminus_demazure(long m, long ell, long n, Exec exec,
                                const Budgets& budgets) {
    if (n == 0) n = m;
    if (n < m) throw input_error("bad_width", "block width n must be >= m");
    KminusCandidate k;
    k.m = m;
    k.ell = ell;
    k.n = n;
    k.index = enumerate_multipartitions(m, ell);
    const std::size_t count = k.index.size();
    k.entries.assign(count, std::vector<GradedPolynomial>(count));

    MultiPartition trivial;
    {
        std::vector<Partition> comps(static_cast<std::size_t>(ell));
        comps[0] = Partition(std::vector<int>(static_cast<std::size_t>(m), 1));
        trivial = MultiPartition(std::move(comps));
    }

    std::vector<std::map<MultiPartition, GradedPolynomial>> columns(count);
    parallel_for(exec, count, [&](std::size_t col) {
        const MultiPartition& lambda = k.index[col];
        MacdonaldCache cache;
        const Composition mu = tot(lambda, static_cast<int>(n));
        const BlockCharacter e = nonsym_macdonald_t0(mu, &cache, budgets);
        const IsotypicDecomposition dec = block_schur_decompose(e, n, ell);
        columns[col] = phi_regrade(dec, lambda, ell);
    });

    for (std::size_t col = 0; col < count; ++col) {
        const MultiPartition& lambda = k.index[col];
        for (const auto& [mu, g] : columns[col]) {
            std::size_t row = count;
            for (std::size_t i = 0; i < count; ++i)
                if (k.index[i] == mu) {
                    row = i;
                    break;
                }
            if (row == count)
                throw invariant_error("unknown_constituent",
                                      "constituent " + to_string(mu) +
                                          " is not an index label");
            k.entries[row][col] = g;
        }
        // Head is the constant 1; socle row is monic of degree a(lambda);
        // support respects the order; coefficients lie in Z_{>=0}.
        if (!(columns[col].count(lambda) && columns[col].at(lambda) == GradedPolynomial::one()))
            throw invariant_error("head", "column " + to_string(lambda) +
                                              " does not have head multiplicity 1");
        const auto socle = columns[col].find(trivial);
        if (socle == columns[col].end() ||
            socle->second.degree() != a_function(lambda) ||
            socle->second.coeff(socle->second.degree()) != 1)
            throw invariant_error("socle_degree",
                                  "column " + to_string(lambda) +
                                      " socle row is not monic of degree a = " +
                                      std::to_string(a_function(lambda)));
        for (const auto& [mu, g] : columns[col]) {
            if (!(mu == lambda) && compare(mu, lambda) != Ordering::less)
                throw invariant_error("triangularity",
                                      "constituent " + to_string(mu) +
                                          " is not below " + to_string(lambda));
            if (!g.has_integer_coeffs() || !g.has_nonnegative_coeffs())
                throw invariant_error("kostka_positivity",
                                      "entry (" + to_string(mu) + ", " +
                                          to_string(lambda) + ") violates positivity");
        }
    }
    return k;
}

CrossCheckVerdict cross_check(const KminusCandidate& demazure, const KostkaSolution& ls) {
    CrossCheckVerdict verdict;
    if (demazure.index != ls.index)
        throw input_error("index_mismatch", "routes use different index sets");
    const std::size_t n = demazure.index.size();

    auto matches = [&](const std::vector<std::size_t>& relabel, std::string* diff) {
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!(demazure.entries[i][j] == ls.k_minus[relabel[i]][relabel[j]])) {
                    ok = false;
                    if (diff) {
                        *diff += "(" + to_string(demazure.index[i]) + ", " +
                                 to_string(demazure.index[j]) + "): demazure " +
                                 demazure.entries[i][j].str() + " vs ls " +
                                 ls.k_minus[relabel[i]][relabel[j]].str() + "; ";
                    } else {
                        return false;
                    }
                }
        return ok;
    };

    std::vector<std::size_t> identity(n), conj(n);
    for (std::size_t i = 0; i < n; ++i) {
        identity[i] = i;
        const MultiPartition c = componentwise_conjugate(demazure.index[i]);
        std::size_t idx = n;
        for (std::size_t j = 0; j < n; ++j)
            if (demazure.index[j] == c) {
                idx = j;
                break;
            }
        conj[i] = idx;
    }

    if (matches(identity, nullptr)) {
        verdict.equal = true;
        verdict.used = Relabeling::identity;
        return verdict;
    }
    if (matches(conj, nullptr)) {
        verdict.equal = true;
        verdict.used = Relabeling::conjugate;
        return verdict;
    }
    verdict.equal = false;
    matches(identity, &verdict.diff);
    return verdict;
}

CrossCheckVerdict cross_check(long m, long ell, Exec exec, const Budgets& budgets) {
    const KminusCandidate dem = kminus_demazure(m, ell, m, exec, budgets);
    const KostkaSolution ls = solve(omega_matrix(m, ell, exec, budgets));
    return cross_check(dem, ls);
}

} // namespace kostka
