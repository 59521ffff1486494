#include "kostka/io.hpp"

#include <algorithm>
#include <sstream>

#include "kostka/errors.hpp"

namespace kostka {

using nlohmann::json;

json to_json(const GradedPolynomial& p) {
    json out = json::object();
    for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = rational_to_string(c);
    return out;
}

json to_json(const Cyclotomic& c) {
    json out = json::array();
    for (const auto& x : c.coords()) out.push_back(rational_to_string(x));
    return out;
}

json to_json(const RationalFunction& f) {
    json num = json::array(), den = json::array();
    for (const auto& c : f.num().c) num.push_back(to_json(c));
    for (const auto& c : f.den().c) den.push_back(to_json(c));
    return json{{"num", num}, {"den", den}};
}

namespace {

// Hasse covers of the order on P_{m,ell}.
std::vector<std::vector<std::string>> hasse_covers(const std::vector<MultiPartition>& idx) {
    const std::size_t n = idx.size();
    std::vector<std::vector<std::string>> covers(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || compare(idx[i], idx[j]) != Ordering::less) continue;
            bool is_cover = true;
            for (std::size_t k = 0; k < n && is_cover; ++k) {
                if (k == i || k == j) continue;
                if (compare(idx[i], idx[k]) == Ordering::less &&
                    compare(idx[k], idx[j]) == Ordering::less)
                    is_cover = false;
            }
            if (is_cover) covers[i].push_back(to_string(idx[j]));
        }
    return covers;
}

} // namespace

json classify_json(long m, long ell) {
    const auto idx = enumerate_multipartitions(m, ell);
    const auto covers = hasse_covers(idx);
    json rows = json::array();
    for (std::size_t i = 0; i < idx.size(); ++i) {
        rows.push_back(json{{"label", to_string(idx[i])},
                            {"a", a_function(idx[i])},
                            {"vee", to_string(involution_vee(idx[i]))},
                            {"star", to_string(involution_star(idx[i]))},
                            {"theta", to_string(involution_theta(idx[i]))},
                            {"covered_by", covers[i]}});
    }
    return json{{"schema_version", kSchemaVersion}, {"m", m}, {"ell", ell},
                {"count", idx.size()}, {"rows", rows}};
}

std::string classify_text(long m, long ell) {
    const auto idx = enumerate_multipartitions(m, ell);
    const auto covers = hasse_covers(idx);
    std::ostringstream os;
    os << "P_{" << m << "," << ell << "}: " << idx.size() << " multipartitions\n";
    os << "label\ta\tvee\tstar\ttheta\tcovered_by\n";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        os << to_string(idx[i]) << '\t' << a_function(idx[i]) << '\t'
           << to_string(involution_vee(idx[i])) << '\t'
           << to_string(involution_star(idx[i])) << '\t'
           << to_string(involution_theta(idx[i])) << '\t';
        for (std::size_t k = 0; k < covers[i].size(); ++k) {
            if (k) os << ' ';
            os << covers[i][k];
        }
        os << '\n';
    }
    return os.str();
}

json chartable_json(const CharacterTable& t) {
    json irreps = json::array(), classes = json::array(), cents = json::array();
    for (const auto& l : t.labels) {
        irreps.push_back(to_string(l));
        classes.push_back(to_string(l));
    }
    for (const auto& z : t.centralizers) cents.push_back(z.get_str());
    json values = json::array();
    for (const auto& row : t.values) {
        json r = json::array();
        for (const auto& v : row) r.push_back(to_json(v));
        values.push_back(r);
    }
    return json{{"schema_version", kSchemaVersion}, {"m", t.m}, {"ell", t.ell},
                {"irreps", irreps}, {"classes", classes},
                {"centralizers", cents}, {"values", values}};
}

std::string chartable_csv(const CharacterTable& t) {
    std::ostringstream os;
    os << "irrep";
    for (const auto& l : t.labels) os << ',' << to_string(l);
    os << '\n';
    os << "centralizer";
    for (const auto& z : t.centralizers) os << ',' << z.get_str();
    os << '\n';
    for (std::size_t i = 0; i < t.labels.size(); ++i) {
        os << to_string(t.labels[i]);
        for (std::size_t c = 0; c < t.labels.size(); ++c) os << ',' << t.values[i][c].str();
        os << '\n';
    }
    return os.str();
}

json omega_json(const OmegaMatrix& omega, long truncate_degree) {
    json index = json::array();
    for (const auto& l : omega.index) index.push_back(to_string(l));
    json entries = json::array();
    for (std::size_t i = 0; i < omega.index.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < omega.index.size(); ++j)
            row.push_back(to_json(omega.entries.at(i, j)));
        entries.push_back(row);
    }
    json out{{"schema_version", kSchemaVersion}, {"m", omega.m}, {"ell", omega.ell},
             {"index", index}, {"a_values", omega.a_values}, {"entries", entries}};
    if (truncate_degree >= 0) {
        json series = json::array();
        for (std::size_t i = 0; i < omega.index.size(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < omega.index.size(); ++j)
                row.push_back(to_json(omega.entries.at(i, j).series(truncate_degree)));
            series.push_back(row);
        }
        out["series"] = series;
        out["series_degree"] = truncate_degree;
    }
    return out;
}

namespace {

json polynomial_matrix_json(const std::vector<MultiPartition>& index,
                            const std::vector<std::vector<GradedPolynomial>>& entries) {
    json rows = json::object();
    for (std::size_t i = 0; i < index.size(); ++i) {
        json row = json::object();
        for (std::size_t j = 0; j < index.size(); ++j)
            if (!entries[i][j].is_zero())
                row[to_string(index[j])] = to_json(entries[i][j]);
        rows[to_string(index[i])] = row;
    }
    return rows;
}

} // namespace

json kostka_json(const KostkaSolution& sol, const std::string& sign,
                 const std::string& method) {
    json index = json::array();
    for (const auto& l : sol.index) index.push_back(to_string(l));
    json out{{"schema_version", kSchemaVersion}, {"method", method},
             {"index", index}, {"a_values", sol.a_values}};
    if (sign == "minus" || sign == "both")
        out["k_minus"] = polynomial_matrix_json(sol.index, sol.k_minus);
    if (sign == "plus" || sign == "both")
        out["k_plus"] = polynomial_matrix_json(sol.index, sol.k_plus);
    if (method == "ls") {
        json lambda = json::array();
        for (std::size_t i = 0; i < sol.index.size(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < sol.index.size(); ++j)
                row.push_back(to_json(sol.lambda.at(i, j)));
            lambda.push_back(row);
        }
        out["lambda"] = lambda;
        out["residual_ok"] = sol.residual_ok;
    }
    return out;
}

json kminus_candidate_json(const KminusCandidate& k) {
    json index = json::array();
    for (const auto& l : k.index) index.push_back(to_string(l));
    return json{{"schema_version", kSchemaVersion}, {"method", "demazure"},
                {"index", index},
                {"k_minus", polynomial_matrix_json(k.index, k.entries)}};
}

json crosscheck_json(const CrossCheckVerdict& v, long m, long ell) {
    return json{{"schema_version", kSchemaVersion}, {"m", m}, {"ell", ell},
                {"equal", v.equal},
                {"relabeling", v.used == Relabeling::identity ? "identity" : "conjugate"},
                {"diff", v.diff}};
}

json macdonald_json(const Composition& mu, const BlockCharacter& e) {
    json terms = json::array();
    for (const auto& [exps, coeff] : e.terms())
        terms.push_back(json{{"exponents", exps}, {"coefficient", to_json(coeff)}});
    return json{{"schema_version", kSchemaVersion}, {"composition", mu},
                {"terms", terms}};
}

namespace {

std::string latex_table(const std::vector<MultiPartition>& order,
                        const std::vector<MultiPartition>& canonical_index,
                        const std::vector<std::vector<GradedPolynomial>>& entries,
                        const std::string& corner) {
    auto position = [&](const MultiPartition& l) {
        for (std::size_t i = 0; i < canonical_index.size(); ++i)
            if (canonical_index[i] == l) return i;
        throw input_error("unknown_label", "label missing from index");
    };
    std::ostringstream os;
    os << "\\begin{tabular}{c|";
    for (std::size_t j = 0; j < order.size(); ++j) os << 'c';
    os << "}\n" << corner;
    for (const auto& l : order) os << "&$" << latex_label(l) << "$";
    os << "\\\\\\hline\n";
    for (std::size_t i = 0; i < order.size(); ++i) {
        os << '$' << latex_label(order[i]) << '$';
        for (std::size_t j = 0; j < order.size(); ++j) {
            const GradedPolynomial& e = entries[position(order[i])][position(order[j])];
            os << " & ";
            if (!e.is_zero()) os << '$' << e.str() << '$';
        }
        if (i + 1 < order.size()) os << " \\\\";
        os << '\n';
    }
    os << "\\end{tabular}\n";
    return os.str();
}

} // namespace

std::string latex_kminus(const std::vector<MultiPartition>& canonical_index,
                         const std::vector<std::vector<GradedPolynomial>>& entries,
                         const std::string& corner) {
    std::vector<MultiPartition> order(canonical_index.rbegin(), canonical_index.rend());
    return latex_table(order, canonical_index, entries, corner);
}

std::string latex_kplus(const std::vector<MultiPartition>& canonical_index,
                        const std::vector<std::vector<GradedPolynomial>>& entries,
                        const std::string& corner) {
    std::vector<MultiPartition> order;
    order.reserve(canonical_index.size());
    for (auto it = canonical_index.rbegin(); it != canonical_index.rend(); ++it)
        order.push_back(involution_vee(*it));
    return latex_table(order, canonical_index, entries, corner);
}

std::string matrix_csv(const std::vector<MultiPartition>& index,
                       const std::vector<std::vector<GradedPolynomial>>& entries) {
    std::ostringstream os;
    os << "row";
    for (const auto& l : index) os << ',' << to_string(l);
    os << '\n';
    for (std::size_t i = 0; i < index.size(); ++i) {
        os << to_string(index[i]);
        for (std::size_t j = 0; j < index.size(); ++j) os << ',' << entries[i][j].str();
        os << '\n';
    }
    return os.str();
}

} // namespace kostka
