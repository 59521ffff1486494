// Command-line front end: classify / chartable / omega / kostka / macdonald /
// crosscheck with deterministic JSON, CSV and LaTeX output.
//
// Exit codes: 0 success, 2 invariant violation, 3 budget exceeded, 4 bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "kostka/errors.hpp"
#include "kostka/exec.hpp"
#include "kostka/io.hpp"

namespace {

using namespace kostka;
using nlohmann::json;

struct RunConfig {
    long m = 0;
    long ell = 0;
    long n = 0;  // 0 = default to m
    std::string method = "ls";
    std::string sign = "minus";
    std::string format;
    std::string output;
    long truncate = -1;
    int threads = 0;
    bool allow_degenerate = false;
    Budgets budgets = Budgets::from_env();

    Exec exec() const { return threads == 1 ? Exec::serial : Exec::parallel; }

    void validate() const {
        if (m < 1) throw input_error("bad_m", "m must be >= 1");
        if (ell < 1) throw input_error("bad_ell", "ell must be >= 1");
        if (ell == 1 && !allow_degenerate)
            throw input_error("degenerate",
                              "ell = 1 is a degenerate mode; pass --allow-degenerate");
        if (n != 0 && n < m) throw input_error("bad_width", "block width n must be >= m");
    }

    void check_format(std::initializer_list<const char*> allowed) const {
        if (format.empty()) return;
        for (const char* a : allowed)
            if (format == a) return;
        throw input_error("bad_format", "unsupported format '" + format + "'");
    }
};

void emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.output.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw input_error("bad_output", "cannot open " + cfg.output);
    out << payload;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int run_classify(const RunConfig& cfg) {
    cfg.validate();
    cfg.check_format({"json", "text"});
    if (cfg.format == "json")
        emit(cfg, dump(classify_json(cfg.m, cfg.ell)));
    else
        emit(cfg, classify_text(cfg.m, cfg.ell));
    return 0;
}

int run_chartable(const RunConfig& cfg) {
    cfg.validate();
    cfg.check_format({"json", "csv"});
    const CharacterTable t = character_table(cfg.m, cfg.ell, cfg.exec(), cfg.budgets);
    if (cfg.format == "csv")
        emit(cfg, chartable_csv(t));
    else
        emit(cfg, dump(chartable_json(t)));
    return 0;
}

int run_omega(const RunConfig& cfg) {
    cfg.validate();
    cfg.check_format({"json"});
    const OmegaMatrix omega = omega_matrix(cfg.m, cfg.ell, cfg.exec(), cfg.budgets);
    const MinimalDegreeReport report = minimal_degree_check(omega);
    if (!report.ok)
        throw invariant_error("minimal_degree", report.failures.front());
    emit(cfg, dump(omega_json(omega, cfg.truncate)));
    return 0;
}

int run_kostka(const RunConfig& cfg) {
    cfg.validate();
    cfg.check_format({"json", "csv", "latex"});
    const bool want_ls = cfg.method == "ls" || cfg.method == "both";
    const bool want_dem = cfg.method == "demazure" || cfg.method == "both";
    if (want_dem && !want_ls && cfg.sign != "minus")
        throw input_error("unsupported", "the Demazure route produces K- only");

    std::unique_ptr<KostkaSolution> ls;
    std::unique_ptr<KminusCandidate> dem;
    if (want_ls)
        ls = std::make_unique<KostkaSolution>(
            solve(omega_matrix(cfg.m, cfg.ell, cfg.exec(), cfg.budgets)));
    if (want_dem)
        dem = std::make_unique<KminusCandidate>(
            kminus_demazure(cfg.m, cfg.ell, cfg.n, cfg.exec(), cfg.budgets));
    if (ls && dem) {
        const CrossCheckVerdict v = cross_check(*dem, *ls);
        if (!v.equal)
            throw invariant_error("crosscheck", "the two routes disagree: " + v.diff);
    }

    if (cfg.format == "latex") {
        std::string payload;
        const auto& index = ls ? ls->index : dem->index;
        const auto& minus_entries = ls ? ls->k_minus : dem->entries;
        if (cfg.sign == "minus" || cfg.sign == "both")
            payload += latex_kminus(index, minus_entries, "$K^-$");
        if (cfg.sign == "plus" || cfg.sign == "both") {
            if (!ls) throw input_error("unsupported", "K+ needs --method ls");
            payload += latex_kplus(index, ls->k_plus, "$K^+$");
        }
        emit(cfg, payload);
    } else if (cfg.format == "csv") {
        std::string payload;
        const auto& index = ls ? ls->index : dem->index;
        if (cfg.sign == "minus" || cfg.sign == "both")
            payload += matrix_csv(index, ls ? ls->k_minus : dem->entries);
        if (cfg.sign == "plus" || cfg.sign == "both") {
            if (!ls) throw input_error("unsupported", "K+ needs --method ls");
            payload += matrix_csv(index, ls->k_plus);
        }
        emit(cfg, payload);
    } else {
        json out;
        if (ls && dem) {
            out = kostka_json(*ls, cfg.sign, "ls");
            out["demazure"] = kminus_candidate_json(*dem);
            out["routes_equal"] = true;
        } else if (ls) {
            out = kostka_json(*ls, cfg.sign, "ls");
        } else {
            out = kminus_candidate_json(*dem);
        }
        out["m"] = cfg.m;
        out["ell"] = cfg.ell;
        emit(cfg, dump(out));
    }
    return 0;
}

int run_macdonald(const RunConfig& cfg, const std::string& comp) {
    Composition mu;
    std::istringstream in(comp);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            mu.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw input_error("bad_composition", "cannot parse entry '" + tok + "'");
        }
    }
    if (mu.empty()) throw input_error("bad_composition", "empty composition");
    cfg.check_format({"json"});
    const BlockCharacter e = nonsym_macdonald_t0(mu, nullptr, cfg.budgets);
    emit(cfg, dump(macdonald_json(mu, e)));
    return 0;
}

int run_crosscheck(const RunConfig& cfg) {
    cfg.validate();
    cfg.check_format({"json"});
    const CrossCheckVerdict v = cross_check(cfg.m, cfg.ell, cfg.exec(), cfg.budgets);
    emit(cfg, dump(crosscheck_json(v, cfg.m, cfg.ell)));
    if (!v.equal) return 2;
    if (v.used != kFrozenRelabeling)
        throw invariant_error("relabeling_drift",
                              "cross-check succeeded with a relabeling different "
                              "from the frozen configuration");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Kostka polynomials attached to limit symbols for G(ell,1,m)"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--threads", cfg.threads,
                   "worker threads (0 = library default, 1 = serial)");
    app.add_flag("--allow-degenerate", cfg.allow_degenerate,
                 "accept ell = 1 (classical Kostka mode)");

    auto add_common = [&](CLI::App* sub, bool with_sizes) {
        if (with_sizes) {
            sub->add_option("m", cfg.m, "total size m")->required();
            sub->add_option("ell", cfg.ell, "level ell")->required();
        }
        sub->add_option("--format", cfg.format, "output format");
        sub->add_option("-o,--output", cfg.output, "output path (default stdout)");
    };

    CLI::App* classify = app.add_subcommand("classify", "list P_{m,ell} with statistics");
    add_common(classify, true);

    CLI::App* chartable = app.add_subcommand("chartable", "character table of G(ell,1,m)");
    add_common(chartable, true);

    CLI::App* omega = app.add_subcommand("omega", "graded multiplicity matrix Omega");
    add_common(omega, true);
    omega->add_option("--truncate", cfg.truncate, "also emit series up to this degree");

    CLI::App* kostka_cmd = app.add_subcommand("kostka", "Kostka polynomial matrices");
    add_common(kostka_cmd, true);
    kostka_cmd->add_option("--method", cfg.method, "ls | demazure | both")
        ->check(CLI::IsMember({"ls", "demazure", "both"}));
    kostka_cmd->add_option("--sign", cfg.sign, "plus | minus | both")
        ->check(CLI::IsMember({"plus", "minus", "both"}));
    kostka_cmd->add_option("-n,--width", cfg.n, "block width n >= m (default m)");

    std::string comp;
    CLI::App* macdonald = app.add_subcommand(
        "macdonald", "nonsymmetric Macdonald polynomial at t = 0");
    macdonald->add_option("COMP", comp, "comma-separated composition, e.g. 0,1,0,1")
        ->required();
    add_common(macdonald, false);

    CLI::App* crosscheck = app.add_subcommand(
        "crosscheck", "compare the Demazure and Lusztig-Shoji routes");
    add_common(crosscheck, true);

    CLI11_PARSE(app, argc, argv);
    kostka::set_threads(cfg.threads);

    try {
        if (classify->parsed()) return run_classify(cfg);
        if (chartable->parsed()) return run_chartable(cfg);
        if (omega->parsed()) return run_omega(cfg);
        if (kostka_cmd->parsed()) return run_kostka(cfg);
        if (macdonald->parsed()) return run_macdonald(cfg, comp);
        if (crosscheck->parsed()) return run_crosscheck(cfg);
    } catch (const kostka::budget_error& e) {
        std::cerr << nlohmann::json{{"error", e.code()}, {"message", e.what()}}.dump()
                  << '\n';
        return 3;
    } catch (const kostka::input_error& e) {
        std::cerr << nlohmann::json{{"error", e.code()}, {"message", e.what()}}.dump()
                  << '\n';
        return 4;
    } catch (const kostka::error& e) {
        std::cerr << nlohmann::json{{"error", e.code()}, {"message", e.what()}}.dump()
                  << '\n';
        return 2;
    }
    return 0;
}
