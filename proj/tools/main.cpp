#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcdm/eval.hpp"
#include "mcdm/io.hpp"
#include "render.hpp"

namespace {

using namespace mcdm;

std::vector<RankEntry> rank_from_totals(std::vector<std::pair<Label, double>> totals) {
    std::stable_sort(totals.begin(), totals.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    std::vector<RankEntry> out;
    out.reserve(totals.size());
    for (const auto& [label, total] : totals) out.push_back({label, total, false});
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i].total == out[i + 1].total) {
            out[i].tied = true;
            out[i + 1].tied = true;
        }
    return out;
}

std::string resolve_method(const std::string& requested, const Problem& problem) {
    const std::string kind = kind_name(problem);
    if (requested == "auto") return kind == "linear" ? "wsm" : "ahp";
    if ((requested == "wsm" || requested == "wpm") && kind != "linear")
        throw Error(errc::validation_error,
                    "method '" + requested + "' applies to linear problems, file is '" +
                        kind + "'");
    if (requested == "ahp" && kind == "linear")
        throw Error(errc::validation_error, "method 'ahp' needs a hierarchy, file is 'linear'");
    return requested;
}

// Flat or flattened-tree decompositions for every alternative in the file.
Valuation build_valuation(const Problem& problem, const std::string& method,
                          render::Style& style) {
    if (const auto* linear = std::get_if<DecisionProblem>(&problem)) {
        if (method == "wpm") {
            style.log_domain = true;
            return wpm_decompose(*linear);
        }
        return wsm_decompose(*linear);
    }
    if (const auto* model = std::get_if<AhpModel>(&problem)) {
        Valuation out;
        for (const auto& alt : model->alternatives())
            out.emplace(alt, flatten(build_vd_tree(*model, alt)));
        return out;
    }
    const auto& trace = std::get<TraceSet>(problem);
    Valuation out;
    for (const auto& t : trace.trees)
        if (!t.contrast) out.emplace(t.root, t.leaves);
    return out;
}

Foil default_foil(const Valuation& valuation) {
    if (valuation.size() < 2)
        throw Error(errc::validation_error,
                    "need at least two alternatives to pick fact and foil");
    std::vector<std::pair<Label, double>> totals;
    for (const auto& [label, vd] : valuation) totals.emplace_back(label, vd.total());
    auto ranking = rank_from_totals(std::move(totals));
    return Foil{ranking[0].label, ranking[1].label};
}

int cmd_solve(const std::string& file, const std::string& method_flag, bool as_json) {
    Problem problem = load_problem(file);
    const std::string method = resolve_method(method_flag, problem);
    render::Style style;

    nlohmann::json out = {{"file", file}, {"kind", kind_name(problem)}, {"method", method}};
    std::vector<RankEntry> ranking;
    std::optional<Priorities> priorities;

    if (const auto* linear = std::get_if<DecisionProblem>(&problem)) {
        Valuation v = method == "wpm" ? wpm_decompose(*linear) : wsm_decompose(*linear);
        style.log_domain = method == "wpm";
        ranking = rank(v);
    } else if (const auto* model = std::get_if<AhpModel>(&problem)) {
        priorities = synthesize(*model);
        ranking = rank_from_totals(*priorities);
    } else {
        const auto& trace = std::get<TraceSet>(problem);
        std::vector<std::pair<Label, double>> totals;
        for (const auto& t : trace.trees) totals.emplace_back(t.root, t.leaves.total());
        ranking = rank_from_totals(std::move(totals));
    }

    if (as_json) {
        out["ranking"] = render::ranking_json(ranking, style);
        if (priorities) {
            nlohmann::json p = nlohmann::json::array();
            for (const auto& [label, value] : *priorities)
                p.push_back({{"label", label}, {"value", value}});
            out["priorities"] = p;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (priorities) {
        std::cout << "priority vector:\n";
        render::priorities_text(std::cout, *priorities);
    }
    std::cout << "ranking (" << method << "):\n";
    render::ranking_text(std::cout, ranking, style);
    return 0;
}

int cmd_explain(const std::string& file, const std::string& method_flag, std::string fact,
                std::string foil, std::optional<int> level, bool with_all, std::size_t cap,
                bool as_json) {
    Problem problem = load_problem(file);
    const std::string method = resolve_method(method_flag, problem);
    render::Style style;
    Valuation valuation = build_valuation(problem, method, style);

    std::optional<Explanation> explanation;
    if (const auto* trace = std::get_if<TraceSet>(&problem)) {
        // Prefer a matching pre-computed difference trace; alternative
        // trees in the same file are used like any other valuation.
        for (const auto& t : trace->trees) {
            if (!t.contrast) continue;
            const bool named = !fact.empty() || !foil.empty();
            const bool matches =
                (fact.empty() || t.contrast->fact == fact) &&
                (foil.empty() || t.contrast->foil == foil);
            if (!named && valuation.size() >= 2) break;  // alternatives take precedence
            if (matches) {
                explanation =
                    explain_difference(t.leaves, *t.contrast, level, {}, with_all, cap);
                break;
            }
        }
        if (!explanation && valuation.size() < 2)
            throw Error(errc::validation_error,
                        "trace has no difference tree matching fact='" + fact +
                            "' foil='" + foil + "'");
    }

    if (!explanation) {
        Foil pair = default_foil(valuation);
        if (!fact.empty()) pair.fact = fact;
        if (!foil.empty()) pair.foil = foil;
        if (pair.fact == pair.foil)
            throw Error(errc::validation_error,
                        "fact and foil must differ, both are '" + pair.fact + "'");
        explanation = level ? focused_explanation(valuation, pair, *level, {}, with_all, cap)
                            : explain(valuation, pair, {}, with_all, cap);
    }

    if (as_json) {
        nlohmann::json out = render::explanation_json(*explanation, style);
        out["file"] = file;
        out["method"] = method;
        std::cout << out.dump(2) << "\n";
    } else {
        render::explanation_text(std::cout, *explanation, style);
    }
    return 0;
}

int cmd_eval(const GenConfig& cfg, const std::string& out_dir, bool as_json) {
    SweepResult result = run_sweep(cfg);

    std::filesystem::create_directories(out_dir);
    const auto records_path = std::filesystem::path(out_dir) / "records.csv";
    const auto summary_path = std::filesystem::path(out_dir) / "summary.csv";
    const auto meta_path = std::filesystem::path(out_dir) / "meta.json";
    {
        std::ofstream records(records_path);
        write_records_csv(records, result);
        std::ofstream summary(summary_path);
        write_summary_csv(summary, result);
        nlohmann::json meta = {
            {"levels", cfg.levels},
            {"instances", cfg.instances},
            {"seed", cfg.seed},
            {"max_components", cfg.resolved_max_components()},
            {"dim_range", {cfg.dim_min, cfg.dim_max}},
            {"margins", cfg.margins},
            {"decision_margin", "100*(top1-top2)/top1"},
            {"generator", "per-column normalized uniform entries; dimensions uniform in "
                          "dim_range, redrawn until the leaf count fits max_components"},
        };
        std::ofstream meta_out(meta_path);
        meta_out << meta.dump(2) << "\n";
    }

    if (as_json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : result.summary)
            if (row.n_bucket == 0)
                rows.push_back({{"levels", row.levels},
                                {"margin_bound", row.margin_bound},
                                {"avg_reduction", row.avg_reduction},
                                {"count", row.count}});
        std::cout << nlohmann::json({{"records", records_path.string()},
                                     {"summary", summary_path.string()},
                                     {"pooled", rows}})
                         .dump(2)
                  << "\n";
        return 0;
    }

    std::cout << "levels=" << cfg.levels << " instances=" << cfg.instances
              << " seed=" << cfg.seed << "\n";
    std::cout << "margin bound | instances | avg MDS reduction\n";
    for (const auto& row : result.summary) {
        if (row.n_bucket != 0) continue;
        char line[96];
        std::snprintf(line, sizeof(line), "  <= %5.1f%% | %9zu | %8.2f%%\n",
                      row.margin_bound, row.count, row.avg_reduction);
        std::cout << line;
    }
    std::cout << "wrote " << records_path.string() << ", " << summary_path.string() << ", "
              << meta_path.string() << "\n";
    return 0;
}

int cmd_validate(const std::string& file) {
    Problem problem = load_problem(file);
    std::cout << "ok: " << file << " is a valid '" << kind_name(problem) << "' problem";
    if (const auto* linear = std::get_if<DecisionProblem>(&problem))
        std::cout << " (" << linear->alternative_count() << " alternatives, "
                  << linear->attribute_count() << " attributes)";
    else if (const auto* model = std::get_if<AhpModel>(&problem))
        std::cout << " (" << model->size() << " matrices, " << model->alternatives().size()
                  << " alternatives, " << model->leaf_count() << " leaf components)";
    else
        std::cout << " (" << std::get<TraceSet>(problem).trees.size() << " trees)";
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-criteria decision solver with contrastive explanations"};
    app.require_subcommand(1);

    std::string file, method = "auto", fact, foil, out_dir = "eval-out";
    bool as_json = false, with_all = false;
    std::optional<int> level;
    std::size_t cap = 64;
    GenConfig cfg;

    auto* solve = app.add_subcommand("solve", "rank the alternatives of a problem file");
    solve->add_option("file", file, "problem file (JSON)")->required();
    solve->add_option("--method", method, "wsm, wpm, or ahp (default by file kind)")
        ->check(CLI::IsMember({"auto", "wsm", "wpm", "ahp"}));
    solve->add_flag("--json", as_json, "machine-readable output");

    auto* explain = app.add_subcommand("explain", "explain why one alternative beat another");
    explain->add_option("file", file, "problem file (JSON)")->required();
    explain->add_option("--method", method, "wsm, wpm, or ahp (default by file kind)")
        ->check(CLI::IsMember({"auto", "wsm", "wpm", "ahp"}));
    explain->add_option("--fact", fact, "chosen alternative (default: ranked first)");
    explain->add_option("--foil", foil, "contrasted alternative (default: runner-up)");
    explain->add_option("--level", level, "focus on one hierarchy level (2 = topmost)");
    explain->add_flag("--all", with_all, "enumerate all minimal dominators");
    explain->add_option("--cap", cap, "limit for enumerated dominator sets");
    explain->add_flag("--json", as_json, "machine-readable output");

    auto* eval = app.add_subcommand("eval", "random-instance sweep of MDS reduction");
    eval->add_option("--levels", cfg.levels, "hierarchy levels (3-6)");
    eval->add_option("--instances", cfg.instances, "instances to generate");
    eval->add_option("--seed", cfg.seed, "random seed");
    eval->add_option("--margins", cfg.margins, "decision margin bounds, percent")
        ->delimiter(',');
    eval->add_option("--max-components", cfg.max_components,
                     "leaf component cap (0 = default for the level count)");
    eval->add_option("--out", out_dir, "output directory for CSV files");
    eval->add_flag("--json", as_json, "machine-readable output");

    auto* validate = app.add_subcommand("validate", "check a problem file");
    validate->add_option("file", file, "problem file (JSON)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(file, method, as_json);
        if (explain->parsed())
            return cmd_explain(file, method, fact, foil, level, with_all, cap, as_json);
        if (eval->parsed()) return cmd_eval(cfg, out_dir, as_json);
        return cmd_validate(file);
    } catch (const mcdm::Error& e) {
        std::cerr << "error[" << e.code_name() << "]: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error[internal]: " << e.what() << "\n";
        return 1;
    }
}
