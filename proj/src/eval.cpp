#include "mcdm/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "mcdm/explain.hpp"

namespace mcdm {

void GenConfig::validate() const {
    if (levels < 3 || levels > 6)
        throw Error(errc::validation_error,
                    "levels must be within 3..6, got " + std::to_string(levels));
    if (dim_min < 2 || dim_max > 10 || dim_min > dim_max)
        throw Error(errc::validation_error, "dimension range must stay within [2,10]");
    if (margins.empty())
        throw Error(errc::validation_error, "at least one margin bound is required");
    for (double m : margins)
        if (m <= 0.0)
            throw Error(errc::validation_error, "margin bounds must be positive");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Platform-independent draws: std::uniform_*_distribution is not pinned
// by the standard, so derive values from raw engine output directly.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int next_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<Label> level_row_labels(std::size_t matrix_index, std::size_t n_matrices,
                                    std::size_t rows) {
    std::vector<Label> out;
    out.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        if (matrix_index + 1 == n_matrices)
            out.push_back("A" + std::to_string(r + 1));
        else
            out.push_back("L" + std::to_string(matrix_index + 2) + "n" + std::to_string(r + 1));
    }
    return out;
}

// Fixed-format helpers so CSV output does not depend on stream state.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

AhpModel generate(const GenConfig& cfg, std::size_t instance_index) {
    cfg.validate();
    std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(instance_index + 1)));

    const std::size_t n_matrices = static_cast<std::size_t>(cfg.levels) - 1;
    const std::size_t max_leaves = cfg.resolved_max_components();

    std::vector<std::size_t> dims(n_matrices);
    bool accepted = false;
    for (int attempt = 0; attempt < 1000 && !accepted; ++attempt) {
        std::size_t leaves = 1;
        for (std::size_t k = 0; k < n_matrices; ++k) {
            dims[k] = static_cast<std::size_t>(next_int(rng, cfg.dim_min, cfg.dim_max));
            if (k + 1 < n_matrices) leaves *= dims[k];
        }
        accepted = leaves <= max_leaves;
    }
    if (!accepted)
        throw Error(errc::generation_failure,
                    "no dimension draw fit " + std::to_string(max_leaves) +
                        " components after 1000 attempts");

    std::vector<Matrix> matrices;
    matrices.reserve(n_matrices);
    std::size_t prev_rows = 1;
    std::vector<Label> prev_labels = {"goal"};
    for (std::size_t k = 0; k < n_matrices; ++k) {
        const std::size_t rows = dims[k];
        std::vector<double> entries(rows * prev_rows);
        for (std::size_t c = 0; c < prev_rows; ++c) {
            double sum = 0.0;
            for (std::size_t r = 0; r < rows; ++r) {
                entries[r * prev_rows + c] = next_unit(rng);
                sum += entries[r * prev_rows + c];
            }
            for (std::size_t r = 0; r < rows; ++r) entries[r * prev_rows + c] /= sum;
        }
        std::vector<Label> row_labels = level_row_labels(k, n_matrices, rows);
        matrices.emplace_back(rows, prev_rows, std::move(entries), row_labels, prev_labels);
        prev_labels = std::move(row_labels);
        prev_rows = rows;
    }
    return AhpModel(std::move(matrices));
}

double decision_margin(const Priorities& priorities) {
    if (priorities.size() < 2)
        throw Error(errc::validation_error, "decision margin needs at least two priorities");
    Priorities sorted = priorities;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return 100.0 * (sorted[0].second - sorted[1].second) / sorted[0].second;
}

double single_level_improvement(std::size_t mds_size, std::size_t focused_size) {
    if (mds_size == 0)
        throw Error(errc::validation_error,
                    "improvement over an empty minimal dominating set is undefined");
    return (1.0 - static_cast<double>(focused_size) / static_cast<double>(mds_size)) * 100.0;
}

SweepResult run_sweep(const GenConfig& cfg) {
    cfg.validate();
    SweepResult result;
    result.config = cfg;
    result.records.reserve(cfg.instances);
    const Tolerance tol;

    for (std::size_t i = 0; i < cfg.instances; ++i) {
        AhpModel model = generate(cfg, i);
        Priorities pri = synthesize(model);
        std::sort(pri.begin(), pri.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });

        EvalRecord rec;
        rec.instance_id = i;
        rec.levels = cfg.levels;
        rec.margin_pct = 100.0 * (pri[0].second - pri[1].second) / pri[0].second;

        ValueDecomposition fact_vd = flatten(build_vd_tree(model, pri[0].first));
        ValueDecomposition foil_vd = flatten(build_vd_tree(model, pri[1].first));
        ValueDecomposition delta = vd_subtract(fact_vd, foil_vd);
        rec.n = delta.size();
        rec.m = mds(delta, tol).size();
        rec.reduction_pct = (1.0 - static_cast<double>(rec.m) / static_cast<double>(rec.n)) * 100.0;

        const std::size_t path_len = *delta.path_length();
        for (std::size_t level = 2; level <= path_len + 1; ++level)
            rec.level_sizes.emplace_back(static_cast<int>(level),
                                         mds(project(delta, static_cast<int>(level)), tol).size());
        result.records.push_back(std::move(rec));
    }

    std::sort(result.records.begin(), result.records.end(),
              [](const EvalRecord& a, const EvalRecord& b) {
                  return a.instance_id < b.instance_id;
              });

    std::vector<double> bounds = cfg.margins;
    std::sort(bounds.begin(), bounds.end());
    for (double bound : bounds) {
        SummaryRow pooled{cfg.levels, bound, 0, 0.0, 0};
        std::map<std::size_t, SummaryRow> by_n;
        for (const auto& rec : result.records) {
            if (rec.margin_pct > bound) continue;
            pooled.avg_reduction += rec.reduction_pct;
            pooled.count += 1;
            auto& row = by_n.try_emplace(rec.n, SummaryRow{cfg.levels, bound, rec.n, 0.0, 0})
                            .first->second;
            row.avg_reduction += rec.reduction_pct;
            row.count += 1;
        }
        if (pooled.count == 0) continue;
        pooled.avg_reduction /= static_cast<double>(pooled.count);
        result.summary.push_back(pooled);
        for (auto& [n, row] : by_n) {
            row.avg_reduction /= static_cast<double>(row.count);
            result.summary.push_back(row);
        }
    }
    return result;
}

void write_records_csv(std::ostream& os, const SweepResult& result) {
    os << "instance_id,levels,n,margin_pct,m,reduction_pct,level,s_level,improvement_pct\n";
    for (const auto& rec : result.records) {
        const std::string prefix = std::to_string(rec.instance_id) + "," +
                                   std::to_string(rec.levels) + "," + std::to_string(rec.n) +
                                   "," + fmt(rec.margin_pct) + "," + std::to_string(rec.m) +
                                   "," + fmt(rec.reduction_pct);
        os << prefix << ",0," << rec.m << ",0\n";
        for (const auto& [level, s] : rec.level_sizes) {
            double improvement =
                rec.m == 0 ? 0.0 : single_level_improvement(rec.m, s);
            os << prefix << "," << level << "," << s << "," << fmt(improvement) << "\n";
        }
    }
}

void write_summary_csv(std::ostream& os, const SweepResult& result) {
    os << "levels,margin_bound,n_bucket,avg_reduction,count\n";
    for (const auto& row : result.summary)
        os << row.levels << "," << fmt(row.margin_bound) << "," << row.n_bucket << ","
           << fmt(row.avg_reduction) << "," << row.count << "\n";
}

}  // namespace mcdm
