#ifndef MCDM_EVAL_HPP
#define MCDM_EVAL_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "mcdm/ahp.hpp"

namespace mcdm {

/// Random-instance sweep configuration. An instance is an AHP chain with
/// the given number of hierarchy levels; every dimension is drawn
/// uniformly from [dim_min, dim_max] and the draw is rejected until the
/// per-alternative leaf count fits max_components.
struct GenConfig {
    int levels = 4;  // hierarchy levels, 3..6 (3 is a flat problem)
    /// 0 picks the default: 30 for 3-level models, 100 otherwise.
    std::size_t max_components = 0;
    int dim_min = 2;
    int dim_max = 10;
    std::size_t instances = 1000;
    std::uint64_t seed = 1;
    std::vector<double> margins = {1, 5, 10, 20, 30};  // cumulative bounds, percent

    std::size_t resolved_max_components() const {
        if (max_components != 0) return max_components;
        return levels == 3 ? 30 : 100;
    }
    void validate() const;
};

struct EvalRecord {
    std::size_t instance_id = 0;
    int levels = 0;
    std::size_t n = 0;        // leaf components per value decomposition
    double margin_pct = 0.0;  // decision margin of the top two priorities
    std::size_t m = 0;        // full-depth MDS size (0 = total dominance)
    double reduction_pct = 0.0;
    /// Focused explanation size per hierarchy level (level, mds size).
    std::vector<std::pair<int, std::size_t>> level_sizes;
};

struct SummaryRow {
    int levels = 0;
    double margin_bound = 0.0;
    std::size_t n_bucket = 0;  // exact component count; 0 = all sizes pooled
    double avg_reduction = 0.0;
    std::size_t count = 0;
};

struct SweepResult {
    GenConfig config;
    std::vector<EvalRecord> records;
    std::vector<SummaryRow> summary;
};

/// Deterministic instance generator: the model depends only on
/// (cfg.seed, instance_index), independent of call order.
AhpModel generate(const GenConfig& cfg, std::size_t instance_index);

/// Relative gap of the top two priorities, in percent of the winner.
double decision_margin(const Priorities& priorities);

/// Percentage size reduction of a focused explanation over the
/// full-depth minimal dominating set; negative when focusing loses.
double single_level_improvement(std::size_t mds_size, std::size_t focused_size);

/// For every instance: synthesize, take the top two alternatives,
/// compute the full-depth and per-level minimal dominating sets, and the
/// MDS reduction (1 - m/n) * 100. Summary rows pool records whose margin
/// is within each configured bound.
SweepResult run_sweep(const GenConfig& cfg);

/// One row per (instance, focused level) plus a level-0 row for the full
/// depth. Byte-identical for identical configurations.
void write_records_csv(std::ostream& os, const SweepResult& result);
void write_summary_csv(std::ostream& os, const SweepResult& result);

}  // namespace mcdm

#endif  // MCDM_EVAL_HPP
