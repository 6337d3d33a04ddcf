#ifndef MCDM_EXPLAIN_HPP
#define MCDM_EXPLAIN_HPP

#include <optional>
#include <vector>

#include "mcdm/core.hpp"

namespace mcdm {

/// A contrastive question: why was `fact` chosen over `foil`?
struct Foil {
    Label fact;
    Label foil;
};

/// Everything needed to answer a contrastive question at one granularity:
/// the component-wise difference, its negative side (barrier), its
/// positive side (dominator candidates), and a smallest candidate subset
/// whose total strictly exceeds the absolute barrier total.
struct Explanation {
    Foil foil;
    std::optional<int> level;  // absent = full-depth components
    ValueDecomposition difference;
    ValueDecomposition barrier;
    ValueDecomposition candidates;
    ValueDecomposition mds;
    /// True when the barrier is empty: the fact wins on every component
    /// and the minimal dominating set is empty.
    bool total_dominance = false;
    std::optional<std::vector<ValueDecomposition>> all_minimal;
};

/// Components of `delta` below -zero_eps. Values inside the zero band
/// belong to neither the barrier nor the candidates.
ValueDecomposition barrier(const ValueDecomposition& delta, const Tolerance& tol = {});

/// Components of `delta` above +zero_eps.
ValueDecomposition dominator_candidates(const ValueDecomposition& delta,
                                        const Tolerance& tol = {});

/// Canonical minimal dominating set: picked greedily by descending
/// component value (ties by path order) until the running total strictly
/// exceeds the absolute barrier total. Empty with total dominance.
/// Requires vd_total(delta) > 0.
ValueDecomposition mds(const ValueDecomposition& delta, const Tolerance& tol = {});

/// Every subset of the dominator candidates whose total strictly exceeds
/// the absolute barrier total, in canonical order (cardinality, then
/// paths), truncated to `cap` entries. Exhaustive: candidate count <= 25.
std::vector<ValueDecomposition> dominators(const ValueDecomposition& delta,
                                           const Tolerance& tol = {},
                                           std::size_t cap = 64);

/// All dominators of minimal cardinality, canonical order, up to `cap`.
/// With total dominance this is the single empty set.
std::vector<ValueDecomposition> all_minimal_dominators(const ValueDecomposition& delta,
                                                       const Tolerance& tol = {},
                                                       std::size_t cap = 64);

/// Aggregate components onto the labels of one hierarchy level. Level 2
/// is the first path segment, level k+1 the last segment of length-k
/// paths. Totals are preserved.
ValueDecomposition project(const ValueDecomposition& v, int level);

/// Component-wise difference of the two named decompositions of a
/// valuation. Requires distinct, known labels with equal key sets.
ValueDecomposition difference(const Valuation& valuation, const Foil& foil);

/// Full-depth explanation for a foil pair. Requires the fact's total to
/// strictly exceed the foil's. `with_all` also enumerates all minimal
/// dominators (subject to the exhaustive candidate bound).
Explanation explain(const Valuation& valuation, const Foil& foil, const Tolerance& tol = {},
                    bool with_all = false, std::size_t cap = 64);

/// Explanation focused on a single hierarchy level, built from the
/// level-projected difference.
Explanation focused_explanation(const Valuation& valuation, const Foil& foil, int level,
                                const Tolerance& tol = {}, bool with_all = false,
                                std::size_t cap = 64);

/// Explanation over an externally supplied difference decomposition
/// (e.g. an ingested synthesis trace of fact minus foil).
Explanation explain_difference(ValueDecomposition delta, const Foil& foil,
                               std::optional<int> level, const Tolerance& tol = {},
                               bool with_all = false, std::size_t cap = 64);

}  // namespace mcdm

#endif  // MCDM_EXPLAIN_HPP
