#ifndef MCDM_AHP_HPP
#define MCDM_AHP_HPP

#include <utility>
#include <vector>

#include "mcdm/core.hpp"

namespace mcdm {

/// Ordered chain of column-stochastic decision matrices B_1..B_n. B_1 is
/// a weight column vector; for each later matrix the column labels equal
/// the row labels of its predecessor, so the chain product
/// W = B_n B_{n-1} ... B_1 is well formed. Validated on construction.
class AhpModel {
  public:
    explicit AhpModel(std::vector<Matrix> matrices, const Tolerance& tol = {});

    /// Number of matrices in the chain (n).
    std::size_t size() const noexcept { return matrices_.size(); }
    /// B_{index+1}; index 0 is the weight vector B_1.
    const Matrix& matrix(std::size_t index) const { return matrices_.at(index); }
    const std::vector<Matrix>& matrices() const noexcept { return matrices_; }

    /// Row labels of B_n: the alternatives being ranked.
    const std::vector<Label>& alternatives() const noexcept {
        return matrices_.back().row_labels();
    }

    /// Leaves per value decomposition tree: product of the row counts of
    /// B_1..B_{n-1}.
    std::size_t leaf_count() const noexcept;

  private:
    std::vector<Matrix> matrices_;
};

using Priorities = std::vector<std::pair<Label, double>>;

/// Synthesis of priorities: the chain product B_n ... B_1, returned in
/// B_n row order. Entries sum to 1 for a valid model.
Priorities synthesize(const AhpModel& model);

struct VdNode {
    Label label;
    double value = 0.0;
    std::vector<VdNode> children;  // empty for leaves
};

/// Per-alternative trace of the priority synthesis: each leaf carries one
/// product term of the chain product, each internal node the sum of its
/// children, and the root the alternative's priority. Root-to-leaf paths
/// are labeled by row labels drawn from B_n, B_1, ..., B_{n-1} in order.
class VdTree {
  public:
    explicit VdTree(VdNode root);

    const VdNode& root() const noexcept { return root_; }
    const Label& root_label() const noexcept { return root_.label; }
    double root_value() const noexcept { return root_.value; }
    /// Number of node levels, root included.
    std::size_t depth() const noexcept { return depth_; }

  private:
    VdNode root_;
    std::size_t depth_ = 1;
};

/// Materialize the value decomposition tree for one alternative (a row
/// label of B_n).
VdTree build_vd_tree(const AhpModel& model, const Label& alternative);

/// Root-path-labeled leaves of a tree, with the shared root label
/// dropped. The map total equals the root value.
ValueDecomposition flatten(const VdTree& tree);

/// Rebuild a tree from its flattened leaf map by summing upward. Used to
/// ingest externally provided synthesis traces when the underlying
/// matrices are not available.
VdTree ingest_vd_tree(const ValueDecomposition& leaves, const Label& root_label);

}  // namespace mcdm

#endif  // MCDM_AHP_HPP
