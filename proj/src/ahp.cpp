#include "mcdm/ahp.hpp"

#include <algorithm>
#include <map>

namespace mcdm {

AhpModel::AhpModel(std::vector<Matrix> matrices, const Tolerance& tol)
    : matrices_(std::move(matrices)) {
    if (matrices_.size() < 2)
        throw Error(errc::validation_error, "a hierarchy needs at least two matrices");
    if (matrices_.front().cols() != 1)
        throw Error(errc::shape_mismatch,
                    "B_1 must be a single weight column, got " +
                        std::to_string(matrices_.front().cols()) + " columns");
    for (std::size_t i = 0; i < matrices_.size(); ++i) {
        const std::string name = "matrix B_" + std::to_string(i + 1);
        matrices_[i].require_column_stochastic(tol, name);
        if (i == 0) continue;
        const Matrix& prev = matrices_[i - 1];
        if (matrices_[i].cols() != prev.rows())
            throw Error(errc::shape_mismatch,
                        name + " has " + std::to_string(matrices_[i].cols()) +
                            " columns but B_" + std::to_string(i) + " has " +
                            std::to_string(prev.rows()) + " rows");
        if (matrices_[i].col_labels() != prev.row_labels())
            throw Error(errc::validation_error,
                        name + " column labels do not match the row labels of B_" +
                            std::to_string(i));
    }
}

std::size_t AhpModel::leaf_count() const noexcept {
    std::size_t count = 1;
    for (std::size_t i = 0; i + 1 < matrices_.size(); ++i) count *= matrices_[i].rows();
    return count;
}

Priorities synthesize(const AhpModel& model) {
    // Fold the chain left to right: vec starts as B_1's weight column.
    std::vector<double> vec(model.matrix(0).rows());
    for (std::size_t r = 0; r < vec.size(); ++r) vec[r] = model.matrix(0).at(r, 0);
    for (std::size_t i = 1; i < model.size(); ++i) {
        const Matrix& b = model.matrix(i);
        std::vector<double> next(b.rows(), 0.0);
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) next[r] += b.at(r, c) * vec[c];
        vec = std::move(next);
    }
    Priorities out;
    out.reserve(vec.size());
    for (std::size_t r = 0; r < vec.size(); ++r)
        out.emplace_back(model.alternatives()[r], vec[r]);
    return out;
}

VdTree::VdTree(VdNode root) : root_(std::move(root)) {
    if (root_.label.empty())
        throw Error(errc::validation_error, "tree root label must be non-empty");
    std::size_t depth = 1;
    const VdNode* node = &root_;
    while (!node->children.empty()) {
        ++depth;
        node = &node->children.front();
    }
    depth_ = depth;
}

namespace {

// Builds the subtree rooted at row `r` of B_{level+1}, where `factor` is
// the product of the chain entries picked on the path so far and
// `alt_row` fixes the B_n row. Leaves live at level n-2 (B_{n-1} rows).
VdNode build_subtree(const AhpModel& model, std::size_t level, std::size_t r,
                     std::size_t alt_row, double factor) {
    const Matrix& b = model.matrix(level);
    const std::size_t last = model.size() - 2;  // index of B_{n-1}
    VdNode node;
    node.label = b.row_labels()[r];
    if (level == last) {
        node.value = factor * model.matrix(model.size() - 1).at(alt_row, r);
        return node;
    }
    const Matrix& next = model.matrix(level + 1);
    node.children.reserve(next.rows());
    double sum = 0.0;
    for (std::size_t nr = 0; nr < next.rows(); ++nr) {
        VdNode child = build_subtree(model, level + 1, nr, alt_row, factor * next.at(nr, r));
        sum += child.value;
        node.children.push_back(std::move(child));
    }
    node.value = sum;
    return node;
}

void collect_leaves(const VdNode& node, std::vector<Label>& prefix, ValueDecomposition& out) {
    prefix.push_back(node.label);
    if (node.children.empty()) {
        out.add(LabelPath(prefix), node.value);
    } else {
        for (const auto& child : node.children) collect_leaves(child, prefix, out);
    }
    prefix.pop_back();
}

}  // namespace

VdTree build_vd_tree(const AhpModel& model, const Label& alternative) {
    const Matrix& top = model.matrix(model.size() - 1);
    auto alt_row = top.row_index(alternative);
    if (!alt_row)
        throw Error(errc::unknown_alternative, "unknown alternative '" + alternative + "'");

    VdNode root;
    root.label = alternative;
    const Matrix& b1 = model.matrix(0);
    root.children.reserve(b1.rows());
    double sum = 0.0;
    for (std::size_t r = 0; r < b1.rows(); ++r) {
        VdNode child = build_subtree(model, 0, r, *alt_row, b1.at(r, 0));
        sum += child.value;
        root.children.push_back(std::move(child));
    }
    root.value = sum;
    return VdTree(std::move(root));
}

ValueDecomposition flatten(const VdTree& tree) {
    if (tree.root().children.empty())
        throw Error(errc::validation_error, "tree has no levels below the root");
    ValueDecomposition out;
    std::vector<Label> prefix;
    for (const auto& child : tree.root().children) collect_leaves(child, prefix, out);
    return out;
}

VdTree ingest_vd_tree(const ValueDecomposition& leaves, const Label& root_label) {
    if (leaves.empty())
        throw Error(errc::validation_error, "cannot ingest an empty leaf map");
    // Equal path lengths are already enforced by ValueDecomposition; now
    // group leaves into nested sums, keeping canonical label order.
    struct Builder {
        static VdNode build(const Label& label,
                            const std::vector<std::pair<LabelPath, double>>& items,
                            std::size_t depth, std::size_t path_len) {
            VdNode node;
            node.label = label;
            if (depth == path_len) {
                if (items.size() != 1)
                    throw Error(errc::validation_error,
                                "duplicate leaf path '" + items.front().first.str() + "'");
                node.value = items.front().second;
                return node;
            }
            std::map<Label, std::vector<std::pair<LabelPath, double>>> groups;
            for (const auto& item : items)
                groups[item.first.segment(depth)].push_back(item);
            double sum = 0.0;
            for (const auto& [child_label, child_items] : groups) {
                VdNode child = build(child_label, child_items, depth + 1, path_len);
                sum += child.value;
                node.children.push_back(std::move(child));
            }
            node.value = sum;
            return node;
        }
    };

    std::vector<std::pair<LabelPath, double>> items(leaves.begin(), leaves.end());
    const std::size_t path_len = *leaves.path_length();
    return VdTree(Builder::build(root_label, items, 0, path_len));
}

}  // namespace mcdm
