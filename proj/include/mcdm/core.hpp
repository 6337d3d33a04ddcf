#ifndef MCDM_CORE_HPP
#define MCDM_CORE_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcdm/errors.hpp"

namespace mcdm {

/// Row/column/node identifier. Must be non-empty; uniqueness among
/// siblings is enforced where labels are grouped (Matrix, VdTree).
using Label = std::string;

struct Tolerance {
    /// Band inside which a difference component counts as zero.
    double zero_eps = 1e-12;
    /// Allowed deviation of a column sum from 1.
    double stochastic_eps = 1e-9;
};

/// Sequence of labels identifying one component of a (possibly
/// hierarchical) value decomposition. Ordering is lexicographic by
/// segment text, level-major, which fixes the canonical output order.
class LabelPath {
  public:
    LabelPath() = default;
    explicit LabelPath(std::vector<Label> segments);
    LabelPath(std::initializer_list<Label> segments);

    const std::vector<Label>& segments() const noexcept { return segments_; }
    std::size_t size() const noexcept { return segments_.size(); }
    const Label& segment(std::size_t i) const { return segments_.at(i); }
    const Label& front() const { return segments_.front(); }
    const Label& back() const { return segments_.back(); }

    /// Render as "a/b/c" for messages and reports.
    std::string str() const;

    auto operator<=>(const LabelPath&) const = default;

  private:
    std::vector<Label> segments_;
};

/// Finite map from component paths to signed contributions. All keys
/// carry paths of equal length; mixing lengths is a ragged-paths error.
class ValueDecomposition {
  public:
    using Map = std::map<LabelPath, double>;
    using const_iterator = Map::const_iterator;

    ValueDecomposition() = default;
    ValueDecomposition(std::initializer_list<std::pair<LabelPath, double>> items);

    /// Insert a new component; duplicate keys are a validation error.
    void add(LabelPath path, double value);

    bool contains(const LabelPath& path) const { return components_.count(path) != 0; }
    double at(const LabelPath& path) const;
    std::size_t size() const noexcept { return components_.size(); }
    bool empty() const noexcept { return components_.empty(); }
    /// Common length of all stored paths; empty when no components.
    std::optional<std::size_t> path_length() const noexcept { return path_length_; }

    const_iterator begin() const noexcept { return components_.begin(); }
    const_iterator end() const noexcept { return components_.end(); }
    const Map& components() const noexcept { return components_; }

    /// Sum of all contributions, accumulated in canonical key order.
    double total() const noexcept;

    bool operator==(const ValueDecomposition&) const = default;

  private:
    Map components_;
    std::optional<std::size_t> path_length_;
};

double vd_total(const ValueDecomposition& v) noexcept;

/// Per-key difference x - y. Requires identical key sets.
ValueDecomposition vd_subtract(const ValueDecomposition& x, const ValueDecomposition& y);

/// Maps each element of a choice set to its value decomposition.
using Valuation = std::map<Label, ValueDecomposition>;

/// Dense labeled matrix, row-major. Labels are validated to be
/// non-empty and unique within their side.
class Matrix {
  public:
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries,
           std::vector<Label> row_labels, std::vector<Label> col_labels);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double at(std::size_t r, std::size_t c) const;
    const std::vector<Label>& row_labels() const noexcept { return row_labels_; }
    const std::vector<Label>& col_labels() const noexcept { return col_labels_; }
    const std::vector<double>& entries() const noexcept { return entries_; }

    /// Index of the row carrying `label`, if any.
    std::optional<std::size_t> row_index(const Label& label) const;

    /// Enforce the AHP decision-matrix shape: all entries >= 0 and every
    /// column summing to 1 within tol.stochastic_eps. `context` names the
    /// matrix in error messages. Values are never renormalized.
    void require_column_stochastic(const Tolerance& tol, const std::string& context) const;

    bool operator==(const Matrix&) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
    std::vector<Label> row_labels_;
    std::vector<Label> col_labels_;
};

}  // namespace mcdm

#endif  // MCDM_CORE_HPP
