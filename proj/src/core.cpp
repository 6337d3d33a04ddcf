#include "mcdm/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace mcdm {

LabelPath::LabelPath(std::vector<Label> segments) : segments_(std::move(segments)) {
    if (segments_.empty())
        throw Error(errc::validation_error, "label path must have at least one segment");
    for (const auto& s : segments_)
        if (s.empty())
            throw Error(errc::validation_error, "label path contains an empty segment");
}

LabelPath::LabelPath(std::initializer_list<Label> segments)
    : LabelPath(std::vector<Label>(segments)) {}

std::string LabelPath::str() const {
    std::string out;
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        if (i) out += '/';
        out += segments_[i];
    }
    return out;
}

ValueDecomposition::ValueDecomposition(
    std::initializer_list<std::pair<LabelPath, double>> items) {
    for (const auto& [path, value] : items) add(path, value);
}

void ValueDecomposition::add(LabelPath path, double value) {
    if (path_length_ && *path_length_ != path.size())
        throw Error(errc::ragged_paths,
                    "component path '" + path.str() + "' has length " +
                        std::to_string(path.size()) + ", expected " +
                        std::to_string(*path_length_));
    auto [it, inserted] = components_.emplace(std::move(path), value);
    if (!inserted)
        throw Error(errc::validation_error,
                    "duplicate component path '" + it->first.str() + "'");
    path_length_ = it->first.size();
}

double ValueDecomposition::at(const LabelPath& path) const {
    auto it = components_.find(path);
    if (it == components_.end())
        throw Error(errc::key_mismatch, "no component at path '" + path.str() + "'");
    return it->second;
}

double ValueDecomposition::total() const noexcept {
    double sum = 0.0;
    for (const auto& [path, value] : components_) sum += value;
    return sum;
}

double vd_total(const ValueDecomposition& v) noexcept { return v.total(); }

ValueDecomposition vd_subtract(const ValueDecomposition& x, const ValueDecomposition& y) {
    if (x.size() != y.size())
        throw Error(errc::key_mismatch,
                    "component sets differ in size: " + std::to_string(x.size()) +
                        " vs " + std::to_string(y.size()));
    ValueDecomposition out;
    auto xi = x.begin();
    auto yi = y.begin();
    for (; xi != x.end(); ++xi, ++yi) {
        if (xi->first != yi->first)
            throw Error(errc::key_mismatch,
                        "component sets differ at path '" + xi->first.str() + "' vs '" +
                            yi->first.str() + "'");
        out.add(xi->first, xi->second - yi->second);
    }
    return out;
}

namespace {

void require_unique_labels(const std::vector<Label>& labels, const char* side) {
    std::set<Label> seen;
    for (const auto& l : labels) {
        if (l.empty())
            throw Error(errc::validation_error, std::string("empty ") + side + " label");
        if (!seen.insert(l).second)
            throw Error(errc::validation_error,
                        std::string("duplicate ") + side + " label '" + l + "'");
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries,
               std::vector<Label> row_labels, std::vector<Label> col_labels)
    : rows_(rows), cols_(cols), entries_(std::move(entries)),
      row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
    if (rows_ == 0 || cols_ == 0)
        throw Error(errc::shape_mismatch, "matrix must have at least one row and column");
    if (entries_.size() != rows_ * cols_)
        throw Error(errc::shape_mismatch,
                    "matrix entry count " + std::to_string(entries_.size()) +
                        " does not match " + std::to_string(rows_) + "x" +
                        std::to_string(cols_));
    if (row_labels_.size() != rows_ || col_labels_.size() != cols_)
        throw Error(errc::shape_mismatch, "label count does not match matrix shape");
    require_unique_labels(row_labels_, "row");
    require_unique_labels(col_labels_, "column");
}

double Matrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw Error(errc::shape_mismatch,
                    "index (" + std::to_string(r) + "," + std::to_string(c) +
                        ") out of range for " + std::to_string(rows_) + "x" +
                        std::to_string(cols_) + " matrix");
    return entries_[r * cols_ + c];
}

std::optional<std::size_t> Matrix::row_index(const Label& label) const {
    auto it = std::find(row_labels_.begin(), row_labels_.end(), label);
    if (it == row_labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - row_labels_.begin());
}

void Matrix::require_column_stochastic(const Tolerance& tol,
                                       const std::string& context) const {
    for (std::size_t c = 0; c < cols_; ++c) {
        double sum = 0.0;
        for (std::size_t r = 0; r < rows_; ++r) {
            double v = entries_[r * cols_ + c];
            if (v < 0.0)
                throw Error(errc::not_column_stochastic,
                            context + ": negative entry " + std::to_string(v) +
                                " at row '" + row_labels_[r] + "', column '" +
                                col_labels_[c] + "'");
            sum += v;
        }
        if (std::abs(sum - 1.0) > tol.stochastic_eps) {
            std::ostringstream msg;
            msg.precision(12);
            msg << context << ": column '" << col_labels_[c] << "' sums to " << sum
                << ", expected 1 within " << tol.stochastic_eps;
            throw Error(errc::not_column_stochastic, msg.str());
        }
    }
}

}  // namespace mcdm
