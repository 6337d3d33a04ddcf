#include "mcdm/linear.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace mcdm {

namespace {

std::string cell_name(const DecisionProblem& p, std::size_t j, std::size_t i) {
    return "attribute '" + p.attributes()[i].label + "', alternative '" +
           p.alternatives()[j] + "'";
}

}  // namespace

DecisionProblem::DecisionProblem(std::vector<AttributeSpec> attributes,
                                 std::vector<Label> alternatives,
                                 std::vector<double> raw_values, const Tolerance& tol)
    : attributes_(std::move(attributes)), alternatives_(std::move(alternatives)),
      raw_(std::move(raw_values)) {
    if (attributes_.empty())
        throw Error(errc::validation_error, "decision problem needs at least one attribute");
    if (alternatives_.size() < 2)
        throw Error(errc::validation_error, "decision problem needs at least two alternatives");
    if (raw_.size() != attributes_.size() * alternatives_.size())
        throw Error(errc::shape_mismatch,
                    "raw value count " + std::to_string(raw_.size()) + " does not match " +
                        std::to_string(alternatives_.size()) + "x" +
                        std::to_string(attributes_.size()));

    double weight_sum = 0.0;
    for (const auto& a : attributes_) {
        if (a.label.empty())
            throw Error(errc::validation_error, "empty attribute label");
        if (a.weight <= 0.0 || a.weight > 1.0)
            throw Error(errc::validation_error,
                        "attribute '" + a.label + "' weight " + std::to_string(a.weight) +
                            " outside (0,1]");
        weight_sum += a.weight;
    }
    if (std::abs(weight_sum - 1.0) > tol.stochastic_eps) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "attribute weights sum to " << weight_sum << ", expected 1 within "
            << tol.stochastic_eps;
        throw Error(errc::validation_error, msg.str());
    }

    std::vector<Label> attr_labels;
    attr_labels.reserve(attributes_.size());
    for (const auto& a : attributes_) attr_labels.push_back(a.label);
    // Matrix construction re-checks label uniqueness on both sides.
    Matrix(alternatives_.size(), attributes_.size(), raw_, alternatives_, attr_labels);
}

double DecisionProblem::raw(std::size_t alternative, std::size_t attribute) const {
    if (alternative >= alternatives_.size() || attribute >= attributes_.size())
        throw Error(errc::shape_mismatch, "raw value index out of range");
    return raw_[alternative * attributes_.size() + attribute];
}

Matrix normalize(const DecisionProblem& p) {
    const std::size_t m = p.alternative_count();
    const std::size_t n = p.attribute_count();
    std::vector<double> out(m * n, 0.0);

    for (std::size_t i = 0; i < n; ++i) {
        const auto& attr = p.attributes()[i];
        if (attr.polarity == Polarity::beneficial) {
            double best = -std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < m; ++j) best = std::max(best, p.raw(j, i));
            if (best <= 0.0)
                throw Error(errc::non_positive_value,
                            "beneficial attribute '" + attr.label +
                                "' has no strictly positive value");
            for (std::size_t j = 0; j < m; ++j) {
                double v = p.raw(j, i);
                if (v < 0.0)
                    throw Error(errc::non_positive_value,
                                "negative value at " + cell_name(p, j, i));
                out[j * n + i] = v / best;
            }
        } else {
            double least = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < m; ++j) {
                double v = p.raw(j, i);
                if (v <= 0.0)
                    throw Error(errc::non_positive_value,
                                "non-positive value at " + cell_name(p, j, i));
                least = std::min(least, v);
            }
            for (std::size_t j = 0; j < m; ++j) out[j * n + i] = least / p.raw(j, i);
        }
    }

    std::vector<Label> attr_labels;
    attr_labels.reserve(n);
    for (const auto& a : p.attributes()) attr_labels.push_back(a.label);
    return Matrix(m, n, std::move(out), p.alternatives(), attr_labels);
}

Valuation wsm_decompose(const DecisionProblem& p) {
    Matrix norm = normalize(p);
    Valuation out;
    for (std::size_t j = 0; j < p.alternative_count(); ++j) {
        ValueDecomposition vd;
        for (std::size_t i = 0; i < p.attribute_count(); ++i)
            vd.add(LabelPath{p.attributes()[i].label},
                   p.attributes()[i].weight * norm.at(j, i));
        out.emplace(p.alternatives()[j], std::move(vd));
    }
    return out;
}

Valuation wpm_decompose(const DecisionProblem& p) {
    Matrix norm = normalize(p);
    Valuation out;
    for (std::size_t j = 0; j < p.alternative_count(); ++j) {
        ValueDecomposition vd;
        for (std::size_t i = 0; i < p.attribute_count(); ++i) {
            double v = norm.at(j, i);
            if (v <= 0.0)
                throw Error(errc::non_positive_value,
                            "normalized value is not positive at " + cell_name(p, j, i) +
                                "; the product method needs strictly positive values");
            vd.add(LabelPath{p.attributes()[i].label}, p.attributes()[i].weight * std::log(v));
        }
        out.emplace(p.alternatives()[j], std::move(vd));
    }
    return out;
}

std::vector<RankEntry> rank(const Valuation& decomposition) {
    if (decomposition.empty())
        throw Error(errc::validation_error, "cannot rank an empty valuation");
    std::vector<RankEntry> out;
    out.reserve(decomposition.size());
    for (const auto& [label, vd] : decomposition)
        out.push_back(RankEntry{label, vd.total(), false});
    // Valuation iterates label-ascending, so a stable sort on the total
    // alone leaves exact ties in lexicographic order.
    std::stable_sort(out.begin(), out.end(),
                     [](const RankEntry& a, const RankEntry& b) { return a.total > b.total; });
    for (std::size_t k = 0; k + 1 < out.size(); ++k) {
        if (out[k].total == out[k + 1].total) {
            out[k].tied = true;
            out[k + 1].tied = true;
        }
    }
    return out;
}

}  // namespace mcdm
