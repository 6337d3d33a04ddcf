#ifndef MCDM_LINEAR_HPP
#define MCDM_LINEAR_HPP

#include <vector>

#include "mcdm/core.hpp"

namespace mcdm {

/// Whether larger raw values help (benefit) or hurt (cost) an alternative.
enum class Polarity { beneficial, detrimental };

struct AttributeSpec {
    Label label;
    double weight = 0.0;  // in (0,1]; weights of a problem sum to 1
    Polarity polarity = Polarity::beneficial;
};

/// A flat decision problem: m alternatives scored on n weighted
/// attributes, raw values in each attribute's native units.
class DecisionProblem {
  public:
    DecisionProblem(std::vector<AttributeSpec> attributes, std::vector<Label> alternatives,
                    std::vector<double> raw_values,  // m x n row-major
                    const Tolerance& tol = {});

    std::size_t attribute_count() const noexcept { return attributes_.size(); }
    std::size_t alternative_count() const noexcept { return alternatives_.size(); }
    const std::vector<AttributeSpec>& attributes() const noexcept { return attributes_; }
    const std::vector<Label>& alternatives() const noexcept { return alternatives_; }
    double raw(std::size_t alternative, std::size_t attribute) const;

  private:
    std::vector<AttributeSpec> attributes_;
    std::vector<Label> alternatives_;
    std::vector<double> raw_;
};

/// Scale raw values to comparable unitless scores: value/max for
/// beneficial attributes, min/value for detrimental ones. The result
/// carries alternatives as rows and attributes as columns.
Matrix normalize(const DecisionProblem& p);

/// Weighted-sum contributions: component of attribute i for alternative
/// j is w_i * normalized(j,i); the total is the WSM score.
Valuation wsm_decompose(const DecisionProblem& p);

/// Weighted-product contributions in log domain: component is
/// w_i * ln(normalized(j,i)), so totals add and exp(total) recovers the
/// multiplicative WPM score. Requires strictly positive normalized values.
Valuation wpm_decompose(const DecisionProblem& p);

struct RankEntry {
    Label label;
    double total = 0.0;
    bool tied = false;  // shares its exact total with a neighbor
};

/// Order alternatives by descending total; equal totals are flagged and
/// broken lexicographically by label.
std::vector<RankEntry> rank(const Valuation& decomposition);

}  // namespace mcdm

#endif  // MCDM_LINEAR_HPP
