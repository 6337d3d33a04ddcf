#ifndef MCDM_TOOLS_RENDER_HPP
#define MCDM_TOOLS_RENDER_HPP

#include <ostream>
#include <string>

#include "json.hpp"
#include "mcdm/ahp.hpp"
#include "mcdm/explain.hpp"
#include "mcdm/linear.hpp"

namespace mcdm::render {

/// Fixed 4-decimal rendering for reports; machine output keeps full
/// precision via JSON.
std::string num(double v);

/// True when the valuation lives in log domain (weighted product
/// method); reports then add the multiplicative ratio exp(value).
struct Style {
    bool log_domain = false;
};

void ranking_text(std::ostream& os, const std::vector<RankEntry>& entries, const Style& style);
nlohmann::json ranking_json(const std::vector<RankEntry>& entries, const Style& style);

void priorities_text(std::ostream& os, const Priorities& priorities);

void vd_text(std::ostream& os, const ValueDecomposition& vd, const Style& style,
             const std::string& indent = "  ");
nlohmann::json vd_json(const ValueDecomposition& vd);

/// Nested tree view of a hierarchical decomposition, internal sums included.
void tree_text(std::ostream& os, const VdNode& node, const Style& style, int depth = 0);

void explanation_text(std::ostream& os, const Explanation& e, const Style& style);
nlohmann::json explanation_json(const Explanation& e, const Style& style);

}  // namespace mcdm::render

#endif  // MCDM_TOOLS_RENDER_HPP
