#include "render.hpp"

#include <cmath>
#include <cstdio>

namespace mcdm::render {

namespace {

std::string ratio_suffix(double value, const Style& style) {
    if (!style.log_domain) return "";
    return "  (ratio " + num(std::exp(value)) + ")";
}

}  // namespace

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

void ranking_text(std::ostream& os, const std::vector<RankEntry>& entries,
                  const Style& style) {
    int place = 1;
    for (const auto& e : entries) {
        os << "  " << place++ << ". " << e.label << "  " << num(e.total);
        if (style.log_domain) os << "  (score " << num(std::exp(e.total)) << ")";
        if (e.tied) os << "  [tie]";
        os << "\n";
    }
}

nlohmann::json ranking_json(const std::vector<RankEntry>& entries, const Style& style) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json item = {{"label", e.label}, {"total", e.total}, {"tied", e.tied}};
        if (style.log_domain) item["score"] = std::exp(e.total);
        out.push_back(item);
    }
    return out;
}

void priorities_text(std::ostream& os, const Priorities& priorities) {
    for (const auto& [label, value] : priorities)
        os << "  " << label << "  " << num(value) << "\n";
}

void vd_text(std::ostream& os, const ValueDecomposition& vd, const Style& style,
             const std::string& indent) {
    for (const auto& [path, value] : vd)
        os << indent << path.str() << "  " << num(value) << ratio_suffix(value, style)
           << "\n";
}

nlohmann::json vd_json(const ValueDecomposition& vd) {
    nlohmann::json components = nlohmann::json::array();
    for (const auto& [path, value] : vd)
        components.push_back({{"path", path.segments()}, {"value", value}});
    return {{"components", components}, {"total", vd.total()}};
}

void tree_text(std::ostream& os, const VdNode& node, const Style& style, int depth) {
    for (int i = 0; i < depth; ++i) os << "  ";
    os << node.label << ": " << num(node.value) << ratio_suffix(node.value, style) << "\n";
    for (const auto& child : node.children) tree_text(os, child, style, depth + 1);
}

void explanation_text(std::ostream& os, const Explanation& e, const Style& style) {
    os << "why '" << e.foil.fact << "' rather than '" << e.foil.foil << "'";
    if (e.level) os << " (level " << *e.level << ")";
    os << "\n";

    os << "difference (total " << num(e.difference.total()) << "):\n";
    if (e.difference.path_length().value_or(1) > 1 && !e.level) {
        VdTree tree = ingest_vd_tree(e.difference, e.foil.fact + "-" + e.foil.foil);
        for (const auto& child : tree.root().children) tree_text(os, child, style, 1);
    } else {
        vd_text(os, e.difference, style);
    }

    if (e.total_dominance) {
        os << "barrier: none — '" << e.foil.fact << "' wins on every component\n";
        os << "minimal dominating set: {} (total dominance)\n";
        return;
    }

    os << "barrier (total " << num(e.barrier.total()) << "):\n";
    vd_text(os, e.barrier, style);
    os << "dominator candidates (total " << num(e.candidates.total()) << "):\n";
    vd_text(os, e.candidates, style);
    os << "minimal dominating set (" << e.mds.size() << " of " << e.difference.size()
       << " components, total " << num(e.mds.total()) << " > " << num(-e.barrier.total())
       << "):\n";
    vd_text(os, e.mds, style);

    if (e.all_minimal) {
        os << "all minimal dominators (" << e.all_minimal->size() << "):\n";
        std::size_t i = 1;
        for (const auto& d : *e.all_minimal) {
            os << "  #" << i++ << " (total " << num(d.total()) << ")\n";
            vd_text(os, d, style, "    ");
        }
    }
}

nlohmann::json explanation_json(const Explanation& e, const Style& style) {
    nlohmann::json out = {
        {"fact", e.foil.fact},
        {"foil", e.foil.foil},
        {"difference", vd_json(e.difference)},
        {"barrier", vd_json(e.barrier)},
        {"candidates", vd_json(e.candidates)},
        {"mds", vd_json(e.mds)},
        {"total_dominance", e.total_dominance},
    };
    if (e.level) out["level"] = *e.level;
    if (style.log_domain) out["log_domain"] = true;
    if (e.all_minimal) {
        nlohmann::json all = nlohmann::json::array();
        for (const auto& d : *e.all_minimal) all.push_back(vd_json(d));
        out["all_minimal"] = all;
    }
    return out;
}

}  // namespace mcdm::render
