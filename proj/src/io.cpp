#include "mcdm/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mcdm {

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, const std::string& origin) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw Error(errc::validation_error, origin + ": missing field '" + key + "'");
    return *it;
}

std::vector<Label> parse_labels(const json& arr, const std::string& origin) {
    if (!arr.is_array())
        throw Error(errc::validation_error, origin + ": expected an array of labels");
    std::vector<Label> out;
    out.reserve(arr.size());
    for (const auto& l : arr) {
        if (!l.is_string())
            throw Error(errc::validation_error, origin + ": labels must be strings");
        out.push_back(l.get<Label>());
    }
    return out;
}

DecisionProblem parse_linear(const json& j, const std::string& origin) {
    std::vector<AttributeSpec> attributes;
    for (const auto& a : require(j, "attributes", origin)) {
        AttributeSpec spec;
        spec.label = require(a, "label", origin).get<Label>();
        spec.weight = require(a, "weight", origin).get<double>();
        const std::string polarity = require(a, "polarity", origin).get<std::string>();
        if (polarity == "beneficial")
            spec.polarity = Polarity::beneficial;
        else if (polarity == "detrimental")
            spec.polarity = Polarity::detrimental;
        else
            throw Error(errc::validation_error,
                        origin + ": attribute '" + spec.label + "' polarity must be " +
                            "'beneficial' or 'detrimental', got '" + polarity + "'");
        attributes.push_back(std::move(spec));
    }

    std::vector<Label> alternatives;
    std::vector<double> raw;
    for (const auto& alt : require(j, "alternatives", origin)) {
        alternatives.push_back(require(alt, "label", origin).get<Label>());
        const json& values = require(alt, "values", origin);
        if (values.size() != attributes.size())
            throw Error(errc::validation_error,
                        origin + ": alternative '" + alternatives.back() + "' has " +
                            std::to_string(values.size()) + " values, expected " +
                            std::to_string(attributes.size()));
        for (const auto& v : values) raw.push_back(v.get<double>());
    }
    return DecisionProblem(std::move(attributes), std::move(alternatives), std::move(raw));
}

AhpModel parse_ahp(const json& j, const std::string& origin) {
    std::vector<Matrix> matrices;
    std::size_t index = 1;
    for (const auto& m : require(j, "matrices", origin)) {
        const std::string where = origin + ": matrix B_" + std::to_string(index);
        std::vector<Label> rows = parse_labels(require(m, "rows", origin), where);
        std::vector<Label> cols = parse_labels(require(m, "cols", origin), where);
        const json& entries = require(m, "entries", origin);
        std::vector<double> values;
        values.reserve(rows.size() * cols.size());
        if (entries.size() != rows.size())
            throw Error(errc::validation_error,
                        where + ": expected " + std::to_string(rows.size()) + " entry rows");
        for (const auto& row : entries) {
            if (row.size() != cols.size())
                throw Error(errc::validation_error,
                            where + ": entry row width " + std::to_string(row.size()) +
                                " does not match " + std::to_string(cols.size()) +
                                " columns");
            for (const auto& v : row) values.push_back(v.get<double>());
        }
        matrices.emplace_back(rows.size(), cols.size(), std::move(values), std::move(rows),
                              std::move(cols));
        ++index;
    }
    try {
        return AhpModel(std::move(matrices));
    } catch (const Error& e) {
        throw Error(e.code(), origin + ": " + e.what());
    }
}

TraceSet parse_trace(const json& j, const std::string& origin) {
    TraceSet set;
    for (const auto& t : require(j, "trees", origin)) {
        TraceEntry entry;
        entry.root = require(t, "root", origin).get<Label>();
        const bool has_fact = t.contains("fact");
        const bool has_foil = t.contains("foil");
        if (has_fact != has_foil)
            throw Error(errc::validation_error,
                        origin + ": tree '" + entry.root +
                            "' must carry both 'fact' and 'foil' or neither");
        if (has_fact)
            entry.contrast = Foil{t.at("fact").get<Label>(), t.at("foil").get<Label>()};
        for (const auto& leaf : require(t, "leaves", origin)) {
            LabelPath path(parse_labels(require(leaf, "path", origin), origin));
            try {
                entry.leaves.add(std::move(path), require(leaf, "value", origin).get<double>());
            } catch (const Error& e) {
                throw Error(e.code(), origin + ": tree '" + entry.root + "': " + e.what());
            }
        }
        if (entry.leaves.empty())
            throw Error(errc::validation_error,
                        origin + ": tree '" + entry.root + "' has no leaves");
        set.trees.push_back(std::move(entry));
    }
    if (set.trees.empty())
        throw Error(errc::validation_error, origin + ": no trees in trace");
    return set;
}

json labels_json(const std::vector<Label>& labels) {
    return json(labels);
}

json to_json(const DecisionProblem& p) {
    json attributes = json::array();
    for (const auto& a : p.attributes())
        attributes.push_back(
            {{"label", a.label},
             {"weight", a.weight},
             {"polarity", a.polarity == Polarity::beneficial ? "beneficial" : "detrimental"}});
    json alternatives = json::array();
    for (std::size_t j = 0; j < p.alternative_count(); ++j) {
        json values = json::array();
        for (std::size_t i = 0; i < p.attribute_count(); ++i) values.push_back(p.raw(j, i));
        alternatives.push_back({{"label", p.alternatives()[j]}, {"values", values}});
    }
    return {{"kind", "linear"}, {"attributes", attributes}, {"alternatives", alternatives}};
}

json to_json(const AhpModel& model) {
    json matrices = json::array();
    for (const auto& m : model.matrices()) {
        json entries = json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
            entries.push_back(row);
        }
        matrices.push_back({{"rows", labels_json(m.row_labels())},
                            {"cols", labels_json(m.col_labels())},
                            {"entries", entries}});
    }
    return {{"kind", "ahp"}, {"matrices", matrices}};
}

json to_json(const TraceSet& set) {
    json trees = json::array();
    for (const auto& t : set.trees) {
        json leaves = json::array();
        for (const auto& [path, value] : t.leaves)
            leaves.push_back({{"path", labels_json(path.segments())}, {"value", value}});
        json tree = {{"root", t.root}, {"leaves", leaves}};
        if (t.contrast) {
            tree["fact"] = t.contrast->fact;
            tree["foil"] = t.contrast->foil;
        }
        trees.push_back(tree);
    }
    return {{"kind", "vd-trace"}, {"trees", trees}};
}

}  // namespace

Problem parse_problem(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(errc::parse_error, origin + ": " + e.what());
    }
    try {
        if (!j.is_object())
            throw Error(errc::validation_error, origin + ": top level must be an object");
        const std::string kind = require(j, "kind", origin).get<std::string>();
        if (kind == "linear") return parse_linear(j, origin);
        if (kind == "ahp") return parse_ahp(j, origin);
        if (kind == "vd-trace") return parse_trace(j, origin);
        throw Error(errc::validation_error,
                    origin + ": unknown kind '" + kind +
                        "', expected 'linear', 'ahp', or 'vd-trace'");
    } catch (const json::exception& e) {
        throw Error(errc::validation_error, origin + ": " + e.what());
    }
}

Problem load_problem(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(errc::parse_error, "cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem(buffer.str(), path.filename().string());
}

std::string dump_problem(const Problem& problem) {
    json j = std::visit([](const auto& p) { return to_json(p); }, problem);
    return j.dump(2) + "\n";
}

const char* kind_name(const Problem& problem) {
    switch (problem.index()) {
        case 0: return "linear";
        case 1: return "ahp";
        default: return "vd-trace";
    }
}

}  // namespace mcdm
