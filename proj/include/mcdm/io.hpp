#ifndef MCDM_IO_HPP
#define MCDM_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcdm/ahp.hpp"
#include "mcdm/explain.hpp"
#include "mcdm/linear.hpp"

namespace mcdm {

/// One tree of a synthesis trace file. When `contrast` is set the leaves
/// already hold a fact-minus-foil difference; otherwise they decompose a
/// single alternative named by `root`.
struct TraceEntry {
    Label root;
    std::optional<Foil> contrast;
    ValueDecomposition leaves;
};

struct TraceSet {
    std::vector<TraceEntry> trees;
};

using Problem = std::variant<DecisionProblem, AhpModel, TraceSet>;

/// Parse and validate a problem file. The schema is JSON with a
/// top-level "kind" of "linear", "ahp", or "vd-trace"; all model
/// invariants are checked here, with errors naming the origin.
Problem parse_problem(const std::string& text, const std::string& origin);
Problem load_problem(const std::filesystem::path& path);

/// Serialize back to the schema accepted by parse_problem. Lossless:
/// dump-then-parse reproduces the same model.
std::string dump_problem(const Problem& problem);

const char* kind_name(const Problem& problem);

}  // namespace mcdm

#endif  // MCDM_IO_HPP
