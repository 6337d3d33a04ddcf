#include "mcdm/explain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mcdm {

ValueDecomposition barrier(const ValueDecomposition& delta, const Tolerance& tol) {
    ValueDecomposition out;
    for (const auto& [path, value] : delta)
        if (value < -tol.zero_eps) out.add(path, value);
    return out;
}

ValueDecomposition dominator_candidates(const ValueDecomposition& delta,
                                        const Tolerance& tol) {
    ValueDecomposition out;
    for (const auto& [path, value] : delta)
        if (value > tol.zero_eps) out.add(path, value);
    return out;
}

namespace {

// Candidates ordered for the greedy pick: by descending value, ties by
// canonical path order.
std::vector<std::pair<LabelPath, double>> ordered_candidates(
    const ValueDecomposition& candidates) {
    std::vector<std::pair<LabelPath, double>> out(candidates.begin(), candidates.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return out;
}

void require_winner(const ValueDecomposition& delta, const char* what) {
    if (!(vd_total(delta) > 0.0))
        throw Error(errc::not_a_winner,
                    std::string(what) + ": the difference total is not positive");
}

// Lexicographic combination enumeration over candidate indices, calling
// `emit` for every subset of the given cardinality whose value total
// strictly exceeds `threshold`. Returns false when `emit` says stop.
template <typename Emit>
bool for_each_dominator_of_size(const std::vector<std::pair<LabelPath, double>>& cands,
                                std::size_t cardinality, double threshold, Emit&& emit) {
    const std::size_t k = cands.size();
    if (cardinality == 0 || cardinality > k) return true;
    std::vector<std::size_t> idx(cardinality);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        double sum = 0.0;
        for (std::size_t i : idx) sum += cands[i].second;
        if (sum > threshold) {
            if (!emit(idx)) return false;
        }
        // advance to the next combination
        std::size_t pos = cardinality;
        while (pos > 0 && idx[pos - 1] == k - cardinality + (pos - 1)) --pos;
        if (pos == 0) return true;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < cardinality; ++j) idx[j] = idx[j - 1] + 1;
    }
}

constexpr std::size_t kExhaustiveCandidateBound = 25;

std::vector<std::pair<LabelPath, double>> bounded_canonical_candidates(
    const ValueDecomposition& delta, const Tolerance& tol) {
    ValueDecomposition cands = dominator_candidates(delta, tol);
    if (cands.size() > kExhaustiveCandidateBound)
        throw Error(errc::too_many_candidates,
                    std::to_string(cands.size()) +
                        " dominator candidates exceed the exhaustive enumeration bound of " +
                        std::to_string(kExhaustiveCandidateBound));
    // Canonical path order here, so enumerated subsets come out in a
    // stable path-lexicographic order within each cardinality.
    return {cands.begin(), cands.end()};
}

ValueDecomposition subset_to_vd(const std::vector<std::pair<LabelPath, double>>& cands,
                                const std::vector<std::size_t>& idx) {
    ValueDecomposition out;
    for (std::size_t i : idx) out.add(cands[i].first, cands[i].second);
    return out;
}

}  // namespace

ValueDecomposition mds(const ValueDecomposition& delta, const Tolerance& tol) {
    require_winner(delta, "no minimal dominating set");
    ValueDecomposition bar = barrier(delta, tol);
    if (bar.empty()) return {};  // total dominance: nothing to overcome

    const double threshold = std::abs(vd_total(bar));
    ValueDecomposition out;
    double sum = 0.0;
    for (const auto& [path, value] : ordered_candidates(dominator_candidates(delta, tol))) {
        out.add(path, value);
        sum += value;
        if (sum > threshold) {
            // Greedy picks in descending order, so the last component is
            // the smallest; without it the set must not dominate.
            if (out.size() > 1 && sum - value > threshold)
                throw std::logic_error("mds is not minimal");
            return out;
        }
    }
    throw Error(errc::not_a_winner,
                "dominator candidates cannot overcome the barrier total");
}

std::vector<ValueDecomposition> dominators(const ValueDecomposition& delta,
                                           const Tolerance& tol, std::size_t cap) {
    require_winner(delta, "no dominators");
    auto cands = bounded_canonical_candidates(delta, tol);
    const double threshold = std::abs(vd_total(barrier(delta, tol)));

    std::vector<ValueDecomposition> out;
    for (std::size_t c = 1; c <= cands.size() && out.size() < cap; ++c) {
        for_each_dominator_of_size(cands, c, threshold, [&](const auto& idx) {
            out.push_back(subset_to_vd(cands, idx));
            return out.size() < cap;
        });
    }
    return out;
}

std::vector<ValueDecomposition> all_minimal_dominators(const ValueDecomposition& delta,
                                                       const Tolerance& tol,
                                                       std::size_t cap) {
    ValueDecomposition canonical = mds(delta, tol);
    if (canonical.empty()) return {ValueDecomposition{}};

    auto cands = bounded_canonical_candidates(delta, tol);
    const double threshold = std::abs(vd_total(barrier(delta, tol)));
    std::vector<ValueDecomposition> out;
    for_each_dominator_of_size(cands, canonical.size(), threshold, [&](const auto& idx) {
        out.push_back(subset_to_vd(cands, idx));
        return out.size() < cap;
    });
    return out;
}

ValueDecomposition project(const ValueDecomposition& v, int level) {
    if (v.empty()) return {};
    const std::size_t path_len = *v.path_length();
    if (level < 2 || static_cast<std::size_t>(level) > path_len + 1)
        throw Error(errc::invalid_level,
                    "level " + std::to_string(level) + " is outside 2.." +
                        std::to_string(path_len + 1) + " for paths of length " +
                        std::to_string(path_len));
    const std::size_t seg = static_cast<std::size_t>(level) - 2;

    std::map<Label, double> sums;
    for (const auto& [path, value] : v) sums[path.segment(seg)] += value;
    ValueDecomposition out;
    for (const auto& [label, value] : sums) out.add(LabelPath{label}, value);
    return out;
}

ValueDecomposition difference(const Valuation& valuation, const Foil& foil) {
    if (foil.fact == foil.foil)
        throw Error(errc::validation_error,
                    "fact and foil must differ, both are '" + foil.fact + "'");
    auto fact_it = valuation.find(foil.fact);
    if (fact_it == valuation.end())
        throw Error(errc::unknown_alternative, "unknown alternative '" + foil.fact + "'");
    auto foil_it = valuation.find(foil.foil);
    if (foil_it == valuation.end())
        throw Error(errc::unknown_alternative, "unknown alternative '" + foil.foil + "'");
    return vd_subtract(fact_it->second, foil_it->second);
}

Explanation explain_difference(ValueDecomposition delta, const Foil& foil,
                               std::optional<int> level, const Tolerance& tol,
                               bool with_all, std::size_t cap) {
    if (!(vd_total(delta) > 0.0))
        throw Error(errc::not_a_winner, "'" + foil.fact + "' does not beat '" +
                                            foil.foil + "': difference total is not positive");
    if (level) delta = project(delta, *level);

    Explanation e;
    e.foil = foil;
    e.level = level;
    e.barrier = barrier(delta, tol);
    e.candidates = dominator_candidates(delta, tol);
    e.mds = mds(delta, tol);
    e.total_dominance = e.barrier.empty();
    if (with_all) e.all_minimal = all_minimal_dominators(delta, tol, cap);
    e.difference = std::move(delta);
    return e;
}

Explanation explain(const Valuation& valuation, const Foil& foil, const Tolerance& tol,
                    bool with_all, std::size_t cap) {
    return explain_difference(difference(valuation, foil), foil, std::nullopt, tol,
                              with_all, cap);
}

Explanation focused_explanation(const Valuation& valuation, const Foil& foil, int level,
                                const Tolerance& tol, bool with_all, std::size_t cap) {
    return explain_difference(difference(valuation, foil), foil, level, tol, with_all, cap);
}

}  // namespace mcdm
