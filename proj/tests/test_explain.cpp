#include <algorithm>

#include "doctest.h"

#include "fixtures.hpp"
#include "mcdm/eval.hpp"
#include "mcdm/explain.hpp"

using namespace mcdm;
using fixtures::near;

namespace {

// Flat car valuation with the published 2-decimal decompositions.
Valuation car_valuation() {
    return {{"B", ValueDecomposition{{LabelPath{"P"}, 0.08},
                                     {LabelPath{"FE"}, 0.37},
                                     {LabelPath{"SR"}, 0.30},
                                     {LabelPath{"C"}, 0.20}}},
            {"H", ValueDecomposition{{LabelPath{"P"}, 0.09},
                                     {LabelPath{"FE"}, 0.40},
                                     {LabelPath{"SR"}, 0.23},
                                     {LabelPath{"C"}, 0.17}}}};
}

std::vector<LabelPath> paths_of(const ValueDecomposition& vd) {
    std::vector<LabelPath> out;
    for (const auto& [path, value] : vd) out.push_back(path);
    return out;
}

ValueDecomposition random_delta(fixtures::Rng& rng, int max_components) {
    ValueDecomposition delta;
    int n = rng.integer(2, max_components);
    for (int i = 0; i < n; ++i) delta.add(LabelPath{"c" + std::to_string(i)}, rng.range(-1, 1));
    return delta;
}

// Independent oracle: smallest subset cardinality whose sum beats the
// threshold, by exhaustive subset enumeration.
int brute_force_min_cardinality(const std::vector<double>& values, double threshold) {
    const int k = static_cast<int>(values.size());
    int best = -1;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        double sum = 0;
        int size = 0;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) {
                sum += values[i];
                ++size;
            }
        if (sum > threshold && (best < 0 || size < best)) best = size;
    }
    return best;
}

}  // namespace

TEST_CASE("difference over a valuation matches the published flat example") {
    ValueDecomposition delta = difference(car_valuation(), {"B", "H"});
    CHECK(near(delta.at(LabelPath{"P"}), -0.01, 1e-12));
    CHECK(near(delta.at(LabelPath{"FE"}), -0.03, 1e-12));
    CHECK(near(delta.at(LabelPath{"SR"}), 0.07, 1e-12));
    CHECK(near(delta.at(LabelPath{"C"}), 0.03, 1e-12));

    CHECK_THROWS_AS(difference(car_valuation(), {"B", "B"}), Error);
    try {
        difference(car_valuation(), {"B", "Tesla"});
        FAIL("expected unknown_alternative");
    } catch (const Error& e) {
        CHECK(e.code() == errc::unknown_alternative);
    }
}

TEST_CASE("barrier keeps the strictly negative components") {
    ValueDecomposition delta = difference(car_valuation(), {"B", "H"});
    ValueDecomposition bar = barrier(delta);
    REQUIRE(bar.size() == 2);
    CHECK(near(bar.at(LabelPath{"P"}), -0.01, 1e-12));
    CHECK(near(bar.at(LabelPath{"FE"}), -0.03, 1e-12));
    CHECK(near(vd_total(bar), -0.04, 1e-12));

    ValueDecomposition all_positive{{LabelPath{"a"}, 0.5}, {LabelPath{"b"}, 0.1}};
    CHECK(barrier(all_positive).empty());

    ValueDecomposition hier = barrier(fixtures::car_delta_leaves());
    REQUIRE(hier.size() == 2);
    CHECK(near(hier.at(LabelPath{"Personal", "SR"}), -0.048, 1e-12));
    CHECK(near(hier.at(LabelPath{"Expert", "SR"}), -0.064, 1e-12));
}

TEST_CASE("dominator candidates keep the strictly positive components") {
    ValueDecomposition delta = difference(car_valuation(), {"B", "H"});
    ValueDecomposition cands = dominator_candidates(delta);
    REQUIRE(cands.size() == 2);
    CHECK(near(cands.at(LabelPath{"SR"}), 0.07, 1e-12));
    CHECK(near(cands.at(LabelPath{"C"}), 0.03, 1e-12));

    ValueDecomposition all_negative{{LabelPath{"a"}, -0.5}, {LabelPath{"b"}, -0.1}};
    CHECK(dominator_candidates(all_negative).empty());

    CHECK(dominator_candidates(fixtures::car_delta_leaves()).size() == 4);
}

TEST_CASE("barrier, candidates, and the zero band partition the difference") {
    fixtures::Rng rng(555);
    Tolerance tol;
    for (int trial = 0; trial < 300; ++trial) {
        ValueDecomposition delta = random_delta(rng, 30);
        if (trial % 3 == 0) delta.add(LabelPath{"zero"}, 0.0);
        ValueDecomposition bar = barrier(delta, tol);
        ValueDecomposition cands = dominator_candidates(delta, tol);
        std::size_t zeros = 0;
        for (const auto& [path, value] : delta) {
            bool in_bar = bar.contains(path);
            bool in_cands = cands.contains(path);
            CHECK_FALSE((in_bar && in_cands));
            if (!in_bar && !in_cands) {
                ++zeros;
                CHECK(std::fabs(value) <= tol.zero_eps);
            }
        }
        CHECK(bar.size() + cands.size() + zeros == delta.size());
    }
}

TEST_CASE("greedy minimal dominating set matches the published examples") {
    ValueDecomposition flat = mds(difference(car_valuation(), {"B", "H"}));
    REQUIRE(flat.size() == 1);
    CHECK(near(flat.at(LabelPath{"SR"}), 0.07, 1e-12));

    ValueDecomposition hier = mds(fixtures::car_delta_leaves());
    REQUIRE(hier.size() == 3);
    CHECK(hier.contains(LabelPath{"Personal", "P"}));
    CHECK(hier.contains(LabelPath{"Personal", "FE"}));
    CHECK(hier.contains(LabelPath{"Expert", "FE"}));
    CHECK(vd_total(hier) > 0.112);
}

TEST_CASE("an empty barrier means total dominance and an empty set") {
    ValueDecomposition delta{{LabelPath{"a"}, 0.5}, {LabelPath{"b"}, 0.1}};
    CHECK(mds(delta).empty());
    auto all = all_minimal_dominators(delta);
    REQUIRE(all.size() == 1);
    CHECK(all[0].empty());
}

TEST_CASE("losing or tied differences are rejected") {
    ValueDecomposition losing{{LabelPath{"a"}, 0.5}, {LabelPath{"b"}, -0.6}};
    try {
        mds(losing);
        FAIL("expected not_a_winner");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_a_winner);
    }
    ValueDecomposition tied{{LabelPath{"a"}, 0.5}, {LabelPath{"b"}, -0.5}};
    CHECK_THROWS_AS(mds(tied), Error);
    CHECK_THROWS_AS(dominators(losing), Error);
}

TEST_CASE("removing the smallest member of a minimal dominating set breaks dominance") {
    fixtures::Rng rng(808);
    for (int trial = 0; trial < 300; ++trial) {
        ValueDecomposition delta = random_delta(rng, 20);
        if (!(vd_total(delta) > 0)) continue;
        ValueDecomposition bar = barrier(delta);
        if (bar.empty()) continue;
        ValueDecomposition set = mds(delta);
        double smallest = 1e300;
        for (const auto& [path, value] : set) smallest = std::min(smallest, value);
        CHECK(vd_total(set) > std::fabs(vd_total(bar)));
        if (set.size() > 1)
            CHECK_FALSE(vd_total(set) - smallest > std::fabs(vd_total(bar)));
    }
}

TEST_CASE("dominator enumeration matches the published flat and tree examples") {
    auto flat = dominators(difference(car_valuation(), {"B", "H"}));
    REQUIRE(flat.size() == 2);
    CHECK(paths_of(flat[0]) == std::vector<LabelPath>{LabelPath{"SR"}});
    CHECK(paths_of(flat[1]) == std::vector<LabelPath>{LabelPath{"C"}, LabelPath{"SR"}});

    auto tree = dominators(fixtures::car_delta_leaves());
    REQUIRE(tree.size() == 2);
    CHECK(paths_of(tree[0]) == std::vector<LabelPath>{LabelPath{"Expert", "FE"},
                                                      LabelPath{"Personal", "FE"},
                                                      LabelPath{"Personal", "P"}});
    CHECK(paths_of(tree[1]) == std::vector<LabelPath>{LabelPath{"Expert", "FE"},
                                                      LabelPath{"Expert", "P"},
                                                      LabelPath{"Personal", "FE"},
                                                      LabelPath{"Personal", "P"}});

    // Positive total with all mass inside the zero band: nothing to list.
    ValueDecomposition faint{{LabelPath{"a"}, 5e-13}, {LabelPath{"b"}, 3e-13}};
    CHECK(dominators(faint).empty());
}

TEST_CASE("dominator enumeration respects the cap and the candidate bound") {
    ValueDecomposition delta;
    for (int i = 0; i < 26; ++i) delta.add(LabelPath{"c" + std::to_string(i)}, 0.1);
    delta.add(LabelPath{"neg"}, -0.05);
    try {
        dominators(delta);
        FAIL("expected too_many_candidates");
    } catch (const Error& e) {
        CHECK(e.code() == errc::too_many_candidates);
    }
    CHECK_THROWS_AS(all_minimal_dominators(delta), Error);

    ValueDecomposition small{{LabelPath{"a"}, 0.4},
                             {LabelPath{"b"}, 0.3},
                             {LabelPath{"c"}, 0.2},
                             {LabelPath{"d"}, -0.1}};
    CHECK(dominators(small, Tolerance{}, 3).size() == 3);
}

TEST_CASE("all minimal dominators: symmetric candidates give both sets") {
    ValueDecomposition delta{{LabelPath{"a"}, 0.05},
                             {LabelPath{"b"}, 0.05},
                             {LabelPath{"neg"}, -0.04}};
    auto all = all_minimal_dominators(delta);
    REQUIRE(all.size() == 2);
    CHECK(paths_of(all[0]) == std::vector<LabelPath>{LabelPath{"a"}});
    CHECK(paths_of(all[1]) == std::vector<LabelPath>{LabelPath{"b"}});

    auto unique = all_minimal_dominators(difference(car_valuation(), {"B", "H"}));
    REQUIRE(unique.size() == 1);
    CHECK(paths_of(unique[0]) == std::vector<LabelPath>{LabelPath{"SR"}});
}

TEST_CASE("greedy cardinality equals the brute-force minimum on random differences") {
    fixtures::Rng rng(31337);
    int exercised = 0;
    while (exercised < 1000) {
        ValueDecomposition delta = random_delta(rng, 15);
        if (!(vd_total(delta) > 0)) continue;
        ++exercised;
        ValueDecomposition set = mds(delta);
        auto all = all_minimal_dominators(delta, Tolerance{}, 100000);
        REQUIRE(!all.empty());
        CHECK(all.front().size() == set.size());

        std::vector<double> values;
        for (const auto& [path, value] : dominator_candidates(delta)) values.push_back(value);
        double threshold = std::fabs(vd_total(barrier(delta)));
        if (set.empty()) {
            CHECK(barrier(delta).empty());
            continue;
        }
        int oracle = brute_force_min_cardinality(values, threshold);
        REQUIRE(oracle == static_cast<int>(set.size()));
        for (const auto& d : all) CHECK(d.size() == set.size());
    }
}

TEST_CASE("projection aggregates the car tree onto single levels") {
    ValueDecomposition honda{{LabelPath{"Personal", "P"}, 0.180},
                             {LabelPath{"Personal", "FE"}, 0.108},
                             {LabelPath{"Personal", "SR"}, 0.036},
                             {LabelPath{"Expert", "P"}, 0.048},
                             {LabelPath{"Expert", "FE"}, 0.096},
                             {LabelPath{"Expert", "SR"}, 0.048}};
    ValueDecomposition level2 = project(honda, 2);
    REQUIRE(level2.size() == 2);
    CHECK(near(level2.at(LabelPath{"Personal"}), 0.324, 1e-12));
    CHECK(near(level2.at(LabelPath{"Expert"}), 0.192, 1e-12));

    ValueDecomposition level3 = project(honda, 3);
    REQUIRE(level3.size() == 3);
    CHECK(near(level3.at(LabelPath{"P"}), 0.228, 1e-12));
    CHECK(near(level3.at(LabelPath{"FE"}), 0.204, 1e-12));
    CHECK(near(level3.at(LabelPath{"SR"}), 0.084, 1e-12));

    // Projecting single-segment paths onto their own level is the identity.
    CHECK(project(level2, 2) == level2);

    CHECK_THROWS_AS(project(honda, 1), Error);
    try {
        project(honda, 4);
        FAIL("expected invalid_level");
    } catch (const Error& e) {
        CHECK(e.code() == errc::invalid_level);
    }
}

TEST_CASE("projection preserves totals at every level of random models") {
    for (int levels = 3; levels <= 6; ++levels) {
        GenConfig cfg;
        cfg.levels = levels;
        cfg.seed = 777;
        for (std::size_t i = 0; i < 100; ++i) {
            AhpModel model = generate(cfg, i);
            Priorities pri = synthesize(model);
            std::sort(pri.begin(), pri.end(),
                      [](const auto& a, const auto& b) { return a.second > b.second; });
            ValueDecomposition delta =
                vd_subtract(flatten(build_vd_tree(model, pri[0].first)),
                            flatten(build_vd_tree(model, pri[1].first)));
            for (int level = 2; level <= static_cast<int>(*delta.path_length()) + 1; ++level)
                CHECK(near(vd_total(project(delta, level)), vd_total(delta), 1e-12));
        }
    }
}

TEST_CASE("focused explanations assign barrier and set by sign at each level") {
    Valuation car;
    AhpModel model = fixtures::car_ahp();
    for (const auto& alt : model.alternatives())
        car.emplace(alt, flatten(build_vd_tree(model, alt)));

    Explanation level2 = focused_explanation(car, {"Honda", "BMW"}, 2);
    CHECK(near(level2.difference.at(LabelPath{"Personal"}), 0.048, 1e-12));
    CHECK(near(level2.difference.at(LabelPath{"Expert"}), -0.016, 1e-12));
    REQUIRE(level2.barrier.size() == 1);
    CHECK(near(level2.barrier.at(LabelPath{"Expert"}), -0.016, 1e-12));
    REQUIRE(level2.mds.size() == 1);
    CHECK(near(level2.mds.at(LabelPath{"Personal"}), 0.048, 1e-12));
    CHECK(level2.level == 2);

    Explanation level3 = focused_explanation(car, {"Honda", "BMW"}, 3);
    CHECK(near(level3.difference.at(LabelPath{"P"}), 0.076, 1e-12));
    CHECK(near(level3.difference.at(LabelPath{"FE"}), 0.068, 1e-12));
    CHECK(near(level3.difference.at(LabelPath{"SR"}), -0.112, 1e-12));
    REQUIRE(level3.barrier.size() == 1);
    CHECK(near(level3.barrier.at(LabelPath{"SR"}), -0.112, 1e-12));
    REQUIRE(level3.mds.size() == 2);
    CHECK(level3.mds.contains(LabelPath{"P"}));
    CHECK(level3.mds.contains(LabelPath{"FE"}));

    // Both the full-depth and each focused set are valid dominators at
    // their own level; neither needs to refine the other.
    Explanation full = explain(car, {"Honda", "BMW"});
    CHECK(vd_total(full.mds) > std::fabs(vd_total(full.barrier)));
    CHECK(vd_total(level2.mds) > std::fabs(vd_total(level2.barrier)));
}

TEST_CASE("focused bridge explanation singles out the transport department") {
    Valuation bridge;
    AhpModel model = fixtures::bridge_ahp();
    for (const auto& alt : model.alternatives())
        bridge.emplace(alt, flatten(build_vd_tree(model, alt)));

    Explanation level2 = focused_explanation(bridge, {"R", "P"}, 2);
    CHECK(near(level2.difference.at(LabelPath{"DOT"}), 0.007075, 1e-4));
    CHECK(near(level2.difference.at(LabelPath{"CONSULTANTS"}), -0.003996, 1e-4));
    CHECK(near(level2.difference.at(LabelPath{"OFFICIALS"}), -0.002042, 1e-4));
    REQUIRE(level2.mds.size() == 1);
    CHECK(level2.mds.contains(LabelPath{"DOT"}));
}

TEST_CASE("explanations flag total dominance") {
    Valuation v{{"win", ValueDecomposition{{LabelPath{"a"}, 0.6}, {LabelPath{"b"}, 0.4}}},
                {"lose", ValueDecomposition{{LabelPath{"a"}, 0.3}, {LabelPath{"b"}, 0.2}}}};
    Explanation e = explain(v, {"win", "lose"});
    CHECK(e.total_dominance);
    CHECK(e.mds.empty());
    CHECK(e.barrier.empty());

    try {
        explain(v, {"lose", "win"});
        FAIL("expected not_a_winner");
    } catch (const Error& e2) {
        CHECK(e2.code() == errc::not_a_winner);
    }
}
