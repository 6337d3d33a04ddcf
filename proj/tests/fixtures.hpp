#ifndef MCDM_TESTS_FIXTURES_HPP
#define MCDM_TESTS_FIXTURES_HPP

#include <cmath>
#include <random>

#include "mcdm/ahp.hpp"
#include "mcdm/linear.hpp"

namespace fixtures {

inline bool near(double actual, double expected, double tol) {
    return std::fabs(actual - expected) <= tol;
}

// Car selection, flat form: price is a cost, the rest are benefits.
inline mcdm::DecisionProblem car_wsm() {
    using mcdm::AttributeSpec;
    using mcdm::Polarity;
    return mcdm::DecisionProblem(
        {{"P", 0.1, Polarity::detrimental},
         {"FE", 0.4, Polarity::beneficial},
         {"SR", 0.3, Polarity::beneficial},
         {"C", 0.2, Polarity::beneficial}},
        {"Toyota", "Honda", "BMW"},
        {22000, 32, 8.5, 6.7,
         25000, 38, 7.5, 7.9,
         27000, 35, 9.6, 9.2});
}

// Car selection, hierarchical form: advice weights, feature advice, car features.
inline mcdm::AhpModel car_ahp() {
    std::vector<mcdm::Matrix> ms;
    ms.emplace_back(2, 1, std::vector<double>{0.6, 0.4},
                    std::vector<mcdm::Label>{"Personal", "Expert"},
                    std::vector<mcdm::Label>{"Car"});
    ms.emplace_back(3, 2, std::vector<double>{0.5, 0.2, 0.3, 0.4, 0.2, 0.4},
                    std::vector<mcdm::Label>{"P", "FE", "SR"},
                    std::vector<mcdm::Label>{"Personal", "Expert"});
    ms.emplace_back(2, 3, std::vector<double>{0.6, 0.6, 0.3, 0.4, 0.4, 0.7},
                    std::vector<mcdm::Label>{"Honda", "BMW"},
                    std::vector<mcdm::Label>{"P", "FE", "SR"});
    return mcdm::AhpModel(std::move(ms));
}

// Bridge material selection across three stakeholder groups and six
// material criteria.
inline mcdm::AhpModel bridge_ahp() {
    std::vector<mcdm::Matrix> ms;
    ms.emplace_back(3, 1, std::vector<double>{0.4, 0.2, 0.4},
                    std::vector<mcdm::Label>{"DOT", "CONSULTANTS", "OFFICIALS"},
                    std::vector<mcdm::Label>{"IMPORTANCE"});
    ms.emplace_back(6, 3,
                    std::vector<double>{0.28, 0.08, 0.14,
                                        0.28, 0.08, 0.12,
                                        0.17, 0.35, 0.22,
                                        0.08, 0.08, 0.31,
                                        0.10, 0.32, 0.10,
                                        0.09, 0.09, 0.11},
                    std::vector<mcdm::Label>{"PP", "LS", "MN", "RS", "IC", "LC"},
                    std::vector<mcdm::Label>{"DOT", "CONSULTANTS", "OFFICIALS"});
    ms.emplace_back(4, 6,
                    std::vector<double>{
                        0.33, 0.27, 0.42, 0.32, 0.23232323232323232, 0.28282828282828283,
                        0.09, 0.16, 0.08, 0.09, 0.15151515151515152, 0.09090909090909091,
                        0.20, 0.23, 0.23, 0.26, 0.32323232323232323, 0.31313131313131313,
                        0.38, 0.34, 0.27, 0.33, 0.29292929292929293, 0.31313131313131313},
                    std::vector<mcdm::Label>{"P", "S", "T", "R"},
                    std::vector<mcdm::Label>{"PP", "LS", "MN", "RS", "IC", "LC"});
    return mcdm::AhpModel(std::move(ms));
}

// Leaf differences of the hierarchical car example (fact Honda, foil BMW).
inline mcdm::ValueDecomposition car_delta_leaves() {
    using mcdm::LabelPath;
    mcdm::ValueDecomposition vd;
    vd.add(LabelPath{"Personal", "P"}, 0.060);
    vd.add(LabelPath{"Personal", "FE"}, 0.036);
    vd.add(LabelPath{"Personal", "SR"}, -0.048);
    vd.add(LabelPath{"Expert", "P"}, 0.016);
    vd.add(LabelPath{"Expert", "FE"}, 0.032);
    vd.add(LabelPath{"Expert", "SR"}, -0.064);
    return vd;
}

// Small deterministic generator for property-style tests.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double range(double lo, double hi) { return lo + (hi - lo) * unit(); }
    int integer(int lo, int hi) {
        return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace fixtures

#endif  // MCDM_TESTS_FIXTURES_HPP
