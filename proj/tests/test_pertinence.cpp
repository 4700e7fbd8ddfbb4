#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "cnctp/pertinence.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cnctp;
using namespace oracles;

TEST(Entropy, WeatherSubset) {
    const auto ds = testing_support::weather_subset();
    EXPECT_NEAR(class_entropy(ds), h({4.0 / 7, 3.0 / 7}), 1e-12);
    EXPECT_NEAR(class_entropy(ds), 0.985, 5e-4);
    const std::vector<std::size_t> pure{0, 1};
    EXPECT_EQ(class_entropy(ds, pure), 0.0);
    EXPECT_THROW(class_entropy(ds, std::vector<std::size_t>{}), error);
}

TEST(GainRatio, OutlookHandFormula) {
    const auto ds = testing_support::weather_subset();
    const double ig = h({4.0 / 7, 3.0 / 7}) - 3.0 / 7 * h({2.0 / 3, 1.0 / 3});
    const double iv = h({2.0 / 7, 2.0 / 7, 3.0 / 7});
    const auto gr = gain_ratio(ds, 0);
    EXPECT_NEAR(gr.info_gain, ig, 1e-12);
    EXPECT_NEAR(gr.intrinsic_value, iv, 1e-12);
    EXPECT_NEAR(gr.gain_ratio, ig / iv, 1e-12);
    EXPECT_NEAR(gr.gain_ratio, 0.380, 0.002);
    EXPECT_NEAR(gr.info_gain, 0.592, 0.002);
    EXPECT_NEAR(gr.intrinsic_value, 1.556, 0.002);
}

TEST(GainRatio, ConstantAttributeIsZero) {
    const auto ds = testing_support::from_arff(
        "@relation r\n@attribute k {only,other}\n@attribute c {p,q}\n@data\nonly,p\nonly,q\nonly,p\n");
    const auto gr = gain_ratio(ds, 0);
    EXPECT_EQ(gr.gain_ratio, 0.0);
    EXPECT_EQ(gr.info_gain, 0.0);
    EXPECT_EQ(gr.intrinsic_value, 0.0);
}

TEST(GainRatio, MatchesOracleOnRandomData) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto ds = testing_support::random_dataset(rng, 5 + rng() % 60, 1 + rng() % 6, 2 + rng() % 3);
        for (std::size_t j = 0; j < ds.attribute_count(); ++j) {
            const auto a = gain_ratio(ds, j), b = oracle_gain_ratio(ds, j);
            ASSERT_NEAR(a.gain_ratio, b.gain_ratio, 1e-12);
            ASSERT_NEAR(a.info_gain, std::max(0.0, b.info_gain), 1e-12);
            ASSERT_NEAR(a.intrinsic_value, b.intrinsic_value, 1e-12);
        }
    }
}

TEST(GainRatio, RowOrderDoesNotChangeBits) {
    std::mt19937_64 rng(9);
    const auto ds = testing_support::random_dataset(rng, 80, 5, 3);
    std::vector<std::size_t> order(ds.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto shuffled = ds.subset(order);
    for (std::size_t j = 0; j < ds.attribute_count(); ++j) EXPECT_EQ(gain_ratio(ds, j).gain_ratio, gain_ratio(shuffled, j).gain_ratio);
}

TEST(Ranking, OutlookFirstOnWeatherSubset) {
    const auto ds = testing_support::weather_subset();
    const auto r = rank_attributes(ds);
    ASSERT_EQ(r.size(), 4u);
    EXPECT_EQ(r.entries[0].attribute, 0u);
    for (std::size_t i = 1; i < r.size(); ++i) EXPECT_GE(r.entries[i - 1].gain_ratio, r.entries[i].gain_ratio);
}

TEST(Ranking, TiesBreakByAttributeIndex) {
    const auto ds = testing_support::from_arff(
        "@relation r\n@attribute a {x,y}\n@attribute b {x,y}\n@attribute c {p,q}\n@data\nx,x,p\ny,y,q\n");
    const auto r = rank_attributes(ds);
    EXPECT_EQ(r.entries[0].attribute, 0u);
    EXPECT_EQ(r.entries[1].attribute, 1u);
}

TEST(Selection, FractionMode) {
    attribute_ranking r;
    for (std::size_t j = 0; j < 4; ++j) r.entries.push_back({j, 0.4 - 0.1 * static_cast<double>(j), 0, 0});
    EXPECT_TRUE(select_top(r, 0.0).empty());
    EXPECT_EQ(select_top(r, 0.25), (std::vector<std::size_t>{0}));
    EXPECT_EQ(select_top(r, 0.26), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(select_top(r, 0.5), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(select_top(r, 1.0).size(), 4u);
    EXPECT_EQ(select_top(r, 0.75).size(), 3u);
    EXPECT_THROW(select_top(r, 1.5), error);
}

TEST(Selection, ValueMode) {
    attribute_ranking r;
    r.entries = {{2, 0.5, 0, 0}, {0, 0.3, 0, 0}, {1, 0.1, 0, 0}};
    EXPECT_EQ(select_top(r, 0.3, select_mode::value_threshold), (std::vector<std::size_t>{2, 0}));
    EXPECT_EQ(select_top(r, 0.0, select_mode::value_threshold).size(), 3u);
    EXPECT_TRUE(select_top(r, 0.9, select_mode::value_threshold).empty());
}
