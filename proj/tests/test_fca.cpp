#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cnctp/context.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cnctp;
using namespace oracles;

namespace {

// Scaled seven-instance weather subset: rows i1..i7, columns a1..a9.
const int cross_table[7][9] = {
    {1, 0, 0, 1, 0, 0, 1, 0, 0}, {1, 0, 0, 1, 0, 0, 1, 0, 1}, {0, 1, 0, 1, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 1, 0, 1, 0, 0},
    {0, 0, 1, 0, 0, 1, 0, 1, 0}, {0, 0, 1, 0, 0, 1, 0, 1, 1}, {0, 1, 0, 0, 0, 1, 0, 1, 1},
};

formal_context subset_context() {
    return scale(testing_support::weather_subset(), scale_options{true});
}

// Objects / attributes named 1-based as in the tables.
bitset objs(const formal_context& ctx, std::initializer_list<std::size_t> one_based) {
    std::vector<std::size_t> v;
    for (auto i : one_based) v.push_back(i - 1);
    return ctx.objects_of(v);
}
bitset attrs(const formal_context& ctx, std::initializer_list<std::size_t> one_based) {
    std::vector<std::size_t> v;
    for (auto a : one_based) v.push_back(a - 1);
    return ctx.attributes_of(v);
}

} // namespace

TEST(Bitset, BasicOperations) {
    bitset b(130);
    EXPECT_TRUE(b.empty_set());
    b.set(0);
    b.set(64);
    b.set(129);
    EXPECT_EQ(b.count(), 3u);
    EXPECT_EQ(b.indices(), (std::vector<std::size_t>{0, 64, 129}));
    EXPECT_EQ(b.find_next(1), 64u);
    EXPECT_EQ(b.find_next(130), 130u);
    bitset all(130, true);
    EXPECT_EQ(all.count(), 130u);
    EXPECT_TRUE(b.is_subset_of(all));
    EXPECT_FALSE(all.is_subset_of(b));
    EXPECT_EQ((b & all), b);
    b.reset(64);
    EXPECT_FALSE(b.test(64));
}

TEST(Scale, WeatherSubsetCrossTable) {
    const auto ctx = subset_context();
    ASSERT_EQ(ctx.object_count(), 7u);
    ASSERT_EQ(ctx.attribute_count(), 9u);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t a = 0; a < 9; ++a) EXPECT_EQ(ctx.incidence(i, a), cross_table[i][a] == 1) << "i" << i + 1 << " a" << a + 1;
}

TEST(Scale, WeatherSubsetColumnMeanings) {
    const auto ds = testing_support::weather_subset();
    const auto ctx = subset_context();
    const char* expected[9][2] = {{"outlook", "sunny"},    {"outlook", "overcast"},    {"outlook", "rainy"},
                                  {"temperature", "hot"},  {"temperature", "mild"},    {"temperature", "cool"},
                                  {"humidity", "high"},    {"humidity", "normal"},     {"windy", "TRUE"}};
    for (std::size_t a = 0; a < 9; ++a) {
        const auto& m = ctx.meaning(a);
        EXPECT_EQ(ds.attribute(m.attribute).name, expected[a][0]);
        EXPECT_EQ(ds.attribute(m.attribute).domain[m.value], expected[a][1]);
    }
}

TEST(Scale, DefaultKeepsEveryOccurringValue) {
    const auto ctx = scale(testing_support::weather_subset());
    EXPECT_EQ(ctx.attribute_count(), 10u);
    EXPECT_EQ(ctx.row(0).indices(), (std::vector<std::size_t>{0, 3, 6, 8}));
}

TEST(Scale, ComplementDropOnlyForBooleanPairs) {
    const auto ds = testing_support::from_arff(
        "@relation r\n@attribute h {high,normal}\n@attribute f {yes,no}\n@attribute c {p,q}\n@data\n"
        "high,yes,p\nnormal,no,q\n");
    const auto ctx = scale(ds, scale_options{true});
    ASSERT_EQ(ctx.attribute_count(), 3u);
    EXPECT_EQ(ctx.meaning(2).attribute, 1u);
    EXPECT_EQ(ctx.meaning(2).value, 0u);
}

TEST(Galois, WorkedExample) {
    const auto ctx = subset_context();
    EXPECT_EQ(ctx.derive_attributes(objs(ctx, {1, 2})), attrs(ctx, {1, 4, 7}));
    EXPECT_EQ(ctx.derive_objects(attrs(ctx, {1, 4, 7})), objs(ctx, {1, 2}));
    EXPECT_TRUE(ctx.derive_attributes(ctx.all_objects()).empty_set());
    EXPECT_EQ(ctx.derive_objects(attrs(ctx, {3})), objs(ctx, {4, 5, 6}));
    EXPECT_EQ(ctx.close_objects(objs(ctx, {1})), objs(ctx, {1, 2}));
    EXPECT_EQ(ctx.derive_attributes(ctx.no_objects()), ctx.all_attributes());
    EXPECT_EQ(ctx.derive_objects(ctx.no_attributes()), ctx.all_objects());
}

TEST(Galois, RangeChecks) {
    const auto ctx = subset_context();
    EXPECT_THROW(ctx.objects_of({7}), std::out_of_range);
    EXPECT_THROW(ctx.attributes_of({9}), std::out_of_range);
    EXPECT_THROW(ctx.derive_attributes(bitset(3)), std::out_of_range);
    EXPECT_THROW(formal_context(2, {{0, 0}, {0, 0}}), schema_error);
}

TEST(Galois, LawsOnRandomContexts) {
    std::mt19937_64 rng(20240601);
    std::size_t checked = 0;
    for (int trial = 0; trial < 600; ++trial) {
        const std::size_t n = 1 + rng() % 12, m = 1 + rng() % 12;
        const auto ctx = random_context(rng, n, m, 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0);
        for (int rep = 0; rep < 5; ++rep) {
            const auto x1 = random_subset(rng, n);
            const auto x2 = x1 | random_subset(rng, n);
            const auto y1 = random_subset(rng, m);
            const auto y2 = y1 | random_subset(rng, m);
            // antitone
            ASSERT_TRUE(ctx.derive_attributes(x2).is_subset_of(ctx.derive_attributes(x1)));
            ASSERT_TRUE(ctx.derive_objects(y2).is_subset_of(ctx.derive_objects(y1)));
            // extensive
            ASSERT_TRUE(x1.is_subset_of(ctx.close_objects(x1)));
            ASSERT_TRUE(y1.is_subset_of(ctx.close_attributes(y1)));
            // monotone
            ASSERT_TRUE(ctx.close_objects(x1).is_subset_of(ctx.close_objects(x2)));
            ASSERT_TRUE(ctx.close_attributes(y1).is_subset_of(ctx.close_attributes(y2)));
            // idempotent
            ASSERT_EQ(ctx.close_objects(ctx.close_objects(x1)), ctx.close_objects(x1));
            ASSERT_EQ(ctx.close_attributes(ctx.close_attributes(y1)), ctx.close_attributes(y1));
            // phi is the exact column-AND
            for (std::size_t a = 0; a < m; ++a) {
                bool all = true;
                for (std::size_t i = 0; i < n; ++i)
                    if (x1.test(i) && !ctx.incidence(i, a)) all = false;
                ASSERT_EQ(ctx.derive_attributes(x1).test(a), all);
            }
        }
        ++checked;
    }
    EXPECT_GE(checked, 500u);
}


TEST(Enumerate, WeatherSubsetMatchesBruteForce) {
    const auto ctx = subset_context();
    const auto concepts = enumerate_all_concepts(ctx);
    EXPECT_EQ(as_index_sets(concepts), brute_force_concepts(ctx));
    EXPECT_EQ(as_index_sets(concepts).size(), concepts.size());
    const std::pair<index_set, index_set> worked{{0, 1}, {0, 3, 6}};
    EXPECT_TRUE(as_index_sets(concepts).count(worked));
}

TEST(Enumerate, RandomContextsMatchBruteForce) {
    std::mt19937_64 rng(77);
    int checked = 0;
    for (int trial = 0; trial < 250; ++trial) {
        const std::size_t n = 1 + rng() % 10, m = 1 + rng() % 10;
        const auto ctx = random_context(rng, n, m, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
        const auto concepts = enumerate_all_concepts(ctx);
        ASSERT_EQ(as_index_sets(concepts), brute_force_concepts(ctx)) << "trial " << trial;
        ASSERT_EQ(as_index_sets(concepts).size(), concepts.size());
        ++checked;
    }
    EXPECT_GE(checked, 200);
}

TEST(Enumerate, RejectsLargeContexts) {
    std::mt19937_64 rng(1);
    EXPECT_THROW(enumerate_all_concepts(random_context(rng, max_enumeration_objects + 1, 3, 0.5)), error);
}

TEST(NominalConcept, GeneratorAndClosedIntents) {
    const auto ds = testing_support::weather_subset();
    const auto ctx = scale(ds);
    const attribute_value sunny{0, 0};
    const auto gen = concept_from_value(ctx, sunny, intent_mode::generator);
    ASSERT_TRUE(gen);
    EXPECT_EQ(gen->extent.indices(), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(gen->intent, (std::vector<attribute_value>{sunny}));
    const auto closed = concept_from_value(ctx, sunny, intent_mode::closed);
    ASSERT_TRUE(closed);
    EXPECT_EQ(closed->intent, (std::vector<attribute_value>{{0, 0}, {1, 0}, {2, 0}}));
    EXPECT_THROW(concept_from_value(ctx, {0, 7}), error);
}

TEST(Dot, NodesAndCoverEdges) {
    const auto ctx = subset_context();
    const auto concepts = enumerate_all_concepts(ctx);
    const auto dot = export_dot(concepts);
    std::size_t nodes = 0, edges = 0, pos = 0;
    while ((pos = dot.find("[label=", pos)) != std::string::npos) {
        ++nodes;
        ++pos;
    }
    pos = 0;
    while ((pos = dot.find(" -> ", pos)) != std::string::npos) {
        ++edges;
        ++pos;
    }
    EXPECT_EQ(nodes, concepts.size());
    EXPECT_NE(dot.find("\"{i1,i2}/{a1,a4,a7}\""), std::string::npos);
    // Hasse diagram of a lattice with more than one element is connected
    EXPECT_GE(edges, concepts.size() - 1);
    EXPECT_EQ(dot, export_dot(enumerate_all_concepts(subset_context())));
    EXPECT_EQ(export_dot({}), "digraph{}\n");
}
