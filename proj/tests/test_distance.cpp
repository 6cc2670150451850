#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "core/distance.hpp"
#include "core/dtw.hpp"

using namespace fishnet;

namespace {

SeriesSet random_set(size_t count, int months, uint32_t seed) {
    std::mt19937 rng(seed);
    SeriesSet set({2010, 1}, months);
    for (size_t s = 0; s < count; ++s) {
        TimeSeries series;
        series.label = "s" + std::to_string(s);
        series.kind = Kind::Island;
        series.start = {2010, 1};
        for (int m = 0; m < months; ++m) {
            series.values.push_back(static_cast<double>(rng() % 1000) / 999.0);
        }
        set.add(series);
    }
    return set;
}

DistanceMatrix matrix_from(const std::vector<Node>& nodes,
                           const std::vector<std::vector<double>>& rows) {
    std::vector<double> values;
    for (const auto& row : rows) values.insert(values.end(), row.begin(), row.end());
    return DistanceMatrix(nodes, values);
}

}  // namespace

TEST_CASE("distance_matrix of identical series is all zeros") {
    SeriesSet set({2010, 1}, 6);
    for (int s = 0; s < 3; ++s) {
        TimeSeries series;
        series.label = "s" + std::to_string(s);
        series.kind = Kind::Island;
        series.start = {2010, 1};
        series.values = {0.0, 0.5, 1.0, 0.5, 0.0, 0.25};
        set.add(series);
    }
    const DistanceMatrix matrix = distance_matrix(set);
    for (size_t i = 0; i < 3; ++i) {
        for (size_t j = 0; j < 3; ++j) CHECK(matrix.at(i, j) == 0.0);
    }
}

TEST_CASE("distance_matrix entries equal independent pairwise dtw calls") {
    const SeriesSet set = random_set(5, 12, 7030);
    const DistanceMatrix matrix = distance_matrix(set);
    for (size_t i = 0; i < set.size(); ++i) {
        CHECK(matrix.at(i, i) == 0.0);
        for (size_t j = 0; j < set.size(); ++j) {
            if (i != j) {
                CHECK(matrix.at(i, j) == dtw(set.at(i).values, set.at(j).values));
                CHECK(matrix.at(i, j) == matrix.at(j, i));
                CHECK(matrix.at(i, j) >= 0.0);
            }
        }
    }
}

TEST_CASE("distance_matrix is independent of the thread count") {
    const SeriesSet set = random_set(16, 12, 7031);  // 120 pairs, enough to split
    const DistanceMatrix serial = distance_matrix(set, 1);
    const DistanceMatrix parallel = distance_matrix(set, 4);
    for (size_t i = 0; i < set.size(); ++i) {
        for (size_t j = 0; j < set.size(); ++j) {
            CHECK(serial.at(i, j) == parallel.at(i, j));
        }
    }
}

TEST_CASE("distance_matrix preconditions") {
    SeriesSet single({2010, 1}, 3);
    TimeSeries s;
    s.label = "only";
    s.kind = Kind::Island;
    s.start = {2010, 1};
    s.values = {1, 2, 3};
    single.add(s);
    CHECK_THROWS_AS(distance_matrix(single), ValidationError);

    SeriesSet missing({2010, 1}, 3);
    TimeSeries a = s, b = s;
    b.label = "other";
    b.values = {1.0, std::nan(""), 3.0};
    missing.add(a);
    missing.add(b);
    CHECK_THROWS_AS(distance_matrix(missing), ValidationError);
}

TEST_CASE("normalize_matrix divides by the maximum off-diagonal entry") {
    const std::vector<Node> nodes{{"a", Kind::Island}, {"b", Kind::Island}, {"c", Kind::Island}};
    const DistanceMatrix matrix = matrix_from(nodes, {
        {0.0, 0.1, 0.9},
        {0.1, 0.0, 0.4},
        {0.9, 0.4, 0.0},
    });
    const DistanceMatrix normalized = normalize_matrix(matrix);
    CHECK_THAT(normalized.at(0, 1), Catch::Matchers::WithinRel(0.1 / 0.9, 1e-15));
    CHECK(normalized.at(0, 2) == 1.0);
    CHECK(normalized.max_entry() == 1.0);

    SECTION("idempotent once the maximum is 1") {
        const DistanceMatrix again = normalize_matrix(normalized);
        for (size_t i = 0; i < 3; ++i) {
            for (size_t j = 0; j < 3; ++j) CHECK(again.at(i, j) == normalized.at(i, j));
        }
    }
}

TEST_CASE("normalize_matrix rejects an all-zero matrix") {
    const std::vector<Node> nodes{{"a", Kind::Island}, {"b", Kind::Island}};
    const DistanceMatrix zero = matrix_from(nodes, {{0.0, 0.0}, {0.0, 0.0}});
    CHECK_THROWS_AS(normalize_matrix(zero), ValidationError);
}

TEST_CASE("DistanceMatrix invariants hold on random constructions") {
    std::mt19937 rng(7032);
    for (int trial = 0; trial < 10; ++trial) {
        const SeriesSet set = random_set(4 + rng() % 6, 8, rng());
        const DistanceMatrix matrix = distance_matrix(set);
        const DistanceMatrix normalized = normalize_matrix(matrix);
        CHECK(normalized.max_entry() == 1.0);
        for (size_t i = 0; i < matrix.size(); ++i) {
            for (size_t j = 0; j < matrix.size(); ++j) {
                CHECK(normalized.at(i, j) >= 0.0);
                CHECK(normalized.at(i, j) <= 1.0);
                CHECK(normalized.at(i, j) == normalized.at(j, i));
            }
        }
    }
}
