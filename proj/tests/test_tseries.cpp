#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <random>

#include "core/tseries.hpp"

using namespace fishnet;

namespace {

LandingRecord record(const std::string& id, int year, int month, const std::string& cls,
                     double weight) {
    LandingRecord rec;
    rec.id = id;
    rec.date = {year, month, 10};
    rec.island = "Pico";
    rec.harbor = "Madalena";
    rec.classification = cls;
    rec.metier = "LHP-PB";
    rec.weight_kg = weight;
    return rec;
}

TimeSeries series_of(const std::string& label, YearMonth start, std::vector<double> values,
                     Kind kind = Kind::Classification) {
    TimeSeries s;
    s.label = label;
    s.kind = kind;
    s.start = start;
    s.values = std::move(values);
    return s;
}

}  // namespace

TEST_CASE("aggregate_monthly averages weights per label and month") {
    const MonthRange window{{2010, 1}, {2010, 12}};
    std::vector<LandingRecord> records{
        record("L1", 2010, 5, "Tunas", 100.0),
        record("L2", 2010, 5, "Tunas", 200.0),
        record("L3", 2010, 7, "Mollusks", 12.0),
    };

    const SeriesSet set = aggregate_monthly(records, Kind::Classification, window);
    REQUIRE(set.size() == 2);

    const TimeSeries* tunas = set.find("Tunas", Kind::Classification);
    REQUIRE(tunas != nullptr);
    CHECK(tunas->values[4] == 150.0);  // mean of 100 and 200 in May

    SECTION("months without landings are missing, not zero") {
        CHECK(std::isnan(tunas->values[0]));
        CHECK(std::isnan(tunas->values[6]));
        const TimeSeries* mollusks = set.find("Mollusks", Kind::Classification);
        REQUIRE(mollusks != nullptr);
        CHECK(mollusks->values[6] == 12.0);
        CHECK(std::isnan(mollusks->values[4]));
    }
}

TEST_CASE("aggregate_monthly identity case: one landing per month") {
    const MonthRange window{{2011, 1}, {2011, 12}};
    std::vector<LandingRecord> records;
    for (int month = 1; month <= 12; ++month) {
        records.push_back(record("L" + std::to_string(month), 2011, month, "Tunas", 42.5));
    }
    const SeriesSet set = aggregate_monthly(records, Kind::Classification, window);
    REQUIRE(set.size() == 1);
    for (const double v : set.at(0).values) CHECK(v == 42.5);
}

TEST_CASE("aggregate_monthly matches a brute-force group-by on a 50-record fixture") {
    const MonthRange window{{2010, 1}, {2010, 10}};
    const std::vector<std::string> labels{"Tunas", "Mollusks", "Demersals", "Small Pelagics"};

    std::mt19937 rng(7001);
    std::vector<LandingRecord> records;
    for (int i = 0; i < 50; ++i) {
        const int month = static_cast<int>(rng() % 10) + 1;
        const auto& label = labels[rng() % labels.size()];
        const double weight = static_cast<double>(rng() % 10000) / 10.0;
        records.push_back(record("L" + std::to_string(i), 2010, month, label, weight));
    }

    // Independent oracle: plain group-by-(label, month) mean.
    std::map<std::pair<std::string, int>, std::pair<double, int>> groups;
    for (const auto& rec : records) {
        auto& [sum, count] = groups[{rec.classification, rec.date.month}];
        sum += rec.weight_kg;
        count += 1;
    }

    const SeriesSet set = aggregate_monthly(records, Kind::Classification, window);
    for (const auto& series : set.series()) {
        for (int m = 0; m < 10; ++m) {
            const auto it = groups.find({series.label, m + 1});
            if (it == groups.end()) {
                CHECK(std::isnan(series.values[m]));
            } else {
                const double expected = it->second.first / it->second.second;
                CHECK_THAT(series.values[m],
                           Catch::Matchers::WithinRel(expected, 1e-12));
            }
        }
    }
}

TEST_CASE("aggregate_monthly rejects bad input") {
    CHECK_THROWS_AS(
        aggregate_monthly({}, Kind::Classification, MonthRange{{2010, 1}, {2010, 12}}),
        ValidationError);

    const std::vector<LandingRecord> outside{record("L1", 2012, 1, "Tunas", 1.0)};
    CHECK_THROWS_AS(
        aggregate_monthly(outside, Kind::Classification, MonthRange{{2010, 1}, {2010, 12}}),
        ValidationError);

    CHECK_THROWS_AS(kind_from_name("species"), ValidationError);
}

TEST_CASE("impute_gap scales donor values by the basis ratio") {
    // 2013: [10,20,30] then nine months of 10 (basis total 90);
    // 2014: gap Jan..Mar, then nine months of 15 (basis total 135).
    SeriesSet set({2013, 1}, 24);
    std::vector<double> values{10, 20, 30};
    for (int i = 0; i < 9; ++i) values.push_back(10);
    values.insert(values.end(), {std::nan(""), std::nan(""), std::nan("")});
    for (int i = 0; i < 9; ++i) values.push_back(15);
    set.add(series_of("Tunas", {2013, 1}, values));

    const MonthRange gap{{2014, 1}, {2014, 3}};
    const MonthRange donor{{2013, 1}, {2013, 3}};
    const SeriesSet result = impute_gap(set, gap, donor, {4, 12});

    const auto& out = result.at(0).values;
    CHECK(out[12] == 15.0);  // 10 * 1.5
    CHECK(out[13] == 30.0);
    CHECK(out[14] == 45.0);

    SECTION("values outside the gap are untouched") {
        for (int i = 0; i < 12; ++i) CHECK(out[i] == values[i]);
        for (int i = 15; i < 24; ++i) CHECK(out[i] == values[i]);
    }
}

TEST_CASE("impute_gap with equal basis totals copies the donor verbatim") {
    SeriesSet set({2013, 1}, 24);
    std::vector<double> values{7, 8, 9};
    for (int i = 0; i < 9; ++i) values.push_back(11);
    values.insert(values.end(), {std::nan(""), std::nan(""), std::nan("")});
    for (int i = 0; i < 9; ++i) values.push_back(11);
    set.add(series_of("Tunas", {2013, 1}, values));

    const SeriesSet result =
        impute_gap(set, {{2014, 1}, {2014, 3}}, {{2013, 1}, {2013, 3}}, {4, 12});
    CHECK(result.at(0).values[12] == 7.0);
    CHECK(result.at(0).values[13] == 8.0);
    CHECK(result.at(0).values[14] == 9.0);
}

TEST_CASE("impute_gap properties on a random multi-series set") {
    std::mt19937 rng(7002);
    SeriesSet set({2013, 1}, 24);
    for (int s = 0; s < 6; ++s) {
        std::vector<double> values(24);
        for (double& v : values) v = 1.0 + static_cast<double>(rng() % 1000) / 100.0;
        set.add(series_of("s" + std::to_string(s), {2013, 1}, values));
    }

    const MonthRange gap{{2014, 1}, {2014, 3}};
    const MonthRange donor{{2013, 1}, {2013, 3}};
    const SeriesSet result = impute_gap(set, gap, donor, {4, 12});

    // One global factor: totals over basis months across every series.
    double donor_total = 0.0, gap_total = 0.0;
    for (const auto& series : set.series()) {
        for (int m = 3; m < 12; ++m) donor_total += series.values[m];
        for (int m = 15; m < 24; ++m) gap_total += series.values[m];
    }
    const double factor = gap_total / donor_total;

    for (size_t s = 0; s < set.size(); ++s) {
        double donor_sum = 0.0, gap_sum = 0.0;
        for (int m = 0; m < 24; ++m) {
            if (m >= 12 && m < 15) {
                gap_sum += result.at(s).values[m];
                donor_sum += set.at(s).values[m - 12];
            } else {
                CHECK(result.at(s).values[m] == set.at(s).values[m]);  // untouched
            }
        }
        CHECK_THAT(gap_sum, Catch::Matchers::WithinRel(factor * donor_sum, 1e-12));
    }
}

TEST_CASE("impute_gap error paths") {
    SeriesSet set({2013, 1}, 24);
    set.add(series_of("Tunas", {2013, 1}, std::vector<double>(24, 0.0)));

    SECTION("zero donor-year basis total") {
        CHECK_THROWS_WITH(
            impute_gap(set, {{2014, 1}, {2014, 3}}, {{2013, 1}, {2013, 3}}, {4, 12}),
            Catch::Matchers::ContainsSubstring("donor-year basis total is zero"));
    }
    SECTION("overlapping gap and donor") {
        CHECK_THROWS_WITH(
            impute_gap(set, {{2013, 2}, {2013, 4}}, {{2013, 1}, {2013, 3}}, {5, 12}),
            Catch::Matchers::ContainsSubstring("overlaps"));
    }
    SECTION("gap outside span") {
        CHECK_THROWS_AS(
            impute_gap(set, {{2015, 1}, {2015, 3}}, {{2013, 1}, {2013, 3}}, {4, 12}),
            ValidationError);
    }
    SECTION("length mismatch") {
        CHECK_THROWS_AS(
            impute_gap(set, {{2014, 1}, {2014, 4}}, {{2013, 1}, {2013, 3}}, {5, 12}),
            ValidationError);
    }
}

TEST_CASE("normalize rescales to [0, 1]") {
    const YearMonth start{2010, 1};
    CHECK(normalize(series_of("a", start, {2, 4, 6})).values ==
          std::vector<double>{0.0, 0.5, 1.0});
    CHECK(normalize(series_of("b", start, {5, 5, 5})).values ==
          std::vector<double>{0.0, 0.0, 0.0});
    CHECK(normalize(series_of("c", start, {0, 1})).values == std::vector<double>{0.0, 1.0});
}

TEST_CASE("normalize is idempotent and order-preserving") {
    std::mt19937 rng(7003);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<double> values(12);
        for (double& v : values) v = static_cast<double>(rng() % 100000) / 7.0;
        const TimeSeries once = normalize(series_of("x", {2010, 1}, values));
        const TimeSeries twice = normalize(once);
        CHECK(once.values == twice.values);
        CHECK(once.is_normalized());
        for (size_t i = 0; i < values.size(); ++i) {
            for (size_t j = 0; j < values.size(); ++j) {
                if (values[i] <= values[j]) {
                    CHECK(once.values[i] <= once.values[j]);
                }
            }
        }
    }
}

TEST_CASE("normalize refuses missing values") {
    CHECK_THROWS_WITH(normalize(series_of("x", {2010, 1}, {1.0, std::nan(""), 3.0})),
                      Catch::Matchers::ContainsSubstring("impute"));
    CHECK_THROWS_AS(normalize(series_of("x", {2010, 1}, {})), ValidationError);
}

TEST_CASE("slice_year extracts January through December") {
    SeriesSet set({2010, 1}, 96);
    std::mt19937 rng(7004);
    for (int s = 0; s < 28; ++s) {
        std::vector<double> values(96);
        for (double& v : values) v = static_cast<double>(rng() % 1000);
        set.add(series_of("s" + std::to_string(s), {2010, 1}, values));
    }

    const SeriesSet slice = slice_year(set, 2012);
    CHECK(slice.size() == 28);
    CHECK(slice.start() == YearMonth{2012, 1});
    CHECK(slice.month_count() == 12);
    CHECK(slice.at(3).values ==
          std::vector<double>(set.at(3).values.begin() + 24, set.at(3).values.begin() + 36));

    SECTION("slicing every year re-concatenates to the original") {
        for (size_t s = 0; s < set.size(); ++s) {
            std::vector<double> rebuilt;
            for (int year = 2010; year <= 2017; ++year) {
                const SeriesSet piece = slice_year(set, year);
                rebuilt.insert(rebuilt.end(), piece.at(s).values.begin(),
                               piece.at(s).values.end());
            }
            CHECK(rebuilt == set.at(s).values);
        }
    }

    SECTION("year outside the span") {
        CHECK_THROWS_AS(slice_year(set, 2009), ValidationError);
        CHECK_THROWS_AS(slice_year(set, 2018), ValidationError);
    }
}

TEST_CASE("zero_fill and require_complete") {
    SeriesSet set({2010, 1}, 3);
    set.add(series_of("x", {2010, 1}, {1.0, std::nan(""), 3.0}));
    CHECK_THROWS_AS(require_complete(set), ValidationError);

    const SeriesSet filled = zero_fill(set);
    CHECK(filled.at(0).values == std::vector<double>{1.0, 0.0, 3.0});
    CHECK_NOTHROW(require_complete(filled));
}

TEST_CASE("merge_sets keeps labels globally unique") {
    SeriesSet islands({2010, 1}, 3);
    islands.add(series_of("Pico", {2010, 1}, {1, 2, 3}, Kind::Island));
    SeriesSet metiers({2010, 1}, 3);
    metiers.add(series_of("LHP-PB", {2010, 1}, {4, 5, 6}, Kind::Metier));

    const SeriesSet merged = merge_sets({islands, metiers});
    CHECK(merged.size() == 2);

    SeriesSet clash({2010, 1}, 3);
    clash.add(series_of("Pico", {2010, 1}, {7, 8, 9}, Kind::Metier));
    CHECK_THROWS_WITH(merge_sets({islands, clash}),
                      Catch::Matchers::ContainsSubstring("globally unique"));
}

TEST_CASE("series set rejects grid mismatches and duplicates") {
    SeriesSet set({2010, 1}, 3);
    set.add(series_of("a", {2010, 1}, {1, 2, 3}));
    CHECK_THROWS_AS(set.add(series_of("a", {2010, 1}, {1, 2, 3})), ValidationError);
    CHECK_THROWS_AS(set.add(series_of("b", {2010, 2}, {1, 2, 3})), ValidationError);
    CHECK_THROWS_AS(set.add(series_of("c", {2010, 1}, {1, 2})), ValidationError);
}
