#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "core/landings.hpp"

using namespace fishnet;

namespace {

std::vector<LandingRecord> parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_landings_csv(in, "test.csv");
}

constexpr const char* kHeader = "id,date,island,harbor,classification,metier,weight_kg\n";

}  // namespace

TEST_CASE("parse_landings_csv maps fields directly") {
    const auto records =
        parse_text(std::string(kHeader) + "L0001,2010-05-14,Pico,Madalena,Tunas,LHP-TUN,115.3\n");
    REQUIRE(records.size() == 1);
    const auto& rec = records[0];
    CHECK(rec.id == "L0001");
    CHECK(rec.date == Date{2010, 5, 14});
    CHECK(rec.island == "Pico");
    CHECK(rec.harbor == "Madalena");
    CHECK(rec.classification == "Tunas");
    CHECK(rec.metier == "LHP-TUN");
    CHECK(rec.weight_kg == 115.3);
}

TEST_CASE("parse_landings_csv accepts an empty file with a valid header") {
    CHECK(parse_text(kHeader).empty());
}

TEST_CASE("parse_landings_csv errors cite the offending line") {
    SECTION("negative weight on line 2") {
        CHECK_THROWS_WITH(
            parse_text(std::string(kHeader) + "L1,2010-05-14,Pico,Madalena,Tunas,LHP-TUN,-5\n"),
            Catch::Matchers::ContainsSubstring("test.csv:2") &&
                Catch::Matchers::ContainsSubstring("negative weight"));
    }
    SECTION("unparsable date") {
        CHECK_THROWS_WITH(
            parse_text(std::string(kHeader) + "L1,May 2010,Pico,Madalena,Tunas,LHP-TUN,5\n"),
            Catch::Matchers::ContainsSubstring("test.csv:2"));
    }
    SECTION("impossible calendar date") {
        CHECK_THROWS_AS(
            parse_text(std::string(kHeader) + "L1,2010-02-30,Pico,Madalena,Tunas,LHP-TUN,5\n"),
            ValidationError);
    }
    SECTION("unparsable weight") {
        CHECK_THROWS_WITH(
            parse_text(std::string(kHeader) + "L1,2010-05-14,Pico,Madalena,Tunas,LHP-TUN,heavy\n"),
            Catch::Matchers::ContainsSubstring("weight"));
    }
}

TEST_CASE("parse_landings_csv names a missing column") {
    CHECK_THROWS_WITH(parse_text("id,date,island,harbor,classification,weight_kg\nx\n"),
                      Catch::Matchers::ContainsSubstring("missing required column 'metier'"));
}

TEST_CASE("parse_landings_csv ignores extra columns") {
    const auto records = parse_text(
        "id,date,island,harbor,classification,metier,weight_kg,vessel\n"
        "L1,2010-05-14,Pico,Madalena,Tunas,LHP-TUN,5.0,Boat A\n");
    REQUIRE(records.size() == 1);
    CHECK(records[0].weight_kg == 5.0);
}

TEST_CASE("parse_landings_csv handles quoted fields and empty file") {
    const auto records = parse_text(std::string(kHeader) +
                                    "L1,2010-05-14,Pico,Madalena,\"Tunas, large\",LHP-TUN,5.0\n");
    REQUIRE(records.size() == 1);
    CHECK(records[0].classification == "Tunas, large");

    std::istringstream empty("");
    CHECK_THROWS_WITH(parse_landings_csv(empty, "empty.csv"),
                      Catch::Matchers::ContainsSubstring("header"));
}

namespace {

LandingRecord make(const std::string& harbor, const std::string& cls, const std::string& metier,
                   int year = 2012) {
    LandingRecord rec;
    rec.id = "L";
    rec.date = {year, 6, 15};
    rec.island = "Pico";
    rec.harbor = harbor;
    rec.classification = cls;
    rec.metier = metier;
    rec.weight_kg = 1.0;
    return rec;
}

const ExclusionConfig kDefaultExclusions{
    {"Angra do Heroísmo", "Povoação"},
    {"Crustaceans", "Other Spp"},
    {"FPO-CRU", "NEI"},
};

}  // namespace

TEST_CASE("apply_exclusions drops the configured items record-wise") {
    const MonthRange window{{2010, 1}, {2017, 12}};
    const std::vector<LandingRecord> records{
        make("Madalena", "Tunas", "LHP-TUN"),
        make("Madalena", "Tunas", "NEI"),
        make("Povoação", "Tunas", "LHP-TUN"),
        make("Angra do Heroísmo", "Tunas", "LHP-TUN"),
        make("Madalena", "Crustaceans", "FPO-CRU"),
        make("Madalena", "Other Spp", "LHP-TUN"),
        make("Madalena", "Tunas", "LHP-TUN", 2019),  // outside the window
    };

    DropLog log;
    const auto kept = apply_exclusions(records, kDefaultExclusions, window, &log);
    REQUIRE(kept.size() == 1);
    CHECK(kept[0].classification == "Tunas");
    CHECK(log.total() + kept.size() == records.size());
    CHECK(log.outside_window == 1);
    CHECK(log.excluded_harbor == 2);
    CHECK(log.excluded_classification == 2);
    CHECK(log.excluded_metier == 1);
}

TEST_CASE("apply_exclusions with empty lists is the identity inside the window") {
    const MonthRange window{{2010, 1}, {2017, 12}};
    const std::vector<LandingRecord> records{
        make("Madalena", "Tunas", "LHP-TUN"),
        make("Povoação", "Crustaceans", "NEI"),
    };
    const auto kept = apply_exclusions(records, {}, window);
    CHECK(kept.size() == records.size());
}

TEST_CASE("apply_exclusions agrees with a brute-force filter on a random fixture") {
    const MonthRange window{{2010, 1}, {2017, 12}};
    const std::vector<std::string> harbors{"Madalena", "Povoação", "Horta"};
    const std::vector<std::string> classes{"Tunas", "Crustaceans", "Mollusks"};
    const std::vector<std::string> metiers{"LHP-TUN", "NEI", "LLS-PD"};

    std::mt19937 rng(7010);
    std::vector<LandingRecord> records;
    for (int i = 0; i < 50; ++i) {
        records.push_back(make(harbors[rng() % 3], classes[rng() % 3], metiers[rng() % 3],
                               2010 + static_cast<int>(rng() % 8)));
    }

    size_t expected = 0;
    for (const auto& rec : records) {
        const bool dropped = rec.harbor == "Povoação" || rec.classification == "Crustaceans" ||
                             rec.metier == "NEI";
        if (!dropped) ++expected;
    }
    CHECK(apply_exclusions(records, kDefaultExclusions, window).size() == expected);
}

TEST_CASE("summary_table groups, sums and sorts") {
    const std::vector<LandingRecord> records{
        make("Madalena", "Tunas", "LHP-TUN"),      // 1 kg
        make("Madalena", "Tunas", "LHP-TUN"),      // 1 kg
        make("Madalena", "Mollusks", "LHP-CEF"),   // 1 kg
        make("Madalena", "Mollusks", "LHP-CEF"),
        make("Madalena", "Mollusks", "LHP-CEF"),
        make("Madalena", "Demersals", "LLS-PD"),
    };

    const auto rows = summary_table(records, Kind::Classification);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].label == "Mollusks");  // 3 kg
    CHECK(rows[0].landings == 3);
    CHECK(rows[0].total_weight == 3.0);
    CHECK(rows[1].label == "Tunas");  // 2 kg
    CHECK(rows[2].label == "Demersals");

    SECTION("group totals partition the grand total") {
        double total = 0.0;
        size_t count = 0;
        for (const auto& row : rows) {
            total += row.total_weight;
            count += row.landings;
        }
        CHECK(total == 6.0);
        CHECK(count == records.size());
    }

    SECTION("metier table mirrors the structure") {
        const auto metier_rows = summary_table(records, Kind::Metier);
        REQUIRE(metier_rows.size() == 3);
        CHECK(metier_rows[0].label == "LHP-CEF");
    }

    SECTION("empty input is an error") {
        CHECK_THROWS_AS(summary_table({}, Kind::Classification), ValidationError);
    }
}
