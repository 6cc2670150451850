#include "core/synth.hpp"

#include <cmath>
#include <cstdio>
#include <random>

namespace fishnet {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kNoise = 0.05;

struct GroupDesign {
    std::vector<std::pair<std::string, std::string>> island_harbors;  // island, harbor
    std::vector<std::string> metiers;
    std::vector<std::string> classifications;
};

// 28 labels after default exclusions: 5 islands, 12 metiers, 11
// classifications, split into three latent groups.
const std::vector<GroupDesign>& designs() {
    static const std::vector<GroupDesign> groups = {
        {
            {{"São Miguel", "Ponta Delgada"}, {"Terceira", "Praia da Vitória"}},
            {"LHP-TUN", "LLS-PD", "PS-PPP", "LLD-PP"},
            {"Tunas", "Continental Shelf Slope Demersals", "Small Pelagics", "Deep-Sea Species"},
        },
        {
            {{"Pico", "Madalena"}, {"Faial", "Horta"}},
            {"LHP-PB", "LLS-DEEP", "LHP-CEF", "GNS-PB"},
            {"Continental Shelf Slope Benthopelagic", "Demersals", "Mollusks",
             "Coastal Demersals"},
        },
        {
            {{"Santa Maria", "Vila do Porto"}},
            {"LLD-GPP", "PS-PB", "LHP-PBC", "FPO-PB"},
            {"Large Migratory Pelagics", "Coastal Pelagics", "Small Coastal Demersals"},
        },
    };
    return groups;
}

// Group-specific seasonal mean weight in kg for month 1..12.
double pattern(int group, int month) {
    const double phase = 2.0 * kPi * static_cast<double>(month) / 12.0;
    switch (group) {
        case 0: return 260.0 + 180.0 * std::sin(phase);
        case 1: return 260.0 + 180.0 * std::sin(phase + kPi);
        default: return 230.0 + 150.0 * std::sin(2.0 * phase);
    }
}

// Portable uniform in [0, 1): fixed mapping from the raw 64-bit stream so
// the byte-identical-output contract does not depend on libstdc++ details.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string next_id(size_t& counter) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "L%06zu", ++counter);
    return buf;
}

}  // namespace

const std::map<std::string, int>& synthetic_label_groups() {
    static const std::map<std::string, int> groups = [] {
        std::map<std::string, int> out;
        for (size_t g = 0; g < designs().size(); ++g) {
            const auto& design = designs()[g];
            for (const auto& [island, harbor] : design.island_harbors) {
                out.emplace(island, static_cast<int>(g));
            }
            for (const auto& metier : design.metiers) out.emplace(metier, static_cast<int>(g));
            for (const auto& cls : design.classifications) out.emplace(cls, static_cast<int>(g));
        }
        return out;
    }();
    return groups;
}

std::vector<LandingRecord> generate_landings(const SyntheticSpec& spec) {
    if (spec.last_year < spec.first_year) {
        throw ValidationError("generate_landings: empty year range");
    }
    std::mt19937_64 rng(spec.seed);
    std::vector<LandingRecord> records;
    size_t counter = 0;

    for (int year = spec.first_year; year <= spec.last_year; ++year) {
        for (int month = 1; month <= 12; ++month) {
            // The 2014 first quarter stays empty; imputation fills it later.
            const bool gap = year == 2014 && month <= 3;

            if (!gap) {
                for (size_t g = 0; g < designs().size(); ++g) {
                    const auto& design = designs()[g];
                    const double base = pattern(static_cast<int>(g), month);
                    for (const auto& [island, harbor] : design.island_harbors) {
                        for (const auto& metier : design.metiers) {
                            for (const auto& cls : design.classifications) {
                                const double noise = (uniform01(rng) * 2.0 - 1.0) * kNoise;
                                LandingRecord rec;
                                rec.id = next_id(counter);
                                rec.date = {year, month,
                                            static_cast<int>(counter * 7 % 28) + 1};
                                rec.island = island;
                                rec.harbor = harbor;
                                rec.classification = cls;
                                rec.metier = metier;
                                rec.weight_kg = base * (1.0 + noise);
                                records.push_back(std::move(rec));
                            }
                        }
                    }
                }
            }

            // Sparse decoys carrying the default-excluded labels; they cover
            // all six exclusion targets and must vanish from any default run.
            if (month == 6) {
                const double w = 3.0 + uniform01(rng);
                records.push_back({next_id(counter), {year, month, 2}, "São Miguel", "Povoação",
                                   "Tunas", "LHP-TUN", w});
                records.push_back({next_id(counter), {year, month, 3}, "Terceira",
                                   "Angra do Heroísmo", "Demersals", "LHP-PB", w});
                records.push_back({next_id(counter), {year, month, 4}, "Pico", "Madalena",
                                   "Crustaceans", "FPO-CRU", w});
                records.push_back({next_id(counter), {year, month, 5}, "Faial", "Horta",
                                   "Other Spp", "NEI", w});
            }
        }
    }
    return records;
}

}  // namespace fishnet
