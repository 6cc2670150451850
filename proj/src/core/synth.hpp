#pragma once

#include <map>

#include "core/landings.hpp"

namespace fishnet {

/// Deterministic synthetic landings: three latent groups of labels, each
/// with its own seasonal weight pattern plus 5% multiplicative noise, so a
/// correct pipeline recovers the groups as network communities. The first
/// quarter of 2014 is left empty to exercise gap imputation, and a few
/// records per year carry the conventionally excluded harbors,
/// classifications and metiers.
struct SyntheticSpec {
    int first_year = 2010;
    int last_year = 2017;
    uint64_t seed = 42;
};

std::vector<LandingRecord> generate_landings(const SyntheticSpec& spec);

/// Latent group (0..2) of every label that survives the default exclusions.
const std::map<std::string, int>& synthetic_label_groups();

}  // namespace fishnet
