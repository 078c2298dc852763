#ifndef UWOC_FIXTURES_HPP
#define UWOC_FIXTURES_HPP

#include <string>
#include <vector>

#include "uwoc/egg_channel.hpp"

namespace uwoc {

/// The frozen parameter sets every statistical tolerance in this repo is
/// pinned against. The JSON files under fixtures/ carry the same values;
/// a test asserts they stay in sync.
EggParams fixture_egg_a();
EggParams fixture_egg_b();
EggParams fixture_pure_exp();
EggParams fixture_pure_gg();

struct EggFixture {
    std::string name;
    std::string description;
    EggParams params;
};

EggFixture load_egg_fixture_file(const std::string& path);

/// Directory searched for <name>.json fixtures: $UWOC_FIXTURE_DIR if set,
/// otherwise ./fixtures.
std::string fixture_directory();

/// Loads <dir>/<name>.json; unknown files fall back to the built-in set so
/// the CLI works from any working directory.
EggParams load_fixture_by_name(const std::string& name);

}  // namespace uwoc

#endif
