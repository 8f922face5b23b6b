#ifndef DGCLIQUE_TESTS_GOLDEN_SETTINGS_HPP
#define DGCLIQUE_TESTS_GOLDEN_SETTINGS_HPP

#include <array>
#include <string>
#include <utility>

#include "dgclique/core.hpp"

namespace dgclique::testing {

inline constexpr std::array<std::pair<Timestamp, int>, 3> kGoldenSettings{
    {{2, 1}, {3, 2}, {4, 2}}};

inline std::string golden_name(Timestamp delta, int gamma) {
  return "fixture200.d" + std::to_string(delta) + "g" + std::to_string(gamma) +
         ".jsonl";
}

}  // namespace dgclique::testing

#endif  // DGCLIQUE_TESTS_GOLDEN_SETTINGS_HPP
