#include "pcamce/params.hpp"

#include <array>

namespace pcamce {
namespace {

constexpr std::array<ParameterSet, 3> kSets{{
    {"tiny", 4, 2, "k=8, small enough for exhaustive scans"},
    {"small", 6, 4, "k=40"},
    {"classic", 10, 50, "k=524, the original McEliece sizes"},
}};

}  // namespace

std::span<const ParameterSet> parameter_sets() { return kSets; }

std::optional<ParameterSet> find_parameter_set(std::string_view name) {
  for (const auto& p : kSets)
    if (p.name == name) return p;
  return std::nullopt;
}

}  // namespace pcamce
