#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace pcamce {

struct ParameterSet {
  std::string_view name;
  unsigned m;
  std::size_t t;
  std::string_view notes;

  std::size_t code_len() const { return std::size_t{1} << m; }
  std::size_t code_dim() const { return code_len() - m * t; }
};

/// Built-in sets, in increasing size.
std::span<const ParameterSet> parameter_sets();
std::optional<ParameterSet> find_parameter_set(std::string_view name);

/// Environment variable naming the default set for the CLI.
inline constexpr const char* kParamSetEnv = "PCAMCE_PARAM_SET";

}  // namespace pcamce
