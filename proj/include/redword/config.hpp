#pragma once

#include <cstdint>
#include <string>

namespace redword {

enum class OutputFormat { Text, Json, Dot };

OutputFormat parse_output_format(const std::string& text);
const char* to_string(OutputFormat f);

struct Config {
  int max_degree = 8;
  int exhaustive_cap = 6;
  std::uint64_t rng_seed = 0;
  OutputFormat output_format = OutputFormat::Text;
  std::uint64_t max_words = 4'000'000;
};

/// Reads `key = value` lines over `cfg`; blank lines and `#` comments are
/// ignored. Throws std::runtime_error on an unreadable file, unknown key or
/// bad value.
void load_config_file(const std::string& path, Config& cfg);

/// Applies REDWORD_MAX_N if set. Throws std::runtime_error on a bad value.
void apply_environment(Config& cfg);

}  // namespace redword
