#include "redword/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace redword {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || end != value.data() + value.size())
    throw std::runtime_error("config: bad value '" + value + "' for " + key);
  return out;
}

int parse_degree(const std::string& key, const std::string& value) {
  const int n = parse_number<int>(key, value);
  if (n < 1 || n > 16) throw std::runtime_error("config: " + key + " must be in 1..16");
  return n;
}

}  // namespace

OutputFormat parse_output_format(const std::string& text) {
  if (text == "text") return OutputFormat::Text;
  if (text == "json") return OutputFormat::Json;
  if (text == "dot") return OutputFormat::Dot;
  throw std::runtime_error("unknown output format '" + text + "'");
}

const char* to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Json: return "json";
    case OutputFormat::Dot: return "dot";
  }
  return "?";
}

void load_config_file(const std::string& path, Config& cfg) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot read " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key == "max_degree")
      cfg.max_degree = parse_degree(key, value);
    else if (key == "exhaustive_cap")
      cfg.exhaustive_cap = parse_degree(key, value);
    else if (key == "rng_seed")
      cfg.rng_seed = parse_number<std::uint64_t>(key, value);
    else if (key == "output_format")
      cfg.output_format = parse_output_format(value);
    else if (key == "max_words")
      cfg.max_words = parse_number<std::uint64_t>(key, value);
    else
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
}

void apply_environment(Config& cfg) {
  if (const char* v = std::getenv("REDWORD_MAX_N"); v && *v) cfg.max_degree = parse_degree("REDWORD_MAX_N", v);
}

}  // namespace redword
