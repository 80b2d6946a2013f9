#include "eefx/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "eefx/errors.hpp"

namespace eefx {

namespace {

std::uint64_t parse_number(std::string_view key, std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InputError("cap " + std::string(key) + " needs a nonnegative integer, got \"" + std::string(text) + "\"");
  return value;
}

int parse_int(std::string_view key, std::string_view text) {
  const auto v = parse_number(key, text);
  if (v > 64) throw InputError("cap " + std::string(key) + " must be at most 64");
  return static_cast<int>(v);
}

}  // namespace

Caps parse_caps(std::string_view spec, Caps caps) {
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const auto entry = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (entry.empty()) continue;
    const auto eq = entry.find('=');
    if (eq == std::string_view::npos) throw InputError("cap entry \"" + std::string(entry) + "\" lacks '='");
    const auto key = entry.substr(0, eq);
    const auto value = entry.substr(eq + 1);
    if (key == "solve_items") caps.solve_items = parse_int(key, value);
    else if (key == "agents") caps.agents = parse_int(key, value);
    else if (key == "certificate_items") caps.certificate_items = parse_int(key, value);
    else if (key == "partition_items") caps.partition_items = parse_int(key, value);
    else if (key == "table_items") caps.table_items = parse_int(key, value);
    else if (key == "mnw_allocations") caps.mnw_allocations = parse_number(key, value);
    else throw InputError("unknown cap \"" + std::string(key) + "\"");
  }
  return caps;
}

Caps caps_from_env(Caps base) {
  if (const char* env = std::getenv("EEFX_CAPS")) return parse_caps(env, base);
  return base;
}

std::string format_caps(const Caps& c) {
  return "solve_items=" + std::to_string(c.solve_items) + ",agents=" + std::to_string(c.agents) +
         ",certificate_items=" + std::to_string(c.certificate_items) +
         ",partition_items=" + std::to_string(c.partition_items) + ",table_items=" + std::to_string(c.table_items) +
         ",mnw_allocations=" + std::to_string(c.mnw_allocations);
}

}  // namespace eefx
