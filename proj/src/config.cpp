#include "pointerlab/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <numbers>
#include <sstream>

#include "pointerlab/errors.hpp"

namespace pointerlab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_key(std::string_view key) {
  if (key.empty()) return false;
  for (char c : key) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.') return false;
  }
  return true;
}

double parse_double(const std::string& key, int line, std::string_view text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw ConfigError(key, line, "expected a number, got '" + std::string(text) + "'");
  return value;
}

std::uint64_t parse_uint(const std::string& key, int line, std::string_view text) {
  std::uint64_t value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw ConfigError(key, line, "expected a non-negative integer, got '" + std::string(text) + "'");
  return value;
}

}  // namespace

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", 0, "cannot read config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_text(buffer.str());
}

KeyValueConfig KeyValueConfig::parse_text(std::string_view text) {
  KeyValueConfig cfg;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("", line_no, "expected 'key = value'");
    const std::string key{trim(line.substr(0, eq))};
    const std::string value{trim(line.substr(eq + 1))};
    if (!valid_key(key))
      throw ConfigError(key, line_no, "key must be non-empty [A-Za-z0-9_.]");
    if (value.empty())
      throw ConfigError(key, line_no, "value must be non-empty");
    if (cfg.entries_.count(key))
      throw ConfigError(key, line_no, "duplicate key");
    cfg.entries_[key] = Entry{value, line_no, false};
  }
  return cfg;
}

void KeyValueConfig::set(const std::string& key, const std::string& value) {
  if (!valid_key(key)) throw ConfigError(key, 0, "key must be non-empty [A-Za-z0-9_.]");
  if (value.empty()) throw ConfigError(key, 0, "value must be non-empty");
  entries_[key] = Entry{value, 0, false};
}

bool KeyValueConfig::has(const std::string& key) const { return entries_.count(key) > 0; }

KeyValueConfig::Entry* KeyValueConfig::find(const std::string& key) {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return nullptr;
  it->second.consumed = true;
  return &it->second;
}

double KeyValueConfig::get_double(const std::string& key, double fallback) {
  Entry* e = find(key);
  return e ? parse_double(key, e->line, e->value) : fallback;
}

std::uint64_t KeyValueConfig::get_uint(const std::string& key, std::uint64_t fallback) {
  Entry* e = find(key);
  return e ? parse_uint(key, e->line, e->value) : fallback;
}

std::string KeyValueConfig::get_string(const std::string& key, const std::string& fallback) {
  Entry* e = find(key);
  return e ? e->value : fallback;
}

double KeyValueConfig::get_angle_rad(const std::string& key_base, double fallback_rad) {
  const std::string rad_key = key_base + "_rad";
  const std::string deg_key = key_base + "_deg";
  const bool has_rad = has(rad_key);
  const bool has_deg = has(deg_key);
  if (has_rad && has_deg)
    throw ConfigError(rad_key, 0, "give either " + rad_key + " or " + deg_key + ", not both");
  if (has_rad) return get_double(rad_key, 0.0);
  if (has_deg) return get_double(deg_key, 0.0) * std::numbers::pi / 180.0;
  return fallback_rad;
}

void KeyValueConfig::require_all_consumed() const {
  for (const auto& [key, entry] : entries_) {
    if (!entry.consumed)
      throw ConfigError(key, entry.line, "unknown key for this experiment");
  }
}

}  // namespace pointerlab
