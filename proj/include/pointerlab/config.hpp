#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace pointerlab {

/// Flat key-value configuration: one `key = value` pair per line, `#` starts
/// a comment, keys use dotted section prefixes (`compton.wavelength_m`) with
/// SI units in the key names. Typed getters mark keys as consumed;
/// require_all_consumed() rejects anything left over, so misspelled keys
/// fail loudly instead of being ignored.
class KeyValueConfig {
 public:
  static KeyValueConfig parse_file(const std::string& path);
  static KeyValueConfig parse_text(std::string_view text);

  /// Override (or add) a key, as from a --set flag. Applied after file values.
  void set(const std::string& key, const std::string& value);

  bool has(const std::string& key) const;

  double get_double(const std::string& key, double fallback);
  std::uint64_t get_uint(const std::string& key, std::uint64_t fallback);
  std::string get_string(const std::string& key, const std::string& fallback);

  /// Reads `<base>_rad` or `<base>_deg` (not both), returning radians.
  double get_angle_rad(const std::string& key_base, double fallback_rad);

  /// Throws ConfigError naming the first key no getter asked for.
  void require_all_consumed() const;

 private:
  struct Entry {
    std::string value;
    int line = 0;
    bool consumed = false;
  };

  Entry* find(const std::string& key);
  std::map<std::string, Entry> entries_;
};

}  // namespace pointerlab
