#ifndef PATHEM_CELLS_CONFIG_UTIL_HPP
#define PATHEM_CELLS_CONFIG_UTIL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathem/cell.hpp"
#include "pathem/units.hpp"

namespace pathem::cfg {

/// Collects field-level problems while reading a kind config document.
struct Reader {
  const Json& doc;
  std::vector<Diagnostic> diags;

  void fail(const std::string& field, const std::string& message) {
    diags.push_back(Diagnostic{"", field, message});
  }

  bool has(const char* key) const { return doc.is_object() && doc.contains(key); }

  /// Duration field: "10ms" or integer nanoseconds.
  std::optional<Duration> duration(const char* key) {
    if (!has(key)) return std::nullopt;
    const Json& v = doc.at(key);
    try {
      if (v.is_number_integer()) return Duration::ns(v.get<std::int64_t>());
      if (v.is_string()) return parse_duration(v.get<std::string>());
    } catch (const ParseError& e) {
      fail(key, e.what());
      return std::nullopt;
    }
    fail(key, "expected a duration string or integer nanoseconds");
    return std::nullopt;
  }

  /// Rate field in bits/s: "100Mbps" or integer bits/s.
  std::optional<std::uint64_t> rate_bps(const char* key) {
    if (!has(key)) return std::nullopt;
    const Json& v = doc.at(key);
    try {
      if (v.is_number_unsigned() || v.is_number_integer()) {
        auto r = v.get<std::int64_t>();
        if (r <= 0) {
          fail(key, "rate must be > 0");
          return std::nullopt;
        }
        return static_cast<std::uint64_t>(r);
      }
      if (v.is_string()) return parse_rate_bps(v.get<std::string>());
    } catch (const ParseError& e) {
      fail(key, e.what());
      return std::nullopt;
    }
    fail(key, "expected a rate string or integer bits/s");
    return std::nullopt;
  }

  /// Size field in bytes: "15KB" or integer bytes.
  std::optional<std::uint64_t> size_bytes(const char* key) {
    if (!has(key)) return std::nullopt;
    const Json& v = doc.at(key);
    try {
      if (v.is_number_unsigned() || v.is_number_integer()) {
        auto r = v.get<std::int64_t>();
        if (r < 0) {
          fail(key, "size must be >= 0");
          return std::nullopt;
        }
        return static_cast<std::uint64_t>(r);
      }
      if (v.is_string()) return parse_size_bytes(v.get<std::string>());
    } catch (const ParseError& e) {
      fail(key, e.what());
      return std::nullopt;
    }
    fail(key, "expected a size string or integer bytes");
    return std::nullopt;
  }

  std::optional<double> probability(const char* key) {
    if (!has(key)) return std::nullopt;
    const Json& v = doc.at(key);
    if (!v.is_number()) {
      fail(key, "expected a number in [0,1]");
      return std::nullopt;
    }
    double p = v.get<double>();
    if (p < 0.0 || p > 1.0) {
      fail(key, "probability out of range [0,1]");
      return std::nullopt;
    }
    return p;
  }

  std::optional<std::uint64_t> u64(const char* key) {
    if (!has(key)) return std::nullopt;
    const Json& v = doc.at(key);
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
      return static_cast<std::uint64_t>(v.get<std::int64_t>());
    }
    fail(key, "expected a non-negative integer");
    return std::nullopt;
  }

  std::optional<std::string> string(const char* key) {
    if (!has(key)) return std::nullopt;
    const Json& v = doc.at(key);
    if (v.is_string()) return v.get<std::string>();
    fail(key, "expected a string");
    return std::nullopt;
  }

  std::optional<bool> boolean(const char* key) {
    if (!has(key)) return std::nullopt;
    const Json& v = doc.at(key);
    if (v.is_boolean()) return v.get<bool>();
    fail(key, "expected a boolean");
    return std::nullopt;
  }
};

/// Queue bound: droptail by packet count or byte count.
struct QueueLimit {
  enum class Unit { Packets, Bytes, Unbounded };
  Unit unit = Unit::Unbounded;
  std::uint64_t value = 0;

  bool admits(std::uint64_t queued_packets, std::uint64_t queued_bytes,
              std::uint64_t incoming_bytes) const {
    switch (unit) {
      case Unit::Packets:
        return queued_packets < value;
      case Unit::Bytes:
        return queued_bytes + incoming_bytes <= value;
      case Unit::Unbounded:
        return true;
    }
    return true;
  }

  Json to_json() const;
};

/// Reads {"policy":"droptail","limit":{"packets":N}} / {"limit":{"bytes":N}}.
/// "len" is accepted as an alias for limit.packets. Missing key leaves the
/// provided default untouched.
QueueLimit read_queue(Reader& r, const char* key, QueueLimit def, bool require_limit);

/// Uniform deviate in [0,1) from a 64-bit draw; keeps loss decision streams
/// identical across platforms.
inline double canonical_u01(std::uint64_t raw) {
  return static_cast<double>(raw >> 11) * (1.0 / 9007199254740992.0);
}

}  // namespace pathem::cfg

#endif
