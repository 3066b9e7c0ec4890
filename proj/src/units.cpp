#include "pathem/units.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

#include "pathem/error.hpp"

namespace pathem {
namespace {

struct NumberAndSuffix {
  long double value;
  std::string suffix;
};

NumberAndSuffix split(std::string_view text, const char* what) {
  std::string trimmed;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
  }
  if (trimmed.empty()) throw ParseError(std::string("empty ") + what);
  std::size_t i = 0;
  while (i < trimmed.size() &&
         (std::isdigit(static_cast<unsigned char>(trimmed[i])) || trimmed[i] == '.')) {
    ++i;
  }
  if (i == 0) throw ParseError(std::string("bad ") + what + ": \"" + trimmed + "\"");
  long double v;
  try {
    v = std::stold(trimmed.substr(0, i));
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + ": \"" + trimmed + "\"");
  }
  return {v, trimmed.substr(i)};
}

std::uint64_t checked_u64(long double v, std::string_view original, const char* what) {
  if (v < 0 || v > 1.8e19L || std::isnan(static_cast<double>(v))) {
    throw ParseError(std::string("out-of-range ") + what + ": \"" + std::string(original) + "\"");
  }
  long double rounded = std::floor(v + 0.5L);
  if (std::fabs(v - rounded) > 1e-6L * (rounded > 1 ? rounded : 1)) {
    throw ParseError(std::string(what) + " must be integral: \"" + std::string(original) + "\"");
  }
  return static_cast<std::uint64_t>(rounded);
}

}  // namespace

Duration parse_duration(std::string_view text) {
  auto [v, suffix] = split(text, "duration");
  long double ns;
  if (suffix == "ns" || suffix.empty()) {
    ns = v;
  } else if (suffix == "us") {
    ns = v * 1e3L;
  } else if (suffix == "ms") {
    ns = v * 1e6L;
  } else if (suffix == "s") {
    ns = v * 1e9L;
  } else {
    throw ParseError("unrecognized duration unit: \"" + std::string(text) + "\"");
  }
  return Duration::ns(static_cast<std::int64_t>(checked_u64(ns, text, "duration")));
}

std::uint64_t parse_rate_bps(std::string_view text) {
  auto [v, suffix] = split(text, "rate");
  long double bps;
  if (suffix == "bps" || suffix.empty()) {
    bps = v;
  } else if (suffix == "Kbps" || suffix == "kbps") {
    bps = v * 1e3L;
  } else if (suffix == "Mbps" || suffix == "mbps") {
    bps = v * 1e6L;
  } else if (suffix == "Gbps" || suffix == "gbps") {
    bps = v * 1e9L;
  } else {
    throw ParseError("unrecognized rate unit: \"" + std::string(text) + "\"");
  }
  std::uint64_t r = checked_u64(bps, text, "rate");
  if (r == 0) throw ParseError("rate must be > 0: \"" + std::string(text) + "\"");
  return r;
}

std::uint64_t parse_size_bytes(std::string_view text) {
  auto [v, suffix] = split(text, "size");
  long double b;
  if (suffix == "B" || suffix.empty()) {
    b = v;
  } else if (suffix == "KB") {
    b = v * 1e3L;
  } else if (suffix == "MB") {
    b = v * 1e6L;
  } else if (suffix == "GB") {
    b = v * 1e9L;
  } else if (suffix == "KiB") {
    b = v * 1024.0L;
  } else if (suffix == "MiB") {
    b = v * 1024.0L * 1024.0L;
  } else if (suffix == "GiB") {
    b = v * 1024.0L * 1024.0L * 1024.0L;
  } else {
    throw ParseError("unrecognized size unit: \"" + std::string(text) + "\"");
  }
  return checked_u64(b, text, "size");
}

std::string format_duration(Duration d) {
  std::int64_t ns = d.count_ns();
  char buf[64];
  if (ns % 1000000000 == 0) {
    std::snprintf(buf, sizeof buf, "%llds", static_cast<long long>(ns / 1000000000));
  } else if (ns % 1000000 == 0) {
    std::snprintf(buf, sizeof buf, "%lldms", static_cast<long long>(ns / 1000000));
  } else if (ns % 1000 == 0) {
    std::snprintf(buf, sizeof buf, "%lldus", static_cast<long long>(ns / 1000));
  } else {
    std::snprintf(buf, sizeof buf, "%lldns", static_cast<long long>(ns));
  }
  return buf;
}

std::string format_rate_bps(std::uint64_t bps) {
  char buf[64];
  if (bps % 1000000000 == 0) {
    std::snprintf(buf, sizeof buf, "%lluGbps", static_cast<unsigned long long>(bps / 1000000000));
  } else if (bps % 1000000 == 0) {
    std::snprintf(buf, sizeof buf, "%lluMbps", static_cast<unsigned long long>(bps / 1000000));
  } else if (bps % 1000 == 0) {
    std::snprintf(buf, sizeof buf, "%lluKbps", static_cast<unsigned long long>(bps / 1000));
  } else {
    std::snprintf(buf, sizeof buf, "%llubps", static_cast<unsigned long long>(bps));
  }
  return buf;
}

std::string Duration::str() const { return format_duration(*this); }
std::string Timestamp::str() const { return std::to_string(ns_) + "ns"; }

}  // namespace pathem
