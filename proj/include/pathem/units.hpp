#ifndef PATHEM_UNITS_HPP
#define PATHEM_UNITS_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "pathem/time.hpp"

namespace pathem {

// Durations: "500ns", "10us", "10ms", "1.5s", or a bare integer (ns).
Duration parse_duration(std::string_view text);

// Rates in bits per second: "100Mbps", "2Mbps", "1Gbps", "800Kbps", "50bps",
// or a bare integer (bits/s). Decimal prefixes (networking convention):
// 1 Mbps = 10^6 bits/s.
std::uint64_t parse_rate_bps(std::string_view text);

// Byte counts: "1500B", "15KB" (decimal), "4KiB" (binary), or a bare integer.
std::uint64_t parse_size_bytes(std::string_view text);

std::string format_duration(Duration d);
std::string format_rate_bps(std::uint64_t bps);

}  // namespace pathem

#endif
