#ifndef PATHEM_TIME_HPP
#define PATHEM_TIME_HPP

#include <cstdint>
#include <compare>
#include <string>

namespace pathem {

/// Signed span of time in integer nanoseconds. All rate arithmetic in the
/// emulator rounds transmission times up to the next nanosecond so a cell
/// never emits faster than configured.
class Duration {
 public:
  constexpr Duration() = default;
  static constexpr Duration ns(std::int64_t v) { return Duration{v}; }
  static constexpr Duration us(std::int64_t v) { return Duration{v * 1000}; }
  static constexpr Duration ms(std::int64_t v) { return Duration{v * 1000000}; }
  static constexpr Duration sec(std::int64_t v) { return Duration{v * 1000000000}; }

  constexpr std::int64_t count_ns() const { return ns_; }
  constexpr double to_seconds() const { return static_cast<double>(ns_) * 1e-9; }

  constexpr auto operator<=>(const Duration&) const = default;
  constexpr Duration operator+(Duration o) const { return Duration{ns_ + o.ns_}; }
  constexpr Duration operator-(Duration o) const { return Duration{ns_ - o.ns_}; }
  constexpr Duration operator-() const { return Duration{-ns_}; }
  constexpr Duration operator*(std::int64_t k) const { return Duration{ns_ * k}; }
  constexpr Duration operator/(std::int64_t k) const { return Duration{ns_ / k}; }

  std::string str() const;

 private:
  constexpr explicit Duration(std::int64_t v) : ns_(v) {}
  std::int64_t ns_ = 0;
};

/// Instant on a channel's timeline, in nanoseconds since the channel epoch
/// (the moment the channel started running). Only meaningful within one
/// channel; values from a single clock are monotonically non-decreasing.
class Timestamp {
 public:
  constexpr Timestamp() = default;
  static constexpr Timestamp from_ns(std::uint64_t v) { return Timestamp{v}; }

  constexpr std::uint64_t ns() const { return ns_; }
  constexpr auto operator<=>(const Timestamp&) const = default;

  constexpr Timestamp operator+(Duration d) const {
    return Timestamp{ns_ + static_cast<std::uint64_t>(d.count_ns())};
  }
  constexpr Duration operator-(Timestamp o) const {
    return Duration::ns(static_cast<std::int64_t>(ns_) - static_cast<std::int64_t>(o.ns_));
  }

  std::string str() const;

 private:
  constexpr explicit Timestamp(std::uint64_t v) : ns_(v) {}
  std::uint64_t ns_ = 0;
};

constexpr Timestamp kEpoch = Timestamp::from_ns(0);

}  // namespace pathem

#endif
