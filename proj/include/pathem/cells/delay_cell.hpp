#ifndef PATHEM_CELLS_DELAY_CELL_HPP
#define PATHEM_CELLS_DELAY_CELL_HPP

#include <deque>
#include <random>

#include "pathem/cell.hpp"
#include "pathem/cells/config_util.hpp"

namespace pathem {

/// Adds a configurable propagation delay (plus optional uniform jitter) to
/// every passing packet. Departures are clamped non-decreasing so the cell
/// never reorders; reordering, if desired, is a separate cell kind.
class DelayCell final : public Cell {
 public:
  struct Config {
    Duration delay = Duration::ns(0);
    Duration jitter = Duration::ns(0);  // uniform in [-jitter, +jitter]; 0 = none
    std::uint64_t jitter_seed = 0;

    static Config parse(const Json& doc, std::vector<Diagnostic>& diags);
    Json to_json() const;
  };

  explicit DelayCell(Config cfg) : config_(cfg), rng_(cfg.jitter_seed) {}

  std::string_view kind() const override { return "delay"; }

  void enqueue(Packet pkt, Timestamp now) override;
  void pump(Timestamp now, Emitter& emit) override;
  std::optional<Timestamp> next_deadline() const override;

  void apply_config(const Json& patch) override;
  Json config() const override { return config_.to_json(); }
  Json telemetry() const override;
  const CellStatsCore& stats() const override { return stats_; }

  /// Departure rule used by enqueue: arrival + delay (+ sampled jitter),
  /// clamped to keep FIFO order.
  static Timestamp departure(Timestamp arrival, Duration delay) { return arrival + delay; }

 private:
  struct Held {
    Packet pkt;
    Timestamp departs;
  };

  Config config_;
  std::mt19937_64 rng_;
  std::deque<Held> queue_;
  Timestamp last_departure_{};
  CellStatsCore stats_;
};

}  // namespace pathem

#endif
