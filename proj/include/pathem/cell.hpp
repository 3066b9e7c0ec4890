#ifndef PATHEM_CELL_HPP
#define PATHEM_CELL_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pathem/clock.hpp"
#include "pathem/error.hpp"
#include "pathem/packet.hpp"
#include "pathem/time.hpp"

namespace pathem {

using Json = nlohmann::json;

/// Counters every cell kind reports. packets_in always equals
/// packets_out + packets_dropped + packets currently held; counters never
/// decrease.
struct CellStatsCore {
  std::uint64_t packets_in = 0;
  std::uint64_t packets_out = 0;
  std::uint64_t packets_dropped = 0;
  std::uint64_t bytes_in = 0;
  std::uint64_t bytes_out = 0;
  Timestamp last_activity{};

  std::uint64_t held() const { return packets_in - packets_out - packets_dropped; }

  void count_in(const Packet& p, Timestamp now) {
    ++packets_in;
    bytes_in += p.length();
    last_activity = now;
  }
  void count_out(const Packet& p, Timestamp now) {
    ++packets_out;
    bytes_out += p.length();
    last_activity = now;
  }
  void count_drop(Timestamp now) {
    ++packets_dropped;
    last_activity = now;
  }

  Json to_json() const {
    return Json{{"packets_in", packets_in},       {"packets_out", packets_out},
                {"packets_dropped", packets_dropped}, {"packets_held", held()},
                {"bytes_in", bytes_in},           {"bytes_out", bytes_out},
                {"last_activity_ns", last_activity.ns()}};
  }
};

/// Receives a cell's emissions during pump(). Returns false when the fabric
/// cannot accept the packet right now; the cell keeps it and will be pumped
/// again once space frees up. Emission drops never happen inside the fabric.
class Emitter {
 public:
  virtual ~Emitter() = default;
  virtual bool emit(Packet&& pkt, std::uint32_t egress_port) = 0;
};

/// Everything a factory may need besides the kind config.
struct CellBuildContext {
  std::string cell_id;
  Clock* clock = nullptr;
  std::string base_dir;  // directory of the config file, for relative paths
};

/// The actor every emulation effect implements. A cell shares no mutable
/// state with any other cell; the owning scheduler serializes all calls, so
/// enqueue/pump/control/telemetry never run concurrently with each other.
///
/// The four message-passing interfaces map onto this surface as follows:
///  - enqueue: enqueue(). Admission decisions (droptail, policing) happen
///    here, immediately; it never suspends.
///  - dequeue: next_deadline() + pump(). A cell "suspends" by reporting the
///    earliest instant it wants to emit; the scheduler pumps it when the
///    clock reaches that deadline, and the cell hands packets out with their
///    egress port. Nothing ever blocks the execution thread.
///  - control: apply_config() for merge-patch updates, command() for custom
///    commands.
///  - telemetry: telemetry(), a consistent, non-destructive snapshot.
class Cell {
 public:
  virtual ~Cell() = default;

  virtual std::string_view kind() const = 0;

  virtual void enqueue(Packet pkt, Timestamp now) = 0;
  virtual void pump(Timestamp now, Emitter& emit) = 0;
  virtual std::optional<Timestamp> next_deadline() const = 0;

  /// Merge-patches the running config; packets enqueued after the call
  /// observe the new values. Built-in kinds apply new config at the next
  /// dequeue decision. Throws ConfigError with field diagnostics.
  virtual void apply_config(const Json& patch) = 0;
  virtual Json config() const = 0;

  /// Custom, kind-namespaced commands. Unknown commands are rejected.
  virtual Json command(std::string_view name, const Json& payload) {
    (void)payload;
    throw ConfigError("", "command", "unknown command \"" + std::string(name) + "\"");
  }

  virtual Json telemetry() const = 0;
  virtual const CellStatsCore& stats() const = 0;

  virtual std::uint32_t egress_ports() const { return 1; }
};

/// Factory table mapping cell kinds to constructors and config validators.
/// Built-in kinds are pre-registered; user kinds are first-class citizens.
class CellRegistry {
 public:
  struct KindInfo {
    std::string kind;
    std::function<std::unique_ptr<Cell>(const Json& config, const CellBuildContext&)> factory;
    /// Full-document validation; returns all problems found.
    std::function<std::vector<Diagnostic>(const Json& config)> validate;
    Json schema;  // published field descriptor consumed by CLI / control plane
  };

  /// Registry with all built-in kinds pre-registered.
  static CellRegistry& global();

  void register_kind(KindInfo info);
  bool has(std::string_view kind) const;
  const KindInfo& info(std::string_view kind) const;  // throws NotFoundError
  std::vector<std::string> kinds() const;

  std::unique_ptr<Cell> make(std::string_view kind, const Json& config,
                             const CellBuildContext& ctx) const;

 private:
  std::map<std::string, KindInfo, std::less<>> kinds_;
};

void register_builtin_cells(CellRegistry& reg);

}  // namespace pathem

#endif
