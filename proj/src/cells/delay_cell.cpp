#include "pathem/cells/delay_cell.hpp"

namespace pathem {

DelayCell::Config DelayCell::Config::parse(const Json& doc, std::vector<Diagnostic>& diags) {
  cfg::Reader r{doc, {}};
  Config out;
  if (auto d = r.duration("delay")) out.delay = *d;
  if (auto j = r.duration("jitter")) out.jitter = *j;
  if (auto s = r.u64("jitter_seed")) out.jitter_seed = *s;
  if (out.delay < Duration::ns(0)) r.fail("delay", "delay must be >= 0");
  if (out.jitter < Duration::ns(0)) r.fail("jitter", "jitter must be >= 0");
  if (out.jitter.count_ns() != 0 && out.jitter >= out.delay) {
    r.fail("jitter", "jitter must be smaller than delay (or zero)");
  }
  diags.insert(diags.end(), r.diags.begin(), r.diags.end());
  return out;
}

Json DelayCell::Config::to_json() const {
  Json j{{"delay", format_duration(delay)}};
  if (jitter.count_ns() != 0) {
    j["jitter"] = format_duration(jitter);
    j["jitter_seed"] = jitter_seed;
  }
  return j;
}

void DelayCell::enqueue(Packet pkt, Timestamp now) {
  stats_.count_in(pkt, now);
  Duration d = config_.delay;
  if (config_.jitter.count_ns() > 0) {
    std::uint64_t span = 2 * static_cast<std::uint64_t>(config_.jitter.count_ns()) + 1;
    std::int64_t offset =
        static_cast<std::int64_t>(rng_() % span) - config_.jitter.count_ns();
    d = d + Duration::ns(offset);
  }
  Timestamp departs = now + d;
  if (departs < last_departure_) departs = last_departure_;  // FIFO clamp
  last_departure_ = departs;
  queue_.push_back(Held{std::move(pkt), departs});
}

void DelayCell::pump(Timestamp now, Emitter& emit) {
  while (!queue_.empty() && queue_.front().departs <= now) {
    if (!emit.emit(std::move(queue_.front().pkt), 0)) return;
    stats_.count_out(queue_.front().pkt, now);
    queue_.pop_front();
  }
}

std::optional<Timestamp> DelayCell::next_deadline() const {
  if (queue_.empty()) return std::nullopt;
  return queue_.front().departs;
}

void DelayCell::apply_config(const Json& patch) {
  Json merged = config_.to_json();
  merged.merge_patch(patch);
  std::vector<Diagnostic> diags;
  Config next = Config::parse(merged, diags);
  if (!diags.empty()) throw ConfigError(std::move(diags));
  bool reseed = next.jitter_seed != config_.jitter_seed;
  config_ = next;
  if (reseed) rng_.seed(config_.jitter_seed);
}

Json DelayCell::telemetry() const {
  Json j = stats_.to_json();
  j["queue_len"] = queue_.size();
  return j;
}

}  // namespace pathem
