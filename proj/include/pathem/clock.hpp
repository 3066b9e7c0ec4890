#ifndef PATHEM_CLOCK_HPP
#define PATHEM_CLOCK_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>

#include "pathem/error.hpp"
#include "pathem/time.hpp"

namespace pathem {

enum class ClockMode { Wall, Virtual };

/// Swappable time source all cells schedule against. One instance per
/// channel; the channel epoch is the clock's construction instant.
class Clock {
 public:
  virtual ~Clock() = default;
  virtual Timestamp now() const = 0;
  virtual ClockMode mode() const = 0;
};

/// Tracks the OS monotonic clock, anchored at construction.
class WallClock final : public Clock {
 public:
  WallClock() : epoch_(std::chrono::steady_clock::now()) {}

  Timestamp now() const override {
    auto d = std::chrono::steady_clock::now() - epoch_;
    return Timestamp::from_ns(
        static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(d).count()));
  }
  ClockMode mode() const override { return ClockMode::Wall; }

  std::chrono::steady_clock::time_point to_time_point(Timestamp t) const {
    return epoch_ + std::chrono::nanoseconds(t.ns());
  }

 private:
  std::chrono::steady_clock::time_point epoch_;
};

using TimerId = std::uint64_t;

struct TimerFire {
  Timestamp deadline;
  bool cancelled = false;  // channel shutdown aborts waits with this flag
};

/// Deadline-ordered callback registry. Completions fire in non-decreasing
/// deadline order; ties complete in arm order (FIFO among equals).
class TimerQueue {
 public:
  using Callback = std::function<void(const TimerFire&)>;

  TimerId arm(Timestamp deadline, Callback cb) {
    TimerId id = ++last_id_;
    Key key{deadline.ns(), seq_++};
    entries_.emplace(key, Entry{id, std::move(cb)});
    by_id_.emplace(id, key);
    return id;
  }

  /// Removes a pending timer without firing it. Returns false if unknown.
  bool disarm(TimerId id) {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) return false;
    entries_.erase(it->second);
    by_id_.erase(it);
    return true;
  }

  /// Aborts a pending wait: the completion runs once with cancelled=true.
  bool cancel(TimerId id) {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) return false;
    auto node = entries_.extract(it->second);
    by_id_.erase(it);
    TimerFire fire{Timestamp::from_ns(node.key().first), true};
    node.mapped().cb(fire);
    return true;
  }

  void cancel_all() {
    while (!entries_.empty()) {
      auto node = entries_.extract(entries_.begin());
      by_id_.erase(node.mapped().id);
      TimerFire fire{Timestamp::from_ns(node.key().first), true};
      node.mapped().cb(fire);
    }
  }

  std::optional<Timestamp> next_deadline() const {
    if (entries_.empty()) return std::nullopt;
    return Timestamp::from_ns(entries_.begin()->first.first);
  }

  /// Fires every entry with deadline <= now, in (deadline, arm order).
  std::size_t fire_due(Timestamp now) {
    std::size_t fired = 0;
    while (!entries_.empty() && entries_.begin()->first.first <= now.ns()) {
      auto node = entries_.extract(entries_.begin());
      by_id_.erase(node.mapped().id);
      TimerFire fire{Timestamp::from_ns(node.key().first), false};
      node.mapped().cb(fire);
      ++fired;
    }
    return fired;
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  using Key = std::pair<std::uint64_t, std::uint64_t>;  // (deadline ns, arm seq)
  struct Entry {
    TimerId id;
    Callback cb;
  };

  std::map<Key, Entry> entries_;
  std::map<TimerId, Key> by_id_;
  std::uint64_t seq_ = 0;
  TimerId last_id_ = 0;
};

/// Advances only via explicit advance operations, never spontaneously.
/// Owns the pending-deadline set; stepping jumps exactly to the next one.
class VirtualClock final : public Clock {
 public:
  Timestamp now() const override { return now_; }
  ClockMode mode() const override { return ClockMode::Virtual; }

  TimerQueue& timers() { return timers_; }
  const TimerQueue& timers() const { return timers_; }

  std::optional<Timestamp> next_deadline() const { return timers_.next_deadline(); }

  /// Jumps to the earliest pending deadline and completes every timer armed
  /// for it before returning. Throws ClockIdleError when nothing is pending,
  /// so tests can tell deadlock from completion.
  Timestamp advance() {
    auto next = timers_.next_deadline();
    if (!next) throw ClockIdleError();
    if (*next > now_) now_ = *next;
    timers_.fire_due(now_);
    return now_;
  }

  std::optional<Timestamp> try_advance() {
    if (!timers_.next_deadline()) return std::nullopt;
    return advance();
  }

 private:
  Timestamp now_{};
  TimerQueue timers_;
};

/// One cell's handle on the timer queue: at most one armed deadline.
/// Completing a wait on deadline D implies clock.now() >= D; in virtual
/// mode it completes at exactly D. Waits never block an OS thread; the
/// completion callback runs when the owning scheduler reaches D.
class Timer {
 public:
  Timer(Clock& clock, TimerQueue& queue) : clock_(&clock), queue_(&queue) {}

  /// A deadline at or before now completes immediately (synchronously).
  void wait_until(Timestamp deadline, TimerQueue::Callback on_complete) {
    cancel_armed();
    if (deadline <= clock_->now()) {
      on_complete(TimerFire{deadline, false});
      return;
    }
    armed_deadline_ = deadline;
    id_ = queue_->arm(deadline, [this, cb = std::move(on_complete)](const TimerFire& f) {
      armed_deadline_.reset();
      id_.reset();
      cb(f);
    });
  }

  /// Aborts a pending wait with the shutdown signal.
  void cancel() {
    if (id_) queue_->cancel(*id_);
  }

  std::optional<Timestamp> armed_deadline() const { return armed_deadline_; }

 private:
  void cancel_armed() {
    if (id_) {
      queue_->disarm(*id_);
      id_.reset();
      armed_deadline_.reset();
    }
  }

  Clock* clock_;
  TimerQueue* queue_;
  std::optional<TimerId> id_;
  std::optional<Timestamp> armed_deadline_;
};

}  // namespace pathem

#endif
