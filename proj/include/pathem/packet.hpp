#ifndef PATHEM_PACKET_HPP
#define PATHEM_PACKET_HPP

#include <array>
#include <cstdint>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pathem/error.hpp"
#include "pathem/time.hpp"

namespace pathem {

/// 5-tuple parsed lazily from an Ethernet/IPv4 frame.
struct FlowKey {
  std::uint32_t src_addr = 0;  // host byte order
  std::uint32_t dst_addr = 0;
  std::uint16_t src_port = 0;
  std::uint16_t dst_port = 0;
  std::uint8_t protocol = 0;

  bool operator==(const FlowKey&) const = default;
};

/// The unit flowing through every cell: a raw frame plus its channel-ingress
/// timestamp and a small scratch area cells may annotate.
///
/// Payload bytes are shared between copies; fan-out through a DAG never
/// duplicates frame data. Annotations are copied per packet instance and
/// are visible to all downstream cells.
class Packet {
 public:
  static constexpr std::size_t kMaxAnnotations = 8;

  Packet() = default;
  explicit Packet(std::vector<std::uint8_t> bytes)
      : payload_(std::make_shared<const std::vector<std::uint8_t>>(std::move(bytes))) {}
  explicit Packet(std::shared_ptr<const std::vector<std::uint8_t>> bytes)
      : payload_(std::move(bytes)) {}

  std::size_t length() const { return payload_ ? payload_->size() : 0; }
  const std::vector<std::uint8_t>& payload() const {
    static const std::vector<std::uint8_t> empty;
    return payload_ ? *payload_ : empty;
  }
  std::shared_ptr<const std::vector<std::uint8_t>> payload_ptr() const { return payload_; }

  Timestamp ingress_ts() const { return ingress_ts_; }
  bool has_ingress_ts() const { return ingress_set_; }
  /// Set exactly once, by the ingress endpoint.
  void stamp_ingress(Timestamp t) {
    if (!ingress_set_) {
      ingress_ts_ = t;
      ingress_set_ = true;
    }
  }

  void annotate(std::string_view key, std::uint64_t value) {
    for (std::size_t i = 0; i < n_annotations_; ++i) {
      if (annotations_[i].key == key) {
        annotations_[i].value = value;
        return;
      }
    }
    if (n_annotations_ == kMaxAnnotations) {
      throw std::length_error("packet annotation area full");
    }
    annotations_[n_annotations_++] = {std::string(key), value};
  }
  std::optional<std::uint64_t> annotation(std::string_view key) const {
    for (std::size_t i = 0; i < n_annotations_; ++i) {
      if (annotations_[i].key == key) return annotations_[i].value;
    }
    return std::nullopt;
  }

  /// Lazily parses the 5-tuple. Understands Ethernet+IPv4 and bare IPv4.
  std::optional<FlowKey> flow_key() const;

 private:
  struct Annotation {
    std::string key;
    std::uint64_t value = 0;
  };

  std::shared_ptr<const std::vector<std::uint8_t>> payload_;
  Timestamp ingress_ts_{};
  bool ingress_set_ = false;
  std::array<Annotation, kMaxAnnotations> annotations_{};
  std::size_t n_annotations_ = 0;

  mutable bool flow_parsed_ = false;
  mutable std::optional<FlowKey> flow_key_;
};

/// Deterministic 64-bit hash of a flow key (FNV-1a over the canonical
/// 13-byte tuple encoding); used by flow-hash routing rules.
std::uint64_t flow_hash(const FlowKey& key);

}  // namespace pathem

#endif
