#include "pathem/packet.hpp"

namespace pathem {
namespace {

std::uint16_t rd16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>((p[0] << 8) | p[1]);
}
std::uint32_t rd32(const std::uint8_t* p) {
  return (static_cast<std::uint32_t>(p[0]) << 24) | (static_cast<std::uint32_t>(p[1]) << 16) |
         (static_cast<std::uint32_t>(p[2]) << 8) | p[3];
}

std::optional<FlowKey> parse_ipv4(const std::uint8_t* p, std::size_t len) {
  if (len < 20) return std::nullopt;
  if ((p[0] >> 4) != 4) return std::nullopt;
  std::size_t ihl = static_cast<std::size_t>(p[0] & 0x0f) * 4;
  if (ihl < 20 || len < ihl) return std::nullopt;
  FlowKey k;
  k.protocol = p[9];
  k.src_addr = rd32(p + 12);
  k.dst_addr = rd32(p + 16);
  if ((k.protocol == 6 || k.protocol == 17) && len >= ihl + 4) {
    k.src_port = rd16(p + ihl);
    k.dst_port = rd16(p + ihl + 2);
  }
  return k;
}

}  // namespace

std::optional<FlowKey> Packet::flow_key() const {
  if (flow_parsed_) return flow_key_;
  flow_parsed_ = true;
  const auto& bytes = payload();
  if (bytes.size() >= 14 && rd16(bytes.data() + 12) == 0x0800) {
    flow_key_ = parse_ipv4(bytes.data() + 14, bytes.size() - 14);  // Ethernet II
  } else {
    flow_key_ = parse_ipv4(bytes.data(), bytes.size());  // bare L3
  }
  return flow_key_;
}

std::uint64_t flow_hash(const FlowKey& key) {
  std::uint8_t buf[13];
  buf[0] = static_cast<std::uint8_t>(key.src_addr >> 24);
  buf[1] = static_cast<std::uint8_t>(key.src_addr >> 16);
  buf[2] = static_cast<std::uint8_t>(key.src_addr >> 8);
  buf[3] = static_cast<std::uint8_t>(key.src_addr);
  buf[4] = static_cast<std::uint8_t>(key.dst_addr >> 24);
  buf[5] = static_cast<std::uint8_t>(key.dst_addr >> 16);
  buf[6] = static_cast<std::uint8_t>(key.dst_addr >> 8);
  buf[7] = static_cast<std::uint8_t>(key.dst_addr);
  buf[8] = static_cast<std::uint8_t>(key.src_port >> 8);
  buf[9] = static_cast<std::uint8_t>(key.src_port);
  buf[10] = static_cast<std::uint8_t>(key.dst_port >> 8);
  buf[11] = static_cast<std::uint8_t>(key.dst_port);
  buf[12] = key.protocol;
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint8_t b : buf) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace pathem
