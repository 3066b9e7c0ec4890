#include "pathem/cells/config_util.hpp"

namespace pathem::cfg {

Json QueueLimit::to_json() const {
  switch (unit) {
    case Unit::Packets:
      return Json{{"policy", "droptail"}, {"limit", Json{{"packets", value}}}};
    case Unit::Bytes:
      return Json{{"policy", "droptail"}, {"limit", Json{{"bytes", value}}}};
    case Unit::Unbounded:
      return Json{{"policy", "droptail"}, {"limit", nullptr}};
  }
  return Json::object();
}

QueueLimit read_queue(Reader& r, const char* key, QueueLimit def, bool require_limit) {
  if (!r.has(key)) {
    if (require_limit && def.unit == QueueLimit::Unit::Unbounded) {
      r.fail(key, "queue limit required");
    }
    return def;
  }
  const Json& q = r.doc.at(key);
  if (!q.is_object()) {
    r.fail(key, "expected a queue object");
    return def;
  }
  if (q.contains("policy") && q.at("policy") != "droptail") {
    r.fail(std::string(key) + ".policy", "only \"droptail\" is supported");
    return def;
  }
  QueueLimit out = def;
  const Json* limit = nullptr;
  if (q.contains("limit") && !q.at("limit").is_null()) limit = &q.at("limit");
  if (q.contains("len")) {
    out.unit = QueueLimit::Unit::Packets;
    if (!q.at("len").is_number_integer() || q.at("len").get<std::int64_t>() < 1) {
      r.fail(std::string(key) + ".len", "queue length must be >= 1 packet");
      return def;
    }
    out.value = q.at("len").get<std::uint64_t>();
    return out;
  }
  if (limit) {
    bool pkts = limit->is_object() && limit->contains("packets");
    bool bytes = limit->is_object() && limit->contains("bytes");
    if (pkts == bytes) {
      r.fail(std::string(key) + ".limit", "specify exactly one of packets or bytes");
      return def;
    }
    const Json& v = pkts ? limit->at("packets") : limit->at("bytes");
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
      r.fail(std::string(key) + ".limit", "limit must be a positive integer");
      return def;
    }
    out.unit = pkts ? QueueLimit::Unit::Packets : QueueLimit::Unit::Bytes;
    out.value = v.get<std::uint64_t>();
    return out;
  }
  if (require_limit) r.fail(std::string(key) + ".limit", "queue limit required");
  return out;
}

}  // namespace pathem::cfg
