#include "finring/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace finring {

const char* kSetsCacheVersion = "finring-sets-v1";

namespace {

namespace fs = std::filesystem;

nlohmann::json set_to_json(const ElemSet& s) {
  nlohmann::json a = nlohmann::json::array();
  for (elem m : s) a.push_back(m);
  return a;
}

std::optional<ElemSet> set_from_json(const nlohmann::json& j, std::size_t universe) {
  if (!j.is_array()) return std::nullopt;
  std::vector<elem> members;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) return std::nullopt;
    std::size_t m = v.get<std::size_t>();
    if (m >= universe) return std::nullopt;
    members.push_back(static_cast<elem>(m));
  }
  return ElemSet::from_members(universe, std::move(members));
}

}  // namespace

SetsCache::SetsCache(std::string directory) : dir_(std::move(directory)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);  // best effort; put() will surface failures
}

std::string SetsCache::serialize(const FiniteRing& ring, const StructuralSets& sets) {
  nlohmann::json j;
  j["version"] = kSetsCacheVersion;
  j["hash"] = ring.content_hash();
  j["order"] = ring.order();
  nlohmann::json s;
  s["units"] = set_to_json(sets.units);
  s["idempotents"] = set_to_json(sets.idempotents);
  s["nilpotents"] = set_to_json(sets.nilpotents);
  s["jacobson"] = set_to_json(sets.jacobson);
  s["j_sharp"] = set_to_json(sets.j_sharp);
  s["quasi_nilpotents"] = set_to_json(sets.quasi_nilpotents);
  s["delta_nilpotents"] = set_to_json(sets.delta_nilpotents);
  j["sets"] = s;
  nlohmann::json inv = nlohmann::json::array();
  for (elem u : sets.units) inv.push_back(sets.unit_inverse[u]);
  j["unit_inverses"] = inv;
  return j.dump();
}

std::optional<StructuralSets> SetsCache::get(const FiniteRing& ring) const {
  fs::path path = fs::path(dir_) / (ring.content_hash() + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  // Corruption of any shape means a miss, never an error.
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (!j.is_object()) return std::nullopt;
    if (j.value("version", "") != kSetsCacheVersion) return std::nullopt;
    if (j.value("hash", "") != ring.content_hash()) return std::nullopt;
    if (j.value("order", std::size_t(0)) != ring.order()) return std::nullopt;
    const auto& s = j.at("sets");
    StructuralSets out;
    auto read = [&](const char* name, ElemSet& dest) {
      auto parsed = set_from_json(s.at(name), ring.order());
      if (!parsed) throw std::runtime_error("bad set");
      dest = std::move(*parsed);
    };
    read("units", out.units);
    read("idempotents", out.idempotents);
    read("nilpotents", out.nilpotents);
    read("jacobson", out.jacobson);
    read("j_sharp", out.j_sharp);
    read("quasi_nilpotents", out.quasi_nilpotents);
    read("delta_nilpotents", out.delta_nilpotents);
    const auto& inv = j.at("unit_inverses");
    if (!inv.is_array() || inv.size() != out.units.size()) return std::nullopt;
    out.unit_inverse.assign(ring.order(), ring.zero());
    std::size_t i = 0;
    for (elem u : out.units) {
      std::size_t v = inv[i++].get<std::size_t>();
      if (v >= ring.order()) return std::nullopt;
      out.unit_inverse[u] = static_cast<elem>(v);
    }
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void SetsCache::put(const FiniteRing& ring, const StructuralSets& sets) const {
  fs::path path = fs::path(dir_) / (ring.content_hash() + ".json");
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;  // unwritable cache is non-fatal
    out << serialize(ring, sets);
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) fs::remove(tmp, ec);
}

StructuralSets load_structural_sets(const FiniteRing& ring, const SetsCache* cache) {
  if (cache) {
    if (auto hit = cache->get(ring)) return *hit;
  }
  StructuralSets fresh = *compute_structural_sets(ring);
  if (cache) cache->put(ring, fresh);
  return fresh;
}

}  // namespace finring
