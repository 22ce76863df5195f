#pragma once

#include <optional>
#include <string>

#include "finring/structure.hpp"

namespace finring {

/// Version tag stored in every cache record; bump to invalidate.
extern const char* kSetsCacheVersion;

/// On-disk cache of StructuralSets keyed by ring content hash.
/// Records are JSON files named <hash>.json inside the directory;
/// writes go through a temp file and an atomic rename.  Corrupt or
/// stale records are ignored and recomputed.
class SetsCache {
 public:
  explicit SetsCache(std::string directory);

  std::optional<StructuralSets> get(const FiniteRing& ring) const;
  void put(const FiniteRing& ring, const StructuralSets& sets) const;

  const std::string& directory() const { return dir_; }

  /// The serialized record exactly as put() writes it.
  static std::string serialize(const FiniteRing& ring, const StructuralSets& sets);

 private:
  std::string dir_;
};

/// Memoized sets, optionally backed by a disk cache.
StructuralSets load_structural_sets(const FiniteRing& ring, const SetsCache* cache);

}  // namespace finring
