#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "finring/cache.hpp"
#include "finring/parse.hpp"
#include "finring/sha256.hpp"

using namespace finring;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("finring-cache-test-" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("sha256 known vectors") {
  CHECK(sha256_hex("", 0) ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc", 3) ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  const std::string two_blocks =
      "abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq";
  CHECK(sha256_hex(two_blocks.data(), two_blocks.size()) ==
        "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
}

TEST_CASE("sha256 incremental equals one-shot") {
  Sha256 h;
  h.update("ab", 2);
  h.update("c", 1);
  CHECK(h.hex_digest() == sha256_hex("abc", 3));
}

TEST_CASE("cache round trip") {
  TempDir dir;
  SetsCache cache(dir.path.string());
  auto built = build_from_expr("T2(Z4)");
  CHECK_FALSE(cache.get(*built.ring).has_value());
  StructuralSets fresh = compute_structural_sets_fresh(*built.ring);
  cache.put(*built.ring, fresh);
  auto hit = cache.get(*built.ring);
  REQUIRE(hit.has_value());
  CHECK(hit->units == fresh.units);
  CHECK(hit->jacobson == fresh.jacobson);
  CHECK(hit->j_sharp == fresh.j_sharp);
  CHECK(hit->delta_nilpotents == fresh.delta_nilpotents);
  CHECK(hit->unit_inverse == fresh.unit_inverse);

  // record is byte-identical to a re-serialization
  fs::path record = dir.path / (built.ring->content_hash() + ".json");
  REQUIRE(fs::exists(record));
  CHECK(slurp(record) == SetsCache::serialize(*built.ring, fresh));
  CHECK(slurp(record) == SetsCache::serialize(*built.ring, *hit));

  // no temp files left behind
  for (const auto& entry : fs::directory_iterator(dir.path)) {
    CHECK(entry.path().extension() == ".json");
  }
}

TEST_CASE("version mismatch forces recomputation") {
  TempDir dir;
  SetsCache cache(dir.path.string());
  auto built = build_from_expr("Z8");
  StructuralSets fresh = compute_structural_sets_fresh(*built.ring);
  cache.put(*built.ring, fresh);

  fs::path record = dir.path / (built.ring->content_hash() + ".json");
  std::string text = slurp(record);
  auto pos = text.find(kSetsCacheVersion);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, std::string(kSetsCacheVersion).size(), "finring-sets-v0");
  std::ofstream(record, std::ios::trunc) << text;

  CHECK_FALSE(cache.get(*built.ring).has_value());
  // load_structural_sets recomputes and replaces the record
  StructuralSets again = load_structural_sets(*built.ring, &cache);
  CHECK(again.units == fresh.units);
  auto hit = cache.get(*built.ring);
  REQUIRE(hit.has_value());
  CHECK(hit->units == fresh.units);
}

TEST_CASE("corrupt records are non-fatal") {
  TempDir dir;
  SetsCache cache(dir.path.string());
  auto built = build_from_expr("Z6");
  cache.put(*built.ring, compute_structural_sets_fresh(*built.ring));
  fs::path record = dir.path / (built.ring->content_hash() + ".json");
  std::ofstream(record, std::ios::trunc) << "{\"version\": \"finring-";  // truncated
  CHECK_FALSE(cache.get(*built.ring).has_value());
  StructuralSets sets = load_structural_sets(*built.ring, &cache);
  CHECK(sets.units.members() == std::vector<elem>{1, 5});
}

TEST_CASE("cached and fresh sets serialize identically") {
  TempDir dir;
  SetsCache cache(dir.path.string());
  for (const char* expr : {"Z4", "M2(Z2)", "GR(Z4,C2)", "K(Z4,0)"}) {
    auto built = build_from_expr(expr);
    StructuralSets first = load_structural_sets(*built.ring, &cache);   // computes
    StructuralSets second = load_structural_sets(*built.ring, &cache);  // cache hit
    CHECK(SetsCache::serialize(*built.ring, first) ==
          SetsCache::serialize(*built.ring, second));
    CHECK(SetsCache::serialize(*built.ring, second) ==
          SetsCache::serialize(*built.ring, compute_structural_sets_fresh(*built.ring)));
  }
}

TEST_CASE("null cache pointer means no caching") {
  auto built = build_from_expr("Z4");
  StructuralSets sets = load_structural_sets(*built.ring, nullptr);
  CHECK(sets.units.members() == std::vector<elem>{1, 3});
}
