#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace finring {

/// Incremental SHA-256, used to fingerprint ring tables for the
/// structural-set caches.
class Sha256 {
 public:
  Sha256();
  void update(const void* data, std::size_t len);
  void update_u32(std::uint32_t v);  // little-endian
  /// Finishes the digest and returns it as lowercase hex.
  std::string hex_digest();

 private:
  void process_block(const std::uint8_t* block);

  std::uint32_t state_[8];
  std::uint8_t buffer_[64];
  std::size_t buffer_len_ = 0;
  std::uint64_t total_len_ = 0;
  bool finished_ = false;
};

std::string sha256_hex(const void* data, std::size_t len);

}  // namespace finring
