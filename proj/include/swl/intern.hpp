//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace swl {

struct Hash128 {
  std::uint64_t lo = 0, hi = 0;
  bool operator==(const Hash128& o) const { return lo == o.lo && hi == o.hi; }
};

Hash128 hash128(const std::uint32_t* words, std::size_t len);

// Append-only bijection between canonical token word strings and dense ids.
// Lookups go through a 128-bit digest; digest collisions are resolved by full
// key comparison and counted.
class InternTable {
 public:
  std::uint32_t intern(const std::uint32_t* words, std::size_t len);
  std::uint32_t intern(const std::vector<std::uint32_t>& key) { return intern(key.data(), key.size()); }
  // Byte strings are packed into words behind `tag`, keeping them apart from
  // word tokens that start with a different tag.
  std::uint32_t intern_bytes(std::uint32_t tag, std::string_view bytes);

  std::size_t size() const { return offsets_.size(); }
  std::size_t collisions() const { return collisions_; }
  std::vector<std::uint32_t> key(std::uint32_t id) const;

 private:
  struct HashOf {
    std::size_t operator()(const Hash128& h) const { return static_cast<std::size_t>(h.lo ^ (h.hi * 0x9e3779b97f4a7c15ULL)); }
  };
  bool equals(std::uint32_t id, const std::uint32_t* words, std::size_t len) const;

  std::vector<std::uint32_t> arena_;
  std::vector<std::size_t> offsets_;  // start of key i; key i ends at offsets_[i+1] or arena end
  std::unordered_map<Hash128, std::uint32_t, HashOf> index_;
  std::unordered_multimap<Hash128, std::uint32_t, HashOf> overflow_;
  std::size_t collisions_ = 0;
  std::vector<std::uint32_t> scratch_;
};

}  // namespace swl
