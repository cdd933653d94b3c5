//
// spectral-wl - Copyright 2026 The spectral-wl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "swl/intern.hpp"

#include <algorithm>
#include <cstring>
#include <limits>

#include "swl/error.hpp"

namespace swl {

namespace {

inline std::uint64_t fmix(std::uint64_t k) {
  k ^= k >> 33;
  k *= 0xff51afd7ed558ccdULL;
  k ^= k >> 33;
  k *= 0xc4ceb9fe1a85ec53ULL;
  k ^= k >> 33;
  return k;
}

inline std::uint64_t rotl(std::uint64_t x, int r) { return (x << r) | (x >> (64 - r)); }

}  // namespace

// MurmurHash3 x64/128 block structure over 32-bit words (pairs of words form
// one 64-bit lane).
Hash128 hash128(const std::uint32_t* words, std::size_t len) {
  constexpr std::uint64_t c1 = 0x87c37b91114253d5ULL;
  constexpr std::uint64_t c2 = 0x4cf5ad432745937fULL;
  std::uint64_t h1 = 0x243f6a8885a308d3ULL, h2 = 0x13198a2e03707344ULL;
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    std::uint64_t k1 = words[i] | (static_cast<std::uint64_t>(words[i + 1]) << 32);
    std::uint64_t k2 = words[i + 2] | (static_cast<std::uint64_t>(words[i + 3]) << 32);
    k1 *= c1; k1 = rotl(k1, 31); k1 *= c2; h1 ^= k1;
    h1 = rotl(h1, 27); h1 += h2; h1 = h1 * 5 + 0x52dce729;
    k2 *= c2; k2 = rotl(k2, 33); k2 *= c1; h2 ^= k2;
    h2 = rotl(h2, 31); h2 += h1; h2 = h2 * 5 + 0x38495ab5;
  }
  std::uint64_t k1 = 0, k2 = 0;
  const std::size_t tail = len - i;
  if (tail >= 3) k2 = words[i + 2];
  if (tail >= 2) k1 |= static_cast<std::uint64_t>(words[i + 1]) << 32;
  if (tail >= 1) k1 |= words[i];
  if (tail >= 3) { k2 *= c2; k2 = rotl(k2, 33); k2 *= c1; h2 ^= k2; }
  if (tail >= 1) { k1 *= c1; k1 = rotl(k1, 31); k1 *= c2; h1 ^= k1; }
  h1 ^= len * 4;
  h2 ^= len * 4;
  h1 += h2;
  h2 += h1;
  h1 = fmix(h1);
  h2 = fmix(h2);
  h1 += h2;
  h2 += h1;
  return {h1, h2};
}

bool InternTable::equals(std::uint32_t id, const std::uint32_t* words, std::size_t len) const {
  const std::size_t begin = offsets_[id];
  const std::size_t end = id + 1 < offsets_.size() ? offsets_[id + 1] : arena_.size();
  return end - begin == len && std::equal(words, words + len, arena_.begin() + static_cast<std::ptrdiff_t>(begin));
}

std::uint32_t InternTable::intern(const std::uint32_t* words, std::size_t len) {
  const Hash128 h = hash128(words, len);
  auto it = index_.find(h);
  if (it != index_.end()) {
    if (equals(it->second, words, len)) return it->second;
    auto range = overflow_.equal_range(h);
    for (auto o = range.first; o != range.second; ++o)
      if (equals(o->second, words, len)) return o->second;
  }
  if (offsets_.size() >= std::numeric_limits<std::uint32_t>::max() - 1) throw InternalError("intern table overflow");
  const auto id = static_cast<std::uint32_t>(offsets_.size());
  offsets_.push_back(arena_.size());
  arena_.insert(arena_.end(), words, words + len);
  if (it == index_.end()) {
    index_.emplace(h, id);
  } else {
    ++collisions_;
    overflow_.emplace(h, id);
  }
  return id;
}

std::uint32_t InternTable::intern_bytes(std::uint32_t tag, std::string_view bytes) {
  scratch_.assign(2 + (bytes.size() + 3) / 4, 0);
  scratch_[0] = tag;
  scratch_[1] = static_cast<std::uint32_t>(bytes.size());
  if (!bytes.empty()) std::memcpy(scratch_.data() + 2, bytes.data(), bytes.size());
  return intern(scratch_.data(), scratch_.size());
}

std::vector<std::uint32_t> InternTable::key(std::uint32_t id) const {
  const std::size_t begin = offsets_.at(id);
  const std::size_t end = id + 1 < offsets_.size() ? offsets_[id + 1] : arena_.size();
  return {arena_.begin() + static_cast<std::ptrdiff_t>(begin), arena_.begin() + static_cast<std::ptrdiff_t>(end)};
}

}  // namespace swl
