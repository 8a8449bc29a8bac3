#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>
#include <vector>

namespace csg {

// 128-bit digest, ordered lexicographically by (hi, lo). All color and
// fingerprint values in the toolkit are these; ordering them yields the
// canonical color order.
struct Digest128 {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  friend bool operator==(const Digest128&, const Digest128&) = default;
  friend auto operator<=>(const Digest128&, const Digest128&) = default;

  std::string hex() const {
    static constexpr char k[] = "0123456789abcdef";
    std::string out(32, '0');
    for (int i = 0; i < 16; ++i) out[15 - i] = k[(hi >> (4 * i)) & 0xf];
    for (int i = 0; i < 16; ++i) out[31 - i] = k[(lo >> (4 * i)) & 0xf];
    return out;
  }
};

struct Digest128Hash {
  std::size_t operator()(const Digest128& d) const noexcept {
    return static_cast<std::size_t>(d.hi ^ (d.lo * 0x9e3779b97f4a7c15ULL));
  }
};

// FNV-1a in 128 bits. The multiply is mod 2^128, which is exactly what
// unsigned __int128 arithmetic gives us. Byte order of every absorbed
// value is pinned (big-endian) so digests match across platforms.
class Hasher {
 public:
  Hasher() = default;

  Hasher& bytes(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      state_ ^= p[i];
      state_ *= kPrime;
    }
    return *this;
  }

  Hasher& u8(std::uint8_t v) { return bytes(&v, 1); }

  Hasher& u32(std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v >> 24),
                          static_cast<unsigned char>(v >> 16),
                          static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v)};
    return bytes(b, 4);
  }

  Hasher& u64(std::uint64_t v) {
    u32(static_cast<std::uint32_t>(v >> 32));
    return u32(static_cast<std::uint32_t>(v));
  }

  Hasher& i64(std::int64_t v) { return u64(static_cast<std::uint64_t>(v)); }

  // Length-prefixed so concatenated fields can't alias each other.
  Hasher& str(std::string_view s) {
    u64(s.size());
    return bytes(s.data(), s.size());
  }

  Hasher& digest(const Digest128& d) {
    u64(d.hi);
    return u64(d.lo);
  }

  // Multiset of digests: caller passes them pre-sorted; we prefix the
  // count so empty and absent multisets stay distinct.
  Hasher& sorted_multiset(const std::vector<Digest128>& sorted) {
    u64(sorted.size());
    for (const auto& d : sorted) digest(d);
    return *this;
  }

  Digest128 finish() const {
    return {static_cast<std::uint64_t>(state_ >> 64),
            static_cast<std::uint64_t>(state_)};
  }

 private:
  using u128 = unsigned __int128;
  // FNV-1a 128-bit offset basis 144066263297769815596495629667062367629
  // and prime 2^88 + 2^8 + 0x3b.
  static constexpr u128 kOffset =
      (u128{0x6c62272e07bb0142ULL} << 64) | 0x62b821756295c58dULL;
  static constexpr u128 kPrime = (u128{1} << 88) | 0x13bULL;

  u128 state_ = kOffset;
};

}  // namespace csg
