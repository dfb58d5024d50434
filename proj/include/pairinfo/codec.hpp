#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pairinfo/bitstream.hpp"
#include "pairinfo/errors.hpp"
#include "pairinfo/nat.hpp"

namespace pairinfo {

namespace detail {

struct LzToken {
  bool is_match;
  std::uint8_t literal;
  std::uint32_t distance;  // >= 1
  std::uint32_t length;    // >= kMinMatch
};

constexpr std::uint32_t kMinMatch = 3;
constexpr int kMaxChainProbes = 64;

inline std::size_t lz_token_cost(const LzToken& t) {
  if (!t.is_match) return 1 + 8;
  return 1 + gamma_length(t.distance) + gamma_length(t.length - kMinMatch + 1);
}

// Greedy LZSS over bytes with a hash chain on 3-byte keys. Matches may
// overlap their own output (distance < length), which is what turns
// runs into short codes.
inline std::vector<LzToken> lz_compress(const std::vector<std::uint8_t>& data) {
  std::vector<LzToken> tokens;
  const std::size_t n = data.size();
  constexpr std::size_t kHashSize = 1 << 12;
  std::array<std::int32_t, kHashSize> head;
  head.fill(-1);
  std::vector<std::int32_t> prev(n, -1);

  auto hash3 = [&](std::size_t i) {
    std::uint32_t v = (std::uint32_t(data[i]) << 16) |
                      (std::uint32_t(data[i + 1]) << 8) | data[i + 2];
    return (v * 2654435761u) >> 20;
  };

  std::size_t pos = 0;
  while (pos < n) {
    std::uint32_t best_len = 0;
    std::uint32_t best_dist = 0;
    if (pos + kMinMatch <= n) {
      std::int32_t cand = head[hash3(pos)];
      int probes = 0;
      while (cand >= 0 && probes++ < kMaxChainProbes) {
        std::size_t c = static_cast<std::size_t>(cand);
        std::uint32_t len = 0;
        while (pos + len < n && data[c + len] == data[pos + len]) ++len;
        if (len >= kMinMatch && len > best_len) {
          best_len = len;
          best_dist = static_cast<std::uint32_t>(pos - c);
        }
        cand = prev[c];
      }
    }

    bool take_match = false;
    if (best_len >= kMinMatch) {
      LzToken match{true, 0, best_dist, best_len};
      take_match = lz_token_cost(match) < std::size_t(9) * best_len;
      if (take_match) tokens.push_back(match);
    }
    if (!take_match) tokens.push_back({false, data[pos], 0, 0});

    std::size_t advance = take_match ? best_len : 1;
    for (std::size_t i = 0; i < advance; ++i, ++pos) {
      if (pos + kMinMatch <= n) {
        auto h = hash3(pos);
        prev[pos] = head[h];
        head[h] = static_cast<std::int32_t>(pos);
      }
    }
  }
  return tokens;
}

}  // namespace detail

/// Self-delimiting lossless code for naturals.
///
/// Layout: gamma(byte_count + 1), then for nonzero values one mode bit --
/// 0 = the magnitude bytes verbatim, 1 = an LZSS token stream (literal =
/// 0 + 8 bits, match = 1 + gamma(distance) + gamma(length - 2)) that
/// reconstructs exactly byte_count bytes. The encoder emits whichever
/// form is shorter, so a codeword never exceeds the raw form while
/// repetitive values shrink far below their bit length.
class Codec {
 public:
  std::string name() const { return "builtin-lz1"; }

  /// Codeword length in bits of the raw (incompressible) form; encode()
  /// never exceeds it.
  static std::size_t max_encoded_bits(const Nat& x) {
    std::size_t bc = magnitude_bytes(x);
    if (bc == 0) return gamma_length(1);
    return gamma_length(bc + 1) + 1 + 8 * bc;
  }

  BitString encode(const Nat& x) const {
    require_nonnegative(x, "Codec::encode");
    std::vector<std::uint8_t> bytes;
    if (x != 0) boost::multiprecision::export_bits(x, std::back_inserter(bytes), 8);

    BitString out;
    write_gamma(out, bytes.size() + 1);
    if (bytes.empty()) return out;

    auto tokens = detail::lz_compress(bytes);
    std::size_t lz_cost = 0;
    for (const auto& t : tokens) lz_cost += detail::lz_token_cost(t);

    if (lz_cost < 8 * bytes.size()) {
      out.push_back(true);
      for (const auto& t : tokens) {
        out.push_back(t.is_match);
        if (t.is_match) {
          write_gamma(out, t.distance);
          write_gamma(out, t.length - detail::kMinMatch + 1);
        } else {
          out.append_bits(t.literal, 8);
        }
      }
    } else {
      out.push_back(false);
      for (std::uint8_t b : bytes) out.append_bits(b, 8);
    }
    return out;
  }

  std::size_t code_length(const Nat& x) const { return encode(x).size(); }

  /// Decode one codeword from the cursor, leaving it on the next one.
  Nat decode(BitReader& in) const {
    std::uint64_t header = read_gamma(in);
    std::size_t byte_count = static_cast<std::size_t>(header - 1);
    if (byte_count == 0) return Nat(0);

    std::vector<std::uint8_t> bytes;
    bytes.reserve(byte_count);
    bool lz_mode = in.read_bit();
    if (!lz_mode) {
      for (std::size_t i = 0; i < byte_count; ++i)
        bytes.push_back(static_cast<std::uint8_t>(in.read_bits(8)));
    } else {
      while (bytes.size() < byte_count) {
        if (in.read_bit()) {
          auto dist = read_gamma(in);
          auto len = read_gamma(in) + detail::kMinMatch - 1;
          if (dist == 0 || dist > bytes.size() ||
              bytes.size() + len > byte_count)
            throw codec_error("invalid match in stream");
          std::size_t from = bytes.size() - static_cast<std::size_t>(dist);
          for (std::uint64_t i = 0; i < len; ++i)
            bytes.push_back(bytes[from + i]);
        } else {
          bytes.push_back(static_cast<std::uint8_t>(in.read_bits(8)));
        }
      }
    }
    if (bytes[0] == 0) throw codec_error("leading zero byte in stream");
    Nat x;
    boost::multiprecision::import_bits(x, bytes.begin(), bytes.end());
    return x;
  }

  Nat decode(const BitString& bits) const {
    BitReader in(bits);
    Nat x = decode(in);
    if (!in.exhausted()) throw codec_error("trailing bits after codeword");
    return x;
  }

 private:
  static std::size_t magnitude_bytes(const Nat& x) {
    if (x == 0) return 0;
    return (bit_length(x) + 7) / 8;
  }
};

/// The repository's fixed reference codec.
inline const Codec& builtin_codec() {
  static const Codec codec;
  return codec;
}

/// Length in bits of encode(x): a computable upper bound on the
/// complexity of x, relative to this codec.
inline std::size_t k_upper(const Nat& x, const Codec& codec = builtin_codec()) {
  return codec.code_length(x);
}

}  // namespace pairinfo
