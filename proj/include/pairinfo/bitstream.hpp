#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pairinfo/errors.hpp"

namespace pairinfo {

/// Append-only bit sequence, MSB-first within each storage byte.
class BitString {
 public:
  std::size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  bool bit(std::size_t i) const {
    return (bytes_[i >> 3] >> (7 - (i & 7))) & 1u;
  }

  void push_back(bool b) {
    if ((nbits_ & 7) == 0) bytes_.push_back(0);
    if (b) bytes_.back() |= static_cast<std::uint8_t>(1u << (7 - (nbits_ & 7)));
    ++nbits_;
  }

  /// Low n bits of v, most significant first. n <= 64.
  void append_bits(std::uint64_t v, unsigned n) {
    for (unsigned i = n; i-- > 0;) push_back((v >> i) & 1u);
  }

  void append(const BitString& other) {
    for (std::size_t i = 0; i < other.nbits_; ++i) push_back(other.bit(i));
  }

  bool operator==(const BitString& other) const = default;

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t nbits_ = 0;
};

/// Sequential cursor over a BitString; throws codec_error past the end.
class BitReader {
 public:
  explicit BitReader(const BitString& bits) : bits_(&bits) {}

  std::size_t position() const { return pos_; }
  bool exhausted() const { return pos_ >= bits_->size(); }

  bool read_bit() {
    if (pos_ >= bits_->size()) throw codec_error("bit stream truncated");
    return bits_->bit(pos_++);
  }

  std::uint64_t read_bits(unsigned n) {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < n; ++i) v = (v << 1) | (read_bit() ? 1u : 0u);
    return v;
  }

 private:
  const BitString* bits_;
  std::size_t pos_ = 0;
};

/// Elias gamma code for n >= 1: floor(log2 n) zeros, then n's bits.
inline void write_gamma(BitString& out, std::uint64_t n) {
  if (n == 0) throw codec_error("gamma code requires n >= 1");
  unsigned width = 0;
  for (std::uint64_t v = n; v > 1; v >>= 1) ++width;
  for (unsigned i = 0; i < width; ++i) out.push_back(false);
  out.append_bits(n, width + 1);
}

inline std::uint64_t read_gamma(BitReader& in) {
  unsigned zeros = 0;
  while (!in.read_bit()) {
    if (++zeros > 63) throw codec_error("gamma code out of range");
  }
  std::uint64_t rest = in.read_bits(zeros);
  return (std::uint64_t(1) << zeros) | rest;
}

inline std::size_t gamma_length(std::uint64_t n) {
  unsigned width = 0;
  for (std::uint64_t v = n; v > 1; v >>= 1) ++width;
  return 2 * std::size_t(width) + 1;
}

}  // namespace pairinfo
