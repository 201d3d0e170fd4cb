// Copyright 2026 The Dephase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DEPHASE_BITSTRING_H
#define DEPHASE_BITSTRING_H

#include <bit>
#include <cstdint>
#include <string>

namespace dephase {

inline constexpr int kMaxBitWidth = 24;

/// An N-bit computational basis label. Bit 0 is the least significant bit and
/// is printed as the rightmost ket digit, so |0...01> is the integer 1.
class BitString {
 public:
  BitString(std::uint64_t value, int width);

  std::uint64_t value() const { return value_; }
  int width() const { return width_; }

  BitString operator&(const BitString& other) const;
  BitString operator^(const BitString& other) const;
  BitString complement() const;

  /// Ket digits, most significant first ("000101").
  std::string to_string() const;

  bool operator==(const BitString&) const = default;

 private:
  std::uint64_t value_;
  int width_;
};

constexpr int hamming_weight(std::uint64_t x) { return std::popcount(x); }

constexpr int hamming_distance(std::uint64_t a, std::uint64_t b) {
  return std::popcount(a ^ b);
}

/// True iff n is nonzero and every set bit of n is also set in b.
constexpr bool is_jump_subset(std::uint64_t n, std::uint64_t b) {
  return n != 0 && (n & ~b) == 0;
}

int hamming_weight(const BitString& b);

/// Throws std::invalid_argument on width mismatch.
int hamming_distance(const BitString& a, const BitString& b);

/// theta(n & b) * (1 - theta(n & ~b)): selects the jump labels n whose set
/// bits all lie inside b. Throws std::invalid_argument on width mismatch.
bool jump_selector(const BitString& n, const BitString& b);

}  // namespace dephase

#endif  // DEPHASE_BITSTRING_H
