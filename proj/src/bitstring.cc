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

#include "dephase/bitstring.h"

#include <stdexcept>

namespace dephase {
namespace {

void require_same_width(const BitString& a, const BitString& b) {
  if (a.width() != b.width()) {
    throw std::invalid_argument("bit-string width mismatch: " + std::to_string(a.width()) +
                                " vs " + std::to_string(b.width()));
  }
}

std::uint64_t width_mask(int width) { return (std::uint64_t{1} << width) - 1; }

}  // namespace

BitString::BitString(std::uint64_t value, int width) : value_(value), width_(width) {
  if (width < 1 || width > kMaxBitWidth) {
    throw std::invalid_argument("bit-string width must be in [1, " +
                                std::to_string(kMaxBitWidth) + "], got " +
                                std::to_string(width));
  }
  if (value > width_mask(width)) {
    throw std::invalid_argument("bit-string value " + std::to_string(value) +
                                " does not fit in " + std::to_string(width) + " bits");
  }
}

BitString BitString::operator&(const BitString& other) const {
  require_same_width(*this, other);
  return BitString(value_ & other.value_, width_);
}

BitString BitString::operator^(const BitString& other) const {
  require_same_width(*this, other);
  return BitString(value_ ^ other.value_, width_);
}

BitString BitString::complement() const { return BitString(~value_ & width_mask(width_), width_); }

std::string BitString::to_string() const {
  std::string out(static_cast<std::size_t>(width_), '0');
  for (int i = 0; i < width_; ++i) {
    if ((value_ >> i) & 1) {
      out[static_cast<std::size_t>(width_ - 1 - i)] = '1';
    }
  }
  return out;
}

int hamming_weight(const BitString& b) { return hamming_weight(b.value()); }

int hamming_distance(const BitString& a, const BitString& b) {
  require_same_width(a, b);
  return hamming_distance(a.value(), b.value());
}

bool jump_selector(const BitString& n, const BitString& b) {
  require_same_width(n, b);
  const bool overlaps = (n & b).value() != 0;
  const bool escapes = (n & b.complement()).value() != 0;
  return overlaps && !escapes;
}

}  // namespace dephase
