// Copyright 2026 The ldpfair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace ldpfair {

// Splittable counter-based generator. Every draw is a pure function of
// (stream key, index), so parallel consumers produce identical values
// regardless of scheduling or worker count.

inline uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives a child stream key; chain calls to split by several indices.
inline uint64_t derive_stream(uint64_t key, uint64_t part) {
  return mix64(key ^ (0x2545f4914f6cdd1dULL + mix64(part)));
}

class RngStream {
 public:
  explicit RngStream(uint64_t key) : key_(key) {}

  RngStream child(uint64_t part) const { return RngStream(derive_stream(key_, part)); }

  uint64_t bits_at(uint64_t index) const { return mix64(key_ ^ mix64(index + 1)); }

  /// Uniform double in [0, 1), pure in (key, index).
  double uniform_at(uint64_t index) const {
    return static_cast<double>(bits_at(index) >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound); bound must be positive.
  uint64_t below_at(uint64_t index, uint64_t bound) const {
    return bits_at(index) % bound;
  }

  uint64_t key() const { return key_; }

 private:
  uint64_t key_;
};

}  // namespace ldpfair
