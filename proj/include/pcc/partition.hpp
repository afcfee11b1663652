// Copyright 2026 The pcc Authors.
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

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pcc/errors.hpp"

namespace pcc {

/// A +/-1 labeling of vertices: the optimization variable of minimum
/// bisection.  Every entry is validated to be exactly +1 or -1 on
/// construction; balance (entry sum zero) is a property, not an invariant,
/// since unbalanced labelings are legal inputs to several operations.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<std::int32_t> labels)
      : labels_(std::move(labels)) {
    for (std::int32_t v : labels_) {
      if (v != 1 && v != -1) {
        throw NonBinary("partition entry is not +1 or -1");
      }
    }
  }

  const std::vector<std::int32_t>& labels() const { return labels_; }
  std::int64_t size() const { return static_cast<std::int64_t>(labels_.size()); }
  std::int32_t operator[](std::int64_t i) const {
    return labels_[static_cast<std::size_t>(i)];
  }

  /// Sum of entries; zero iff the two sides have equal size.
  std::int64_t balance() const {
    std::int64_t s = 0;
    for (std::int32_t v : labels_) s += v;
    return s;
  }

  bool is_balanced() const { return balance() == 0; }

  Partition negated() const {
    std::vector<std::int32_t> out(labels_);
    for (std::int32_t& v : out) v = -v;
    return Partition(std::move(out));
  }

  /// Global-sign representative with first entry +1.  A bisection and its
  /// negation are the same cut.
  Partition canonical() const {
    if (!labels_.empty() && labels_[0] < 0) return negated();
    return *this;
  }

  bool operator==(const Partition& other) const {
    return labels_ == other.labels_;
  }

  bool same_up_to_sign(const Partition& other) const {
    if (labels_.size() != other.labels_.size()) return false;
    if (labels_.empty()) return true;
    const bool flip = labels_[0] != other.labels_[0];
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] != (flip ? -other.labels_[i] : other.labels_[i])) {
        return false;
      }
    }
    return true;
  }

 private:
  std::vector<std::int32_t> labels_;
};

}  // namespace pcc
