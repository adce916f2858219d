// Copyright 2026 The nwsssp Authors
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

#ifndef NWSSSP_HEAP_HPP_
#define NWSSSP_HEAP_HPP_

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace nwsssp {

// Min-heap with arity 4 over (key, value) pairs. There is no decrease-key:
// callers push a fresh entry and skip stale ones when popping.
template <typename Key, typename Value>
class QuaternaryHeap {
 public:
  struct Entry {
    Key key;
    Value value;
  };

  static constexpr std::size_t kArity = 4;

  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  void clear() { items_.clear(); }
  void reserve(std::size_t n) { items_.reserve(n); }

  const Entry& top() const {
    assert(!items_.empty());
    return items_.front();
  }

  void push(Key key, Value value) {
    items_.push_back({key, value});
    sift_up(items_.size() - 1);
  }

  Entry pop() {
    assert(!items_.empty());
    Entry min = items_.front();
    Entry last = items_.back();
    items_.pop_back();
    if (!items_.empty()) sift_down(std::move(last));
    return min;
  }

 private:
  void sift_up(std::size_t i) {
    Entry moving = items_[i];
    while (i > 0) {
      const std::size_t parent = (i - 1) / kArity;
      if (!(moving.key < items_[parent].key)) break;
      items_[i] = items_[parent];
      i = parent;
    }
    items_[i] = moving;
  }

  // Places `moving` starting from the root hole.
  void sift_down(Entry moving) {
    const std::size_t n = items_.size();
    std::size_t i = 0;
    for (;;) {
      const std::size_t first = i * kArity + 1;
      if (first >= n) break;
      const std::size_t last = first + kArity < n ? first + kArity : n;
      std::size_t best = first;
      for (std::size_t c = first + 1; c < last; ++c) {
        if (items_[c].key < items_[best].key) best = c;
      }
      if (!(items_[best].key < moving.key)) break;
      items_[i] = items_[best];
      i = best;
    }
    items_[i] = moving;
  }

  std::vector<Entry> items_;
};

}  // namespace nwsssp

#endif  // NWSSSP_HEAP_HPP_
