// Copyright 2026 The hgw Authors
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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hgw {

/// Fixed-size packed boolean set over [0, size). Padding bits past size() are always zero.
class BitSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitSet() = default;
  explicit BitSet(std::size_t size, bool value = false);

  static std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  std::span<const Word> words() const { return words_; }
  std::span<Word> mutable_words() { return words_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void assign(std::size_t i, bool value) {
    if (value) {
      set(i);
    } else {
      reset(i);
    }
  }

  std::size_t count() const;
  bool none() const;
  bool any() const { return !none(); }
  bool all() const { return count() == size_; }

  /// Lowest set index, or size() when empty.
  std::size_t first() const;
  /// Lowest set index strictly greater than i, or size().
  std::size_t next(std::size_t i) const;

  std::vector<std::size_t> members() const;

  BitSet& operator&=(const BitSet& other);
  BitSet& operator|=(const BitSet& other);
  BitSet& operator^=(const BitSet& other);
  /// this ∖ other
  BitSet& subtract(const BitSet& other);
  BitSet& flip();

  friend BitSet operator&(BitSet lhs, const BitSet& rhs) { return lhs &= rhs; }
  friend BitSet operator|(BitSet lhs, const BitSet& rhs) { return lhs |= rhs; }
  friend BitSet operator^(BitSet lhs, const BitSet& rhs) { return lhs ^= rhs; }
  BitSet operator~() const {
    BitSet out = *this;
    return out.flip();
  }

  /// |this ∩ other| without materialising the intersection.
  std::size_t intersection_count(const BitSet& other) const;
  bool is_subset_of(const BitSet& other) const;
  bool intersects(const BitSet& other) const;

  friend bool operator==(const BitSet&, const BitSet&) = default;

  /// Compares sorted member lists lexicographically ({0,3} < {1}; {0} < {0,1}).
  static bool member_lex_less(const BitSet& a, const BitSet& b);

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

 private:
  void clear_padding();

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace hgw
