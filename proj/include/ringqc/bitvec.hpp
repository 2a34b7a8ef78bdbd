// Copyright 2026 The ringqc Authors.
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

#ifndef RINGQC_BITVEC_HPP_
#define RINGQC_BITVEC_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ringqc {

// Fixed-length bit vector packed into 64-bit words. Bit i lives in word
// i / 64 at position i % 64; bits past size() are always zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t nbits);
  BitVec(std::size_t nbits, std::uint64_t low_word);

  // "0110" style, index 0 first.
  static BitVec from_string(std::string_view bits);

  std::size_t size() const noexcept { return nbits_; }
  bool empty() const noexcept { return nbits_ == 0; }

  bool get(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool value = true) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept {
    words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
  }

  BitVec& operator^=(const BitVec& other);
  BitVec& operator&=(const BitVec& other);
  friend BitVec operator^(BitVec lhs, const BitVec& rhs) { return lhs ^= rhs; }
  friend BitVec operator&(BitVec lhs, const BitVec& rhs) { return lhs &= rhs; }

  std::size_t popcount() const noexcept;
  bool none() const noexcept;
  bool any() const noexcept { return !none(); }
  // Binary inner product (parity of the AND).
  bool dot(const BitVec& other) const noexcept;
  // Index of the lowest set bit, or size() when none is set.
  std::size_t lowest_set() const noexcept;

  // Right cyclic shift by k: out[(i + k) mod n] = in[i].
  BitVec rotated(std::size_t k = 1) const;
  BitVec slice(std::size_t offset, std::size_t length) const;
  void assign_slice(std::size_t offset, const BitVec& bits);
  static BitVec concat(const BitVec& a, const BitVec& b, const BitVec& c);

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> mutable_words() noexcept { return words_; }

  std::string to_string() const;

  friend bool operator==(const BitVec&, const BitVec&) = default;
  // Length first, then words compared as unsigned integers from word 0.
  friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b);

 private:
  void clear_tail() noexcept;

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

// Row-reduced echelon form over F2 with pivots chosen lowest column first.
// The reduced basis is canonical: two row spaces are equal iff their
// echelon forms are equal.
class Echelon {
 public:
  explicit Echelon(std::size_t ncols) : ncols_(ncols) {}
  Echelon(std::size_t ncols, std::span<const BitVec> rows);

  std::size_t ncols() const noexcept { return ncols_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<BitVec>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  // Adds a row to the spanned space; returns false if it was dependent.
  bool insert(BitVec row);
  // Reduces v against the basis; the residue is zero iff v is in the span.
  BitVec residue(BitVec v) const;
  bool contains(const BitVec& v) const { return residue(v).none(); }

  // Basis of {x : x . r = 0 for every row r}.
  std::vector<BitVec> null_space() const;

  friend bool operator==(const Echelon& a, const Echelon& b) {
    return a.ncols_ == b.ncols_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t ncols_;
  std::vector<BitVec> rows_;        // sorted by pivot
  std::vector<std::size_t> pivots_;  // ascending
};

// Calls visit(word) for every element of the span of basis, zero first, in
// Gray-code order. The basis must be independent. visit returns false to
// stop early.
template <class Visit>
void walk_span(std::span<const BitVec> basis, std::size_t nbits, Visit&& visit) {
  BitVec acc(nbits);
  if (!visit(acc)) return;
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    acc ^= basis[static_cast<std::size_t>(__builtin_ctzll(i))];
    if (!visit(acc)) return;
  }
}

}  // namespace ringqc

#endif  // RINGQC_BITVEC_HPP_
