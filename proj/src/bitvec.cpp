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

#include "ringqc/bitvec.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "ringqc/error.hpp"

namespace ringqc {

namespace {

std::size_t word_count(std::size_t nbits) { return (nbits + 63) / 64; }

}  // namespace

BitVec::BitVec(std::size_t nbits) : nbits_(nbits), words_(word_count(nbits)) {}

BitVec::BitVec(std::size_t nbits, std::uint64_t low_word) : BitVec(nbits) {
  if (!words_.empty()) {
    words_[0] = low_word;
    clear_tail();
  }
}

BitVec BitVec::from_string(std::string_view bits) {
  BitVec out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.set(i);
    } else if (bits[i] != '0') {
      throw ParseError("expected '0' or '1'", i);
    }
  }
  return out;
}

void BitVec::clear_tail() noexcept {
  const std::size_t rem = nbits_ & 63;
  if (rem != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << rem) - 1;
  }
}

BitVec& BitVec::operator^=(const BitVec& other) {
  assert(other.nbits_ == nbits_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  assert(other.nbits_ == nbits_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

std::size_t BitVec::popcount() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVec::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

bool BitVec::dot(const BitVec& other) const noexcept {
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

std::size_t BitVec::lowest_set() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
  }
  return nbits_;
}

BitVec BitVec::rotated(std::size_t k) const {
  BitVec out(nbits_);
  if (nbits_ == 0) return out;
  k %= nbits_;
  if (nbits_ <= 64) {
    const std::uint64_t w = words_[0];
    const std::uint64_t mask =
        nbits_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nbits_) - 1;
    out.words_[0] = k == 0 ? w : ((w << k) | (w >> (nbits_ - k))) & mask;
    return out;
  }
  for (std::size_t i = 0; i < nbits_; ++i) {
    if (get(i)) out.set((i + k) % nbits_);
  }
  return out;
}

BitVec BitVec::slice(std::size_t offset, std::size_t length) const {
  assert(offset + length <= nbits_);
  BitVec out(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (get(offset + i)) out.set(i);
  }
  return out;
}

void BitVec::assign_slice(std::size_t offset, const BitVec& bits) {
  assert(offset + bits.size() <= nbits_);
  for (std::size_t i = 0; i < bits.size(); ++i) set(offset + i, bits.get(i));
}

BitVec BitVec::concat(const BitVec& a, const BitVec& b, const BitVec& c) {
  BitVec out(a.size() + b.size() + c.size());
  out.assign_slice(0, a);
  out.assign_slice(a.size(), b);
  out.assign_slice(a.size() + b.size(), c);
  return out;
}

std::string BitVec::to_string() const {
  std::string s(nbits_, '0');
  for (std::size_t i = 0; i < nbits_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) {
  if (auto c = a.nbits_ <=> b.nbits_; c != 0) return c;
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Echelon::Echelon(std::size_t ncols, std::span<const BitVec> rows) : ncols_(ncols) {
  for (const BitVec& r : rows) insert(r);
}

BitVec Echelon::residue(BitVec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (v.get(pivots_[i])) v ^= rows_[i];
  }
  return v;
}

bool Echelon::insert(BitVec row) {
  assert(row.size() == ncols_);
  row = residue(std::move(row));
  const std::size_t pivot = row.lowest_set();
  if (pivot == ncols_) return false;
  // Keep the form fully reduced: clear the new pivot column elsewhere.
  for (BitVec& r : rows_) {
    if (r.get(pivot)) r ^= row;
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(row));
  return true;
}

std::vector<BitVec> Echelon::null_space() const {
  std::vector<bool> is_pivot(ncols_, false);
  for (std::size_t p : pivots_) is_pivot[p] = true;
  std::vector<BitVec> out;
  out.reserve(ncols_ - rows_.size());
  for (std::size_t free = 0; free < ncols_; ++free) {
    if (is_pivot[free]) continue;
    BitVec x(ncols_);
    x.set(free);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].get(free)) x.set(pivots_[i]);
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace ringqc
