// Copyright 2026 The graphfid Authors
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

#include "graphfid/bitvec.hpp"

#include <bit>

#include "graphfid/errors.hpp"

namespace graphfid {

BitVec::BitVec(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) >> 6, 0) {
}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec result(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        char c = bits[k];
        if (c == '1') {
            result.set_bit(k, true);
        } else if (c != '0') {
            throw UsageError("bit string may only contain '0' and '1', got '" + std::string(1, c) + "'");
        }
    }
    return result;
}

void BitVec::set_bit(size_t k, bool value) {
    if (k >= num_bits_) {
        throw UsageError("bit index out of range");
    }
    uint64_t mask = uint64_t{1} << (k & 63);
    if (value) {
        words_[k >> 6] |= mask;
    } else {
        words_[k >> 6] &= ~mask;
    }
}

void BitVec::toggle_bit(size_t k) {
    if (k >= num_bits_) {
        throw UsageError("bit index out of range");
    }
    words_[k >> 6] ^= uint64_t{1} << (k & 63);
}

size_t BitVec::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVec::none() const {
    for (uint64_t w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

void BitVec::check_same_size(const BitVec &other) const {
    if (num_bits_ != other.num_bits_) {
        throw UsageError("bit vector length mismatch");
    }
}

BitVec &BitVec::operator^=(const BitVec &other) {
    check_same_size(other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

bool BitVec::lex_less(const BitVec &other) const {
    check_same_size(other);
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t diff = words_[k] ^ other.words_[k];
        if (diff) {
            // The lowest differing bit is the most significant position that
            // differs; the vector with a 0 there sorts first.
            size_t j = std::countr_zero(diff);
            return !((words_[k] >> j) & 1);
        }
    }
    return false;
}

std::string BitVec::str() const {
    std::string out(num_bits_, '0');
    for (size_t k = 0; k < num_bits_; k++) {
        if (bit(k)) {
            out[k] = '1';
        }
    }
    return out;
}

size_t BitVec::popcount_and(const BitVec &a, const BitVec &b) {
    a.check_same_size(b);
    size_t total = 0;
    for (size_t k = 0; k < a.words_.size(); k++) {
        total += std::popcount(a.words_[k] & b.words_[k]);
    }
    return total;
}

size_t BitVec::popcount_or(const BitVec &a, const BitVec &b) {
    a.check_same_size(b);
    size_t total = 0;
    for (size_t k = 0; k < a.words_.size(); k++) {
        total += std::popcount(a.words_[k] | b.words_[k]);
    }
    return total;
}

}  // namespace graphfid
