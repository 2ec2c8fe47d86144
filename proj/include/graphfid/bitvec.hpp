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

#ifndef GRAPHFID_BITVEC_HPP
#define GRAPHFID_BITVEC_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace graphfid {

/// Fixed-length bit vector packed into 64-bit words.
///
/// Bit k lives in words()[k / 64] at position (k % 64). Unused high bits of
/// the last word are kept zero so whole-word comparisons are exact.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t num_bits);

    /// Parses a string of '0'/'1' characters; bit 0 is the first character.
    static BitVec from_string(std::string_view bits);

    size_t size() const {
        return num_bits_;
    }

    bool bit(size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }

    void set_bit(size_t k, bool value);
    void toggle_bit(size_t k);

    size_t popcount() const;
    bool none() const;

    BitVec &operator^=(const BitVec &other);
    friend BitVec operator^(BitVec a, const BitVec &b) {
        a ^= b;
        return a;
    }

    bool operator==(const BitVec &other) const = default;

    /// Lexicographic order on the bit string, bit 0 most significant.
    bool lex_less(const BitVec &other) const;

    std::string str() const;

    std::span<const uint64_t> words() const {
        return words_;
    }

    static size_t popcount_and(const BitVec &a, const BitVec &b);
    static size_t popcount_or(const BitVec &a, const BitVec &b);

   private:
    void check_same_size(const BitVec &other) const;

    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace graphfid

#endif
