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

#ifndef GRAPHFID_GF2_HPP
#define GRAPHFID_GF2_HPP

#include <optional>
#include <vector>

#include "graphfid/bitvec.hpp"

namespace graphfid {

/// Echelonized GF(2) row space with combination tracking, built by Gaussian
/// elimination over packed words. Answers "is `target` in the span of the
/// rows, and if so which rows xor to it".
class Gf2Solver {
   public:
    explicit Gf2Solver(std::vector<BitVec> rows);

    /// Returns the coefficient vector c (one bit per input row) such that the
    /// xor of the selected rows equals `target`, or nullopt if `target` is
    /// outside the span.
    std::optional<BitVec> solve(const BitVec &target) const;

    size_t rank() const {
        return echelon_.size();
    }

   private:
    size_t width_ = 0;
    size_t num_rows_ = 0;
    std::vector<BitVec> echelon_;
    std::vector<BitVec> combo_;
    std::vector<size_t> pivot_;
};

/// One-shot convenience wrapper around Gf2Solver.
std::optional<BitVec> gf2_solve(const std::vector<BitVec> &rows, const BitVec &target);

}  // namespace graphfid

#endif
