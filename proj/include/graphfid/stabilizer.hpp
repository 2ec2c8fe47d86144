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

#ifndef GRAPHFID_STABILIZER_HPP
#define GRAPHFID_STABILIZER_HPP

#include <functional>
#include <vector>

#include "graphfid/graph.hpp"
#include "graphfid/pauli.hpp"

namespace graphfid {

/// Default cap on full stabilizer-group enumeration (2^n elements).
inline constexpr size_t kDefaultEnumerationCap = 24;

/// A stabilizer index is the generator-selection bit vector l, bit i meaning
/// "multiply in generator g_i".
using StabilizerIndex = BitVec;

/// wt(l): how many generators the index selects.
inline size_t weight(const StabilizerIndex &index) {
    return index.popcount();
}

/// The stabilizer generator for `vertex`: X there, Z on each neighbor.
PauliString generator(const Graph &g, int vertex);

/// The exact product of the selected generators, with the sign tracked
/// through the symplectic phase. Throws InternalError if the final phase is
/// not real (unreachable for commuting Hermitian generators).
PauliString stabilizer(const Graph &g, const StabilizerIndex &index);

/// Walks all 2^n stabilizers in Gray-code order, so each step multiplies in a
/// single generator. Construction at an arbitrary rank allows partitioning
/// the walk across workers.
class StabilizerEnumerator {
   public:
    explicit StabilizerEnumerator(const Graph &g, uint64_t start_rank = 0);

    const StabilizerIndex &index() const {
        return index_;
    }
    const PauliString &value() const {
        return value_;
    }
    uint64_t rank() const {
        return rank_;
    }
    uint64_t total() const {
        return total_;
    }
    bool done() const {
        return rank_ >= total_;
    }

    /// Advances to the next Gray code; returns false once exhausted.
    bool advance();

   private:
    std::vector<PauliString> generators_;
    StabilizerIndex index_;
    PauliString value_;
    uint64_t rank_ = 0;
    uint64_t total_ = 0;
};

/// Visits every stabilizer exactly once. Throws CapacityError when n > cap.
void for_each_stabilizer(
    const Graph &g,
    const std::function<void(const StabilizerIndex &, const PauliString &)> &fn,
    size_t cap = kDefaultEnumerationCap);

enum class Membership {
    kPlus,
    kMinus,
    kNotAMember,
};

/// Decides whether +p or -p is in the stabilizer group of g, by solving for
/// p's (x, z) rows over GF(2) and then recomputing the exact product sign.
/// Requires p to carry a real phase.
Membership membership(const Graph &g, const PauliString &p);

}  // namespace graphfid

#endif
