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

#include "graphfid/stabilizer.hpp"

#include <bit>

#include "graphfid/errors.hpp"
#include "graphfid/gf2.hpp"

namespace graphfid {

PauliString generator(const Graph &g, int vertex) {
    if (vertex < 0 || vertex >= g.num_vertices()) {
        throw UsageError("generator vertex out of range");
    }
    BitVec x(g.num_vertices());
    x.set_bit(static_cast<size_t>(vertex), true);
    return PauliString(std::move(x), g.neighbors(vertex), 0);
}

PauliString stabilizer(const Graph &g, const StabilizerIndex &index) {
    if (index.size() != static_cast<size_t>(g.num_vertices())) {
        throw UsageError("stabilizer index length must equal the vertex count");
    }
    PauliString product(index.size());
    for (size_t i = 0; i < index.size(); i++) {
        if (index.bit(i)) {
            product *= generator(g, static_cast<int>(i));
        }
    }
    if (product.phase() & 1) {
        throw InternalError("stabilizer product has an imaginary phase");
    }
    return product;
}

StabilizerEnumerator::StabilizerEnumerator(const Graph &g, uint64_t start_rank)
    : index_(g.num_vertices()), value_(g.num_vertices()) {
    int n = g.num_vertices();
    if (n >= 64) {
        throw CapacityError("stabilizer enumeration is limited to fewer than 64 qubits");
    }
    generators_.reserve(n);
    for (int i = 0; i < n; i++) {
        generators_.push_back(generator(g, i));
    }
    total_ = uint64_t{1} << n;
    rank_ = start_rank;
    if (rank_ < total_) {
        uint64_t gray = rank_ ^ (rank_ >> 1);
        for (int i = 0; i < n; i++) {
            if ((gray >> i) & 1) {
                index_.set_bit(i, true);
                value_ *= generators_[i];
            }
        }
    }
}

bool StabilizerEnumerator::advance() {
    uint64_t next = rank_ + 1;
    if (next >= total_) {
        rank_ = total_;
        return false;
    }
    int flip = std::countr_zero(next);
    index_.toggle_bit(flip);
    value_ *= generators_[flip];
    rank_ = next;
    return true;
}

void for_each_stabilizer(
    const Graph &g,
    const std::function<void(const StabilizerIndex &, const PauliString &)> &fn,
    size_t cap) {
    if (static_cast<size_t>(g.num_vertices()) > cap) {
        throw CapacityError(
            "group enumeration over " + std::to_string(g.num_vertices()) + " qubits exceeds the cap of " +
            std::to_string(cap));
    }
    StabilizerEnumerator e(g);
    do {
        fn(e.index(), e.value());
    } while (e.advance());
}

Membership membership(const Graph &g, const PauliString &p) {
    size_t n = static_cast<size_t>(g.num_vertices());
    if (p.num_qubits() != n) {
        throw UsageError("pauli string size does not match the graph");
    }
    if (p.phase() & 1) {
        throw UsageError("membership requires a pauli string with a real phase");
    }
    // Row i is generator g_i as a 2n-bit (x|z) vector.
    std::vector<BitVec> rows;
    rows.reserve(n);
    for (size_t i = 0; i < n; i++) {
        BitVec row(2 * n);
        row.set_bit(i, true);
        const BitVec &nbrs = g.neighbors(static_cast<int>(i));
        for (size_t j = 0; j < n; j++) {
            if (nbrs.bit(j)) {
                row.set_bit(n + j, true);
            }
        }
        rows.push_back(std::move(row));
    }
    BitVec target(2 * n);
    for (size_t q = 0; q < n; q++) {
        if (p.x_bits().bit(q)) {
            target.set_bit(q, true);
        }
        if (p.z_bits().bit(q)) {
            target.set_bit(n + q, true);
        }
    }
    auto combo = gf2_solve(rows, target);
    if (!combo.has_value()) {
        return Membership::kNotAMember;
    }
    PauliString member = stabilizer(g, *combo);
    if (member.x_bits() != p.x_bits() || member.z_bits() != p.z_bits()) {
        throw InternalError("gf2 solution does not reproduce the pauli string");
    }
    return member.phase() == p.phase() ? Membership::kPlus : Membership::kMinus;
}

}  // namespace graphfid
