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

#include "graphfid/pauli.hpp"

#include <bit>

#include "graphfid/errors.hpp"

namespace graphfid {

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I:
            return 'I';
        case Pauli::X:
            return 'X';
        case Pauli::Z:
            return 'Z';
        case Pauli::Y:
            return 'Y';
    }
    throw InternalError("bad pauli letter");
}

PauliString::PauliString(size_t num_qubits) : x_(num_qubits), z_(num_qubits) {
}

PauliString::PauliString(BitVec x, BitVec z, int phase_xz)
    : x_(std::move(x)), z_(std::move(z)), phase_xz_(((phase_xz % 4) + 4) % 4) {
    if (x_.size() != z_.size()) {
        throw UsageError("x and z bit vectors must have the same length");
    }
}

PauliString PauliString::from_text(std::string_view text) {
    int lit_phase = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        lit_phase = text[0] == '-' ? 2 : 0;
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw UsageError("empty pauli string");
    }
    BitVec x(text.size());
    BitVec z(text.size());
    int n_y = 0;
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case 'I':
                break;
            case 'X':
                x.set_bit(q, true);
                break;
            case 'Z':
                z.set_bit(q, true);
                break;
            case 'Y':
                x.set_bit(q, true);
                z.set_bit(q, true);
                n_y++;
                break;
            default:
                throw UsageError("pauli letters must be one of I, X, Y, Z");
        }
    }
    // Literal phase p_lit relates to the X^x Z^z phase by p_xz = p_lit + n_Y.
    return PauliString(std::move(x), std::move(z), lit_phase + n_y);
}

int PauliString::phase() const {
    int n_y = static_cast<int>(BitVec::popcount_and(x_, z_));
    return (phase_xz_ + 3 * n_y) & 3;
}

int PauliString::sign() const {
    int p = phase();
    if (p & 1) {
        throw InternalError("pauli string has an imaginary phase");
    }
    return p == 0 ? 1 : -1;
}

PauliCounts PauliString::counts() const {
    PauliCounts c;
    c.n_y = static_cast<int>(BitVec::popcount_and(x_, z_));
    c.n_x = static_cast<int>(x_.popcount()) - c.n_y;
    c.n_z = static_cast<int>(z_.popcount()) - c.n_y;
    c.n_i = static_cast<int>(num_qubits()) - c.n_x - c.n_y - c.n_z;
    return c;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    if (num_qubits() != rhs.num_qubits()) {
        throw UsageError("pauli string length mismatch");
    }
    // (X^a Z^b)(X^c Z^d) = (-1)^(b.c) X^(a^c) Z^(b^d), per qubit.
    int crossings = static_cast<int>(BitVec::popcount_and(z_, rhs.x_));
    phase_xz_ = (phase_xz_ + rhs.phase_xz_ + 2 * crossings) & 3;
    x_ ^= rhs.x_;
    z_ ^= rhs.z_;
    return *this;
}

bool PauliString::anticommutes_on_qubit(size_t q, Pauli err) const {
    Pauli mine = letter(q);
    return mine != Pauli::I && err != Pauli::I && mine != err;
}

std::string PauliString::str() const {
    static const char *prefixes[4] = {"+", "+i", "-", "-i"};
    std::string out = prefixes[phase()];
    out.reserve(out.size() + num_qubits());
    for (size_t q = 0; q < num_qubits(); q++) {
        out.push_back(pauli_char(letter(q)));
    }
    return out;
}

}  // namespace graphfid
