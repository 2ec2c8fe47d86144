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

#ifndef GRAPHFID_PAULI_HPP
#define GRAPHFID_PAULI_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "graphfid/bitvec.hpp"

namespace graphfid {

/// Single-qubit Pauli letter, encoded as x + 2z.
enum class Pauli : uint8_t {
    I = 0,
    X = 1,
    Z = 2,
    Y = 3,
};

char pauli_char(Pauli p);

/// Letter census of a Pauli string. n_i + n_x + n_y + n_z == num_qubits.
struct PauliCounts {
    int n_i = 0;
    int n_x = 0;
    int n_y = 0;
    int n_z = 0;

    bool operator==(const PauliCounts &) const = default;
};

/// An n-qubit Pauli operator in binary symplectic form.
///
/// Qubit q carries X iff x_bits[q], Z iff z_bits[q], Y iff both. The operator
/// is i^phase_xz * prod_q X^x Z^z; products track the phase exactly mod 4, so
/// the sign of a stabilizer is never recomputed from scratch. The rendered
/// form uses literal letters (Y rather than XZ), with phase() giving the power
/// of i in front of the letter tensor.
class PauliString {
   public:
    PauliString() = default;

    /// The identity on `num_qubits` qubits.
    explicit PauliString(size_t num_qubits);

    /// Raw constructor; `phase_xz` is the power of i in X^x Z^z convention.
    PauliString(BitVec x, BitVec z, int phase_xz);

    /// Parses "[+-]?[IXYZ]+", e.g. "+XZXIXZXI".
    static PauliString from_text(std::string_view text);

    size_t num_qubits() const {
        return x_.size();
    }

    Pauli letter(size_t q) const {
        return static_cast<Pauli>(static_cast<int>(x_.bit(q)) + 2 * static_cast<int>(z_.bit(q)));
    }

    /// Power of i in front of the literal letter tensor (0..3).
    int phase() const;

    /// +1 or -1; requires phase() to be real.
    int sign() const;

    PauliCounts counts() const;

    /// Number of non-identity letters.
    size_t support() const {
        return BitVec::popcount_or(x_, z_);
    }

    const BitVec &x_bits() const {
        return x_;
    }
    const BitVec &z_bits() const {
        return z_;
    }
    int phase_xz() const {
        return phase_xz_;
    }

    PauliString &operator*=(const PauliString &rhs);
    friend PauliString operator*(PauliString a, const PauliString &b) {
        a *= b;
        return a;
    }

    bool operator==(const PauliString &) const = default;

    /// True iff the letters at `q` are both non-identity and different.
    bool anticommutes_on_qubit(size_t q, Pauli err) const;

    /// Sign character then letters, qubit 0 first: "+XZXIXZXI".
    std::string str() const;

   private:
    BitVec x_;
    BitVec z_;
    int phase_xz_ = 0;
};

}  // namespace graphfid

#endif
