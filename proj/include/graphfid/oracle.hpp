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

#ifndef GRAPHFID_ORACLE_HPP
#define GRAPHFID_ORACLE_HPP

#include <complex>
#include <vector>

#include "graphfid/channel.hpp"
#include "graphfid/graph.hpp"
#include "graphfid/pauli.hpp"

namespace graphfid {

/// Brute-force density-matrix reference for small n. Everything here is
/// O(4^n) or worse on purpose: it exists to check the closed forms and the
/// bit-vector algebra, not to be fast.
inline constexpr size_t kDefaultOracleCap = 10;
inline constexpr size_t kMaxOracleCap = 12;

/// 2^n complex amplitudes; qubit 0 is the most significant index bit.
class StateVector {
   public:
    explicit StateVector(int num_qubits);

    int num_qubits() const {
        return num_qubits_;
    }
    uint64_t dim() const {
        return uint64_t{1} << num_qubits_;
    }
    std::complex<double> &amp(uint64_t basis) {
        return amps_[basis];
    }
    const std::complex<double> &amp(uint64_t basis) const {
        return amps_[basis];
    }
    const std::vector<std::complex<double>> &amplitudes() const {
        return amps_;
    }
    double norm() const;

   private:
    int num_qubits_;
    std::vector<std::complex<double>> amps_;
};

class DensityMatrix {
   public:
    explicit DensityMatrix(int num_qubits);
    static DensityMatrix pure(const StateVector &psi);

    int num_qubits() const {
        return num_qubits_;
    }
    uint64_t dim() const {
        return uint64_t{1} << num_qubits_;
    }
    std::complex<double> &at(uint64_t row, uint64_t col) {
        return m_[(row << num_qubits_) | col];
    }
    const std::complex<double> &at(uint64_t row, uint64_t col) const {
        return m_[(row << num_qubits_) | col];
    }
    double trace_real() const;
    double max_hermiticity_violation() const;

   private:
    int num_qubits_;
    std::vector<std::complex<double>> m_;
};

/// |G>: uniform amplitudes with sign (-1)^(#edges inside the set bits).
StateVector build_graph_state(const Graph &g, size_t cap = kDefaultOracleCap);

/// One Kraus pass p0*rho + px*XrhoX + py*YrhoY + pz*ZrhoZ on a single qubit.
void apply_channel_to_qubit(DensityMatrix &rho, const PauliChannel &ch, int qubit);

/// Applies the channel to every qubit in turn.
void apply_channel(DensityMatrix &rho, const PauliChannel &ch);

/// The noisy graph state: channel applied to |G><G|.
DensityMatrix noisy_graph_state(const Graph &g, const PauliChannel &ch, size_t cap = kDefaultOracleCap);

/// <G|rho|G> by dense contraction; the imaginary part must vanish.
double fidelity_oracle(const Graph &g, const PauliChannel &ch, size_t cap = kDefaultOracleCap);

/// Tr(rho s) by dense contraction.
double expectation_oracle(
    const Graph &g, const PauliChannel &ch, const PauliString &s, size_t cap = kDefaultOracleCap);

/// <G|p|G>^2, rounded to {0, 1}; equals 1 iff +-p is a stabilizer of g.
/// Throws InternalError if the squared expectation is not close to 0 or 1.
int lemma1_check(const Graph &g, const PauliString &p, size_t cap = kDefaultOracleCap);

}  // namespace graphfid

#endif
