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

#include "graphfid/oracle.hpp"

#include <bit>
#include <cmath>

#include "graphfid/errors.hpp"

namespace graphfid {

namespace {

void check_oracle_cap(int n, size_t cap) {
    if (cap > kMaxOracleCap) {
        cap = kMaxOracleCap;
    }
    if (static_cast<size_t>(n) > cap) {
        throw CapacityError(
            "dense oracle over " + std::to_string(n) + " qubits exceeds the cap of " + std::to_string(cap) +
            " (hard max " + std::to_string(kMaxOracleCap) + ")");
    }
}

// Mask with the index bit of `qubit` set; qubit 0 is the most significant.
uint64_t qubit_mask(int num_qubits, int qubit) {
    return uint64_t{1} << (num_qubits - 1 - qubit);
}

constexpr std::complex<double> kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// <a|p|b> is nonzero only for a = b ^ xmask, where it equals
// i^phase_xz * (-1)^(popcount(b & zmask)). Returns that value given b.
std::complex<double> pauli_entry(const PauliString &p, uint64_t col_basis, uint64_t z_mask) {
    int sign = std::popcount(col_basis & z_mask) & 1 ? -1 : 1;
    return kIPowers[p.phase_xz()] * static_cast<double>(sign);
}

// Packs the x/z bit vectors into basis-index masks (qubit 0 = MSB).
std::pair<uint64_t, uint64_t> pauli_masks(const PauliString &p) {
    int n = static_cast<int>(p.num_qubits());
    uint64_t x_mask = 0;
    uint64_t z_mask = 0;
    for (int q = 0; q < n; q++) {
        if (p.x_bits().bit(q)) {
            x_mask |= qubit_mask(n, q);
        }
        if (p.z_bits().bit(q)) {
            z_mask |= qubit_mask(n, q);
        }
    }
    return {x_mask, z_mask};
}

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits), amps_(uint64_t{1} << num_qubits) {
}

double StateVector::norm() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

DensityMatrix::DensityMatrix(int num_qubits)
    : num_qubits_(num_qubits), m_(uint64_t{1} << (2 * num_qubits)) {
}

DensityMatrix DensityMatrix::pure(const StateVector &psi) {
    DensityMatrix rho(psi.num_qubits());
    uint64_t dim = psi.dim();
    for (uint64_t r = 0; r < dim; r++) {
        for (uint64_t c = 0; c < dim; c++) {
            rho.at(r, c) = psi.amp(r) * std::conj(psi.amp(c));
        }
    }
    return rho;
}

double DensityMatrix::trace_real() const {
    double total = 0;
    for (uint64_t r = 0; r < dim(); r++) {
        total += at(r, r).real();
    }
    return total;
}

double DensityMatrix::max_hermiticity_violation() const {
    double worst = 0;
    for (uint64_t r = 0; r < dim(); r++) {
        for (uint64_t c = r; c < dim(); c++) {
            worst = std::max(worst, std::abs(at(r, c) - std::conj(at(c, r))));
        }
    }
    return worst;
}

StateVector build_graph_state(const Graph &g, size_t cap) {
    int n = g.num_vertices();
    check_oracle_cap(n, cap);
    StateVector psi(n);
    std::vector<std::pair<uint64_t, uint64_t>> edge_masks;
    edge_masks.reserve(g.edges().size());
    for (auto [i, j] : g.edges()) {
        edge_masks.emplace_back(qubit_mask(n, i), qubit_mask(n, j));
    }
    double scale = 1.0 / std::sqrt(static_cast<double>(psi.dim()));
    for (uint64_t b = 0; b < psi.dim(); b++) {
        int parity = 0;
        for (auto [mi, mj] : edge_masks) {
            parity ^= ((b & mi) != 0) & ((b & mj) != 0);
        }
        psi.amp(b) = parity ? -scale : scale;
    }
    return psi;
}

void apply_channel_to_qubit(DensityMatrix &rho, const PauliChannel &ch, int qubit) {
    int n = rho.num_qubits();
    if (qubit < 0 || qubit >= n) {
        throw UsageError("qubit index out of range");
    }
    uint64_t m = qubit_mask(n, qubit);
    uint64_t dim = rho.dim();
    double p0 = ch.p0();
    // Per entry: rho'[r][c] = (p0 + s*pz) rho[r][c] + (px + s*py) rho[r^m][c^m]
    // with s = +1 when the qubit bits of r and c agree, else -1. Pairing
    // (r, c) with (r^m, c^m) updates both in one pass.
    for (uint64_t r = 0; r < dim; r++) {
        for (uint64_t c = 0; c < dim; c++) {
            if (r & m) {
                continue;  // visit each (r, c)/(r^m, c^m) pair once
            }
            uint64_t r2 = r | m;
            uint64_t c2 = c ^ m;
            double s = ((r ^ c) & m) ? -1.0 : 1.0;
            auto a = rho.at(r, c);
            auto b = rho.at(r2, c2);
            rho.at(r, c) = (p0 + s * ch.pz) * a + (ch.px + s * ch.py) * b;
            rho.at(r2, c2) = (p0 + s * ch.pz) * b + (ch.px + s * ch.py) * a;
        }
    }
}

void apply_channel(DensityMatrix &rho, const PauliChannel &ch) {
    for (int q = 0; q < rho.num_qubits(); q++) {
        apply_channel_to_qubit(rho, ch, q);
    }
}

DensityMatrix noisy_graph_state(const Graph &g, const PauliChannel &ch, size_t cap) {
    DensityMatrix rho = DensityMatrix::pure(build_graph_state(g, cap));
    apply_channel(rho, ch);
    return rho;
}

double fidelity_oracle(const Graph &g, const PauliChannel &ch, size_t cap) {
    StateVector psi = build_graph_state(g, cap);
    DensityMatrix rho = DensityMatrix::pure(psi);
    apply_channel(rho, ch);
    std::complex<double> overlap = 0;
    for (uint64_t r = 0; r < rho.dim(); r++) {
        for (uint64_t c = 0; c < rho.dim(); c++) {
            overlap += std::conj(psi.amp(r)) * rho.at(r, c) * psi.amp(c);
        }
    }
    if (std::abs(overlap.imag()) > 1e-12) {
        throw InternalError("fidelity has a non-negligible imaginary part");
    }
    return overlap.real();
}

double expectation_oracle(const Graph &g, const PauliChannel &ch, const PauliString &s, size_t cap) {
    if (s.num_qubits() != static_cast<size_t>(g.num_vertices())) {
        throw UsageError("pauli string size does not match the graph");
    }
    DensityMatrix rho = noisy_graph_state(g, ch, cap);
    auto [x_mask, z_mask] = pauli_masks(s);
    // Tr(rho S) = sum_b rho[b][b ^ x_mask] * <b^x|S|b>.
    std::complex<double> total = 0;
    for (uint64_t b = 0; b < rho.dim(); b++) {
        total += rho.at(b, b ^ x_mask) * pauli_entry(s, b, z_mask);
    }
    if (std::abs(total.imag()) > 1e-12) {
        throw InternalError("stabilizer expectation has a non-negligible imaginary part");
    }
    return total.real();
}

int lemma1_check(const Graph &g, const PauliString &p, size_t cap) {
    if (p.num_qubits() != static_cast<size_t>(g.num_vertices())) {
        throw UsageError("pauli string size does not match the graph");
    }
    StateVector psi = build_graph_state(g, cap);
    auto [x_mask, z_mask] = pauli_masks(p);
    std::complex<double> overlap = 0;
    for (uint64_t b = 0; b < psi.dim(); b++) {
        // (p|G>)[b] = <b|p|b^x> * psi[b^x]
        overlap += std::conj(psi.amp(b)) * pauli_entry(p, b ^ x_mask, z_mask) * psi.amp(b ^ x_mask);
    }
    double squared = std::norm(overlap);
    if (std::abs(squared) < 1e-10) {
        return 0;
    }
    if (std::abs(squared - 1.0) < 1e-10) {
        return 1;
    }
    throw InternalError("squared pauli expectation is neither 0 nor 1");
}

}  // namespace graphfid
