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

#ifndef GRAPHFID_ANALYTIC_HPP
#define GRAPHFID_ANALYTIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "graphfid/channel.hpp"
#include "graphfid/graph.hpp"
#include "graphfid/pauli.hpp"
#include "graphfid/stabilizer.hpp"

namespace graphfid {

using BigInt = boost::multiprecision::cpp_int;

/// Knobs for group-enumeration computations.
struct EnumOptions {
    size_t cap = kDefaultEnumerationCap;
    /// Worker threads; 0 means hardware concurrency. Results are bit-stable
    /// regardless of this value.
    unsigned threads = 0;
};

/// base^exp by squaring, so identical inputs give identical doubles on every
/// platform and thread count.
double powi(double base, uint64_t exp);

/// Expectation of a stabilizer with the given letter census under a Pauli
/// channel applied to every qubit:
///
///   (1-2py-2pz)^nX * (1-2pz-2px)^nY * (1-2px-2py)^nZ
///
/// For depolarizing noise this collapses to (1-4p/3)^(n-nI).
double stabilizer_expectation(const PauliChannel &ch, const PauliCounts &counts);

/// Exact fidelity <G|rho|G> as the mean of all 2^n stabilizer expectations.
double exact_fidelity(const Graph &g, const PauliChannel &ch, const EnumOptions &opts = {});

/// Exact fidelity for depolarizing noise by the error-pattern route:
/// sum over stabilizers of (1-p)^nI * (p/3)^(n-nI). Equals exact_fidelity
/// but is computed through an algebraically different formula.
double fidelity_error_series(const Graph &g, double p, const EnumOptions &opts = {});

/// Coefficient of the m-error term of a stabilizer expectation, in exact
/// integer arithmetic:
///
///   C(m) = sum_j (-1)^(m-j) 3^j binom(nI, j) binom(n-nI, m-j),
///
/// with j running over [max(0, m+nI-n), min(m, nI)]. C(1) = 4*nI - n.
BigInt coefficient_c(int m, int n, int n_i);

/// Fidelity of the n-vertex fully connected graph state under depolarizing
/// noise: ((1-2p/3)^n + (2p/3)^n + (1-4p/3)^n) / 2.
double fully_connected_fidelity(int n, double p);

/// How many stabilizers have exactly `support` non-identity letters.
uint64_t count_stabilizers_with_support(const Graph &g, int support, const EnumOptions &opts = {});

/// Third-order truncation for cluster states:
/// (1-p)^n + w3 * (1-p)^(n-3) * (p/3)^3, with w3 counted by enumeration.
double cluster_third_order(const Graph &g, double p, const EnumOptions &opts = {});

struct EstimationBounds {
    double f_tilde;    // (1-p)^(4k), fidelity truncated after first order
    double f_est;      // (1-4p/3)^(3k), the single-stabilizer expectation
    double gap_bound;  // 2/(3k); 0 <= f_tilde - f_est < gap_bound
};

/// Quantities of the single-setting estimation theorem for n = 4k qubits.
/// Requires 0 <= p <= 3/4.
EstimationBounds estimation_bounds(int k, double p);

/// Location of the maximum of the gap polynomial:
/// p0 = (16k + 1 - sqrt(256k^2 - 352k + 97)) / (6(4k-1)); always below 1/k.
double estimation_gap_p0(int k);

/// Upper bound on F - F_est for fully connected graphs with n = 8k:
/// (1 - 1/(8k))(1 - 1/(4k))^(8k-2)/2 + (2/3)^(8k)/2 + 1/(3k).
/// Decreases monotonically in k toward 1/(2e^2).
double fully_connected_gap_bound(int k);

/// Single-stabilizer estimate under the interpolated noise family, for a
/// stabilizer with wt = n/2 and nI = n/4:
/// (1-4p/3-2delta)^(n/2) * (1-4p/3+4delta)^(n/4).
double f_est_interpolated(int n, double p, double delta);

/// Union-bound fidelity lower bound from the n generator expectations under
/// depolarizing noise: 1 - sum_i (1 - (1-4p/3)^(1+deg(i))) / 2.
double union_bound_fidelity(const Graph &g, double p);

/// Closed form of the union bound for K_n: 1 - n/2 + (n/2)(1-4p/3)^n.
double union_bound_complete(int n, double p);

/// Closed form of the union bound for a q x r cluster (q, r >= 2).
double union_bound_grid(int q, int r, double p);

}  // namespace graphfid

#endif
