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

#include "graphfid/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "graphfid/errors.hpp"
#include "parallel.hpp"

namespace graphfid {

namespace {

// Gray-code blocks of this many steps are summed sequentially; block partial
// sums are then combined pairwise. Fixing the block size (instead of deriving
// it from the worker count) is what keeps results bit-stable under any
// parallelism.
constexpr uint64_t kBlockBits = 14;

void check_cap(const Graph &g, const EnumOptions &opts) {
    if (static_cast<size_t>(g.num_vertices()) > opts.cap) {
        throw CapacityError(
            "enumeration over " + std::to_string(g.num_vertices()) + " qubits exceeds the cap of " +
            std::to_string(opts.cap) + "; use a closed form or raise the cap");
    }
}

// Sums term(nX, nY, nZ, nI) over the whole stabilizer group, deterministically.
template <typename Term>
double group_sum(const Graph &g, const EnumOptions &opts, Term term) {
    check_cap(g, opts);
    int n = g.num_vertices();
    uint64_t total = uint64_t{1} << n;
    uint64_t block_size = std::min<uint64_t>(total, uint64_t{1} << kBlockBits);
    uint64_t num_blocks = total / block_size;
    std::vector<double> block_sums(num_blocks);
    internal::run_blocks(num_blocks, opts.threads, [&](size_t b) {
        StabilizerEnumerator e(g, b * block_size);
        double acc = 0;
        for (uint64_t k = 0; k < block_size; k++) {
            PauliCounts c = e.value().counts();
            acc += term(c);
            e.advance();
        }
        block_sums[b] = acc;
    });
    return internal::pairwise_sum(block_sums);
}

}  // namespace

double powi(double base, uint64_t exp) {
    double result = 1.0;
    double factor = base;
    while (exp) {
        if (exp & 1) {
            result *= factor;
        }
        factor *= factor;
        exp >>= 1;
    }
    return result;
}

double stabilizer_expectation(const PauliChannel &ch, const PauliCounts &counts) {
    double fx = 1.0 - 2 * ch.py - 2 * ch.pz;
    double fy = 1.0 - 2 * ch.pz - 2 * ch.px;
    double fz = 1.0 - 2 * ch.px - 2 * ch.py;
    return powi(fx, counts.n_x) * powi(fy, counts.n_y) * powi(fz, counts.n_z);
}

double exact_fidelity(const Graph &g, const PauliChannel &ch, const EnumOptions &opts) {
    int n = g.num_vertices();
    // Letter-indexed power tables turn each group element into three lookups.
    double fx = 1.0 - 2 * ch.py - 2 * ch.pz;
    double fy = 1.0 - 2 * ch.pz - 2 * ch.px;
    double fz = 1.0 - 2 * ch.px - 2 * ch.py;
    std::vector<double> tx(n + 1), ty(n + 1), tz(n + 1);
    for (int k = 0; k <= n; k++) {
        tx[k] = powi(fx, k);
        ty[k] = powi(fy, k);
        tz[k] = powi(fz, k);
    }
    double sum = group_sum(g, opts, [&](const PauliCounts &c) {
        return tx[c.n_x] * ty[c.n_y] * tz[c.n_z];
    });
    return sum / static_cast<double>(uint64_t{1} << n);
}

double fidelity_error_series(const Graph &g, double p, const EnumOptions &opts) {
    if (p < 0 || p > 1) {
        throw UsageError("p must be a probability in [0, 1]");
    }
    int n = g.num_vertices();
    std::vector<double> keep(n + 1), err(n + 1);
    for (int k = 0; k <= n; k++) {
        keep[k] = powi(1.0 - p, k);
        err[k] = powi(p / 3, k);
    }
    // Each stabilizer is an error pattern on its support that maps |G> to
    // itself, contributing (1-p)^nI (p/3)^(n-nI).
    return group_sum(g, opts, [&](const PauliCounts &c) {
        return keep[c.n_i] * err[n - c.n_i];
    });
}

BigInt coefficient_c(int m, int n, int n_i) {
    if (n < 0 || m < 0 || m > n || n_i < 0 || n_i > n) {
        throw UsageError("coefficient_c requires 0 <= m <= n and 0 <= n_i <= n");
    }
    auto binom = [](int a, int b) -> BigInt {
        if (b < 0 || b > a) {
            return 0;
        }
        BigInt result = 1;
        for (int k = 0; k < b; k++) {
            result = result * (a - k) / (k + 1);
        }
        return result;
    };
    int lo = std::max(0, m + n_i - n);
    int hi = std::min(m, n_i);
    BigInt total = 0;
    BigInt pow3 = 1;
    for (int k = 0; k < lo; k++) {
        pow3 *= 3;
    }
    for (int j = lo; j <= hi; j++) {
        BigInt term = pow3 * binom(n_i, j) * binom(n - n_i, m - j);
        total += ((m - j) & 1) ? -term : term;
        pow3 *= 3;
    }
    return total;
}

double fully_connected_fidelity(int n, double p) {
    if (n < 2) {
        throw UsageError("fully connected graph needs n >= 2");
    }
    uint64_t un = static_cast<uint64_t>(n);
    return 0.5 * (powi(1.0 - 2 * p / 3, un) + powi(2 * p / 3, un) + powi(1.0 - 4 * p / 3, un));
}

uint64_t count_stabilizers_with_support(const Graph &g, int support, const EnumOptions &opts) {
    check_cap(g, opts);
    uint64_t count = 0;
    StabilizerEnumerator e(g);
    do {
        if (static_cast<int>(e.value().support()) == support) {
            count++;
        }
    } while (e.advance());
    return count;
}

double cluster_third_order(const Graph &g, double p, const EnumOptions &opts) {
    uint64_t n = static_cast<uint64_t>(g.num_vertices());
    if (n < 3) {
        throw UsageError("third-order truncation needs at least 3 qubits");
    }
    uint64_t w3 = count_stabilizers_with_support(g, 3, opts);
    return powi(1.0 - p, n) + static_cast<double>(w3) * powi(1.0 - p, n - 3) * powi(p / 3, 3);
}

EstimationBounds estimation_bounds(int k, double p) {
    if (k < 1) {
        throw UsageError("k must be a positive integer");
    }
    if (p < 0 || p > 0.75) {
        throw TheoremDomainError("the estimation guarantee covers 0 <= p <= 3/4");
    }
    EstimationBounds r;
    r.f_tilde = powi(1.0 - p, 4 * static_cast<uint64_t>(k));
    r.f_est = powi(1.0 - 4 * p / 3, 3 * static_cast<uint64_t>(k));
    r.gap_bound = 2.0 / (3.0 * k);
    return r;
}

double estimation_gap_p0(int k) {
    if (k < 1) {
        throw UsageError("k must be a positive integer");
    }
    double kd = k;
    double radicand = 256 * kd * kd - 352 * kd + 97;
    return (16 * kd + 1 - std::sqrt(radicand)) / (6 * (4 * kd - 1));
}

double fully_connected_gap_bound(int k) {
    if (k < 1) {
        throw UsageError("k must be a positive integer");
    }
    double kd = k;
    uint64_t n = 8 * static_cast<uint64_t>(k);
    return 0.5 * (1.0 - 1.0 / (8 * kd)) * powi(1.0 - 1.0 / (4 * kd), n - 2) +
           0.5 * powi(2.0 / 3.0, n) + 1.0 / (3 * kd);
}

double f_est_interpolated(int n, double p, double delta) {
    if (n < 4 || n % 4 != 0) {
        throw TheoremDomainError("interpolated estimate needs n divisible by 4");
    }
    interpolated(p, delta);  // validates (p, delta)
    uint64_t un = static_cast<uint64_t>(n);
    return powi(1.0 - 4 * p / 3 - 2 * delta, un / 2) * powi(1.0 - 4 * p / 3 + 4 * delta, un / 4);
}

double union_bound_fidelity(const Graph &g, double p) {
    if (p < 0 || p > 1) {
        throw UsageError("p must be a probability in [0, 1]");
    }
    double base = 1.0 - 4 * p / 3;
    double deficit = 0;
    for (int v = 0; v < g.num_vertices(); v++) {
        deficit += (1.0 - powi(base, static_cast<uint64_t>(1 + g.degree(v)))) / 2;
    }
    return 1.0 - deficit;
}

double union_bound_complete(int n, double p) {
    double nd = n;
    return 1.0 - nd / 2 + nd / 2 * powi(1.0 - 4 * p / 3, static_cast<uint64_t>(n));
}

double union_bound_grid(int q, int r, double p) {
    if (q < 2 || r < 2) {
        throw UsageError("the cluster union-bound closed form needs q, r >= 2");
    }
    double n = static_cast<double>(q) * r;
    double u = 1.0 - 4 * p / 3;
    double edges = 2.0 * (q + r - 4) * powi(u, 4);
    double corners = 4.0 * powi(u, 3);
    double interior = static_cast<double>(q - 2) * (r - 2) * powi(u, 5);
    return 1.0 - n / 2 + 0.5 * (edges + corners + interior);
}

}  // namespace graphfid
