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

#include "graphfid/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "graphfid/errors.hpp"

namespace graphfid {

const char *fidelity_method_name(FidelityMethod m) {
    switch (m) {
        case FidelityMethod::kAuto:
            return "auto";
        case FidelityMethod::kGroupEnumeration:
            return "group-enumeration";
        case FidelityMethod::kFullyConnectedClosedForm:
            return "fully-connected-closed-form";
        case FidelityMethod::kErrorSeries:
            return "error-series";
    }
    return "?";
}

SweepTarget SweepTarget::from_family(const FamilySpec &spec) {
    return SweepTarget{spec.build(), spec};
}

SweepTarget SweepTarget::from_graph(Graph g) {
    return SweepTarget{std::move(g), std::nullopt};
}

FidelityBreakdown fidelity_breakdown(
    const SweepTarget &target, const NoiseSpec &noise, FidelityMethod method, const EnumOptions &opts) {
    const Graph &g = target.graph;
    int n = g.num_vertices();
    bool is_complete = target.family && target.family->kind == FamilySpec::Kind::kComplete;

    if (method == FidelityMethod::kAuto) {
        if (is_complete && noise.is_depolarizing()) {
            method = FidelityMethod::kFullyConnectedClosedForm;
        } else if (static_cast<size_t>(n) <= opts.cap) {
            method = FidelityMethod::kGroupEnumeration;
        } else {
            throw CapacityError(
                "no closed form available and " + std::to_string(n) +
                " qubits exceeds the enumeration cap; use --family complete:N with "
                "depolarizing noise or a smaller graph");
        }
    }

    FidelityBreakdown b;
    b.method = method;
    switch (method) {
        case FidelityMethod::kFullyConnectedClosedForm:
            if (!is_complete) {
                throw UsageError("the closed-form method applies only to the complete family");
            }
            if (!noise.is_depolarizing()) {
                throw UsageError("the closed-form method applies only to depolarizing noise");
            }
            b.exact = fully_connected_fidelity(n, noise.p);
            break;
        case FidelityMethod::kErrorSeries:
            if (!noise.is_depolarizing()) {
                throw UsageError("the error-series method applies only to depolarizing noise");
            }
            b.exact = fidelity_error_series(g, noise.p, opts);
            break;
        case FidelityMethod::kGroupEnumeration:
            b.exact = exact_fidelity(g, noise.channel, opts);
            break;
        case FidelityMethod::kAuto:
            throw InternalError("unresolved fidelity method");
    }

    if (noise.is_depolarizing()) {
        b.f_tilde = powi(1.0 - noise.p, static_cast<uint64_t>(n));
        if (n % 4 == 0) {
            b.f_est = powi(1.0 - 4 * noise.p / 3, static_cast<uint64_t>(3 * n / 4));
        }
    }
    return b;
}

const char *quantity_name(Quantity q) {
    switch (q) {
        case Quantity::kF:
            return "F";
        case Quantity::kFTilde:
            return "F_tilde";
        case Quantity::kFEst:
            return "F_est";
        case Quantity::kFUb:
            return "F_ub";
        case Quantity::kFThirdOrder:
            return "F_third_order";
        case Quantity::kFEstDelta:
            return "F_est_delta";
    }
    return "?";
}

Quantity parse_quantity(std::string_view name) {
    if (name == "F") return Quantity::kF;
    if (name == "F_tilde") return Quantity::kFTilde;
    if (name == "F_est") return Quantity::kFEst;
    if (name == "F_ub") return Quantity::kFUb;
    if (name == "F_third_order") return Quantity::kFThirdOrder;
    if (name == "F_est_delta") return Quantity::kFEstDelta;
    throw UsageError("unknown quantity '" + std::string(name) + "'");
}

std::string format_quantity(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

namespace {

std::vector<double> grid_points(const SweepSpec &spec) {
    if (spec.step <= 0) {
        throw UsageError("sweep step must be positive");
    }
    if (spec.start > spec.stop) {
        throw UsageError("sweep start must not exceed stop");
    }
    std::vector<double> points;
    for (size_t k = 0;; k++) {
        double v = spec.start + static_cast<double>(k) * spec.step;
        if (v > spec.stop + 1e-12) {
            break;
        }
        points.push_back(std::min(v, spec.stop));
    }
    return points;
}

NoiseSpec noise_at_p(const NoiseSpec &base, double p) {
    switch (base.kind) {
        case NoiseSpec::Kind::kDepolarizing:
            return NoiseSpec::make_depolarizing(p);
        case NoiseSpec::Kind::kPhaseFlip:
            return NoiseSpec::make_phase_flip(p);
        case NoiseSpec::Kind::kInterpolated:
            return NoiseSpec::make_interpolated(p, base.delta);
        case NoiseSpec::Kind::kPauli:
            throw UsageError("cannot sweep p for a raw pauli channel");
    }
    throw InternalError("bad noise kind");
}

}  // namespace

void run_sweep(
    std::ostream &out,
    const SweepTarget &target,
    const NoiseSpec &base_noise,
    const SweepSpec &spec,
    const EnumOptions &opts) {
    if (spec.quantities.empty()) {
        throw UsageError("sweep needs at least one quantity");
    }
    const Graph &g = target.graph;
    int n = g.num_vertices();
    bool sweeping_p = spec.variable == SweepSpec::Variable::kP;

    if (!sweeping_p && base_noise.kind != NoiseSpec::Kind::kDepolarizing &&
        base_noise.kind != NoiseSpec::Kind::kInterpolated) {
        throw UsageError("delta sweeps need interpolated (or depolarizing) base noise fixing p");
    }

    // Pre-resolve per-quantity requirements so errors surface before any row.
    bool need_w3 = false;
    for (Quantity q : spec.quantities) {
        switch (q) {
            case Quantity::kF:
                break;
            case Quantity::kFTilde:
                if (sweeping_p && !base_noise.is_depolarizing()) {
                    throw UsageError("F_tilde is defined for depolarizing noise");
                }
                break;
            case Quantity::kFEst:
                if (n % 4 != 0) {
                    throw TheoremDomainError("F_est needs n divisible by 4");
                }
                if (sweeping_p && !base_noise.is_depolarizing()) {
                    throw UsageError("F_est in a p sweep is defined for depolarizing noise");
                }
                break;
            case Quantity::kFEstDelta:
                if (n % 4 != 0) {
                    throw TheoremDomainError("F_est_delta needs n divisible by 4");
                }
                if (sweeping_p && base_noise.kind != NoiseSpec::Kind::kInterpolated) {
                    throw UsageError("F_est_delta in a p sweep needs interpolated noise fixing delta");
                }
                break;
            case Quantity::kFUb:
                if (!base_noise.is_depolarizing()) {
                    throw UsageError("F_ub is defined for depolarizing noise");
                }
                break;
            case Quantity::kFThirdOrder:
                if (!base_noise.is_depolarizing()) {
                    throw UsageError("F_third_order is defined for depolarizing noise");
                }
                need_w3 = true;
                break;
        }
    }

    uint64_t w3 = 0;
    if (need_w3) {
        w3 = count_stabilizers_with_support(g, 3, opts);
    }

    out << (sweeping_p ? "p" : "delta");
    for (Quantity q : spec.quantities) {
        out << ',' << quantity_name(q);
    }
    out << '\n';

    for (double v : grid_points(spec)) {
        double p = sweeping_p ? v : base_noise.p;
        double delta = sweeping_p ? base_noise.delta : v;
        NoiseSpec point_noise =
            sweeping_p ? noise_at_p(base_noise, v) : NoiseSpec::make_interpolated(p, delta);

        out << format_quantity(v);
        for (Quantity q : spec.quantities) {
            double value = 0;
            switch (q) {
                case Quantity::kF:
                    value = fidelity_breakdown(target, point_noise, FidelityMethod::kAuto, opts).exact;
                    break;
                case Quantity::kFTilde:
                    value = powi(1.0 - p, static_cast<uint64_t>(n));
                    break;
                case Quantity::kFEst:
                    value = sweeping_p ? powi(1.0 - 4 * p / 3, static_cast<uint64_t>(3 * n / 4))
                                       : f_est_interpolated(n, p, delta);
                    break;
                case Quantity::kFEstDelta:
                    value = f_est_interpolated(n, p, delta);
                    break;
                case Quantity::kFUb:
                    value = union_bound_fidelity(g, p);
                    break;
                case Quantity::kFThirdOrder:
                    value = powi(1.0 - p, static_cast<uint64_t>(n)) +
                            static_cast<double>(w3) * powi(1.0 - p, static_cast<uint64_t>(n - 3)) *
                                powi(p / 3, 3);
                    break;
            }
            out << ',' << format_quantity(value);
        }
        out << '\n';
    }
}

}  // namespace graphfid
