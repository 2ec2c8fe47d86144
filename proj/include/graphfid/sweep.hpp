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

#ifndef GRAPHFID_SWEEP_HPP
#define GRAPHFID_SWEEP_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graphfid/analytic.hpp"
#include "graphfid/channel.hpp"
#include "graphfid/graph.hpp"

namespace graphfid {

enum class FidelityMethod {
    kAuto,
    kGroupEnumeration,
    kFullyConnectedClosedForm,
    kErrorSeries,
};

const char *fidelity_method_name(FidelityMethod m);

/// The graph under study plus, when it came from a named family, the family
/// (which unlocks closed forms past the enumeration cap).
struct SweepTarget {
    Graph graph;
    std::optional<FamilySpec> family;

    static SweepTarget from_family(const FamilySpec &spec);
    static SweepTarget from_graph(Graph g);
};

/// Exact fidelity plus the estimation-theorem companions.
struct FidelityBreakdown {
    double exact = 0;
    std::optional<double> f_tilde;  // (1-p)^n (depolarizing noise only)
    std::optional<double> f_est;    // (1-4p/3)^(3n/4) when n = 4k
    FidelityMethod method = FidelityMethod::kGroupEnumeration;
};

/// Computes F by the requested method (kAuto prefers the fully connected
/// closed form, then enumeration) with the theorem companions filled in when
/// the noise is depolarizing and n is a multiple of 4.
FidelityBreakdown fidelity_breakdown(
    const SweepTarget &target,
    const NoiseSpec &noise,
    FidelityMethod method = FidelityMethod::kAuto,
    const EnumOptions &opts = {});

/// Columns a sweep can emit.
enum class Quantity {
    kF,
    kFTilde,
    kFEst,
    kFUb,
    kFThirdOrder,
    kFEstDelta,
};

const char *quantity_name(Quantity q);
Quantity parse_quantity(std::string_view name);

struct SweepSpec {
    enum class Variable {
        kP,
        kDelta,
    };

    Variable variable = Variable::kP;
    double start = 0;
    double stop = 0;
    double step = 0;
    std::vector<Quantity> quantities;
};

/// Streams one CSV row per grid point (12 significant digits), preceded by a
/// header naming the variable and the requested quantities. Output is
/// byte-identical across runs and worker counts.
void run_sweep(
    std::ostream &out,
    const SweepTarget &target,
    const NoiseSpec &base_noise,
    const SweepSpec &spec,
    const EnumOptions &opts = {});

/// Formats a double with 12 significant digits (the CSV cell format).
std::string format_quantity(double value);

}  // namespace graphfid

#endif
