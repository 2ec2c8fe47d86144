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

#ifndef GRAPHFID_CHANNEL_HPP
#define GRAPHFID_CHANNEL_HPP

#include <string>
#include <string_view>

namespace graphfid {

/// A single-qubit Pauli channel: X, Y, Z errors with the given probabilities,
/// identity with probability p0 = 1 - px - py - pz. Applied i.i.d. to every
/// qubit; correlated noise is deliberately not representable.
struct PauliChannel {
    double px = 0;
    double py = 0;
    double pz = 0;

    double p0() const {
        return 1.0 - px - py - pz;
    }

    /// Validates probabilities with a 1e-12 tolerance for round-off (sweep
    /// code composes channels arithmetically) and clamps tiny negatives.
    static PauliChannel make(double px, double py, double pz);

    bool operator==(const PauliChannel &) const = default;
};

/// X, Y, Z each with probability p/3.
PauliChannel depolarizing(double p);

/// Z with probability p.
PauliChannel phase_flip(double p);

/// px = py = p/3 - delta, pz = p/3 + 2*delta. Interpolates from depolarizing
/// (delta = 0) to phase flip (delta = p/3); the component sum stays p.
PauliChannel interpolated(double p, double delta);

/// A channel plus the family it was written as, so commands can tell
/// depolarizing noise (closed forms available) from the general case.
struct NoiseSpec {
    enum class Kind {
        kDepolarizing,
        kPhaseFlip,
        kInterpolated,
        kPauli,
    };

    Kind kind = Kind::kDepolarizing;
    double p = 0;
    double delta = 0;
    PauliChannel channel;

    /// Accepts "depolarizing:p=0.15", "phaseflip:p=0.1",
    /// "interp:p=0.15,delta=0.02", "pauli:px=..,py=..,pz=..".
    static NoiseSpec parse(std::string_view text);

    static NoiseSpec make_depolarizing(double p);
    static NoiseSpec make_phase_flip(double p);
    static NoiseSpec make_interpolated(double p, double delta);

    bool is_depolarizing() const {
        return kind == Kind::kDepolarizing;
    }

    std::string str() const;
};

}  // namespace graphfid

#endif
