# Copyright 2026 The graphfid Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest

import graphfid as gf


def test_fidelity_closed_form_matches_enumeration():
    g = gf.Graph.complete(8)
    ch = gf.depolarizing(0.15)
    f = gf.exact_fidelity(g, ch)
    assert abs(f - 0.29911969) < 1e-8
    assert abs(gf.fully_connected_fidelity(8, 0.15) - f) < 1e-12
    assert abs(gf.fidelity_error_series(g, 0.15) - f) < 1e-12


def test_graph_and_stabilizer_algebra():
    grid = gf.Graph.grid(2, 4)
    assert grid.num_vertices == 8
    assert len(grid.edges) == 10
    assert grid.neighbors(1) == [0, 2, 6]
    s = gf.stabilizer(grid, "10101010")
    assert str(s) == "+XZXIXZXI"
    c = s.counts()
    assert (c.n_i, c.n_x, c.n_y, c.n_z) == (2, 4, 0, 2)
    group = list(gf.stabilizer_group(gf.Graph.complete(2)))
    assert sorted(str(p) for _, p in group) == ["+II", "+XZ", "+YY", "+ZX"]


def test_membership_and_oracle():
    k2 = gf.Graph.complete(2)
    yy = gf.stabilizer(k2, "11")
    assert str(yy) == "+YY"
    assert gf.membership(k2, yy) == gf.Membership.plus
    assert gf.membership(k2, gf.PauliString("XX")) == gf.Membership.non_member
    assert gf.lemma1_check(k2, gf.PauliString("XX")) == 0
    assert abs(gf.fidelity_oracle(k2, gf.depolarizing(0.0)) - 1.0) < 1e-12
    grid = gf.Graph.grid(2, 4)
    assert abs(gf.fidelity_oracle(grid, gf.depolarizing(0.1)) - 0.430658290772748) < 1e-10


def test_selector_golden_pattern():
    grid = gf.Graph.grid(2, 4)
    results = gf.find_set_a(grid)
    assert ("10101010", "+XZXIXZXI") in {(r.index, str(r.string)) for r in results}
    result, used_fallback = gf.cluster_tiling_pattern(2, 1)  # 2x8 grid
    assert not used_fallback
    assert result.weight == 8
    assert result.counts.n_i == 4
    with pytest.raises(ValueError):
        gf.fully_connected_pattern(12)


def test_protocol_determinism_and_hoeffding():
    assert gf.hoeffding_samples(0.05, 0.01) == 4239
    g = gf.Graph.grid(2, 4)
    ch = gf.depolarizing(0.15)
    a = gf.run_protocol(g, "10101010", ch, 20000, seed=7)
    b = gf.run_protocol(g, "10101010", ch, 20000, seed=7, threads=4)
    assert a.outcome_sum == b.outcome_sum
    assert a.samples == 20000
    assert abs(a.estimate - 0.262144) < 0.05


def test_theorem_quantities():
    r = gf.estimation_bounds(2, 0.15)
    assert abs(r.f_est - 0.262144) < 1e-12
    assert 0 <= r.f_tilde - r.f_est < r.gap_bound
    assert abs(gf.estimation_gap_p0(1) - 8.0 / 9.0) < 1e-12
    assert gf.coefficient_c(1, 8, 2) == 0
    assert gf.coefficient_c(2, 8, 2) == -12
    assert gf.coefficient_c(20, 60, 60) == 3**20 * 4191844505805495  # 3^20 binom(60, 20)


def test_sweep_csv():
    csv = gf.sweep_csv("complete:8", "depolarizing:p=0", "p", 0.0, 0.2, 0.1, ["F", "F_est"])
    lines = csv.strip().split("\n")
    assert lines[0] == "p,F,F_est"
    assert len(lines) == 4
    assert lines[1].startswith("0,1,1")
    grid_csv = gf.sweep_csv(
        gf.Graph.grid(2, 4), "interp:p=0.15,delta=0", "delta", 0.0, 0.05, 0.01, ["F", "F_est"]
    )
    assert grid_csv.splitlines()[0] == "delta,F,F_est"
