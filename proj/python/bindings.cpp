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

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "graphfid/analytic.hpp"
#include "graphfid/channel.hpp"
#include "graphfid/errors.hpp"
#include "graphfid/graph.hpp"
#include "graphfid/oracle.hpp"
#include "graphfid/protocol.hpp"
#include "graphfid/select.hpp"
#include "graphfid/stabilizer.hpp"
#include "graphfid/sweep.hpp"

namespace py = pybind11;
using namespace graphfid;

namespace {

StabilizerIndex index_from_str(const Graph &g, const std::string &bits) {
    StabilizerIndex index = BitVec::from_string(bits);
    if (index.size() != static_cast<size_t>(g.num_vertices())) {
        throw UsageError("index bit string length must equal the vertex count");
    }
    return index;
}

py::int_ bigint_to_py(const BigInt &v) {
    std::string digits = v.str();
    PyObject *obj = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (obj == nullptr) {
        throw py::error_already_set();
    }
    return py::reinterpret_steal<py::int_>(obj);
}

SweepSpec make_sweep_spec(
    const std::string &variable, double start, double stop, double step,
    const std::vector<std::string> &quantities) {
    SweepSpec spec;
    if (variable == "delta") {
        spec.variable = SweepSpec::Variable::kDelta;
    } else if (variable == "p") {
        spec.variable = SweepSpec::Variable::kP;
    } else {
        throw UsageError("variable must be 'p' or 'delta'");
    }
    spec.start = start;
    spec.stop = stop;
    spec.step = step;
    for (const auto &q : quantities) {
        spec.quantities.push_back(parse_quantity(q));
    }
    return spec;
}

// Python-facing single-pass iterator over the stabilizer group.
class GroupIter {
   public:
    GroupIter(const Graph &g, size_t cap) : enumerator_(g) {
        if (static_cast<size_t>(g.num_vertices()) > cap) {
            throw CapacityError("group enumeration exceeds the cap of " + std::to_string(cap));
        }
    }

    py::tuple next() {
        if (enumerator_.done()) {
            throw py::stop_iteration();
        }
        py::tuple out = py::make_tuple(enumerator_.index().str(), enumerator_.value());
        enumerator_.advance();
        return out;
    }

   private:
    StabilizerEnumerator enumerator_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Single-setting fidelity estimation for graph states under Pauli noise";
    m.attr("__version__") = "0.1.0";

    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<TheoremDomainError>(m, "TheoremDomainError", PyExc_ValueError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);
    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

    py::enum_<Pauli>(m, "Pauli")
        .value("I", Pauli::I)
        .value("X", Pauli::X)
        .value("Z", Pauli::Z)
        .value("Y", Pauli::Y);

    py::class_<PauliCounts>(m, "PauliCounts")
        .def_readonly("n_i", &PauliCounts::n_i)
        .def_readonly("n_x", &PauliCounts::n_x)
        .def_readonly("n_y", &PauliCounts::n_y)
        .def_readonly("n_z", &PauliCounts::n_z)
        .def("__repr__", [](const PauliCounts &c) {
            std::ostringstream s;
            s << "PauliCounts(n_i=" << c.n_i << ", n_x=" << c.n_x << ", n_y=" << c.n_y
              << ", n_z=" << c.n_z << ")";
            return s.str();
        });

    py::class_<PauliString>(m, "PauliString")
        .def(py::init([](const std::string &text) { return PauliString::from_text(text); }),
             py::arg("text"), "Parse a string like '+XZXIXZXI'.")
        .def_property_readonly("num_qubits", &PauliString::num_qubits)
        .def("letter", [](const PauliString &p, size_t q) { return p.letter(q); }, py::arg("qubit"))
        .def_property_readonly("phase", &PauliString::phase)
        .def_property_readonly("sign", &PauliString::sign)
        .def("counts", &PauliString::counts)
        .def_property_readonly("support", &PauliString::support)
        .def("anticommutes_on_qubit", &PauliString::anticommutes_on_qubit, py::arg("qubit"),
             py::arg("error"))
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__str__", &PauliString::str)
        .def("__repr__", [](const PauliString &p) { return "PauliString(\"" + p.str() + "\")"; });

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("num_vertices"),
             py::arg("edges"))
        .def_static("complete", &Graph::complete, py::arg("n"))
        .def_static(
            "grid",
            [](int rows, int cols, bool boustrophedon) {
                GridSpec spec;
                spec.rows = rows;
                spec.cols = cols;
                spec.numbering = boustrophedon ? GridSpec::Numbering::kBoustrophedon
                                               : GridSpec::Numbering::kRowMajor;
                return Graph::grid(spec);
            },
            py::arg("rows"), py::arg("cols"), py::arg("boustrophedon") = true)
        .def_static("parse", [](const std::string &text) { return Graph::parse(text); },
                    py::arg("text"))
        .def("serialize", &Graph::serialize)
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("edges", &Graph::edges)
        .def("degree", &Graph::degree, py::arg("vertex"))
        .def("has_edge", &Graph::has_edge, py::arg("i"), py::arg("j"))
        .def("neighbors",
             [](const Graph &g, int v) {
                 std::vector<int> out;
                 const BitVec &row = g.neighbors(v);
                 for (size_t j = 0; j < row.size(); j++) {
                     if (row.bit(j)) {
                         out.push_back(static_cast<int>(j));
                     }
                 }
                 return out;
             },
             py::arg("vertex"))
        .def("isolated_vertices", &Graph::isolated_vertices)
        .def("__repr__", [](const Graph &g) {
            return "Graph(n=" + std::to_string(g.num_vertices()) + ", edges=" +
                   std::to_string(g.edges().size()) + ")";
        });

    py::class_<PauliChannel>(m, "PauliChannel")
        .def(py::init(&PauliChannel::make), py::arg("px"), py::arg("py"), py::arg("pz"))
        .def_readonly("px", &PauliChannel::px)
        .def_readonly("py", &PauliChannel::py)
        .def_readonly("pz", &PauliChannel::pz)
        .def_property_readonly("p0", &PauliChannel::p0)
        .def("__repr__", [](const PauliChannel &c) {
            std::ostringstream s;
            s << "PauliChannel(px=" << c.px << ", py=" << c.py << ", pz=" << c.pz << ")";
            return s.str();
        });

    m.def("depolarizing", &depolarizing, py::arg("p"));
    m.def("phase_flip", &phase_flip, py::arg("p"));
    m.def("interpolated", &interpolated, py::arg("p"), py::arg("delta"));
    m.def("parse_noise", [](const std::string &text) { return NoiseSpec::parse(text).channel; },
          py::arg("spec"), "Parse a CLI noise spec into a PauliChannel.");

    m.def("generator", &generator, py::arg("graph"), py::arg("vertex"));
    m.def("stabilizer",
          [](const Graph &g, const std::string &bits) { return stabilizer(g, index_from_str(g, bits)); },
          py::arg("graph"), py::arg("index"),
          "Product of the generators selected by the index bit string.");

    py::enum_<Membership>(m, "Membership")
        .value("plus", Membership::kPlus)
        .value("minus", Membership::kMinus)
        .value("non_member", Membership::kNotAMember);
    m.def("membership", &membership, py::arg("graph"), py::arg("pauli"));

    py::class_<GroupIter>(m, "stabilizer_group")
        .def(py::init<const Graph &, size_t>(), py::arg("graph"),
             py::arg("cap") = kDefaultEnumerationCap,
             "Iterates (index_bits, PauliString) over all 2^n stabilizers in Gray order.")
        .def("__iter__", [](GroupIter &it) -> GroupIter & { return it; })
        .def("__next__", &GroupIter::next);

    // Analytic engine.
    m.def("stabilizer_expectation", &stabilizer_expectation, py::arg("channel"), py::arg("counts"));
    m.def("exact_fidelity",
          [](const Graph &g, const PauliChannel &ch, size_t cap, unsigned threads) {
              return exact_fidelity(g, ch, EnumOptions{cap, threads});
          },
          py::arg("graph"), py::arg("channel"), py::arg("cap") = kDefaultEnumerationCap,
          py::arg("threads") = 0);
    m.def("fidelity_error_series",
          [](const Graph &g, double p, size_t cap, unsigned threads) {
              return fidelity_error_series(g, p, EnumOptions{cap, threads});
          },
          py::arg("graph"), py::arg("p"), py::arg("cap") = kDefaultEnumerationCap,
          py::arg("threads") = 0);
    m.def("coefficient_c",
          [](int m_, int n, int n_i) { return bigint_to_py(coefficient_c(m_, n, n_i)); },
          py::arg("m"), py::arg("n"), py::arg("n_i"),
          "Exact integer coefficient of the m-error expectation term.");
    m.def("fully_connected_fidelity", &fully_connected_fidelity, py::arg("n"), py::arg("p"));
    m.def("count_stabilizers_with_support",
          [](const Graph &g, int support, size_t cap) {
              return count_stabilizers_with_support(g, support, EnumOptions{cap});
          },
          py::arg("graph"), py::arg("support"), py::arg("cap") = kDefaultEnumerationCap);
    m.def("cluster_third_order",
          [](const Graph &g, double p, size_t cap) {
              return cluster_third_order(g, p, EnumOptions{cap});
          },
          py::arg("graph"), py::arg("p"), py::arg("cap") = kDefaultEnumerationCap);

    py::class_<EstimationBounds>(m, "EstimationBounds")
        .def_readonly("f_tilde", &EstimationBounds::f_tilde)
        .def_readonly("f_est", &EstimationBounds::f_est)
        .def_readonly("gap_bound", &EstimationBounds::gap_bound)
        .def("__repr__", [](const EstimationBounds &r) {
            std::ostringstream s;
            s << "EstimationBounds(f_tilde=" << r.f_tilde << ", f_est=" << r.f_est
              << ", gap_bound=" << r.gap_bound << ")";
            return s.str();
        });
    m.def("estimation_bounds", &estimation_bounds, py::arg("k"), py::arg("p"));
    m.def("estimation_gap_p0", &estimation_gap_p0, py::arg("k"));
    m.def("fully_connected_gap_bound", &fully_connected_gap_bound, py::arg("k"));
    m.def("f_est_interpolated", &f_est_interpolated, py::arg("n"), py::arg("p"), py::arg("delta"));
    m.def("union_bound_fidelity", &union_bound_fidelity, py::arg("graph"), py::arg("p"));
    m.def("union_bound_complete", &union_bound_complete, py::arg("n"), py::arg("p"));
    m.def("union_bound_grid", &union_bound_grid, py::arg("q"), py::arg("r"), py::arg("p"));

    // Selector.
    py::class_<SelectionResult>(m, "SelectionResult")
        .def_property_readonly("index", [](const SelectionResult &r) { return r.index.str(); })
        .def_readonly("string", &SelectionResult::string)
        .def_readonly("counts", &SelectionResult::counts)
        .def_readonly("satisfies_dual", &SelectionResult::satisfies_dual)
        .def_property_readonly("weight", [](const SelectionResult &r) { return weight(r.index); })
        .def("__repr__", [](const SelectionResult &r) {
            return "SelectionResult(index=\"" + r.index.str() + "\", string=\"" + r.string.str() +
                   "\", dual=" + (r.satisfies_dual ? std::string("True") : std::string("False")) + ")";
        });
    m.def("find_set_a",
          [](const Graph &g, size_t limit, size_t cap) {
              return find_set_a(g, limit, EnumOptions{cap});
          },
          py::arg("graph"), py::arg("limit") = SIZE_MAX, py::arg("cap") = kDefaultEnumerationCap);
    m.def("lexicographically_first_set_a",
          [](const Graph &g, size_t cap) {
              return lexicographically_first_set_a(g, EnumOptions{cap});
          },
          py::arg("graph"), py::arg("cap") = kDefaultEnumerationCap);
    m.def("fully_connected_pattern", &fully_connected_pattern, py::arg("n"));
    m.def("cluster_tiling_pattern",
          [](int q, int r) {
              TilingResult t = cluster_tiling_pattern(q, r);
              return py::make_tuple(t.result, t.used_search_fallback);
          },
          py::arg("q"), py::arg("r"),
          "Measurement setting for a (2r) x (4q) boustrophedon cluster; returns "
          "(result, used_search_fallback).");
    m.def("dual_condition_filter", &dual_condition_filter, py::arg("results"));

    // Protocol.
    py::class_<ProtocolReport>(m, "ProtocolReport")
        .def_readonly("samples", &ProtocolReport::samples)
        .def_readonly("outcome_sum", &ProtocolReport::outcome_sum)
        .def_readonly("estimate", &ProtocolReport::estimate)
        .def_readonly("seed", &ProtocolReport::seed)
        .def_readonly("epsilon", &ProtocolReport::epsilon)
        .def_readonly("delta", &ProtocolReport::delta)
        .def("__repr__", [](const ProtocolReport &r) {
            std::ostringstream s;
            s << "ProtocolReport(samples=" << r.samples << ", outcome_sum=" << r.outcome_sum
              << ", estimate=" << r.estimate << ", seed=" << r.seed << ")";
            return s.str();
        });
    m.def("hoeffding_samples", &hoeffding_samples, py::arg("epsilon"), py::arg("delta"),
          "ceil(2/eps^2 * ln(2/delta)); natural logarithm.");
    m.def("sample_outcome", &sample_outcome, py::arg("stabilizer"), py::arg("channel"),
          py::arg("seed"), py::arg("sample_index"));
    m.def("run_protocol",
          [](const Graph &g, const std::string &bits, const PauliChannel &ch, uint64_t samples,
             uint64_t seed, unsigned threads) {
              return run_protocol(g, index_from_str(g, bits), ch, samples, seed, threads);
          },
          py::arg("graph"), py::arg("index"), py::arg("channel"), py::arg("samples"),
          py::arg("seed") = 0, py::arg("threads") = 0);
    m.def("coverage_trials",
          [](const Graph &g, const std::string &bits, const PauliChannel &ch, double epsilon,
             double delta, uint64_t trials, uint64_t seed, unsigned threads) {
              return coverage_trials(g, index_from_str(g, bits), ch, epsilon, delta, trials, seed,
                                     threads);
          },
          py::arg("graph"), py::arg("index"), py::arg("channel"), py::arg("epsilon"),
          py::arg("delta"), py::arg("trials"), py::arg("seed") = 0, py::arg("threads") = 0);

    // Dense oracle.
    m.def("build_graph_state",
          [](const Graph &g, size_t cap) { return build_graph_state(g, cap).amplitudes(); },
          py::arg("graph"), py::arg("cap") = kDefaultOracleCap,
          "Amplitudes of |G>, qubit 0 the most significant index bit.");
    m.def("fidelity_oracle", &fidelity_oracle, py::arg("graph"), py::arg("channel"),
          py::arg("cap") = kDefaultOracleCap);
    m.def("expectation_oracle", &expectation_oracle, py::arg("graph"), py::arg("channel"),
          py::arg("pauli"), py::arg("cap") = kDefaultOracleCap);
    m.def("lemma1_check", &lemma1_check, py::arg("graph"), py::arg("pauli"),
          py::arg("cap") = kDefaultOracleCap);

    // Sweeps.
    auto sweep_impl = [](const SweepTarget &target, const std::string &noise,
                         const std::string &variable, double start, double stop, double step,
                         const std::vector<std::string> &quantities, unsigned threads) {
        std::ostringstream out;
        EnumOptions opts;
        opts.threads = threads;
        run_sweep(out, target, NoiseSpec::parse(noise), make_sweep_spec(variable, start, stop, step, quantities),
                  opts);
        return out.str();
    };
    m.def("sweep_csv",
          [sweep_impl](const std::string &family, const std::string &noise, const std::string &variable,
                       double start, double stop, double step,
                       const std::vector<std::string> &quantities, unsigned threads) {
              return sweep_impl(SweepTarget::from_family(FamilySpec::parse(family)), noise, variable,
                                start, stop, step, quantities, threads);
          },
          py::arg("family"), py::arg("noise"), py::arg("variable"), py::arg("start"), py::arg("stop"),
          py::arg("step"), py::arg("quantities"), py::arg("threads") = 0);
    m.def("sweep_csv",
          [sweep_impl](const Graph &g, const std::string &noise, const std::string &variable,
                       double start, double stop, double step,
                       const std::vector<std::string> &quantities, unsigned threads) {
              return sweep_impl(SweepTarget::from_graph(g), noise, variable, start, stop, step,
                                quantities, threads);
          },
          py::arg("graph"), py::arg("noise"), py::arg("variable"), py::arg("start"), py::arg("stop"),
          py::arg("step"), py::arg("quantities"), py::arg("threads") = 0);
}
