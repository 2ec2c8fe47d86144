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

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "graphfid/analytic.hpp"
#include "graphfid/channel.hpp"
#include "graphfid/errors.hpp"
#include "graphfid/graph.hpp"
#include "graphfid/oracle.hpp"
#include "graphfid/protocol.hpp"
#include "graphfid/select.hpp"
#include "graphfid/stabilizer.hpp"
#include "graphfid/sweep.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::json;
using namespace graphfid;

void warn(const std::string &category, const std::string &message) {
    std::cerr << "warning(" << category << "): " << message << "\n";
}

struct CommonArgs {
    std::string graph_path;
    std::string family;
    std::string numbering = "boustrophedon";
    std::string noise;
    std::string output;
    std::string format = "text";
    uint64_t seed = 0;
    unsigned threads = 0;
    size_t cap = kDefaultEnumerationCap;
};

void add_target_options(CLI::App *cmd, CommonArgs &args) {
    auto *graph = cmd->add_option("--graph", args.graph_path, "Graph file (first line n, then 'i j' edges)");
    auto *family = cmd->add_option("--family", args.family, "Named family: complete:N or grid:R,C");
    graph->excludes(family);
    cmd->add_option("--numbering", args.numbering, "Grid numbering: boustrophedon (default) or row-major")
        ->check(CLI::IsMember({"boustrophedon", "row-major"}));
    cmd->add_option("--cap", args.cap, "Group enumeration cap (default 24)");
    cmd->add_option("--threads", args.threads, "Worker threads (0 = hardware)");
}

void add_output_options(CLI::App *cmd, CommonArgs &args) {
    cmd->add_option("--output", args.output, "Write to a file instead of stdout");
    cmd->add_option("--format", args.format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
}

EnumOptions enum_options(const CommonArgs &args) {
    return EnumOptions{args.cap, args.threads};
}

SweepTarget load_target(const CommonArgs &args) {
    GridSpec::Numbering numbering = args.numbering == "row-major"
                                        ? GridSpec::Numbering::kRowMajor
                                        : GridSpec::Numbering::kBoustrophedon;
    SweepTarget target = [&] {
        if (!args.family.empty()) {
            return SweepTarget::from_family(FamilySpec::parse(args.family, numbering));
        }
        if (!args.graph_path.empty()) {
            std::ifstream in(args.graph_path);
            if (!in) {
                throw UsageError("cannot open graph file '" + args.graph_path + "'");
            }
            return SweepTarget::from_graph(Graph::parse(in));
        }
        throw UsageError("specify the target with --graph FILE or --family SPEC");
    }();
    auto isolated = target.graph.isolated_vertices();
    if (!isolated.empty()) {
        warn("usage", "graph has " + std::to_string(isolated.size()) +
                          " isolated vertex/vertices; protocol-level commands will reject it");
    }
    return target;
}

NoiseSpec load_noise(const CommonArgs &args) {
    if (args.noise.empty()) {
        throw UsageError("specify the noise with --noise SPEC");
    }
    return NoiseSpec::parse(args.noise);
}

void check_theorem_domain_warnings(const SweepTarget &target, const NoiseSpec &noise) {
    if (target.graph.num_vertices() % 4 != 0) {
        warn("theorem-domain",
             "n = " + std::to_string(target.graph.num_vertices()) +
                 " is not a multiple of 4; the single-setting estimate F_est is unavailable");
    }
    if (noise.kind != NoiseSpec::Kind::kPauli && noise.p > 0.75) {
        warn("theorem-domain", "p > 3/4 lies outside the estimation guarantee");
    }
}

// Streams to --output when given, else stdout.
class OutputStream {
   public:
    explicit OutputStream(const CommonArgs &args) {
        if (!args.output.empty()) {
            file_.open(args.output);
            if (!file_) {
                throw UsageError("cannot open output file '" + args.output + "'");
            }
        }
    }
    std::ostream &get() {
        return file_.is_open() ? file_ : std::cout;
    }

   private:
    std::ofstream file_;
};

json target_json(const SweepTarget &target) {
    json j;
    j["n"] = target.graph.num_vertices();
    if (target.family) {
        j["family"] = target.family->str();
    }
    j["edges"] = target.graph.edges().size();
    return j;
}

// Picks the measurement setting for --auto-select: the lexicographically
// smallest member of the set when a scan is feasible, else the constructive
// family pattern.
SelectionResult auto_select(const SweepTarget &target, const EnumOptions &opts) {
    const Graph &g = target.graph;
    if (static_cast<size_t>(g.num_vertices()) <= opts.cap) {
        auto best = lexicographically_first_set_a(g, opts);
        if (!best) {
            throw TheoremDomainError("this graph has no stabilizer with nI = n/4");
        }
        return *best;
    }
    if (target.family && target.family->kind == FamilySpec::Kind::kComplete) {
        return fully_connected_pattern(g.num_vertices());
    }
    if (target.family && target.family->kind == FamilySpec::Kind::kGrid) {
        const GridSpec &grid = target.family->grid;
        if (grid.rows % 2 == 0 && grid.cols % 4 == 0 &&
            grid.numbering == GridSpec::Numbering::kBoustrophedon) {
            return cluster_tiling_pattern(grid.cols / 4, grid.rows / 2).result;
        }
    }
    throw CapacityError("auto-select beyond the enumeration cap needs a complete or 2r x 4q grid family");
}

int cmd_fidelity(const CommonArgs &args, const std::string &method_name) {
    SweepTarget target = load_target(args);
    NoiseSpec noise = load_noise(args);
    check_theorem_domain_warnings(target, noise);
    FidelityMethod method = FidelityMethod::kAuto;
    if (method_name == "enumeration") {
        method = FidelityMethod::kGroupEnumeration;
    } else if (method_name == "series") {
        method = FidelityMethod::kErrorSeries;
    } else if (method_name == "closed-form") {
        method = FidelityMethod::kFullyConnectedClosedForm;
    }
    FidelityBreakdown b = fidelity_breakdown(target, noise, method, enum_options(args));
    OutputStream out(args);
    if (args.format == "json") {
        json j;
        j["command"] = "fidelity";
        j["target"] = target_json(target);
        j["noise"] = noise.str();
        j["F"] = b.exact;
        j["method"] = fidelity_method_name(b.method);
        if (b.f_tilde) {
            j["F_tilde"] = *b.f_tilde;
        }
        if (b.f_est) {
            j["F_est"] = *b.f_est;
        }
        out.get() << j.dump() << "\n";
    } else {
        out.get() << "F = " << format_quantity(b.exact) << " (" << fidelity_method_name(b.method) << ")\n";
        if (b.f_tilde) {
            out.get() << "F_tilde = " << format_quantity(*b.f_tilde) << "\n";
        }
        if (b.f_est) {
            out.get() << "F_est = " << format_quantity(*b.f_est) << "\n";
        }
    }
    return 0;
}

int cmd_select(
    const CommonArgs &args, size_t limit, bool dual_only, bool use_pattern) {
    SweepTarget target = load_target(args);
    std::vector<SelectionResult> results;
    bool used_fallback = false;
    if (use_pattern) {
        if (target.family && target.family->kind == FamilySpec::Kind::kComplete) {
            results.push_back(fully_connected_pattern(target.family->n));
        } else if (target.family && target.family->kind == FamilySpec::Kind::kGrid) {
            const GridSpec &grid = target.family->grid;
            if (grid.rows % 2 != 0 || grid.cols % 4 != 0) {
                throw TheoremDomainError("the tiling pattern needs a (2r) x (4q) grid");
            }
            TilingResult t = cluster_tiling_pattern(grid.cols / 4, grid.rows / 2);
            used_fallback = t.used_search_fallback;
            results.push_back(t.result);
        } else {
            throw UsageError("--pattern needs --family complete:N or grid:R,C");
        }
    } else {
        results = find_set_a(target.graph, limit, enum_options(args));
        if (dual_only) {
            results = dual_condition_filter(results);
        }
    }
    OutputStream out(args);
    if (args.format == "json") {
        json arr = json::array();
        for (const auto &r : results) {
            json j;
            j["index"] = r.index.str();
            j["stabilizer"] = r.string.str();
            j["wt"] = weight(r.index);
            j["n_I"] = r.counts.n_i;
            j["dual"] = r.satisfies_dual;
            arr.push_back(j);
        }
        json top;
        top["command"] = "select";
        top["target"] = target_json(target);
        top["results"] = arr;
        if (use_pattern) {
            top["used_search_fallback"] = used_fallback;
        }
        out.get() << top.dump() << "\n";
    } else {
        for (const auto &r : results) {
            out.get() << r.index.str() << ' ' << r.string.str() << " wt=" << weight(r.index)
                      << " n_I=" << r.counts.n_i << " dual=" << (r.satisfies_dual ? 1 : 0) << "\n";
        }
        if (use_pattern && used_fallback) {
            warn("usage", "tiling pattern failed verification; result came from exhaustive search");
        }
        if (results.empty()) {
            warn("theorem-domain", "the set of nI = n/4 stabilizers is empty for this graph");
        }
    }
    return 0;
}

int cmd_estimate(
    const CommonArgs &args,
    const std::string &stabilizer_bits,
    bool auto_pick,
    double epsilon,
    double delta,
    uint64_t samples,
    uint64_t trials) {
    SweepTarget target = load_target(args);
    NoiseSpec noise = load_noise(args);
    check_theorem_domain_warnings(target, noise);
    EnumOptions opts = enum_options(args);

    StabilizerIndex index(target.graph.num_vertices());
    if (auto_pick) {
        index = auto_select(target, opts).index;
    } else if (!stabilizer_bits.empty()) {
        index = BitVec::from_string(stabilizer_bits);
        if (index.size() != static_cast<size_t>(target.graph.num_vertices())) {
            throw UsageError("--stabilizer bit string length must equal the vertex count");
        }
    } else {
        throw UsageError("pick a stabilizer with --stabilizer BITS or --auto-select");
    }

    bool use_hoeffding = samples == 0;
    if (use_hoeffding) {
        samples = hoeffding_samples(epsilon, delta);
    }

    PauliString s = stabilizer(target.graph, index);
    double closed_form = stabilizer_expectation(noise.channel, s.counts());

    json j;
    j["command"] = "estimate";
    j["target"] = target_json(target);
    j["noise"] = noise.str();
    j["stabilizer_index"] = index.str();
    j["stabilizer"] = s.str();
    j["wt"] = weight(index);
    j["n_I"] = s.counts().n_i;
    j["f_est_closed_form"] = closed_form;
    j["seed"] = args.seed;
    j["samples"] = samples;
    if (use_hoeffding) {
        j["epsilon"] = epsilon;
        j["delta"] = delta;
    } else {
        j["epsilon"] = nullptr;
        j["delta"] = nullptr;
    }

    if (trials > 1) {
        if (!use_hoeffding) {
            throw UsageError("coverage trials need --epsilon and --delta rather than --samples");
        }
        double coverage =
            coverage_trials(target.graph, index, noise.channel, epsilon, delta, trials, args.seed, args.threads);
        j["trials"] = trials;
        j["coverage"] = coverage;
    } else {
        ProtocolReport r = run_protocol(target.graph, index, noise.channel, samples, args.seed, args.threads);
        j["outcome_sum"] = r.outcome_sum;
        j["estimate"] = r.estimate;
    }

    OutputStream out(args);
    out.get() << j.dump() << "\n";
    return 0;
}

int cmd_bound(const CommonArgs &args, int k, double p) {
    if (k < 1) {
        throw UsageError("--k must be a positive integer");
    }
    json j;
    j["command"] = "bound";
    j["k"] = k;
    j["n"] = 4 * k;
    j["gap_bound"] = 2.0 / (3.0 * k);
    j["p0"] = estimation_gap_p0(k);
    j["fully_connected_gap_bound_n8k"] = fully_connected_gap_bound(k);
    if (!std::isnan(p)) {
        EstimationBounds r = estimation_bounds(k, p);
        j["p"] = p;
        j["F_tilde"] = r.f_tilde;
        j["F_est"] = r.f_est;
        j["gap"] = r.f_tilde - r.f_est;
    }
    OutputStream out(args);
    if (args.format == "json") {
        out.get() << j.dump() << "\n";
    } else {
        out.get() << "k = " << k << " (n = " << 4 * k << ")\n";
        out.get() << "gap_bound 2/(3k) = " << format_quantity(j["gap_bound"].get<double>()) << "\n";
        out.get() << "p0 = " << format_quantity(j["p0"].get<double>()) << "\n";
        out.get() << "fully_connected_gap_bound (n = " << 8 * k
                  << ") = " << format_quantity(j["fully_connected_gap_bound_n8k"].get<double>()) << "\n";
        if (!std::isnan(p)) {
            out.get() << "F_tilde = " << format_quantity(j["F_tilde"].get<double>()) << "\n";
            out.get() << "F_est = " << format_quantity(j["F_est"].get<double>()) << "\n";
            out.get() << "gap = " << format_quantity(j["gap"].get<double>()) << "\n";
        }
    }
    return 0;
}

int cmd_sweep(
    const CommonArgs &args,
    const std::string &variable,
    double start,
    double stop,
    double step,
    const std::string &quantities) {
    SweepTarget target = load_target(args);
    NoiseSpec noise = load_noise(args);
    check_theorem_domain_warnings(target, noise);
    SweepSpec spec;
    spec.variable = variable == "delta" ? SweepSpec::Variable::kDelta : SweepSpec::Variable::kP;
    spec.start = start;
    spec.stop = stop;
    spec.step = step;
    std::string names = quantities;
    if (names.empty()) {
        names = spec.variable == SweepSpec::Variable::kP ? "F,F_tilde,F_est,F_ub" : "F,F_est";
    }
    std::stringstream ss(names);
    std::string item;
    while (std::getline(ss, item, ',')) {
        spec.quantities.push_back(parse_quantity(item));
    }
    OutputStream out(args);
    run_sweep(out.get(), target, noise, spec, enum_options(args));
    return 0;
}

// ---- oracle-check: cross-module equivalence suite ----

Graph random_graph(std::mt19937_64 &rng, int n) {
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            if (coin(rng)) {
                edges.emplace_back(i, j);
            }
        }
    }
    if (edges.empty()) {
        edges.emplace_back(0, 1 % n);
    }
    return Graph(n, std::move(edges));
}

PauliChannel random_channel(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double px = u(rng), py = u(rng), pz = u(rng);
    double scale = u(rng) / std::max(1.0, px + py + pz);
    return PauliChannel::make(px * scale, py * scale, pz * scale);
}

int cmd_oracle_check(uint64_t seed, int max_qubits, int triples) {
    if (max_qubits < 2 || max_qubits > static_cast<int>(kMaxOracleCap)) {
        throw UsageError("--max-qubits must lie in [2, 12]");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_n(2, max_qubits);
    bool ok = true;
    auto report = [&](const std::string &name, double worst, double tol) {
        bool pass = worst <= tol;
        ok = ok && pass;
        std::cout << (pass ? "OK  " : "FAIL") << " " << name << ": max|delta| = " << worst
                  << " (tol " << tol << ")\n";
    };

    // Closed-form stabilizer expectation vs dense Tr(rho S).
    double worst = 0;
    for (int t = 0; t < triples; t++) {
        int n = pick_n(rng);
        Graph g = random_graph(rng, n);
        PauliChannel ch = random_channel(rng);
        std::uniform_int_distribution<uint64_t> pick_l(0, (uint64_t{1} << n) - 1);
        StabilizerIndex index(n);
        uint64_t bits = pick_l(rng);
        for (int i = 0; i < n; i++) {
            index.set_bit(i, (bits >> i) & 1);
        }
        PauliString s = stabilizer(g, index);
        double closed = stabilizer_expectation(ch, s.counts());
        double dense = expectation_oracle(g, ch, s, kMaxOracleCap);
        worst = std::max(worst, std::abs(closed - dense));
    }
    report("expectation closed form vs dense oracle (" + std::to_string(triples) + " triples)", worst, 1e-10);

    // Three-way fidelity equivalence on random graphs and a depolarizing grid.
    worst = 0;
    for (int t = 0; t < 20; t++) {
        int n = pick_n(rng);
        Graph g = random_graph(rng, n);
        for (double p : {0.0, 0.1, 0.3, 0.5, 0.7}) {
            double dense = fidelity_oracle(g, depolarizing(p), kMaxOracleCap);
            double via_group = exact_fidelity(g, depolarizing(p));
            double via_series = fidelity_error_series(g, p);
            worst = std::max(worst, std::abs(dense - via_group));
            worst = std::max(worst, std::abs(dense - via_series));
        }
    }
    report("fidelity: dense oracle vs group enumeration vs error series", worst, 1e-10);

    // Lemma check: squared expectation is 0/1 and matches membership.
    int mismatches = 0;
    std::uniform_int_distribution<int> pick_letter(0, 3);
    for (int t = 0; t < 200; t++) {
        int n = pick_n(rng);
        Graph g = random_graph(rng, n);
        BitVec x(n), z(n);
        for (int q = 0; q < n; q++) {
            int letter = pick_letter(rng);
            x.set_bit(q, letter & 1);
            z.set_bit(q, (letter >> 1) & 1);
        }
        int n_y = static_cast<int>(BitVec::popcount_and(x, z));
        PauliString p(x, z, n_y);  // literal phase +1
        int dense = lemma1_check(g, p, kMaxOracleCap);
        bool member = membership(g, p) != Membership::kNotAMember;
        if (dense != (member ? 1 : 0)) {
            mismatches++;
        }
    }
    report("lemma: <G|P|G>^2 in {0,1} and matches membership (200 strings)", mismatches, 0);

    // Channel application commutes across qubit order.
    worst = 0;
    {
        Graph g = random_graph(rng, 5);
        PauliChannel ch = random_channel(rng);
        DensityMatrix forward = DensityMatrix::pure(build_graph_state(g));
        DensityMatrix backward = forward;
        for (int q = 0; q < 5; q++) {
            apply_channel_to_qubit(forward, ch, q);
        }
        for (int q = 4; q >= 0; q--) {
            apply_channel_to_qubit(backward, ch, q);
        }
        for (uint64_t r = 0; r < forward.dim(); r++) {
            for (uint64_t c = 0; c < forward.dim(); c++) {
                worst = std::max(worst, std::abs(forward.at(r, c) - backward.at(r, c)));
            }
        }
    }
    report("channel passes commute across qubit order", worst, 1e-12);

    if (!ok) {
        throw InternalError("oracle cross-checks failed");
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"graphfid: single-setting fidelity estimation for graph states under Pauli noise"};
    app.require_subcommand(1);

    CommonArgs args;
    int exit_code = 0;
    std::function<void()> action;

    // fidelity
    auto *fidelity = app.add_subcommand("fidelity", "Exact fidelity of the noisy graph state");
    static std::string method = "auto";
    add_target_options(fidelity, args);
    add_output_options(fidelity, args);
    fidelity->add_option("--noise", args.noise, "Noise spec, e.g. depolarizing:p=0.15")->required();
    fidelity->add_option("--method", method, "auto | enumeration | series | closed-form")
        ->check(CLI::IsMember({"auto", "enumeration", "series", "closed-form"}));
    fidelity->callback([&] { exit_code = cmd_fidelity(args, method); });

    // select
    auto *select = app.add_subcommand("select", "List measurement settings with nI = n/4");
    static size_t limit = 16;
    static bool dual_only = false;
    static bool use_pattern = false;
    add_target_options(select, args);
    add_output_options(select, args);
    select->add_option("--limit", limit, "Stop after this many results (default 16)");
    select->add_flag("--dual-only", dual_only, "Keep only wt = n/2 results");
    select->add_flag("--pattern", use_pattern, "Use the constructive family pattern instead of scanning");
    select->callback([&] { exit_code = cmd_select(args, limit, dual_only, use_pattern); });

    // estimate
    auto *estimate = app.add_subcommand("estimate", "Monte Carlo simulation of the verification protocol");
    static std::string stabilizer_bits;
    static bool auto_pick = false;
    static double epsilon = 0.05;
    static double delta = 0.01;
    static uint64_t samples = 0;
    static uint64_t trials = 1;
    add_target_options(estimate, args);
    add_output_options(estimate, args);
    estimate->add_option("--noise", args.noise, "Noise spec")->required();
    estimate->add_option("--stabilizer", stabilizer_bits, "Generator-selection bit string");
    estimate->add_flag("--auto-select", auto_pick, "Pick the lexicographically smallest nI = n/4 index");
    estimate->add_option("--epsilon", epsilon, "Accuracy for the Hoeffding sample count (default 0.05)");
    estimate->add_option("--delta", delta, "Significance for the Hoeffding sample count (default 0.01)");
    estimate->add_option("--samples", samples, "Explicit sample count (overrides epsilon/delta)");
    estimate->add_option("--seed", args.seed, "RNG seed (default 0)");
    estimate->add_option("--trials", trials, "Independent protocol repetitions for coverage");
    estimate->callback([&] {
        exit_code = cmd_estimate(args, stabilizer_bits, auto_pick, epsilon, delta, samples, trials);
    });

    // bound
    auto *bound = app.add_subcommand("bound", "Estimation-theorem quantities and bounds");
    static int bound_k = 1;
    static double bound_p = std::nan("");
    add_output_options(bound, args);
    bound->add_option("--k", bound_k, "n = 4k")->required();
    bound->add_option("--p", bound_p, "Evaluate F_tilde and F_est at this error probability");
    bound->callback([&] { exit_code = cmd_bound(args, bound_k, bound_p); });

    // sweep
    auto *sweep = app.add_subcommand("sweep", "CSV sweep over p or delta");
    static std::string variable = "p";
    static double start = 0, stop = 0, step = 0.05;
    static std::string quantities;
    add_target_options(sweep, args);
    add_output_options(sweep, args);
    sweep->add_option("--noise", args.noise, "Base noise spec")->required();
    sweep->add_option("--variable", variable, "p (default) or delta")
        ->check(CLI::IsMember({"p", "delta"}));
    sweep->add_option("--start", start, "Grid start")->required();
    sweep->add_option("--stop", stop, "Grid stop")->required();
    sweep->add_option("--step", step, "Grid step")->required();
    sweep->add_option("--quantities", quantities,
                      "Comma list of F,F_tilde,F_est,F_ub,F_third_order,F_est_delta");
    sweep->callback([&] { exit_code = cmd_sweep(args, variable, start, stop, step, quantities); });

    // oracle-check
    auto *oracle = app.add_subcommand("oracle-check", "Brute-force cross-module equivalence suite");
    static uint64_t oracle_seed = 0;
    static int max_qubits = 8;
    static int triples = 200;
    oracle->add_option("--seed", oracle_seed, "RNG seed for instance generation");
    oracle->add_option("--max-qubits", max_qubits, "Largest random instance (default 8, max 12)");
    oracle->add_option("--triples", triples, "Random (graph, channel, stabilizer) triples (default 200)");
    oracle->callback([&] { exit_code = cmd_oracle_check(oracle_seed, max_qubits, triples); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.category());
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return static_cast<int>(ErrorCategory::kInternal);
    }
    return exit_code;
}
