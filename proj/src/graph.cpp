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

#include "graphfid/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

#include "graphfid/errors.hpp"

namespace graphfid {

int GridSpec::vertex_id(int row, int col) const {
    if (numbering == Numbering::kBoustrophedon && (row & 1)) {
        return row * cols + (cols - 1 - col);
    }
    return row * cols + col;
}

Graph::Graph(int num_vertices, std::vector<std::pair<int, int>> edges) : n_(num_vertices) {
    if (n_ <= 0) {
        throw UsageError("graph must have at least one vertex");
    }
    for (auto &[i, j] : edges) {
        if (i == j) {
            throw UsageError("self-loop on vertex " + std::to_string(i));
        }
        if (i < 0 || j < 0 || i >= n_ || j >= n_) {
            throw UsageError(
                "edge (" + std::to_string(i) + ", " + std::to_string(j) + ") references a vertex >= " +
                std::to_string(n_));
        }
        if (i > j) {
            std::swap(i, j);
        }
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw UsageError("duplicate edge");
    }
    edges_ = std::move(edges);
    adj_.assign(n_, BitVec(n_));
    for (auto [i, j] : edges_) {
        adj_[i].set_bit(j, true);
        adj_[j].set_bit(i, true);
    }
}

Graph Graph::complete(int n) {
    if (n < 2) {
        throw UsageError("complete graph needs n >= 2");
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            edges.emplace_back(i, j);
        }
    }
    return Graph(n, std::move(edges));
}

Graph Graph::grid(const GridSpec &spec) {
    if (spec.rows < 1 || spec.cols < 1) {
        throw UsageError("grid dimensions must be positive");
    }
    if (spec.rows * spec.cols < 2) {
        throw UsageError("1x1 grid is a single isolated qubit");
    }
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < spec.rows; r++) {
        for (int c = 0; c < spec.cols; c++) {
            if (c + 1 < spec.cols) {
                edges.emplace_back(spec.vertex_id(r, c), spec.vertex_id(r, c + 1));
            }
            if (r + 1 < spec.rows) {
                edges.emplace_back(spec.vertex_id(r, c), spec.vertex_id(r + 1, c));
            }
        }
    }
    return Graph(spec.rows * spec.cols, std::move(edges));
}

Graph Graph::parse(std::istream &in) {
    std::string line;
    size_t line_no = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        line_no++;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n) || n <= 0) {
                throw ParseError(line_no, "expected a positive vertex count");
            }
            std::string rest;
            if (fields >> rest) {
                throw ParseError(line_no, "unexpected trailing content after vertex count");
            }
            continue;
        }
        int i, j;
        if (!(fields >> i >> j)) {
            throw ParseError(line_no, "expected an edge as two vertex indices");
        }
        std::string rest;
        if (fields >> rest) {
            throw ParseError(line_no, "unexpected trailing content after edge");
        }
        if (i < 0 || j < 0 || i >= n || j >= n) {
            throw ParseError(
                line_no, "vertex " + std::to_string(std::max(i, j)) + " out of range for n=" + std::to_string(n));
        }
        if (i == j) {
            throw ParseError(line_no, "self-loop on vertex " + std::to_string(i));
        }
        auto e = std::minmax(i, j);
        if (std::find(edges.begin(), edges.end(), std::make_pair(e.first, e.second)) != edges.end()) {
            throw ParseError(line_no, "duplicate edge");
        }
        edges.emplace_back(e.first, e.second);
    }
    if (n < 0) {
        throw ParseError(line_no, "empty graph file");
    }
    return Graph(n, std::move(edges));
}

Graph Graph::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse(in);
}

std::string Graph::serialize() const {
    std::ostringstream out;
    out << n_ << '\n';
    for (auto [i, j] : edges_) {
        out << i << ' ' << j << '\n';
    }
    return out.str();
}

const BitVec &Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) {
        throw UsageError("vertex index out of range");
    }
    return adj_[v];
}

int Graph::degree(int v) const {
    return static_cast<int>(neighbors(v).popcount());
}

bool Graph::has_edge(int i, int j) const {
    return neighbors(i).bit(static_cast<size_t>(j));
}

std::vector<int> Graph::isolated_vertices() const {
    std::vector<int> result;
    for (int v = 0; v < n_; v++) {
        if (adj_[v].none()) {
            result.push_back(v);
        }
    }
    return result;
}

namespace {

int parse_int_field(std::string_view text, const std::string &what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw UsageError("invalid " + what + ": '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text, GridSpec::Numbering numbering) {
    size_t colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw UsageError("family spec must look like 'complete:N' or 'grid:R,C'");
    }
    std::string_view name = text.substr(0, colon);
    std::string_view args = text.substr(colon + 1);
    FamilySpec spec;
    if (name == "complete") {
        spec.kind = Kind::kComplete;
        spec.n = parse_int_field(args, "vertex count");
    } else if (name == "grid") {
        size_t comma = args.find(',');
        if (comma == std::string_view::npos) {
            throw UsageError("grid family needs 'grid:ROWS,COLS'");
        }
        spec.kind = Kind::kGrid;
        spec.grid.rows = parse_int_field(args.substr(0, comma), "row count");
        spec.grid.cols = parse_int_field(args.substr(comma + 1), "column count");
        spec.grid.numbering = numbering;
    } else {
        throw UsageError("unknown family '" + std::string(name) + "' (expected complete or grid)");
    }
    return spec;
}

Graph FamilySpec::build() const {
    if (kind == Kind::kComplete) {
        return Graph::complete(n);
    }
    return Graph::grid(grid);
}

std::string FamilySpec::str() const {
    if (kind == Kind::kComplete) {
        return "complete:" + std::to_string(n);
    }
    return "grid:" + std::to_string(grid.rows) + "," + std::to_string(grid.cols);
}

}  // namespace graphfid
