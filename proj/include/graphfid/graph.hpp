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

#ifndef GRAPHFID_GRAPH_HPP
#define GRAPHFID_GRAPH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphfid/bitvec.hpp"

namespace graphfid {

/// Grid dimensions plus the qubit numbering convention.
///
/// Boustrophedon numbering runs row 0 left to right, row 1 right to left, and
/// so on. It is the default because it makes the standard 2x4 measurement
/// pattern come out as the string +XZXIXZXI.
struct GridSpec {
    enum class Numbering {
        kRowMajor,
        kBoustrophedon,
    };

    int rows = 0;
    int cols = 0;
    Numbering numbering = Numbering::kBoustrophedon;

    /// Vertex id of the cell at (row, col) under this spec's numbering.
    int vertex_id(int row, int col) const;
};

/// An undirected simple graph: vertex count plus a normalized edge set.
/// Immutable after construction; safe to share across threads.
class Graph {
   public:
    Graph(int num_vertices, std::vector<std::pair<int, int>> edges);

    /// The complete graph K_n (n >= 2).
    static Graph complete(int n);

    /// Nearest-neighbor rectangular grid; rejects the single-cell grid.
    static Graph grid(const GridSpec &spec);

    /// Text format: first non-comment line is the vertex count, then one
    /// "i j" pair per line. Lines starting with '#' are ignored.
    static Graph parse(std::istream &in);
    static Graph parse(std::string_view text);

    std::string serialize() const;

    int num_vertices() const {
        return n_;
    }

    /// Edges normalized to (i, j) with i < j, sorted.
    const std::vector<std::pair<int, int>> &edges() const {
        return edges_;
    }

    const BitVec &neighbors(int v) const;

    int degree(int v) const;

    bool has_edge(int i, int j) const;

    std::vector<int> isolated_vertices() const;

   private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<BitVec> adj_;
};

/// A named graph family, as written on the command line:
/// "complete:8" or "grid:2,4" (rows,cols).
struct FamilySpec {
    enum class Kind {
        kComplete,
        kGrid,
    };

    Kind kind = Kind::kComplete;
    int n = 0;       // complete
    GridSpec grid;   // grid

    static FamilySpec parse(std::string_view text,
                            GridSpec::Numbering numbering = GridSpec::Numbering::kBoustrophedon);

    Graph build() const;
    std::string str() const;

    int num_vertices() const {
        return kind == Kind::kComplete ? n : grid.rows * grid.cols;
    }
};

}  // namespace graphfid

#endif
