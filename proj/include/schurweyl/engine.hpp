#pragma once

#include "schurweyl/rsk.hpp"
#include "schurweyl/surd.hpp"
#include "schurweyl/tensor_op.hpp"
#include "schurweyl/young.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace schurweyl {

struct SchurWeylLabel {
    Partition lambda;
    WeylTableau t;
    YoungTableau y;
};

// Throws std::invalid_argument when shapes disagree or tableaux are not
// (semi)standard over the given alphabet.
void validate_label(const SchurWeylLabel& label, int n);

struct CouplingEdge {
    int from = 0;
    int to = 0;
    SurdSum weight;
};

// Level j holds the patterns reachable after inserting f(1..j); edges go from
// level j-1 to level j and carry the tensor-operator matrix element for the
// inserted letter.
struct CouplingLevel {
    int letter = 0;  // f(j); 0 for level 0
    std::vector<GTPattern> vertices;
    std::vector<CouplingEdge> edges;
};

struct CouplingGraph {
    std::vector<CouplingLevel> levels;  // size N+1; level 0 is the zero pattern

    bool dead() const { return levels.back().vertices.empty(); }
    std::size_t vertex_count() const;
    std::size_t edge_count() const;
};

// All legal single-letter insertions of k into p whose top row becomes
// target_shape; pairs are ordered by ascending tau chain.
std::vector<std::pair<GTPattern, TauChain>> insertion_candidates(const GTPattern& p, int k,
                                                                 const Partition& target_shape);

// Leveled DAG of all ways to grow label.t along the shape chain of label.y
// while consuming the letters of f. The final level keeps only the pattern
// bijective to t; an empty final level encodes amplitude zero.
CouplingGraph build_graph(const Configuration& f, const SchurWeylLabel& label, int n);

// <f | lambda t y>: sum over source-to-sink paths of edge-weight products,
// evaluated by forward accumulation over levels.
SurdSum amplitude(const Configuration& f, const SchurWeylLabel& label, int n);
SurdSum amplitude(const CouplingGraph& graph);

struct SchurWeylState {
    SchurWeylLabel label;
    Composition mu;
    // Orbit of mu in lexicographic order; zero entries retained.
    std::vector<std::pair<Configuration, SurdSum>> amplitudes;
    // False when a normalization left the exact field (group-projection
    // states only; graph states are always exact).
    bool exact = true;
    std::vector<double> float_amplitudes;  // normalized, parallel to amplitudes

    SurdSum norm_squared() const;
};

SchurWeylState expand_state(const SchurWeylLabel& label, int n);

// All labels (lambda, t, y) with weight(t) = mu, in deterministic order.
std::vector<SchurWeylLabel> labels_for_weight(const Composition& mu);
// All labels with letters <= n and |lambda| = node_count (any weight).
std::vector<SchurWeylLabel> labels_for_alphabet(int node_count, int n);

struct UnitarityReport {
    Composition mu;
    int n = 0;
    std::size_t dim = 0;          // orbit size = label count
    bool counting_ok = false;     // label count == orbit size
    bool exact = false;           // Gram computed in surd arithmetic
    double max_deviation = 0.0;   // max |U U^T - I| (0 when exact and unitary)
    bool unitary = false;
};

// Assembles the amplitude matrix over the orbit of mu for all labels and
// checks U U^T = I; exact up to exact_dim_limit, floating point beyond.
UnitarityReport verify_unitarity(const Composition& mu, int n,
                                 std::size_t exact_dim_limit = 128);

}  // namespace schurweyl
