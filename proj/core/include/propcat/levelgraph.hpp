#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "propcat/cospan.hpp"
#include "propcat/finset.hpp"

namespace propcat {

// Raw legs of one layer: level i -> middle <- level i+1. Stored exactly as
// given (not renormalized), because vertex decorations refer to middle
// elements by position.
struct LayerCospan {
    FinMap left;
    FinMap right;

    auto operator<=>(const LayerCospan&) const = default;
};

// The set spanned between two levels, with its leg maps and, for every
// adjacency in between, the map recording which class each middle element
// fell into.
struct DerivedSet {
    std::size_t size = 0;
    FinMap from_top;                // level i -> set
    FinMap from_bottom;             // level j -> set
    std::vector<FinMap> mid_maps;   // middle of adjacency i+t -> set
};

// A graph stratified into levels 0..height, with a cospan of finite sets
// between consecutive levels. The value of a graph is (height, level sizes,
// adjacent layers); equality compares exactly those.
//
// Alongside the value, a graph carries the full grid of derived sets
// G(i,j): built once at construction by folding the layers through chosen
// pushouts, and *reindexed* (never recomputed) by the simplicial operators.
// Reindexing is what makes the simplicial identities hold on the nose; a
// rebuilt graph agrees with a reindexed one on the value but may number
// derived sets deeper than the stored layers differently, so laws about
// operator chains always start from a common graph.
class LevelGraph {
public:
    // The empty graph: height 0, one empty level.
    LevelGraph();

    // Validates the shape (one more level than layers, legs matching the
    // level sizes pairwise) and builds the derived grid.
    LevelGraph(std::vector<std::size_t> level_sizes, std::vector<LayerCospan> adjacents);

    std::size_t height() const { return level_sizes_.size() - 1; }
    const std::vector<std::size_t>& level_sizes() const { return level_sizes_; }
    const std::vector<LayerCospan>& adjacents() const { return adjacents_; }
    std::size_t level_size(std::size_t i) const;
    std::size_t middle_size(std::size_t a) const;  // adjacency a, between levels a and a+1

    // The derived set between levels i <= j. For j = i it is the level with
    // identity legs; for j = i+1 the stored adjacent.
    const DerivedSet& derived(std::size_t i, std::size_t j) const;

    bool operator==(const LevelGraph& other) const;
    bool operator!=(const LevelGraph& other) const { return !(*this == other); }

private:
    std::vector<std::size_t> level_sizes_;
    std::vector<LayerCospan> adjacents_;
    // grid_[i][j-i] is the derived set between levels i and j.
    std::vector<std::vector<DerivedSet>> grid_;

    friend LevelGraph simplicial_map(const LevelGraph&, const std::vector<std::size_t>&);
};

// Reindex along a monotone map [m] -> [n] given by its m+1 values: level a
// of the result is level alpha[a], and the layer between result levels a,
// a+1 is the derived set between alpha[a] and alpha[a+1]. Functorial on the
// nose: chaining reindexings equals reindexing along the composite.
LevelGraph simplicial_map(const LevelGraph& g, const std::vector<std::size_t>& alpha);

// Face i (0 <= i <= height, height >= 1): forgets level i, merging the two
// layers around an inner level. Degeneracy j (0 <= j <= height): repeats
// level j, inserting an identity layer.
LevelGraph face(const LevelGraph& g, std::size_t i);
LevelGraph degeneracy(const LevelGraph& g, std::size_t j);

// Connected components. Component q collects the positions (1-based,
// increasing) of its elements in every level and every middle; components
// are numbered by the derived set between the outermost levels.
struct GraphComponent {
    LevelGraph part;
    std::vector<std::vector<std::size_t>> level_positions;
    std::vector<std::vector<std::size_t>> middle_positions;
};
std::vector<GraphComponent> components(const LevelGraph& g);

// Decide whether two graphs differ only by renumbering middle elements
// (levelwise identity). On success returns one middle bijection per
// adjacency, from g's middles to h's.
using CongruenceWitness = std::vector<FinMap>;
std::optional<CongruenceWitness> congruent(const LevelGraph& g, const LevelGraph& h);

// Blockwise sum of two graphs of equal height: g's elements first in every
// level and middle.
LevelGraph tensor_graphs(const LevelGraph& g, const LevelGraph& h);

// The twisted sum: levels below t keep g-then-h block order, levels from t
// on are flipped to h-then-g, and the layer between levels i and i+1 is
// flipped exactly when level i is. The returned isomorphisms map each
// level/middle of the twisted sum to the corresponding block sum g+h
// (identity where unflipped, block interchange where flipped).
struct TwistedSum {
    LevelGraph graph;
    std::vector<FinMap> level_iso;
    std::vector<FinMap> middle_iso;
};
TwistedSum twisted_sum(const LevelGraph& g, const LevelGraph& h, std::size_t t);

// Slice a graph into its height-1 layers (the Segal pieces).
std::vector<LevelGraph> segal_pieces(const LevelGraph& g);
// Reassemble layers that agree on their shared levels into one graph.
LevelGraph segal_glue(const std::vector<LevelGraph>& pieces);

// Height-1 graphs are cospans: from_cospan keeps the legs raw, to_cospan
// renormalizes.
LevelGraph from_cospan(const Cospan& c);
Cospan to_cospan(const LevelGraph& g);

// Text format:
//   graph h=<n> ; levels <s0> .. <sn> ; adj1 : <left targets> | <right targets> ; ... ; adjn : ...
// Middle sizes are inferred as the largest target mentioned, so a middle
// element beyond every target cannot be written; the printer refuses such
// graphs instead of dropping elements.
LevelGraph parse_graph(const std::string& text);
std::string print_graph(const LevelGraph& g);

// All graphs of exactly the given height with level sizes <= level_bound
// and middle sizes <= middle_bound, in a deterministic order.
std::vector<LevelGraph> all_graphs(std::size_t height, std::size_t level_bound,
                                   std::size_t middle_bound);

}  // namespace propcat
