#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "propcat/levelgraph.hpp"

namespace propcat {

// Colors are 1-based labels; a word is a finite sequence of them.
using Color = std::size_t;
using Word = std::vector<Color>;

// One operation: its input/output color words plus a tag telling parallel
// operations with the same profile apart (monoid element index, intern id).
struct Op {
    Word inputs;
    Word outputs;
    std::uint64_t tag = 0;

    auto operator<=>(const Op&) const = default;
};

// A height-2 level graph together with a coloring of its level elements
// and an operation on every middle element (vertex). The ops of adjacency
// a sit in vertex_ops[a], indexed by middle position.
struct Decoration {
    LevelGraph graph;
    std::vector<Word> level_colors;
    std::vector<std::vector<Op>> vertex_ops;

    bool operator==(const Decoration& other) const {
        return graph == other.graph && level_colors == other.level_colors &&
               vertex_ops == other.vertex_ops;
    }
    bool operator!=(const Decoration& other) const { return !(*this == other); }
};

// The color words a vertex must carry: its inputs are the lower-level
// elements wired to it (in level order), its outputs the upper-level ones.
struct VertexProfile {
    Word inputs;
    Word outputs;
};
VertexProfile vertex_profile(const Decoration& d, std::size_t adjacency, std::size_t vertex);

// A properad presented operationally: a color set, operation sets per
// profile, permutation actions on profiles, and a composition taking any
// connected two-layer decorated graph to a single operation. Implementations
// must be pure: equal inputs give equal outputs across calls.
class Properad {
public:
    virtual ~Properad() = default;

    virtual std::vector<Color> colors() const = 0;

    // All operations with the given profile. size_bound only truncates
    // genuinely infinite families; the built-in families here are finite
    // and return their full table regardless.
    virtual std::vector<Op> ops(const Word& inputs, const Word& outputs,
                                std::size_t size_bound) const = 0;

    virtual bool has_op(const Op& p) const = 0;

    virtual Op identity(Color c) const = 0;

    // Relabel the profile along permutations: the result's j-th input is
    // p's input at input_perm(j), and likewise for outputs. Acting twice
    // composes the permutations contravariantly.
    virtual Op act(const FinMap& input_perm, const FinMap& output_perm, const Op& p) const;

    // Compose a connected height-2 decoration into one operation with the
    // profile (bottom level colors, top level colors).
    virtual Op compose2(const Decoration& d) const = 0;

    // Human-readable name for an operation, used in reports.
    virtual std::string label(const Op& p) const;

protected:
    // The profile part of act, shared by implementations whose tags are
    // permutation-invariant.
    static Op permute_profile(const FinMap& input_perm, const FinMap& output_perm, const Op& p);
};

// True when every vertex of the decoration carries an operation of the
// properad whose profile matches the wiring.
bool validate_decoration(const Decoration& d, const Properad& p);

// Throws unless d is a connected two-layer decoration: the shared
// precondition of every compose2 implementation.
void require_compose2_input(const Decoration& d);

// All valid decorations of a graph (any height): every level coloring by
// the properad's colors combined with every choice of vertex operations,
// in a deterministic order. size_bound is handed through to ops();
// max_count truncates the enumeration after that many decorations, for
// callers that sample rather than exhaust.
std::vector<Decoration> decorations_enum(const LevelGraph& g, const Properad& p,
                                         std::size_t size_bound,
                                         std::size_t max_count = static_cast<std::size_t>(-1));

// Faces and degeneracies of decorated graphs. An inner face composes the
// two merged layers componentwise through compose2; outer faces drop a
// boundary layer; a degeneracy inserts a layer of identity operations.
Decoration decoration_face(const Decoration& d, std::size_t i, const Properad& p);
Decoration decoration_degeneracy(const Decoration& d, std::size_t j, const Properad& p);

// One operation per profile: the terminal properad on k colors.
std::shared_ptr<const Properad> terminal_properad(std::size_t k);

// Only identity operations: the discrete properad on k colors.
std::shared_ptr<const Properad> discrete_properad(std::size_t k);

// A finite commutative monoid given by labels and a sum grid (0-based
// element indices). Validated for associativity, commutativity, and a unit.
struct MonoidTable {
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> sum;
};

// Cyclic addition on 0..k-1.
MonoidTable cyclic_table(std::size_t k);
// Saturating addition on 0..cap (a+b capped at cap). Associativity and
// commutativity survive the cap.
MonoidTable saturating_table(std::size_t cap);

// Text format: the element count m, then m labels, then the m*m sum grid
// row by row (entries are labels), all whitespace-separated.
MonoidTable parse_monoid_table(const std::string& text);

// Single-color properad whose operations at every profile are the monoid
// elements; composition sums the weights of all vertices.
std::shared_ptr<const Properad> weighted_properad(const MonoidTable& table);

}  // namespace propcat
