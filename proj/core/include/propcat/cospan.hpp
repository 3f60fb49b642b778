#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "propcat/finset.hpp"

namespace propcat {

// A cospan src -> middle <- tgt of finite ordinals, stored in normal form.
// The middle is numbered so that the elements hit by a leg (the "touched"
// ones) come first, in order of first occurrence scanning the left leg and
// then the right leg; the untouched ("closed") elements follow, keeping
// their relative order. Two cospans are isomorphic over fixed endpoints
// exactly when their normal forms agree field-wise, so operator== decides
// isomorphism.
struct Cospan {
    std::size_t src = 0;
    std::size_t tgt = 0;
    std::size_t touched = 0;
    std::size_t closed = 0;
    FinMap left;   // src -> middle()
    FinMap right;  // tgt -> middle()

    std::size_t middle() const { return touched + closed; }

    auto operator<=>(const Cospan&) const = default;
};

// Renumber the middle of a raw cospan into normal form.
Cospan normalize(const FinMap& left, const FinMap& right);

// Same, also returning the relabelling old middle -> new middle, for
// callers that carry per-middle-element data through the renumbering.
struct NormalizedCospan {
    Cospan cospan;
    FinMap relabel;
};
NormalizedCospan normalize_with_map(const FinMap& left, const FinMap& right);

// n -> n <- n with identity legs.
Cospan identity_cospan(std::size_t n);

// 0 -> count <- 0: nothing but closed middle elements.
Cospan closed_points(std::size_t count);

// Composite of a : n -> k and b : k -> m by pushout over the shared
// endpoint, renormalized. Results carrying the maps from the operands'
// middles into the composite middle are available for callers that
// transport per-element data.
struct ComposedCospan {
    Cospan cospan;
    FinMap from_a;  // middle of a -> middle of composite
    FinMap from_b;  // middle of b -> middle of composite
};
ComposedCospan compose_with_maps(const Cospan& a, const Cospan& b);
Cospan compose(const Cospan& a, const Cospan& b);

// Side-by-side sum, a on the first blocks and b on the second, renormalized.
struct TensoredCospan {
    Cospan cospan;
    FinMap from_a;
    FinMap from_b;
};
TensoredCospan tensor_with_maps(const Cospan& a, const Cospan& b);
Cospan tensor(const Cospan& a, const Cospan& b);

// The block interchange n+m -> m+n as a cospan (identity left leg).
Cospan symmetry(std::size_t n, std::size_t m);

// A cospan is reduced when every middle element is touched, and connected
// when its middle is a single point.
bool is_reduced(const Cospan& a);
bool is_connected(const Cospan& a);

// Split off the closed points: the reduced part keeps the touched middle,
// and closed_count middle elements are dropped.
struct ReducedClosedSplit {
    Cospan reduced;
    std::size_t closed_count;
};
ReducedClosedSplit split_reduced_closed(const Cospan& a);

// One connected piece per middle element q: the endpoints are the leg
// preimages of q (their positions recorded in increasing order), and the
// piece itself is the one-point cospan they map to.
struct CospanComponent {
    Cospan part;
    std::vector<std::size_t> inputs;   // positions in a.src
    std::vector<std::size_t> outputs;  // positions in a.tgt
};
std::vector<CospanComponent> components(const Cospan& a);

// Text format: "cospan <n> <k> <m> : l1 .. ln | r1 .. rm" where k is the
// middle size of the literal; the parser renormalizes. The printer emits
// normal form, and parsing a printed cospan returns it unchanged.
Cospan parse_cospan(const std::string& text);
std::string print_cospan(const Cospan& a);

// All normal-form cospans n -> m with middle size at most middle_bound,
// in increasing order.
std::vector<Cospan> all_cospans(std::size_t n, std::size_t m, std::size_t middle_bound);

}  // namespace propcat
