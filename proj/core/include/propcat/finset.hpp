#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "propcat/error.hpp"

namespace propcat {

// A map between finite ordinals. The ordinal n stands for the set
// {1, ..., n}; targets[i-1] is the image of element i. All indices
// throughout the library are 1-based, matching the ordinal convention.
struct FinMap {
    std::size_t dom_size = 0;
    std::size_t cod_size = 0;
    std::vector<std::size_t> targets;

    FinMap() = default;

    // Validates that targets has length dom and every entry lies in 1..cod.
    FinMap(std::size_t dom, std::size_t cod, std::vector<std::size_t> targets_);

    static FinMap identity(std::size_t n);

    // The map dom -> cod sending everything to value.
    static FinMap constant(std::size_t dom, std::size_t cod, std::size_t value);

    // Apply to a 1-based element.
    std::size_t operator()(std::size_t i) const;

    bool is_identity() const;
    bool is_bijection() const;

    // Inverse of a bijection; throws StructureError otherwise.
    FinMap inverse() const;

    auto operator<=>(const FinMap&) const = default;
};

// Composite g after f (first f, then g). Codomain of f must equal the
// domain of g.
FinMap compose_map(const FinMap& f, const FinMap& g);

// Block sum: acts as f on the first block and as g (shifted) on the second.
FinMap sum_map(const FinMap& f, const FinMap& g);

// The bijection n+m -> m+n moving the first block past the second:
// i |-> i+m for i <= n, and n+j |-> j for j <= m.
FinMap block_swap(std::size_t n, std::size_t m);

// All elements of the domain that f sends to j, in increasing order.
std::vector<std::size_t> preimage(const FinMap& f, std::size_t j);

// Pushout of a span D <-f- B -g-> E, computed as the quotient of D ⊔ E by
// the relation f(b) ~ g(b). Elements of the quotient Q are numbered by
// their smallest representative, scanning D first and then E.
struct PushoutLegs {
    FinMap from_left;   // D -> Q
    FinMap from_right;  // E -> Q
};
PushoutLegs pushout_span(const FinMap& f, const FinMap& g);

// Enumeration helpers for the bounded test suites. Maps are produced in
// lexicographic order of their target vectors; permutations likewise.
std::vector<FinMap> all_maps(std::size_t dom, std::size_t cod);
std::vector<FinMap> all_permutations(std::size_t n);

}  // namespace propcat
