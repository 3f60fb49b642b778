#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "propcat/cospan.hpp"
#include "propcat/properad.hpp"

namespace propcat {

// A morphism of the monoidal envelope: color words at both ends, a
// normal-form cospan wiring them, and one operation per middle element
// (vertex). Normal form additionally sorts the operations sitting on
// closed vertices (their order carries no information), so field-wise
// equality decides equality of morphisms.
struct EnvMorphism {
    Word src;
    Word tgt;
    Cospan shape;
    std::vector<Op> vertex_ops;

    auto operator<=>(const EnvMorphism&) const = default;
};

// The free symmetric monoidal category on a properad: objects are color
// words, morphisms are decorated cospans. Composition stacks the two
// wirings and composes each connected piece through the properad.
class Envelope {
public:
    explicit Envelope(std::shared_ptr<const Properad> p);

    const Properad& properad() const { return *properad_; }
    std::shared_ptr<const Properad> properad_ptr() const { return properad_; }

    EnvMorphism identity(const Word& a) const;

    // The one-vertex morphism carrying a single operation.
    EnvMorphism corolla(const Op& p) const;

    EnvMorphism compose(const EnvMorphism& f, const EnvMorphism& g) const;
    EnvMorphism tensor(const EnvMorphism& f, const EnvMorphism& g) const;

    // Tensor followed on the target side by the block interchange: maps
    // src f ++ src g to tgt g ++ tgt f while keeping the vertices in
    // (f, g) order.
    EnvMorphism twisted_tensor(const EnvMorphism& f, const EnvMorphism& g) const;

    // The interchange a ++ b -> b ++ a (identity operations on every wire).
    EnvMorphism symmetry(const Word& a, const Word& b) const;

    // Forget the operations.
    Cospan project(const EnvMorphism& f) const;

    // Structural sanity of a morphism against this envelope's properad.
    bool valid(const EnvMorphism& f) const;

    // All morphisms a -> b whose wiring has middle size at most
    // middle_bound, in increasing order.
    std::vector<EnvMorphism> hom_enum(const Word& a, const Word& b,
                                      std::size_t middle_bound) const;

    // Assemble a morphism from raw parts: legs into an arbitrary middle
    // numbering plus the operation on each raw middle element. Renumbers
    // into normal form and sorts the closed tail.
    EnvMorphism from_raw(Word src, Word tgt, const FinMap& left, const FinMap& right,
                         std::vector<Op> vertex_ops) const;

private:
    std::shared_ptr<const Properad> properad_;
};

// Text format:
//   mor <src colors> -> <tgt colors> ; shape cospan <n> <k> <m> : ... | ... ; ops <k tags>
// Operation tags are listed per middle element of the shape literal; the
// parser infers each operation's profile from the wiring and renormalizes.
EnvMorphism parse_morphism(const std::string& text, const Properad& p);
std::string print_morphism(const EnvMorphism& f);

}  // namespace propcat
