#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "propcat/envelope.hpp"

namespace propcat {

// Line-oriented verification result: one line per law, witnesses on failure.
struct ReportLine {
    bool pass = true;
    std::string law;
    std::string witness;
};

struct Report {
    std::vector<ReportLine> lines;

    bool all_pass() const;
    // "PASS <law>" / "FAIL <law>: <witness>", one line each.
    std::string to_text() const;
};

// A strict labelled cospan category, presented operationally. Objects are
// words of 1-based indices into connected_objects(); morphisms are decorated
// cospans (endpoint words, a wiring in normal form, one payload operation
// per middle element) whose payloads the implementation interprets — by the
// structure theory this representation is complete for the categories the
// contract describes. Implementations must be pure: equal inputs give equal
// outputs across calls.
class Slcc {
public:
    virtual ~Slcc() = default;

    // Labels of the connected objects; the palette size is their count.
    virtual std::vector<std::string> connected_objects() const = 0;

    // The unique decomposition of an object into connected objects. Objects
    // are already stored as words, so this is the identity for every lawful
    // implementation; it is part of the contract surface so the axiom
    // checker can test it.
    virtual Word decompose_object(const Word& x) const;

    virtual EnvMorphism id(const Word& x) const = 0;
    virtual EnvMorphism compose(const EnvMorphism& f, const EnvMorphism& g) const = 0;
    virtual EnvMorphism tensor(const EnvMorphism& f, const EnvMorphism& g) const = 0;
    virtual EnvMorphism symmetry(const Word& a, const Word& b) const = 0;

    // The labelling functor to cospans.
    virtual Cospan project(const EnvMorphism& f) const = 0;

    // All morphisms a -> b with wiring middle size at most middle_bound, in
    // increasing order.
    virtual std::vector<EnvMorphism> hom_enum(const Word& a, const Word& b,
                                              std::size_t middle_bound) const = 0;

    // The connected morphisms a -> b (single-point wiring middle). The
    // bound truncates genuinely infinite payload families only.
    virtual std::vector<EnvMorphism> connected_hom_enum(const Word& a, const Word& b,
                                                        std::size_t bound) const;

    // Morphism equality; the representation is canonical, so this is
    // field-wise comparison.
    bool equal(const EnvMorphism& f, const EnvMorphism& g) const { return f == g; }
};

// The envelope of a properad, exposed through the category contract.
std::shared_ptr<const Slcc> envelope_as_slcc(std::shared_ptr<const Properad> p);

// A deliberately broken variant whose compose deduplicates repeated closed
// vertices; exists so tests can confirm the axiom checker catches it.
std::shared_ptr<const Slcc> corrupt_closed_dedup_slcc(std::shared_ptr<const Properad> p);

// Check the labelled-cospan axioms by bounded enumeration: unique object
// decomposition, hom(unit, unit) free abelian on its connected morphisms,
// the reduced-times-closed bijection, the reduced-tensor pullback square,
// and strictness of the projection. One report line per axiom, first
// violation witnessed.
Report check_axioms(const Slcc& c, std::size_t bound);

// The canonical morphism w -> sigma*w induced by a permutation of tensor
// factors, where (sigma*w)[i] = w[sigma^-1(i)]; built by composing adjacent
// symmetries, which coherence makes independent of the factorization.
EnvMorphism hat_morphism(const Slcc& c, const Word& w, const FinMap& sigma);

// A height-1 graph decorated by connected morphisms of a category: endpoint
// words, a normal-form wiring, one connected morphism per middle element.
struct CospanDecoration {
    Word src;
    Word tgt;
    Cospan shape;
    std::vector<EnvMorphism> vertex_mors;
};

// Evaluate a decorated wiring to a single morphism: tensor the vertex
// morphisms in middle order and conjugate by the hat morphisms that sort
// the endpoint wires back into place. Its wiring projects to the shape.
EnvMorphism mu(const CospanDecoration& d, const Slcc& c);

// The properad of connected data of a category: colors are the connected
// objects, operations are the connected morphisms between words of them
// (interned to dense tags in a deterministic order at construction, over
// all profiles with words of length <= arity_bound), permutations act by
// hat conjugation, and compose2 evaluates the two layers with mu and
// composes in the category.
class ExtractedProperad final : public Properad {
public:
    ExtractedProperad(std::shared_ptr<const Slcc> c, std::size_t arity_bound);

    std::vector<Color> colors() const override;
    std::vector<Op> ops(const Word& inputs, const Word& outputs,
                        std::size_t size_bound) const override;
    bool has_op(const Op& p) const override;
    Op identity(Color c) const override;
    Op act(const FinMap& input_perm, const FinMap& output_perm, const Op& p) const override;
    Op compose2(const Decoration& d) const override;
    std::string label(const Op& p) const override;

    const Slcc& category() const { return *cat_; }
    std::size_t arity_bound() const { return arity_bound_; }

    // The interned connected morphism behind an operation, and back.
    const EnvMorphism& morphism_of(const Op& p) const;
    Op operation_of(const EnvMorphism& m) const;

private:
    void intern(const EnvMorphism& m);

    std::shared_ptr<const Slcc> cat_;
    std::size_t arity_bound_ = 0;
    std::size_t color_count_ = 0;
    std::map<EnvMorphism, std::uint64_t> ids_;
    std::vector<EnvMorphism> mors_;
    std::map<std::pair<Word, Word>, std::vector<Op>> table_;
};

std::shared_ptr<const ExtractedProperad> extract_properad(std::shared_ptr<const Slcc> c,
                                                          std::size_t bound);

// Round trip a properad through its envelope and back: color and operation
// bijections, compose2 agreement on bounded connected two-layer
// decorations, bijectivity of the evaluation map on every bounded hom-set,
// and its preservation of identities, compose, tensor, and symmetry.
Report roundtrip_check(std::shared_ptr<const Properad> p, std::size_t bound);

// A map of properads presented by its action on colors and operations.
struct PropMap {
    std::shared_ptr<const Properad> src;
    std::shared_ptr<const Properad> tgt;
    std::function<Color(Color)> on_colors;
    std::function<Op(const Op&)> on_ops;
};

PropMap identity_prop_map(std::shared_ptr<const Properad> p);

// Verify the naturality relation for a family gamma of unary operations
// (indexed by source colors, gamma[c-1] : [f(c)] -> [g(c)]): for every
// operation p with arities <= bound, tensoring gamma over the inputs and
// then applying g(p) equals applying f(p) and then tensoring gamma over the
// outputs, computed in the envelope of the target properad.
Report check_nat_trans_report(const PropMap& f, const PropMap& g, const std::vector<Op>& gamma,
                              std::size_t bound);
bool check_nat_trans(const PropMap& f, const PropMap& g, const std::vector<Op>& gamma,
                     std::size_t bound);

// Check all simplicial relations (face-face, degeneracy-degeneracy, mixed,
// and the face-degeneracy identities) on decorations over the properad
// extracted from the category, for graphs of height 1 to 3 within bounded
// level and middle sizes; deterministic subsampling keeps suites fast.
Report presheaf_relations_check(std::shared_ptr<const Slcc> c, std::size_t bound);

}  // namespace propcat
