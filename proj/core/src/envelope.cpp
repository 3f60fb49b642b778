#include "propcat/envelope.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include "propcat/error.hpp"
#include "tokens.hpp"

namespace propcat {

namespace {

// Closed vertices are untouched by either leg, so reordering them is an
// isomorphism over fixed endpoints; sorting their operations makes the
// stored form canonical and lets operator== decide equality of morphisms.
void sort_closed_tail(const Cospan& shape, std::vector<Op>& ops) {
    std::sort(ops.begin() + static_cast<std::ptrdiff_t>(shape.touched), ops.end());
}

// The colors a middle element is wired to, read off one leg.
Word leg_colors(const FinMap& leg, const Word& word, std::size_t q) {
    Word out;
    for (std::size_t u : preimage(leg, q)) {
        out.push_back(word[u - 1]);
    }
    return out;
}

EnvMorphism assemble(Word src, Word tgt, const FinMap& left, const FinMap& right,
                     std::vector<Op> vertex_ops) {
    if (left.dom_size != src.size() || right.dom_size != tgt.size()) {
        throw StructureError("morphism legs disagree with the color words");
    }
    if (left.cod_size != right.cod_size || vertex_ops.size() != left.cod_size) {
        throw StructureError("morphism needs one operation per middle element");
    }
    NormalizedCospan nc = normalize_with_map(left, right);
    std::vector<Op> placed(vertex_ops.size());
    for (std::size_t q = 1; q <= vertex_ops.size(); ++q) {
        placed[nc.relabel(q) - 1] = std::move(vertex_ops[q - 1]);
    }
    sort_closed_tail(nc.cospan, placed);
    return EnvMorphism{std::move(src), std::move(tgt), std::move(nc.cospan), std::move(placed)};
}

}  // namespace

Envelope::Envelope(std::shared_ptr<const Properad> p) : properad_(std::move(p)) {
    if (!properad_) {
        throw StructureError("envelope needs a properad");
    }
}

EnvMorphism Envelope::from_raw(Word src, Word tgt, const FinMap& left, const FinMap& right,
                               std::vector<Op> vertex_ops) const {
    return assemble(std::move(src), std::move(tgt), left, right, std::move(vertex_ops));
}

EnvMorphism Envelope::identity(const Word& a) const {
    std::vector<Op> ops;
    ops.reserve(a.size());
    for (Color c : a) {
        ops.push_back(properad_->identity(c));
    }
    std::size_t n = a.size();
    return from_raw(a, a, FinMap::identity(n), FinMap::identity(n), std::move(ops));
}

EnvMorphism Envelope::corolla(const Op& p) const {
    if (!properad_->has_op(p)) {
        throw StructureError("corolla needs an operation of the properad");
    }
    FinMap left = FinMap::constant(p.inputs.size(), 1, 1);
    FinMap right = FinMap::constant(p.outputs.size(), 1, 1);
    return from_raw(p.inputs, p.outputs, left, right, {p});
}

EnvMorphism Envelope::compose(const EnvMorphism& f, const EnvMorphism& g) const {
    if (f.tgt != g.src) {
        throw StructureError("compose needs matching color words at the joint");
    }
    // Stack the two wirings into a two-layer decorated graph and collapse
    // the inner level; each connected piece runs through the properad.
    Decoration stacked;
    stacked.graph = LevelGraph({f.src.size(), f.tgt.size(), g.tgt.size()},
                               {LayerCospan{f.shape.left, f.shape.right},
                                LayerCospan{g.shape.left, g.shape.right}});
    stacked.level_colors = {f.src, f.tgt, g.tgt};
    stacked.vertex_ops = {f.vertex_ops, g.vertex_ops};
    Decoration flat = decoration_face(stacked, 1, *properad_);
    const LayerCospan& legs = flat.graph.adjacents()[0];
    return from_raw(f.src, g.tgt, legs.left, legs.right, std::move(flat.vertex_ops[0]));
}

EnvMorphism Envelope::tensor(const EnvMorphism& f, const EnvMorphism& g) const {
    Word src = f.src;
    src.insert(src.end(), g.src.begin(), g.src.end());
    Word tgt = f.tgt;
    tgt.insert(tgt.end(), g.tgt.begin(), g.tgt.end());
    std::vector<Op> ops = f.vertex_ops;
    ops.insert(ops.end(), g.vertex_ops.begin(), g.vertex_ops.end());
    return from_raw(std::move(src), std::move(tgt), sum_map(f.shape.left, g.shape.left),
                    sum_map(f.shape.right, g.shape.right), std::move(ops));
}

EnvMorphism Envelope::twisted_tensor(const EnvMorphism& f, const EnvMorphism& g) const {
    Word src = f.src;
    src.insert(src.end(), g.src.begin(), g.src.end());
    Word tgt = g.tgt;
    tgt.insert(tgt.end(), f.tgt.begin(), f.tgt.end());
    std::size_t kf = f.shape.middle();
    std::size_t kg = g.shape.middle();
    // The middle keeps (f, g) block order; only the target side crosses.
    std::vector<std::size_t> right_targets;
    right_targets.reserve(tgt.size());
    for (std::size_t j = 1; j <= g.tgt.size(); ++j) {
        right_targets.push_back(kf + g.shape.right(j));
    }
    for (std::size_t j = 1; j <= f.tgt.size(); ++j) {
        right_targets.push_back(f.shape.right(j));
    }
    std::vector<Op> ops = f.vertex_ops;
    ops.insert(ops.end(), g.vertex_ops.begin(), g.vertex_ops.end());
    FinMap right(tgt.size(), kf + kg, std::move(right_targets));
    return from_raw(std::move(src), std::move(tgt), sum_map(f.shape.left, g.shape.left),
                    std::move(right), std::move(ops));
}

EnvMorphism Envelope::symmetry(const Word& a, const Word& b) const {
    Word src = a;
    src.insert(src.end(), b.begin(), b.end());
    Word tgt = b;
    tgt.insert(tgt.end(), a.begin(), a.end());
    std::vector<Op> ops;
    ops.reserve(src.size());
    for (Color c : src) {
        ops.push_back(properad_->identity(c));
    }
    std::size_t n = a.size(), m = b.size();
    return from_raw(std::move(src), std::move(tgt), FinMap::identity(n + m), block_swap(m, n),
                    std::move(ops));
}

Cospan Envelope::project(const EnvMorphism& f) const { return f.shape; }

bool Envelope::valid(const EnvMorphism& f) const {
    const Cospan& s = f.shape;
    if (s.src != f.src.size() || s.tgt != f.tgt.size()) return false;
    if (s.left.dom_size != s.src || s.right.dom_size != s.tgt) return false;
    if (s.left.cod_size != s.middle() || s.right.cod_size != s.middle()) return false;
    if (normalize(s.left, s.right) != s) return false;
    if (f.vertex_ops.size() != s.middle()) return false;
    for (std::size_t q = 1; q <= s.middle(); ++q) {
        const Op& p = f.vertex_ops[q - 1];
        if (p.inputs != leg_colors(s.left, f.src, q)) return false;
        if (p.outputs != leg_colors(s.right, f.tgt, q)) return false;
        if (!properad_->has_op(p)) return false;
    }
    return std::is_sorted(f.vertex_ops.begin() + static_cast<std::ptrdiff_t>(s.touched),
                          f.vertex_ops.end());
}

std::vector<EnvMorphism> Envelope::hom_enum(const Word& a, const Word& b,
                                            std::size_t middle_bound) const {
    constexpr std::size_t no_bound = std::numeric_limits<std::size_t>::max();
    std::set<EnvMorphism> out;
    for (const Cospan& shape : all_cospans(a.size(), b.size(), middle_bound)) {
        std::size_t k = shape.middle();
        std::vector<std::vector<Op>> options(k);
        bool feasible = true;
        for (std::size_t q = 1; q <= k && feasible; ++q) {
            options[q - 1] = properad_->ops(leg_colors(shape.left, a, q),
                                            leg_colors(shape.right, b, q), no_bound);
            feasible = !options[q - 1].empty();
        }
        if (!feasible) continue;
        std::vector<std::size_t> pick(k, 0);
        while (true) {
            std::vector<Op> ops;
            ops.reserve(k);
            for (std::size_t q = 0; q < k; ++q) {
                ops.push_back(options[q][pick[q]]);
            }
            sort_closed_tail(shape, ops);
            out.insert(EnvMorphism{a, b, shape, std::move(ops)});
            std::size_t q = 0;
            while (q < k && ++pick[q] == options[q].size()) {
                pick[q] = 0;
                ++q;
            }
            if (q == k) break;
        }
    }
    return {out.begin(), out.end()};
}

namespace {

Word parse_word(detail::TokenCursor& cur, const std::vector<Color>& palette) {
    Word out;
    while (cur.peek_is_number()) {
        const detail::Token at = cur.peek();
        std::size_t c = cur.next_number();
        if (std::find(palette.begin(), palette.end(), c) == palette.end()) {
            throw ParseError("color " + std::to_string(c) + " is not in the properad's palette",
                             at.line, at.column);
        }
        out.push_back(c);
    }
    return out;
}

void skip_separators(detail::TokenCursor& cur) {
    while (cur.peek_is(";")) cur.expect(";");
}

}  // namespace

EnvMorphism parse_morphism(const std::string& text, const Properad& p) {
    detail::TokenCursor cur(text);
    const std::vector<Color> palette = p.colors();
    cur.expect("mor");
    Word src = parse_word(cur, palette);
    cur.expect("->");
    Word tgt = parse_word(cur, palette);
    skip_separators(cur);
    cur.expect("shape");
    detail::RawCospanLegs legs = detail::parse_cospan_raw(cur);
    if (legs.left.dom_size != src.size() || legs.right.dom_size != tgt.size()) {
        cur.fail("shape endpoints disagree with the color words");
    }
    skip_separators(cur);
    cur.expect("ops");
    std::vector<Op> ops;
    ops.reserve(legs.left.cod_size);
    for (std::size_t q = 1; q <= legs.left.cod_size; ++q) {
        const detail::Token at = cur.peek();
        Op op{leg_colors(legs.left, src, q), leg_colors(legs.right, tgt, q), 0};
        op.tag = cur.next_number();
        if (!p.has_op(op)) {
            throw ParseError("no operation with tag " + std::to_string(op.tag) +
                                 " at the profile wired to middle element " + std::to_string(q),
                             at.line, at.column);
        }
        ops.push_back(std::move(op));
    }
    cur.expect_end();
    return assemble(std::move(src), std::move(tgt), legs.left, legs.right, std::move(ops));
}

std::string print_morphism(const EnvMorphism& f) {
    std::ostringstream out;
    out << "mor";
    for (Color c : f.src) out << ' ' << c;
    out << " ->";
    for (Color c : f.tgt) out << ' ' << c;
    out << " ; shape " << print_cospan(f.shape) << " ; ops";
    for (const Op& p : f.vertex_ops) out << ' ' << p.tag;
    return out.str();
}

}  // namespace propcat
