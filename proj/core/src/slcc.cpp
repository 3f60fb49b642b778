#include "propcat/slcc.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

#include "propcat/error.hpp"

namespace propcat {

namespace {

// Deterministic sampling sizes for the law checks that would otherwise
// enumerate products of hom-sets: strided graph subsampling and hard caps
// on decorations and morphism pairs keep every suite fast while the
// exhaustive parts (axioms, hom bijections) stay exhaustive.
constexpr std::size_t kPairCap = 240;        // sampled morphism pairs per law
constexpr std::size_t kGraphCap = 160;       // graphs per height in relation checks
constexpr std::size_t kDecorationCap = 10;   // decorations per sampled graph
constexpr std::size_t kSmallLen = 2;         // word length for sampled structure laws
constexpr std::size_t kSmallMiddle = 2;      // middle bound for sampled structure laws
constexpr std::size_t kNoBound = std::numeric_limits<std::size_t>::max();

std::string word_text(const Word& w) {
    if (w.empty()) return "()";
    std::ostringstream o;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) o << ' ';
        o << w[i];
    }
    return o.str();
}

// All words over colors 1..n_colors with length <= max_len, shortest first,
// lexicographic within a length.
std::vector<Word> all_words(std::size_t n_colors, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 1; len <= max_len && n_colors > 0; ++len) {
        std::vector<Word> next;
        for (const Word& w : layer) {
            for (Color c = 1; c <= n_colors; ++c) {
                Word v = w;
                v.push_back(c);
                next.push_back(std::move(v));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::string describe_graph(const LevelGraph& g) {
    std::ostringstream o;
    o << "levels";
    for (std::size_t s : g.level_sizes()) o << ' ' << s;
    for (std::size_t a = 0; a < g.height(); ++a) {
        const LayerCospan& lay = g.adjacents()[a];
        o << " ; mid " << g.middle_size(a) << " :";
        for (std::size_t i = 1; i <= lay.left.dom_size; ++i) o << ' ' << lay.left(i);
        o << " |";
        for (std::size_t i = 1; i <= lay.right.dom_size; ++i) o << ' ' << lay.right(i);
    }
    return o.str();
}

// The envelope of a properad, exposed through the category contract.
class EnvelopeSlcc : public Slcc {
public:
    explicit EnvelopeSlcc(std::shared_ptr<const Properad> p) : env_(std::move(p)) {}

    std::vector<std::string> connected_objects() const override {
        std::vector<std::string> out;
        for (Color c : env_.properad().colors()) out.push_back(std::to_string(c));
        return out;
    }

    EnvMorphism id(const Word& x) const override { return env_.identity(x); }

    EnvMorphism compose(const EnvMorphism& f, const EnvMorphism& g) const override {
        return env_.compose(f, g);
    }

    EnvMorphism tensor(const EnvMorphism& f, const EnvMorphism& g) const override {
        return env_.tensor(f, g);
    }

    EnvMorphism symmetry(const Word& a, const Word& b) const override {
        return env_.symmetry(a, b);
    }

    Cospan project(const EnvMorphism& f) const override { return env_.project(f); }

    std::vector<EnvMorphism> hom_enum(const Word& a, const Word& b,
                                      std::size_t middle_bound) const override {
        return env_.hom_enum(a, b, middle_bound);
    }

protected:
    Envelope env_;
};

// Mutant used by tests: compose forgets repeated closed vertices, which
// collapses distinct products of closed morphisms and breaks the free
// abelian monoid hom(unit, unit).
class ClosedDedupSlcc final : public EnvelopeSlcc {
public:
    using EnvelopeSlcc::EnvelopeSlcc;

    EnvMorphism compose(const EnvMorphism& f, const EnvMorphism& g) const override {
        EnvMorphism r = EnvelopeSlcc::compose(f, g);
        std::vector<Op> closed(r.vertex_ops.begin() + static_cast<std::ptrdiff_t>(r.shape.touched),
                               r.vertex_ops.end());
        closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
        std::vector<Op> ops(r.vertex_ops.begin(),
                            r.vertex_ops.begin() + static_cast<std::ptrdiff_t>(r.shape.touched));
        ops.insert(ops.end(), closed.begin(), closed.end());
        std::size_t k = r.shape.touched + closed.size();
        Cospan shape{r.shape.src,
                     r.shape.tgt,
                     r.shape.touched,
                     closed.size(),
                     FinMap(r.shape.left.dom_size, k, r.shape.left.targets),
                     FinMap(r.shape.right.dom_size, k, r.shape.right.targets)};
        return EnvMorphism{r.src, r.tgt, std::move(shape), std::move(ops)};
    }
};

void fail_line(ReportLine& line, std::string witness) {
    if (!line.pass) return;  // keep the first witness
    line.pass = false;
    line.witness = std::move(witness);
}

std::vector<EnvMorphism> reduced_homs(const Slcc& c, const Word& a, const Word& b,
                                      std::size_t bound) {
    std::vector<EnvMorphism> out;
    for (EnvMorphism& f : c.hom_enum(a, b, bound)) {
        if (is_reduced(c.project(f))) out.push_back(std::move(f));
    }
    return out;
}

// Nondecreasing index tuples of size 1..max_size over 0..count-1, plus the
// empty tuple: the multisets over a generator list.
std::vector<std::vector<std::size_t>> multisets(std::size_t count, std::size_t max_size) {
    std::vector<std::vector<std::size_t>> out{{}};
    std::vector<std::vector<std::size_t>> layer{{}};
    for (std::size_t s = 1; s <= max_size && count > 0; ++s) {
        std::vector<std::vector<std::size_t>> next;
        for (const std::vector<std::size_t>& m : layer) {
            for (std::size_t i = m.empty() ? 0 : m.back(); i < count; ++i) {
                std::vector<std::size_t> v = m;
                v.push_back(i);
                next.push_back(std::move(v));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

}  // namespace

bool Report::all_pass() const {
    for (const ReportLine& l : lines) {
        if (!l.pass) return false;
    }
    return true;
}

std::string Report::to_text() const {
    std::ostringstream o;
    for (const ReportLine& l : lines) {
        if (l.pass) {
            o << "PASS " << l.law << '\n';
        } else {
            o << "FAIL " << l.law << ": " << l.witness << '\n';
        }
    }
    return o.str();
}

Word Slcc::decompose_object(const Word& x) const { return x; }

std::vector<EnvMorphism> Slcc::connected_hom_enum(const Word& a, const Word& b,
                                                  std::size_t) const {
    std::vector<EnvMorphism> out;
    for (EnvMorphism& f : hom_enum(a, b, 1)) {
        if (is_connected(project(f))) out.push_back(std::move(f));
    }
    return out;
}

std::shared_ptr<const Slcc> envelope_as_slcc(std::shared_ptr<const Properad> p) {
    return std::make_shared<EnvelopeSlcc>(std::move(p));
}

std::shared_ptr<const Slcc> corrupt_closed_dedup_slcc(std::shared_ptr<const Properad> p) {
    return std::make_shared<ClosedDedupSlcc>(std::move(p));
}

EnvMorphism hat_morphism(const Slcc& c, const Word& w, const FinMap& sigma) {
    if (!sigma.is_bijection() || sigma.dom_size != w.size()) {
        throw StructureError("hat morphism needs a permutation of the word");
    }
    const std::size_t n = w.size();
    FinMap inv = sigma.inverse();
    std::vector<std::size_t> goal(n), cur(n);
    for (std::size_t i = 0; i < n; ++i) {
        goal[i] = inv(i + 1) - 1;
        cur[i] = i;
    }
    Word cur_word = w;
    EnvMorphism acc = c.id(w);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t t = i;
        while (cur[t] != goal[i]) ++t;
        for (std::size_t u = t; u > i; --u) {
            Word prefix(cur_word.begin(), cur_word.begin() + static_cast<std::ptrdiff_t>(u - 1));
            Word suffix(cur_word.begin() + static_cast<std::ptrdiff_t>(u + 1), cur_word.end());
            EnvMorphism swap_mor =
                c.tensor(c.tensor(c.id(prefix), c.symmetry({cur_word[u - 1]}, {cur_word[u]})),
                         c.id(suffix));
            acc = c.compose(acc, swap_mor);
            std::swap(cur[u - 1], cur[u]);
            std::swap(cur_word[u - 1], cur_word[u]);
        }
    }
    return acc;
}

EnvMorphism mu(const CospanDecoration& d, const Slcc& c) {
    const Cospan& s = d.shape;
    if (s.src != d.src.size() || s.tgt != d.tgt.size() ||
        normalize(s.left, s.right) != s) {
        throw StructureError("decoration shape is not a normal-form wiring of the words");
    }
    const std::size_t k = s.middle();
    if (d.vertex_mors.size() != k) {
        throw StructureError("decoration needs one connected morphism per middle element");
    }
    std::vector<CospanComponent> comps = components(s);
    for (std::size_t q = 1; q <= k; ++q) {
        const EnvMorphism& m = d.vertex_mors[q - 1];
        if (!is_connected(c.project(m))) {
            throw StructureError("decoration vertex carries a non-connected morphism");
        }
        Word want_src, want_tgt;
        for (std::size_t u : comps[q - 1].inputs) want_src.push_back(d.src[u - 1]);
        for (std::size_t v : comps[q - 1].outputs) want_tgt.push_back(d.tgt[v - 1]);
        if (m.src != want_src || m.tgt != want_tgt) {
            throw StructureError("decoration vertex morphism does not match its wiring");
        }
    }

    EnvMorphism body = c.id(Word{});
    for (std::size_t q = 1; q <= k; ++q) {
        body = c.tensor(body, d.vertex_mors[q - 1]);
    }

    std::vector<std::size_t> in_order, out_order;
    for (const CospanComponent& comp : comps) {
        in_order.insert(in_order.end(), comp.inputs.begin(), comp.inputs.end());
        out_order.insert(out_order.end(), comp.outputs.begin(), comp.outputs.end());
    }
    FinMap iota1(in_order.size(), in_order.size(), in_order);
    FinMap iota0(out_order.size(), out_order.size(), out_order);

    EnvMorphism unsort = hat_morphism(c, d.src, iota1.inverse());
    Word grouped_tgt(out_order.size());
    for (std::size_t j = 1; j <= out_order.size(); ++j) {
        grouped_tgt[j - 1] = d.tgt[iota0(j) - 1];
    }
    EnvMorphism resort = hat_morphism(c, grouped_tgt, iota0);
    return c.compose(c.compose(unsort, body), resort);
}

ExtractedProperad::ExtractedProperad(std::shared_ptr<const Slcc> c, std::size_t arity_bound)
    : cat_(std::move(c)), arity_bound_(arity_bound) {
    if (!cat_) throw StructureError("extraction needs a category");
    color_count_ = cat_->connected_objects().size();
    const std::vector<Word> words = all_words(color_count_, arity_bound_);
    for (const Word& a : words) {
        for (const Word& b : words) {
            for (const EnvMorphism& m : cat_->connected_hom_enum(a, b, arity_bound_)) {
                if (m.src != a || m.tgt != b || !is_connected(cat_->project(m))) {
                    throw StructureError("connected hom enumeration returned a stray morphism");
                }
                intern(m);
            }
        }
    }
    for (Color col = 1; col <= color_count_; ++col) {
        EnvMorphism e = cat_->id(Word{col});
        if (ids_.find(e) == ids_.end()) {
            throw StructureError(
                "identity on a connected object is missing from the connected homs; "
                "run the axiom checker on this category");
        }
    }
}

void ExtractedProperad::intern(const EnvMorphism& m) {
    auto [it, fresh] = ids_.emplace(m, mors_.size());
    if (!fresh) return;
    mors_.push_back(m);
    table_[{m.src, m.tgt}].push_back(Op{m.src, m.tgt, it->second});
}

std::vector<Color> ExtractedProperad::colors() const {
    std::vector<Color> out(color_count_);
    for (std::size_t i = 0; i < color_count_; ++i) out[i] = i + 1;
    return out;
}

std::vector<Op> ExtractedProperad::ops(const Word& inputs, const Word& outputs,
                                       std::size_t) const {
    if (inputs.size() > arity_bound_ || outputs.size() > arity_bound_) {
        throw StructureError("profile exceeds the extraction arity bound");
    }
    auto it = table_.find({inputs, outputs});
    if (it == table_.end()) return {};
    return it->second;
}

bool ExtractedProperad::has_op(const Op& p) const {
    if (p.tag >= mors_.size()) return false;
    const EnvMorphism& m = mors_[p.tag];
    return m.src == p.inputs && m.tgt == p.outputs;
}

Op ExtractedProperad::identity(Color c) const {
    if (c < 1 || c > color_count_) throw StructureError("color outside palette");
    return operation_of(cat_->id(Word{c}));
}

const EnvMorphism& ExtractedProperad::morphism_of(const Op& p) const {
    if (!has_op(p)) throw StructureError("operation is not in the extraction table");
    return mors_[p.tag];
}

Op ExtractedProperad::operation_of(const EnvMorphism& m) const {
    auto it = ids_.find(m);
    if (it == ids_.end()) {
        throw StructureError("connected morphism is outside the extraction table");
    }
    return Op{m.src, m.tgt, it->second};
}

Op ExtractedProperad::act(const FinMap& input_perm, const FinMap& output_perm,
                          const Op& p) const {
    Op shaped = permute_profile(input_perm, output_perm, p);
    const EnvMorphism& m = morphism_of(p);
    EnvMorphism pre = hat_morphism(*cat_, shaped.inputs, input_perm);
    EnvMorphism post = hat_morphism(*cat_, p.outputs, output_perm.inverse());
    return operation_of(cat_->compose(cat_->compose(pre, m), post));
}

Op ExtractedProperad::compose2(const Decoration& d) const {
    require_compose2_input(d);
    EnvMorphism layers[2];
    for (std::size_t a = 0; a < 2; ++a) {
        const LayerCospan& legs = d.graph.adjacents()[a];
        NormalizedCospan nc = normalize_with_map(legs.left, legs.right);
        std::vector<EnvMorphism> mors(d.vertex_ops[a].size(), EnvMorphism{});
        for (std::size_t q = 1; q <= d.vertex_ops[a].size(); ++q) {
            mors[nc.relabel(q) - 1] = morphism_of(d.vertex_ops[a][q - 1]);
        }
        CospanDecoration layer{d.level_colors[a], d.level_colors[a + 1], std::move(nc.cospan),
                               std::move(mors)};
        layers[a] = mu(layer, *cat_);
    }
    return operation_of(cat_->compose(layers[0], layers[1]));
}

std::string ExtractedProperad::label(const Op& p) const {
    return "[" + print_morphism(morphism_of(p)) + "]";
}

std::shared_ptr<const ExtractedProperad> extract_properad(std::shared_ptr<const Slcc> c,
                                                          std::size_t bound) {
    return std::make_shared<ExtractedProperad>(std::move(c), bound);
}

namespace {

ReportLine axiom_object_decomposition(const Slcc& c, const std::vector<Word>& words) {
    ReportLine line{true, "axiom-1-object-decomposition", ""};
    for (const Word& w : words) {
        if (c.decompose_object(w) != w) {
            fail_line(line, "object " + word_text(w) + " does not decompose into its letters");
            return line;
        }
        EnvMorphism e = c.id(w);
        if (e.src != w || e.tgt != w || c.project(e) != identity_cospan(w.size())) {
            fail_line(line, "identity of " + word_text(w) + " is malformed");
            return line;
        }
    }
    return line;
}

ReportLine axiom_closed_monoid(const Slcc& c, std::size_t bound) {
    ReportLine line{true, "axiom-2-closed-monoid", ""};
    const Word unit;
    const std::vector<EnvMorphism> gens = c.connected_hom_enum(unit, unit, bound);
    const std::vector<std::vector<std::size_t>> sets = multisets(gens.size(), bound);
    std::vector<EnvMorphism> built;
    built.reserve(sets.size());
    for (const std::vector<std::size_t>& m : sets) {
        EnvMorphism fwd = c.id(unit);
        for (std::size_t i : m) fwd = c.compose(fwd, gens[i]);
        EnvMorphism rev = c.id(unit);
        for (auto it = m.rbegin(); it != m.rend(); ++it) rev = c.compose(rev, gens[*it]);
        EnvMorphism ten = c.id(unit);
        for (std::size_t i : m) ten = c.tensor(ten, gens[i]);
        if (!(c.equal(fwd, rev) && c.equal(fwd, ten))) {
            fail_line(line, "products of connected closed morphisms do not commute: " +
                                print_morphism(fwd));
            return line;
        }
        built.push_back(std::move(fwd));
    }
    for (std::size_t i = 0; i < built.size(); ++i) {
        for (std::size_t j = i + 1; j < built.size(); ++j) {
            if (c.equal(built[i], built[j])) {
                fail_line(line, "two distinct multisets of connected closed morphisms "
                                "compose to the same morphism: " +
                                    print_morphism(built[i]));
                return line;
            }
        }
    }
    for (const EnvMorphism& h : c.hom_enum(unit, unit, bound)) {
        if (std::find(built.begin(), built.end(), h) == built.end()) {
            fail_line(line, "closed morphism is not a product of connected ones: " +
                                print_morphism(h));
            return line;
        }
    }
    return line;
}

ReportLine axiom_reduced_closed(const Slcc& c, const std::vector<Word>& words,
                                std::size_t bound) {
    ReportLine line{true, "axiom-3-reduced-closed", ""};
    const std::vector<EnvMorphism> closeds = c.hom_enum(Word{}, Word{}, bound);
    for (const Word& a : words) {
        for (const Word& b : words) {
            if (a.size() + b.size() > bound) continue;
            const std::vector<EnvMorphism> homs = c.hom_enum(a, b, bound);
            const std::vector<EnvMorphism> reduceds = reduced_homs(c, a, b, bound);
            std::map<EnvMorphism, std::size_t> hits;
            for (const EnvMorphism& f : reduceds) {
                std::size_t fm = c.project(f).middle();
                for (const EnvMorphism& u : closeds) {
                    if (fm + c.project(u).middle() > bound) continue;
                    ++hits[c.tensor(f, u)];
                }
            }
            for (const auto& [m, count] : hits) {
                if (count > 1) {
                    fail_line(line, "two reduced-times-closed factorizations of " +
                                        print_morphism(m));
                    return line;
                }
            }
            for (const EnvMorphism& h : homs) {
                auto it = hits.find(h);
                if (it == hits.end()) {
                    fail_line(line, "no reduced-times-closed factorization of " +
                                        print_morphism(h));
                    return line;
                }
            }
        }
    }
    return line;
}

ReportLine axiom_reduced_tensor(const Slcc& c, const std::vector<Word>& words,
                                std::size_t bound) {
    ReportLine line{true, "axiom-4-reduced-tensor", ""};
    for (const Word& w1 : words) {
        for (const Word& w2 : words) {
            if (w1.size() + w2.size() > bound) continue;
            for (const Word& w3 : words) {
                for (const Word& w4 : words) {
                    if (w1.size() + w2.size() + w3.size() + w4.size() > bound) continue;
                    // The square for hom^r(w1,w2) x hom^r(w3,w4).
                    const std::vector<EnvMorphism> rf = reduced_homs(c, w1, w2, bound);
                    const std::vector<EnvMorphism> rg = reduced_homs(c, w3, w4, bound);
                    const std::vector<EnvMorphism> rh =
                        reduced_homs(c, concat(w1, w3), concat(w2, w4), bound);
                    for (const Cospan& u : all_cospans(w1.size(), w2.size(), bound)) {
                        if (!is_reduced(u)) continue;
                        for (const Cospan& v : all_cospans(w3.size(), w4.size(), bound)) {
                            if (!is_reduced(v)) continue;
                            const Cospan target = tensor(u, v);
                            for (const EnvMorphism& h : rh) {
                                if (c.project(h) != target) continue;
                                std::size_t count = 0;
                                for (const EnvMorphism& f : rf) {
                                    if (c.project(f) != u) continue;
                                    for (const EnvMorphism& g : rg) {
                                        if (c.project(g) != v) continue;
                                        if (c.equal(c.tensor(f, g), h)) ++count;
                                    }
                                }
                                if (count != 1) {
                                    fail_line(line,
                                              "reduced tensor lifts " + std::to_string(count) +
                                                  " times for " + print_morphism(h));
                                    return line;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return line;
}

ReportLine projection_strictness(const Slcc& c, std::size_t n_colors) {
    ReportLine line{true, "projection-strictness", ""};
    const std::vector<Word> small = all_words(std::min<std::size_t>(n_colors, 2), kSmallLen);
    for (const Word& a : small) {
        for (const Word& b : small) {
            if (c.project(c.symmetry(a, b)) != symmetry(a.size(), b.size())) {
                fail_line(line, "projection misses the symmetry of " + word_text(a) + " and " +
                                    word_text(b));
                return line;
            }
        }
    }
    std::size_t budget = kPairCap;
    for (const Word& a : small) {
        for (const Word& b : small) {
            const std::vector<EnvMorphism> fs = c.hom_enum(a, b, kSmallMiddle);
            for (const Word& d : small) {
                const std::vector<EnvMorphism> gs = c.hom_enum(b, d, kSmallMiddle);
                for (const EnvMorphism& f : fs) {
                    for (const EnvMorphism& g : gs) {
                        if (budget == 0) break;
                        --budget;
                        if (c.project(c.compose(f, g)) !=
                            compose(c.project(f), c.project(g))) {
                            fail_line(line, "projection misses a composite of " +
                                                print_morphism(f) + " and " + print_morphism(g));
                            return line;
                        }
                    }
                }
            }
        }
    }
    budget = kPairCap;
    for (const Word& a : small) {
        for (const Word& b : small) {
            const std::vector<EnvMorphism> fs = c.hom_enum(a, b, kSmallMiddle);
            for (const Word& a2 : small) {
                for (const Word& b2 : small) {
                    const std::vector<EnvMorphism> gs = c.hom_enum(a2, b2, kSmallMiddle);
                    for (const EnvMorphism& f : fs) {
                        for (const EnvMorphism& g : gs) {
                            if (budget == 0) break;
                            --budget;
                            if (c.project(c.tensor(f, g)) !=
                                tensor(c.project(f), c.project(g))) {
                                fail_line(line, "projection misses a tensor of " +
                                                    print_morphism(f) + " and " +
                                                    print_morphism(g));
                                return line;
                            }
                        }
                    }
                }
            }
        }
    }
    return line;
}

}  // namespace

Report check_axioms(const Slcc& c, std::size_t bound) {
    Report rep;
    const std::size_t n_colors = c.connected_objects().size();
    const std::vector<Word> words = all_words(n_colors, bound);
    rep.lines.push_back(axiom_object_decomposition(c, words));
    rep.lines.push_back(axiom_closed_monoid(c, bound));
    rep.lines.push_back(axiom_reduced_closed(c, words, bound));
    rep.lines.push_back(axiom_reduced_tensor(c, words, bound));
    rep.lines.push_back(projection_strictness(c, n_colors));
    return rep;
}

namespace {

// Evaluate a morphism of the envelope of an extracted properad back in the
// category: the comparison map of the round trip.
EnvMorphism mu_bar(const ExtractedProperad& q, const EnvMorphism& f) {
    std::vector<EnvMorphism> mors;
    mors.reserve(f.vertex_ops.size());
    for (const Op& p : f.vertex_ops) mors.push_back(q.morphism_of(p));
    return mu(CospanDecoration{f.src, f.tgt, f.shape, std::move(mors)}, q.category());
}

}  // namespace

Report roundtrip_check(std::shared_ptr<const Properad> p, std::size_t bound) {
    Report rep;
    auto c = envelope_as_slcc(p);
    auto q = extract_properad(c, bound);
    Envelope ep(p);
    Envelope eq(q);
    const std::size_t n_colors = p->colors().size();
    const std::vector<Word> words = all_words(n_colors, bound);

    {
        ReportLine line{true, "colors-bijection", ""};
        if (q->colors() != p->colors()) {
            fail_line(line, "extracted palette has " + std::to_string(q->colors().size()) +
                                " colors, properad has " + std::to_string(n_colors));
        }
        rep.lines.push_back(line);
    }

    {
        ReportLine line{true, "ops-bijection", ""};
        for (const Word& a : words) {
            for (const Word& b : words) {
                if (!line.pass) break;
                const std::vector<Op> pops = p->ops(a, b, kNoBound);
                const std::vector<Op> qops = q->ops(a, b, kNoBound);
                std::set<EnvMorphism> image, target;
                for (const Op& op : pops) image.insert(ep.corolla(op));
                for (const Op& op : qops) target.insert(q->morphism_of(op));
                if (image.size() != pops.size() || image != target) {
                    fail_line(line, "operation sets differ at profile " + word_text(a) + " -> " +
                                        word_text(b));
                }
            }
        }
        rep.lines.push_back(line);
    }

    {
        ReportLine line{true, "compose2-agreement", ""};
        for (const LevelGraph& g : all_graphs(2, 2, 2)) {
            if (!line.pass) break;
            if (g.derived(0, 2).size != 1) continue;
            for (const Decoration& d : decorations_enum(g, *p, kNoBound, 3 * kDecorationCap)) {
                Op through_p = p->compose2(d);
                Decoration dq = d;
                for (std::size_t a = 0; a < 2; ++a) {
                    for (Op& op : dq.vertex_ops[a]) op = q->operation_of(ep.corolla(op));
                }
                Op through_q = q->compose2(dq);
                if (q->morphism_of(through_q) != ep.corolla(through_p)) {
                    fail_line(line, "compose2 disagrees on " + describe_graph(g));
                    break;
                }
            }
        }
        rep.lines.push_back(line);
    }

    {
        ReportLine line{true, "mu-bar-hom-bijection", ""};
        for (const Word& a : words) {
            for (const Word& b : words) {
                if (!line.pass) break;
                const std::vector<EnvMorphism> source = eq.hom_enum(a, b, bound);
                const std::vector<EnvMorphism> expect = ep.hom_enum(a, b, bound);
                std::set<EnvMorphism> image;
                for (const EnvMorphism& f : source) image.insert(mu_bar(*q, f));
                if (image.size() != source.size()) {
                    fail_line(line, "evaluation is not injective on hom " + word_text(a) +
                                        " -> " + word_text(b));
                    break;
                }
                if (image != std::set<EnvMorphism>(expect.begin(), expect.end())) {
                    fail_line(line, "evaluation does not cover hom " + word_text(a) + " -> " +
                                        word_text(b));
                }
            }
        }
        rep.lines.push_back(line);
    }

    {
        ReportLine line{true, "mu-bar-preserves-structure", ""};
        for (const Word& a : words) {
            if (mu_bar(*q, eq.identity(a)) != c->id(a)) {
                fail_line(line, "identity of " + word_text(a) + " is not preserved");
                break;
            }
        }
        const std::vector<Word> small = all_words(std::min<std::size_t>(n_colors, 2), kSmallLen);
        for (const Word& a : small) {
            for (const Word& b : small) {
                if (!line.pass) break;
                if (mu_bar(*q, eq.symmetry(a, b)) != c->symmetry(a, b)) {
                    fail_line(line, "symmetry of " + word_text(a) + " and " + word_text(b) +
                                        " is not preserved");
                }
            }
        }
        std::size_t budget = kPairCap;
        for (const Word& a : small) {
            for (const Word& b : small) {
                if (!line.pass || budget == 0) break;
                const std::vector<EnvMorphism> fs = eq.hom_enum(a, b, kSmallMiddle);
                for (const Word& d : small) {
                    const std::vector<EnvMorphism> gs = eq.hom_enum(b, d, kSmallMiddle);
                    for (const EnvMorphism& f : fs) {
                        for (const EnvMorphism& g : gs) {
                            if (!line.pass || budget == 0) break;
                            --budget;
                            if (mu_bar(*q, eq.compose(f, g)) !=
                                c->compose(mu_bar(*q, f), mu_bar(*q, g))) {
                                fail_line(line, "composition of " + print_morphism(f) + " and " +
                                                    print_morphism(g) + " is not preserved");
                            }
                        }
                    }
                }
            }
        }
        budget = kPairCap;
        for (const Word& a : small) {
            for (const Word& b : small) {
                if (!line.pass || budget == 0) break;
                const std::vector<EnvMorphism> fs = eq.hom_enum(a, b, kSmallMiddle);
                for (const Word& a2 : small) {
                    for (const Word& b2 : small) {
                        const std::vector<EnvMorphism> gs = eq.hom_enum(a2, b2, kSmallMiddle);
                        for (const EnvMorphism& f : fs) {
                            for (const EnvMorphism& g : gs) {
                                if (!line.pass || budget == 0) break;
                                --budget;
                                if (mu_bar(*q, eq.tensor(f, g)) !=
                                    c->tensor(mu_bar(*q, f), mu_bar(*q, g))) {
                                    fail_line(line, "tensor of " + print_morphism(f) + " and " +
                                                        print_morphism(g) + " is not preserved");
                                }
                            }
                        }
                    }
                }
            }
        }
        rep.lines.push_back(line);
    }
    return rep;
}

PropMap identity_prop_map(std::shared_ptr<const Properad> p) {
    PropMap m;
    m.src = p;
    m.tgt = std::move(p);
    m.on_colors = [](Color c) { return c; };
    m.on_ops = [](const Op& op) { return op; };
    return m;
}

Report check_nat_trans_report(const PropMap& f, const PropMap& g, const std::vector<Op>& gamma,
                              std::size_t bound) {
    if (!f.src || !f.tgt || f.src != g.src || f.tgt != g.tgt) {
        throw StructureError("transformation needs a parallel pair of properad maps");
    }
    const Properad& p = *f.src;
    Envelope env(f.tgt);
    const std::size_t n_colors = p.colors().size();
    if (gamma.size() != n_colors) {
        throw StructureError("transformation needs one unary operation per source color");
    }
    for (Color col = 1; col <= n_colors; ++col) {
        const Op& gc = gamma[col - 1];
        if (gc.inputs != Word{f.on_colors(col)} || gc.outputs != Word{g.on_colors(col)} ||
            !f.tgt->has_op(gc)) {
            throw StructureError("component at color " + std::to_string(col) +
                                 " does not have profile [f(c)] -> [g(c)]");
        }
    }
    auto gamma_tensor = [&](const Word& w) {
        EnvMorphism out = env.identity(Word{});
        for (Color col : w) out = env.tensor(out, env.corolla(gamma[col - 1]));
        return out;
    };

    Report rep;
    ReportLine line{true, "naturality", ""};
    const std::vector<Word> words = all_words(n_colors, bound);
    for (const Word& in : words) {
        for (const Word& out : words) {
            if (!line.pass) break;
            for (const Op& op : p.ops(in, out, kNoBound)) {
                Op fo = f.on_ops(op);
                Op go = g.on_ops(op);
                if (!f.tgt->has_op(fo) || !f.tgt->has_op(go)) {
                    throw StructureError("map image is not an operation of the target");
                }
                EnvMorphism lhs = env.compose(gamma_tensor(in), env.corolla(go));
                EnvMorphism rhs = env.compose(env.corolla(fo), gamma_tensor(out));
                if (lhs != rhs) {
                    fail_line(line, "op " + word_text(op.inputs) + " -> " +
                                        word_text(op.outputs) + " tag " +
                                        std::to_string(op.tag) + " breaks the relation");
                    break;
                }
            }
        }
    }
    rep.lines.push_back(line);
    return rep;
}

bool check_nat_trans(const PropMap& f, const PropMap& g, const std::vector<Op>& gamma,
                     std::size_t bound) {
    return check_nat_trans_report(f, g, gamma, bound).all_pass();
}

Report presheaf_relations_check(std::shared_ptr<const Slcc> c, std::size_t bound) {
    auto q = extract_properad(std::move(c), std::max<std::size_t>(bound, 2));
    ReportLine ff{true, "face-face", ""};
    ReportLine dd{true, "degeneracy-degeneracy", ""};
    ReportLine mix{true, "face-degeneracy-interchange", ""};
    ReportLine fid{true, "face-degeneracy-identity", ""};

    for (std::size_t h = 1; h <= 3; ++h) {
        // Height 3 narrows the middle bound to keep the graph list small.
        const std::vector<LevelGraph> graphs = all_graphs(h, 2, h == 3 ? 1 : 2);
        const std::size_t stride = std::max<std::size_t>(1, (graphs.size() + kGraphCap - 1) / kGraphCap);
        for (std::size_t gi = 0; gi < graphs.size(); gi += stride) {
            const LevelGraph& g = graphs[gi];
            for (const Decoration& d : decorations_enum(g, *q, bound, kDecorationCap)) {
                if (ff.pass && h >= 2) {
                    for (std::size_t j = 1; j <= h && ff.pass; ++j) {
                        for (std::size_t i = 0; i < j && ff.pass; ++i) {
                            Decoration lhs = decoration_face(decoration_face(d, j, *q), i, *q);
                            Decoration rhs =
                                decoration_face(decoration_face(d, i, *q), j - 1, *q);
                            if (!(lhs == rhs)) {
                                fail_line(ff, describe_graph(g) + " at i=" + std::to_string(i) +
                                                  " j=" + std::to_string(j));
                            }
                        }
                    }
                }
                if (dd.pass) {
                    for (std::size_t j = 0; j <= h && dd.pass; ++j) {
                        for (std::size_t i = 0; i <= j && dd.pass; ++i) {
                            Decoration lhs =
                                decoration_degeneracy(decoration_degeneracy(d, j, *q), i, *q);
                            Decoration rhs =
                                decoration_degeneracy(decoration_degeneracy(d, i, *q), j + 1, *q);
                            if (!(lhs == rhs)) {
                                fail_line(dd, describe_graph(g) + " at i=" + std::to_string(i) +
                                                  " j=" + std::to_string(j));
                            }
                        }
                    }
                }
                if (mix.pass || fid.pass) {
                    for (std::size_t j = 0; j <= h; ++j) {
                        Decoration sj = decoration_degeneracy(d, j, *q);
                        for (std::size_t i = 0; i <= h + 1; ++i) {
                            Decoration lhs = decoration_face(sj, i, *q);
                            if (i == j || i == j + 1) {
                                if (fid.pass && !(lhs == d)) {
                                    fail_line(fid, describe_graph(g) + " at i=" +
                                                       std::to_string(i) + " j=" +
                                                       std::to_string(j));
                                }
                            } else if (mix.pass) {
                                Decoration rhs =
                                    i < j ? decoration_degeneracy(decoration_face(d, i, *q),
                                                                  j - 1, *q)
                                          : decoration_degeneracy(decoration_face(d, i - 1, *q),
                                                                  j, *q);
                                if (!(lhs == rhs)) {
                                    fail_line(mix, describe_graph(g) + " at i=" +
                                                       std::to_string(i) + " j=" +
                                                       std::to_string(j));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    Report rep;
    rep.lines = {ff, dd, mix, fid};
    return rep;
}

}  // namespace propcat
