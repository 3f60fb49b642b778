#include "propcat/properad.hpp"

#include <algorithm>
#include <map>

#include "tokens.hpp"

namespace propcat {

VertexProfile vertex_profile(const Decoration& d, std::size_t adjacency, std::size_t vertex) {
    const LayerCospan& lay = d.graph.adjacents()[adjacency];
    VertexProfile prof;
    for (std::size_t x : preimage(lay.left, vertex)) {
        prof.inputs.push_back(d.level_colors[adjacency][x - 1]);
    }
    for (std::size_t y : preimage(lay.right, vertex)) {
        prof.outputs.push_back(d.level_colors[adjacency + 1][y - 1]);
    }
    return prof;
}

Op Properad::permute_profile(const FinMap& input_perm, const FinMap& output_perm, const Op& p) {
    if (!input_perm.is_bijection() || input_perm.dom_size != p.inputs.size()) {
        throw StructureError("input relabelling must be a permutation of the inputs");
    }
    if (!output_perm.is_bijection() || output_perm.dom_size != p.outputs.size()) {
        throw StructureError("output relabelling must be a permutation of the outputs");
    }
    Op q;
    q.tag = p.tag;
    q.inputs.resize(p.inputs.size());
    q.outputs.resize(p.outputs.size());
    for (std::size_t j = 1; j <= p.inputs.size(); ++j) {
        q.inputs[j - 1] = p.inputs[input_perm(j) - 1];
    }
    for (std::size_t j = 1; j <= p.outputs.size(); ++j) {
        q.outputs[j - 1] = p.outputs[output_perm(j) - 1];
    }
    return q;
}

Op Properad::act(const FinMap& input_perm, const FinMap& output_perm, const Op& p) const {
    return permute_profile(input_perm, output_perm, p);
}

std::string Properad::label(const Op& p) const { return std::to_string(p.tag); }

bool validate_decoration(const Decoration& d, const Properad& p) {
    const LevelGraph& g = d.graph;
    const std::size_t n = g.height();
    if (d.level_colors.size() != n + 1 || d.vertex_ops.size() != n) return false;
    std::vector<Color> cols = p.colors();
    for (std::size_t i = 0; i <= n; ++i) {
        if (d.level_colors[i].size() != g.level_size(i)) return false;
        for (Color c : d.level_colors[i]) {
            if (std::find(cols.begin(), cols.end(), c) == cols.end()) return false;
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (d.vertex_ops[a].size() != g.middle_size(a)) return false;
        for (std::size_t v = 1; v <= g.middle_size(a); ++v) {
            const Op& op = d.vertex_ops[a][v - 1];
            VertexProfile prof = vertex_profile(d, a, v);
            if (op.inputs != prof.inputs || op.outputs != prof.outputs) return false;
            if (!p.has_op(op)) return false;
        }
    }
    return true;
}

std::vector<Decoration> decorations_enum(const LevelGraph& g, const Properad& p,
                                         std::size_t size_bound, std::size_t max_count) {
    const std::size_t n = g.height();
    const std::vector<Color> cols = p.colors();
    std::vector<Decoration> out;
    if (max_count == 0) return out;
    if (cols.empty()) {
        // Only the empty coloring of an entirely empty graph could work.
        bool empty = true;
        for (std::size_t i = 0; i <= n; ++i) empty = empty && g.level_size(i) == 0;
        if (!empty) return out;
    }
    std::size_t total_elems = 0;
    for (std::size_t i = 0; i <= n; ++i) total_elems += g.level_size(i);

    std::vector<std::size_t> pick(total_elems, 0);  // indices into cols
    while (true) {
        Decoration base;
        base.graph = g;
        base.level_colors.resize(n + 1);
        {
            std::size_t at = 0;
            for (std::size_t i = 0; i <= n; ++i) {
                base.level_colors[i].resize(g.level_size(i));
                for (std::size_t x = 0; x < g.level_size(i); ++x) {
                    base.level_colors[i][x] = cols[pick[at++]];
                }
            }
        }
        // Collect per-vertex operation choices; drop the coloring if some
        // vertex has none.
        bool feasible = true;
        std::vector<std::vector<std::vector<Op>>> choices(n);
        for (std::size_t a = 0; a < n && feasible; ++a) {
            choices[a].resize(g.middle_size(a));
            for (std::size_t v = 1; v <= g.middle_size(a) && feasible; ++v) {
                VertexProfile prof = vertex_profile(base, a, v);
                choices[a][v - 1] = p.ops(prof.inputs, prof.outputs, size_bound);
                feasible = !choices[a][v - 1].empty();
            }
        }
        if (feasible) {
            // Odometer over the vertex choices, adjacency-major.
            std::vector<std::size_t> opick;
            std::vector<std::pair<std::size_t, std::size_t>> slots;
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t v = 0; v < g.middle_size(a); ++v) {
                    slots.push_back({a, v});
                }
            }
            opick.assign(slots.size(), 0);
            while (true) {
                Decoration d = base;
                d.vertex_ops.resize(n);
                for (std::size_t a = 0; a < n; ++a) {
                    d.vertex_ops[a].resize(g.middle_size(a));
                }
                for (std::size_t s = 0; s < slots.size(); ++s) {
                    auto [a, v] = slots[s];
                    d.vertex_ops[a][v] = choices[a][v][opick[s]];
                }
                out.push_back(std::move(d));
                if (out.size() == max_count) return out;
                std::size_t s = slots.size();
                while (s > 0 && opick[s - 1] + 1 == choices[slots[s - 1].first][slots[s - 1].second].size()) {
                    opick[s - 1] = 0;
                    --s;
                }
                if (s == 0) break;
                ++opick[s - 1];
            }
        }
        std::size_t at = total_elems;
        while (at > 0 && pick[at - 1] + 1 == cols.size()) {
            pick[at - 1] = 0;
            --at;
        }
        if (at == 0) break;
        ++pick[at - 1];
    }
    return out;
}

Decoration decoration_face(const Decoration& d, std::size_t i, const Properad& p) {
    const LevelGraph& g = d.graph;
    const std::size_t n = g.height();
    if (n == 0) throw StructureError("a height-0 decoration has no faces");
    if (i > n) {
        throw StructureError("face index " + std::to_string(i) + " outside height " +
                             std::to_string(n));
    }
    Decoration out;
    out.graph = face(g, i);
    out.level_colors = d.level_colors;
    out.level_colors.erase(out.level_colors.begin() + static_cast<std::ptrdiff_t>(i));
    if (i == 0) {
        out.vertex_ops.assign(d.vertex_ops.begin() + 1, d.vertex_ops.end());
        return out;
    }
    if (i == n) {
        out.vertex_ops.assign(d.vertex_ops.begin(), d.vertex_ops.end() - 1);
        return out;
    }
    // Inner face: adjacencies i-1 and i merge; compose each class of the
    // two-layer span through compose2.
    out.vertex_ops.resize(n - 1);
    for (std::size_t a = 0; a + 1 < n; ++a) {
        if (a < i - 1) {
            out.vertex_ops[a] = d.vertex_ops[a];
        } else if (a > i - 1) {
            out.vertex_ops[a] = d.vertex_ops[a + 1];
        }
    }
    const DerivedSet& span = g.derived(i - 1, i + 1);
    // Memberships of the three levels in the span.
    FinMap top_member = compose_map(g.adjacents()[i - 1].left, span.mid_maps[0]);
    FinMap mid_member = compose_map(g.adjacents()[i - 1].right, span.mid_maps[0]);
    FinMap bot_member = compose_map(g.adjacents()[i].right, span.mid_maps[1]);
    std::vector<Op>& merged = out.vertex_ops[i - 1];
    merged.resize(span.size);
    for (std::size_t q = 1; q <= span.size; ++q) {
        std::vector<std::size_t> lv0 = preimage(top_member, q);
        std::vector<std::size_t> lv1 = preimage(mid_member, q);
        std::vector<std::size_t> lv2 = preimage(bot_member, q);
        std::vector<std::size_t> m0 = preimage(span.mid_maps[0], q);
        std::vector<std::size_t> m1 = preimage(span.mid_maps[1], q);
        auto restrict_targets = [](const FinMap& leg, const std::vector<std::size_t>& elems,
                                   const std::vector<std::size_t>& mids) {
            std::vector<std::size_t> t;
            t.reserve(elems.size());
            for (std::size_t e : elems) {
                auto it = std::lower_bound(mids.begin(), mids.end(), leg(e));
                t.push_back(static_cast<std::size_t>(it - mids.begin()) + 1);
            }
            const std::size_t dom = t.size();
            return FinMap(dom, mids.size(), std::move(t));
        };
        LevelGraph part(
            {lv0.size(), lv1.size(), lv2.size()},
            {LayerCospan{restrict_targets(g.adjacents()[i - 1].left, lv0, m0),
                         restrict_targets(g.adjacents()[i - 1].right, lv1, m0)},
             LayerCospan{restrict_targets(g.adjacents()[i].left, lv1, m1),
                         restrict_targets(g.adjacents()[i].right, lv2, m1)}});
        Decoration piece;
        piece.graph = std::move(part);
        piece.level_colors.resize(3);
        for (std::size_t x : lv0) piece.level_colors[0].push_back(d.level_colors[i - 1][x - 1]);
        for (std::size_t x : lv1) piece.level_colors[1].push_back(d.level_colors[i][x - 1]);
        for (std::size_t x : lv2) piece.level_colors[2].push_back(d.level_colors[i + 1][x - 1]);
        piece.vertex_ops.resize(2);
        for (std::size_t v : m0) piece.vertex_ops[0].push_back(d.vertex_ops[i - 1][v - 1]);
        for (std::size_t v : m1) piece.vertex_ops[1].push_back(d.vertex_ops[i][v - 1]);
        merged[q - 1] = p.compose2(piece);
    }
    return out;
}

Decoration decoration_degeneracy(const Decoration& d, std::size_t j, const Properad& p) {
    const LevelGraph& g = d.graph;
    const std::size_t n = g.height();
    if (j > n) {
        throw StructureError("degeneracy index " + std::to_string(j) + " outside height " +
                             std::to_string(n));
    }
    Decoration out;
    out.graph = degeneracy(g, j);
    out.level_colors = d.level_colors;
    out.level_colors.insert(out.level_colors.begin() + static_cast<std::ptrdiff_t>(j),
                            d.level_colors[j]);
    out.vertex_ops.resize(n + 1);
    for (std::size_t a = 0; a <= n; ++a) {
        if (a < j) {
            out.vertex_ops[a] = d.vertex_ops[a];
        } else if (a == j) {
            out.vertex_ops[a].reserve(d.level_colors[j].size());
            for (Color c : d.level_colors[j]) out.vertex_ops[a].push_back(p.identity(c));
        } else {
            out.vertex_ops[a] = d.vertex_ops[a - 1];
        }
    }
    return out;
}

void require_compose2_input(const Decoration& d) {
    if (d.graph.height() != 2) {
        throw StructureError("compose2 expects a height-2 decoration");
    }
    if (d.level_colors.size() != 3 || d.vertex_ops.size() != 2) {
        throw StructureError("decoration layers do not match its graph");
    }
    for (std::size_t i = 0; i <= 2; ++i) {
        if (d.level_colors[i].size() != d.graph.level_size(i)) {
            throw StructureError("decoration coloring does not match level sizes");
        }
    }
    for (std::size_t a = 0; a < 2; ++a) {
        if (d.vertex_ops[a].size() != d.graph.middle_size(a)) {
            throw StructureError("decoration operations do not match middle sizes");
        }
    }
    if (d.graph.derived(0, 2).size != 1) {
        throw StructureError("compose2 expects a connected decoration");
    }
}

namespace {

class TerminalProperad final : public Properad {
public:
    explicit TerminalProperad(std::size_t k) : k_(k) {}

    std::vector<Color> colors() const override {
        std::vector<Color> c(k_);
        for (std::size_t i = 0; i < k_; ++i) c[i] = i + 1;
        return c;
    }

    std::vector<Op> ops(const Word& inputs, const Word& outputs, std::size_t) const override {
        if (!words_ok(inputs, outputs)) return {};
        return {Op{inputs, outputs, 0}};
    }

    bool has_op(const Op& p) const override {
        return words_ok(p.inputs, p.outputs) && p.tag == 0;
    }

    Op identity(Color c) const override {
        if (c < 1 || c > k_) throw StructureError("color outside palette");
        return Op{{c}, {c}, 0};
    }

    Op compose2(const Decoration& d) const override {
        require_compose2_input(d);
        return Op{d.level_colors[0], d.level_colors[2], 0};
    }

private:
    bool words_ok(const Word& a, const Word& b) const {
        for (Color c : a) {
            if (c < 1 || c > k_) return false;
        }
        for (Color c : b) {
            if (c < 1 || c > k_) return false;
        }
        return true;
    }

    std::size_t k_;
};

class DiscreteProperad final : public Properad {
public:
    explicit DiscreteProperad(std::size_t k) : k_(k) {}

    std::vector<Color> colors() const override {
        std::vector<Color> c(k_);
        for (std::size_t i = 0; i < k_; ++i) c[i] = i + 1;
        return c;
    }

    std::vector<Op> ops(const Word& inputs, const Word& outputs, std::size_t) const override {
        if (inputs.size() != 1 || outputs != inputs) return {};
        if (inputs[0] < 1 || inputs[0] > k_) return {};
        return {Op{inputs, outputs, 0}};
    }

    bool has_op(const Op& p) const override {
        return p.inputs.size() == 1 && p.outputs == p.inputs && p.tag == 0 &&
               p.inputs[0] >= 1 && p.inputs[0] <= k_;
    }

    Op identity(Color c) const override {
        if (c < 1 || c > k_) throw StructureError("color outside palette");
        return Op{{c}, {c}, 0};
    }

    Op compose2(const Decoration& d) const override {
        require_compose2_input(d);
        // Every vertex is unary, so a connected piece is a chain with one
        // bottom and one top element of the same color.
        if (d.level_colors[0].size() != 1 || d.level_colors[2].size() != 1) {
            throw StructureError("discrete composition expects a unary chain");
        }
        return identity(d.level_colors[0][0]);
    }

private:
    std::size_t k_;
};

class WeightedProperad final : public Properad {
public:
    explicit WeightedProperad(MonoidTable table) : table_(std::move(table)) {
        const std::size_t m = table_.labels.size();
        if (m == 0) throw StructureError("weight monoid needs at least one element");
        if (table_.sum.size() != m) throw StructureError("weight grid is not square");
        for (const auto& row : table_.sum) {
            if (row.size() != m) throw StructureError("weight grid is not square");
            for (std::size_t v : row) {
                if (v >= m) throw StructureError("weight grid entry outside the element list");
            }
        }
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) {
                if (table_.sum[a][b] != table_.sum[b][a]) {
                    throw StructureError("weight monoid must be commutative");
                }
                for (std::size_t c = 0; c < m; ++c) {
                    if (table_.sum[table_.sum[a][b]][c] != table_.sum[a][table_.sum[b][c]]) {
                        throw StructureError("weight monoid must be associative");
                    }
                }
            }
        }
        bool unit_found = false;
        for (std::size_t e = 0; e < m && !unit_found; ++e) {
            bool ok = true;
            for (std::size_t x = 0; x < m; ++x) ok = ok && table_.sum[e][x] == x;
            if (ok) {
                unit_ = e;
                unit_found = true;
            }
        }
        if (!unit_found) throw StructureError("weight monoid has no unit");
    }

    std::vector<Color> colors() const override { return {1}; }

    std::vector<Op> ops(const Word& inputs, const Word& outputs, std::size_t) const override {
        for (Color c : inputs) {
            if (c != 1) return {};
        }
        for (Color c : outputs) {
            if (c != 1) return {};
        }
        std::vector<Op> out;
        out.reserve(table_.labels.size());
        for (std::size_t e = 0; e < table_.labels.size(); ++e) {
            out.push_back(Op{inputs, outputs, e});
        }
        return out;
    }

    bool has_op(const Op& p) const override {
        if (p.tag >= table_.labels.size()) return false;
        for (Color c : p.inputs) {
            if (c != 1) return false;
        }
        for (Color c : p.outputs) {
            if (c != 1) return false;
        }
        return true;
    }

    Op identity(Color c) const override {
        if (c != 1) throw StructureError("the weighted properad has one color");
        return Op{{1}, {1}, unit_};
    }

    Op compose2(const Decoration& d) const override {
        require_compose2_input(d);
        std::size_t total = unit_;
        for (const std::vector<Op>& layer : d.vertex_ops) {
            for (const Op& op : layer) {
                if (op.tag >= table_.labels.size()) {
                    throw StructureError("vertex weight outside the monoid");
                }
                total = table_.sum[total][op.tag];
            }
        }
        return Op{d.level_colors[0], d.level_colors[2], total};
    }

    std::string label(const Op& p) const override {
        if (p.tag < table_.labels.size()) return table_.labels[p.tag];
        return Properad::label(p);
    }

private:
    MonoidTable table_;
    std::size_t unit_ = 0;
};

}  // namespace

std::shared_ptr<const Properad> terminal_properad(std::size_t k) {
    return std::make_shared<TerminalProperad>(k);
}

std::shared_ptr<const Properad> discrete_properad(std::size_t k) {
    return std::make_shared<DiscreteProperad>(k);
}

std::shared_ptr<const Properad> weighted_properad(const MonoidTable& table) {
    return std::make_shared<WeightedProperad>(table);
}

MonoidTable cyclic_table(std::size_t k) {
    if (k == 0) throw StructureError("cyclic monoid needs at least one element");
    MonoidTable t;
    t.labels.resize(k);
    t.sum.assign(k, std::vector<std::size_t>(k));
    for (std::size_t a = 0; a < k; ++a) {
        t.labels[a] = std::to_string(a);
        for (std::size_t b = 0; b < k; ++b) t.sum[a][b] = (a + b) % k;
    }
    return t;
}

MonoidTable saturating_table(std::size_t cap) {
    MonoidTable t;
    t.labels.resize(cap + 1);
    t.sum.assign(cap + 1, std::vector<std::size_t>(cap + 1));
    for (std::size_t a = 0; a <= cap; ++a) {
        t.labels[a] = std::to_string(a);
        for (std::size_t b = 0; b <= cap; ++b) t.sum[a][b] = std::min(a + b, cap);
    }
    return t;
}

MonoidTable parse_monoid_table(const std::string& text) {
    detail::TokenCursor cur(text);
    std::size_t m = cur.next_number();
    if (m == 0) cur.fail("a monoid needs at least one element");
    MonoidTable t;
    t.labels.reserve(m);
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < m; ++i) {
        detail::Token tok = cur.next();
        if (index.count(tok.text)) {
            throw ParseError("repeated element label '" + tok.text + "'", tok.line, tok.column);
        }
        index[tok.text] = i;
        t.labels.push_back(tok.text);
    }
    t.sum.assign(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            detail::Token tok = cur.next();
            auto it = index.find(tok.text);
            if (it == index.end()) {
                throw ParseError("unknown element label '" + tok.text + "'", tok.line,
                                 tok.column);
            }
            t.sum[a][b] = it->second;
        }
    }
    cur.expect_end();
    return t;
}

}  // namespace propcat
