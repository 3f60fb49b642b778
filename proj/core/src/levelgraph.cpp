#include "propcat/levelgraph.hpp"

#include <algorithm>
#include <sstream>

#include "tokens.hpp"

namespace propcat {

LevelGraph::LevelGraph() : level_sizes_{0} {
    grid_.push_back({DerivedSet{0, FinMap::identity(0), FinMap::identity(0), {}}});
}

LevelGraph::LevelGraph(std::vector<std::size_t> level_sizes, std::vector<LayerCospan> adjacents)
    : level_sizes_(std::move(level_sizes)), adjacents_(std::move(adjacents)) {
    if (level_sizes_.empty()) {
        throw StructureError("a level graph needs at least one level");
    }
    if (adjacents_.size() + 1 != level_sizes_.size()) {
        throw StructureError("level graph with " + std::to_string(level_sizes_.size()) +
                             " levels must have " + std::to_string(level_sizes_.size() - 1) +
                             " layers, got " + std::to_string(adjacents_.size()));
    }
    const std::size_t n = height();
    for (std::size_t a = 0; a < n; ++a) {
        const LayerCospan& lay = adjacents_[a];
        if (lay.left.dom_size != level_sizes_[a]) {
            throw StructureError("layer " + std::to_string(a + 1) + " left leg domain " +
                                 std::to_string(lay.left.dom_size) + " != level size " +
                                 std::to_string(level_sizes_[a]));
        }
        if (lay.right.dom_size != level_sizes_[a + 1]) {
            throw StructureError("layer " + std::to_string(a + 1) + " right leg domain " +
                                 std::to_string(lay.right.dom_size) + " != level size " +
                                 std::to_string(level_sizes_[a + 1]));
        }
        if (lay.left.cod_size != lay.right.cod_size) {
            throw StructureError("layer " + std::to_string(a + 1) +
                                 " legs land in different middles");
        }
    }
    // Build the derived grid row by row, folding each layer into the
    // accumulated set by pushout and carrying the middle memberships along.
    grid_.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        grid_[i].push_back(DerivedSet{level_sizes_[i], FinMap::identity(level_sizes_[i]),
                                      FinMap::identity(level_sizes_[i]),
                                      {}});
        for (std::size_t j = i + 1; j <= n; ++j) {
            const LayerCospan& lay = adjacents_[j - 1];
            if (j == i + 1) {
                // The one-layer derived set is the stored adjacent itself, so
                // that reindexing reproduces layers verbatim.
                grid_[i].push_back(DerivedSet{lay.left.cod_size, lay.left, lay.right,
                                              {FinMap::identity(lay.left.cod_size)}});
                continue;
            }
            const DerivedSet& prev = grid_[i][j - 1 - i];
            PushoutLegs po = pushout_span(prev.from_bottom, lay.left);
            DerivedSet d;
            d.size = po.from_left.cod_size;
            d.from_top = compose_map(prev.from_top, po.from_left);
            d.from_bottom = compose_map(lay.right, po.from_right);
            d.mid_maps.reserve(j - i);
            for (const FinMap& m : prev.mid_maps) {
                d.mid_maps.push_back(compose_map(m, po.from_left));
            }
            d.mid_maps.push_back(po.from_right);
            grid_[i].push_back(std::move(d));
        }
    }
}

std::size_t LevelGraph::level_size(std::size_t i) const {
    if (i >= level_sizes_.size()) {
        throw StructureError("level " + std::to_string(i) + " outside graph of height " +
                             std::to_string(height()));
    }
    return level_sizes_[i];
}

std::size_t LevelGraph::middle_size(std::size_t a) const {
    if (a >= adjacents_.size()) {
        throw StructureError("layer " + std::to_string(a) + " outside graph of height " +
                             std::to_string(height()));
    }
    return adjacents_[a].left.cod_size;
}

const DerivedSet& LevelGraph::derived(std::size_t i, std::size_t j) const {
    if (j > height() || i > j) {
        throw StructureError("derived set between levels " + std::to_string(i) + " and " +
                             std::to_string(j) + " outside graph of height " +
                             std::to_string(height()));
    }
    return grid_[i][j - i];
}

bool LevelGraph::operator==(const LevelGraph& other) const {
    return level_sizes_ == other.level_sizes_ && adjacents_ == other.adjacents_;
}

namespace {

// Map the derived set between levels p <= q into the one between i <= j
// (with i <= p, q <= j), using the stored memberships of the wider set.
FinMap embed_derived(const LevelGraph& g, std::size_t p, std::size_t q, std::size_t i,
                     std::size_t j) {
    const DerivedSet& small = g.derived(p, q);
    const DerivedSet& big = g.derived(i, j);
    if (i == j) {
        // Then p == q == i and both sets are the level itself.
        return FinMap::identity(big.size);
    }
    std::vector<std::size_t> t(small.size, 0);
    if (p == q) {
        // The small set is level p; route each element through an adjacent
        // middle it touches.
        for (std::size_t s = 1; s <= small.size; ++s) {
            if (p < j) {
                t[s - 1] = big.mid_maps[p - i](g.adjacents()[p].left(s));
            } else {
                t[s - 1] = big.mid_maps[p - 1 - i](g.adjacents()[p - 1].right(s));
            }
        }
    } else {
        // Every class of a layer span contains a middle element; find one
        // representative and push it through the wider memberships.
        for (std::size_t s = 1; s <= small.size; ++s) {
            bool found = false;
            for (std::size_t tt = 0; tt < small.mid_maps.size() && !found; ++tt) {
                const FinMap& mm = small.mid_maps[tt];
                for (std::size_t m = 1; m <= mm.dom_size; ++m) {
                    if (mm(m) == s) {
                        t[s - 1] = big.mid_maps[p - i + tt](m);
                        found = true;
                        break;
                    }
                }
            }
            if (!found) {
                throw StructureError("derived-set class without middle representative");
            }
        }
    }
    return FinMap(small.size, big.size, std::move(t));
}

}  // namespace

LevelGraph simplicial_map(const LevelGraph& g, const std::vector<std::size_t>& alpha) {
    if (alpha.empty()) {
        throw StructureError("simplicial reindexing needs at least one level");
    }
    for (std::size_t a = 0; a < alpha.size(); ++a) {
        if (alpha[a] > g.height()) {
            throw StructureError("reindexing value " + std::to_string(alpha[a]) +
                                 " outside graph of height " + std::to_string(g.height()));
        }
        if (a > 0 && alpha[a - 1] > alpha[a]) {
            throw StructureError("reindexing map must be monotone");
        }
    }
    const std::size_t m = alpha.size() - 1;
    LevelGraph out;
    out.level_sizes_.assign(m + 1, 0);
    for (std::size_t a = 0; a <= m; ++a) {
        out.level_sizes_[a] = g.level_size(alpha[a]);
    }
    out.adjacents_.clear();
    out.adjacents_.reserve(m);
    for (std::size_t a = 0; a < m; ++a) {
        const DerivedSet& d = g.derived(alpha[a], alpha[a + 1]);
        out.adjacents_.push_back(LayerCospan{d.from_top, d.from_bottom});
    }
    out.grid_.assign(m + 1, {});
    for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = i; j <= m; ++j) {
            const DerivedSet& src = g.derived(alpha[i], alpha[j]);
            DerivedSet d;
            d.size = src.size;
            d.from_top = src.from_top;
            d.from_bottom = src.from_bottom;
            d.mid_maps.reserve(j - i);
            for (std::size_t t = 0; t < j - i; ++t) {
                d.mid_maps.push_back(
                    embed_derived(g, alpha[i + t], alpha[i + t + 1], alpha[i], alpha[j]));
            }
            out.grid_[i].push_back(std::move(d));
        }
    }
    return out;
}

LevelGraph face(const LevelGraph& g, std::size_t i) {
    const std::size_t n = g.height();
    if (n == 0) {
        throw StructureError("a height-0 graph has no faces");
    }
    if (i > n) {
        throw StructureError("face index " + std::to_string(i) + " outside height " +
                             std::to_string(n));
    }
    std::vector<std::size_t> alpha(n);
    for (std::size_t a = 0; a < n; ++a) {
        alpha[a] = (a < i) ? a : a + 1;
    }
    return simplicial_map(g, alpha);
}

LevelGraph degeneracy(const LevelGraph& g, std::size_t j) {
    const std::size_t n = g.height();
    if (j > n) {
        throw StructureError("degeneracy index " + std::to_string(j) + " outside height " +
                             std::to_string(n));
    }
    std::vector<std::size_t> alpha(n + 2);
    for (std::size_t a = 0; a <= n + 1; ++a) {
        alpha[a] = (a <= j) ? a : a - 1;
    }
    return simplicial_map(g, alpha);
}

namespace {

std::size_t rank_of(const std::vector<std::size_t>& sorted, std::size_t value) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
    if (it == sorted.end() || *it != value) {
        throw StructureError("element missing from its own component");
    }
    return static_cast<std::size_t>(it - sorted.begin()) + 1;
}

}  // namespace

std::vector<GraphComponent> components(const LevelGraph& g) {
    const std::size_t n = g.height();
    const DerivedSet& total = g.derived(0, n);
    // Membership of every level element in the total span.
    std::vector<FinMap> level_member(n + 1);
    for (std::size_t t = 0; t <= n; ++t) {
        if (n == 0) {
            level_member[t] = FinMap::identity(g.level_size(0));
        } else if (t < n) {
            level_member[t] = compose_map(g.adjacents()[t].left, total.mid_maps[t]);
        } else {
            level_member[t] = compose_map(g.adjacents()[n - 1].right, total.mid_maps[n - 1]);
        }
    }
    std::vector<GraphComponent> out;
    out.reserve(total.size);
    for (std::size_t q = 1; q <= total.size; ++q) {
        GraphComponent comp;
        comp.level_positions.resize(n + 1);
        comp.middle_positions.resize(n);
        std::vector<std::size_t> sizes(n + 1);
        for (std::size_t t = 0; t <= n; ++t) {
            comp.level_positions[t] = preimage(level_member[t], q);
            sizes[t] = comp.level_positions[t].size();
        }
        std::vector<LayerCospan> layers;
        layers.reserve(n);
        for (std::size_t a = 0; a < n; ++a) {
            comp.middle_positions[a] = preimage(total.mid_maps[a], q);
            const std::vector<std::size_t>& mids = comp.middle_positions[a];
            std::vector<std::size_t> lt, rt;
            lt.reserve(comp.level_positions[a].size());
            for (std::size_t x : comp.level_positions[a]) {
                lt.push_back(rank_of(mids, g.adjacents()[a].left(x)));
            }
            rt.reserve(comp.level_positions[a + 1].size());
            for (std::size_t y : comp.level_positions[a + 1]) {
                rt.push_back(rank_of(mids, g.adjacents()[a].right(y)));
            }
            const std::size_t lts = lt.size();
            const std::size_t rts = rt.size();
            layers.push_back(LayerCospan{FinMap(lts, mids.size(), std::move(lt)),
                                         FinMap(rts, mids.size(), std::move(rt))});
        }
        comp.part = LevelGraph(std::move(sizes), std::move(layers));
        out.push_back(std::move(comp));
    }
    return out;
}

std::optional<CongruenceWitness> congruent(const LevelGraph& g, const LevelGraph& h) {
    if (g.level_sizes() != h.level_sizes()) return std::nullopt;
    const std::size_t n = g.height();
    CongruenceWitness witness;
    witness.reserve(n);
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t mg = g.middle_size(a);
        const std::size_t mh = h.middle_size(a);
        if (mg != mh) return std::nullopt;
        std::vector<std::size_t> phi(mg, 0);
        std::vector<bool> used(mh, false);
        auto enforce = [&](std::size_t from, std::size_t to) -> bool {
            if (phi[from - 1] == 0) {
                if (used[to - 1]) return false;  // both legs must agree elementwise
                phi[from - 1] = to;
                used[to - 1] = true;
                return true;
            }
            return phi[from - 1] == to;
        };
        const LayerCospan& lg = g.adjacents()[a];
        const LayerCospan& lh = h.adjacents()[a];
        for (std::size_t x = 1; x <= g.level_size(a); ++x) {
            if (!enforce(lg.left(x), lh.left(x))) return std::nullopt;
        }
        for (std::size_t y = 1; y <= g.level_size(a + 1); ++y) {
            if (!enforce(lg.right(y), lh.right(y))) return std::nullopt;
        }
        // Pair up the untouched middle elements in increasing order.
        std::vector<std::size_t> free_h;
        for (std::size_t v = 1; v <= mh; ++v) {
            if (!used[v - 1]) free_h.push_back(v);
        }
        std::size_t next_free = 0;
        for (std::size_t v = 1; v <= mg; ++v) {
            if (phi[v - 1] == 0) phi[v - 1] = free_h[next_free++];
        }
        witness.push_back(FinMap(mg, mh, std::move(phi)));
    }
    return witness;
}

LevelGraph tensor_graphs(const LevelGraph& g, const LevelGraph& h) {
    if (g.height() != h.height()) {
        throw StructureError("blockwise sum of graphs with different heights: " +
                             std::to_string(g.height()) + " vs " + std::to_string(h.height()));
    }
    const std::size_t n = g.height();
    std::vector<std::size_t> sizes(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        sizes[i] = g.level_size(i) + h.level_size(i);
    }
    std::vector<LayerCospan> layers;
    layers.reserve(n);
    for (std::size_t a = 0; a < n; ++a) {
        layers.push_back(LayerCospan{sum_map(g.adjacents()[a].left, h.adjacents()[a].left),
                                     sum_map(g.adjacents()[a].right, h.adjacents()[a].right)});
    }
    return LevelGraph(std::move(sizes), std::move(layers));
}

TwistedSum twisted_sum(const LevelGraph& g, const LevelGraph& h, std::size_t t) {
    if (g.height() != h.height()) {
        throw StructureError("twisted sum of graphs with different heights");
    }
    const std::size_t n = g.height();
    if (t > n + 1) {
        throw StructureError("twist position " + std::to_string(t) + " outside 0.." +
                             std::to_string(n + 1));
    }
    auto level_flipped = [&](std::size_t i) { return i >= t; };
    auto middle_flipped = [&](std::size_t a) { return a >= t; };

    TwistedSum out;
    std::vector<std::size_t> sizes(n + 1);
    out.level_iso.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const std::size_t gs = g.level_size(i), hs = h.level_size(i);
        sizes[i] = gs + hs;
        out.level_iso.push_back(level_flipped(i) ? block_swap(hs, gs)
                                                 : FinMap::identity(gs + hs));
    }
    std::vector<LayerCospan> layers;
    layers.reserve(n);
    out.middle_iso.reserve(n);
    for (std::size_t a = 0; a < n; ++a) {
        const LayerCospan& lg = g.adjacents()[a];
        const LayerCospan& lh = h.adjacents()[a];
        const std::size_t gm = lg.left.cod_size, hm = lh.left.cod_size;
        LayerCospan lay;
        // The left leg's level and the middle share a flip state, so the
        // blocks line up either way.
        lay.left = middle_flipped(a) ? sum_map(lh.left, lg.left) : sum_map(lg.left, lh.left);
        if (!level_flipped(a + 1)) {
            lay.right = sum_map(lg.right, lh.right);
        } else if (middle_flipped(a)) {
            lay.right = sum_map(lh.right, lg.right);
        } else {
            // Exactly at the seam (a = t-1): the level below is flipped to
            // h-then-g while the middle keeps g-then-h order.
            const std::size_t ghs = h.level_size(a + 1);
            std::vector<std::size_t> targets;
            targets.reserve(ghs + g.level_size(a + 1));
            for (std::size_t e = 1; e <= ghs; ++e) targets.push_back(gm + lh.right(e));
            for (std::size_t e = 1; e <= g.level_size(a + 1); ++e) targets.push_back(lg.right(e));
            const std::size_t dom = targets.size();
            lay.right = FinMap(dom, gm + hm, std::move(targets));
        }
        layers.push_back(std::move(lay));
        out.middle_iso.push_back(middle_flipped(a) ? block_swap(hm, gm)
                                                   : FinMap::identity(gm + hm));
    }
    out.graph = LevelGraph(std::move(sizes), std::move(layers));
    return out;
}

std::vector<LevelGraph> segal_pieces(const LevelGraph& g) {
    std::vector<LevelGraph> out;
    out.reserve(g.height());
    for (std::size_t a = 0; a < g.height(); ++a) {
        out.push_back(LevelGraph({g.level_size(a), g.level_size(a + 1)}, {g.adjacents()[a]}));
    }
    return out;
}

LevelGraph segal_glue(const std::vector<LevelGraph>& pieces) {
    if (pieces.empty()) {
        throw StructureError("nothing to glue");
    }
    std::vector<std::size_t> sizes;
    std::vector<LayerCospan> layers;
    sizes.push_back(pieces[0].level_size(0));
    for (std::size_t a = 0; a < pieces.size(); ++a) {
        if (pieces[a].height() != 1) {
            throw StructureError("glue expects height-1 pieces");
        }
        if (pieces[a].level_size(0) != sizes.back()) {
            throw StructureError("glued pieces disagree on a shared level");
        }
        sizes.push_back(pieces[a].level_size(1));
        layers.push_back(pieces[a].adjacents()[0]);
    }
    return LevelGraph(std::move(sizes), std::move(layers));
}

LevelGraph from_cospan(const Cospan& c) {
    return LevelGraph({c.src, c.tgt}, {LayerCospan{c.left, c.right}});
}

Cospan to_cospan(const LevelGraph& g) {
    if (g.height() != 1) {
        throw StructureError("only height-1 graphs are cospans");
    }
    return normalize(g.adjacents()[0].left, g.adjacents()[0].right);
}

LevelGraph parse_graph(const std::string& text) {
    detail::TokenCursor cur(text);
    cur.expect("graph");
    if (cur.at_end() || cur.peek().text.rfind("h=", 0) != 0) {
        cur.fail("expected h=<height>");
    }
    detail::Token htok = cur.next();
    std::string digits = htok.text.substr(2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("expected a number after h=", htok.line, htok.column);
    }
    std::size_t n = 0;
    for (char c : digits) n = n * 10 + static_cast<std::size_t>(c - '0');

    auto skip_semis = [&cur]() {
        while (cur.peek_is(";")) cur.expect(";");
    };

    skip_semis();
    cur.expect("levels");
    std::vector<std::size_t> sizes(n + 1);
    for (std::size_t i = 0; i <= n; ++i) sizes[i] = cur.next_number();

    std::vector<LayerCospan> layers;
    layers.reserve(n);
    for (std::size_t a = 1; a <= n; ++a) {
        skip_semis();
        cur.expect("adj" + std::to_string(a));
        cur.expect(":");
        std::vector<std::size_t> lt, rt;
        lt.reserve(sizes[a - 1]);
        for (std::size_t i = 0; i < sizes[a - 1]; ++i) {
            std::size_t v = cur.next_number();
            if (v == 0) cur.fail("middle targets are 1-based");
            lt.push_back(v);
        }
        cur.expect("|");
        rt.reserve(sizes[a]);
        for (std::size_t i = 0; i < sizes[a]; ++i) {
            std::size_t v = cur.next_number();
            if (v == 0) cur.fail("middle targets are 1-based");
            rt.push_back(v);
        }
        std::size_t k = 0;
        for (std::size_t v : lt) k = std::max(k, v);
        for (std::size_t v : rt) k = std::max(k, v);
        const std::size_t lts = lt.size();
        const std::size_t rts = rt.size();
        layers.push_back(LayerCospan{FinMap(lts, k, std::move(lt)), FinMap(rts, k, std::move(rt))});
    }
    skip_semis();
    cur.expect_end();
    return LevelGraph(std::move(sizes), std::move(layers));
}

std::string print_graph(const LevelGraph& g) {
    const std::size_t n = g.height();
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t k = 0;
        for (std::size_t v : g.adjacents()[a].left.targets) k = std::max(k, v);
        for (std::size_t v : g.adjacents()[a].right.targets) k = std::max(k, v);
        if (k != g.middle_size(a)) {
            throw StructureError("layer " + std::to_string(a + 1) +
                                 " has a middle element beyond every target; the text "
                                 "format cannot carry it");
        }
    }
    std::ostringstream os;
    os << "graph h=" << n << " ; levels";
    for (std::size_t s : g.level_sizes()) os << ' ' << s;
    for (std::size_t a = 0; a < n; ++a) {
        os << " ; adj" << (a + 1) << " :";
        for (std::size_t v : g.adjacents()[a].left.targets) os << ' ' << v;
        os << " |";
        for (std::size_t v : g.adjacents()[a].right.targets) os << ' ' << v;
    }
    return os.str();
}

std::vector<LevelGraph> all_graphs(std::size_t height, std::size_t level_bound,
                                   std::size_t middle_bound) {
    std::vector<LevelGraph> out;
    std::vector<std::size_t> sizes(height + 1, 0);
    while (true) {
        // Enumerate layer choices for this level profile.
        std::vector<std::vector<LayerCospan>> options(height);
        bool feasible = true;
        for (std::size_t a = 0; a < height && feasible; ++a) {
            for (std::size_t k = 0; k <= middle_bound; ++k) {
                for (const FinMap& l : all_maps(sizes[a], k)) {
                    for (const FinMap& r : all_maps(sizes[a + 1], k)) {
                        options[a].push_back(LayerCospan{l, r});
                    }
                }
            }
            feasible = !options[a].empty();
        }
        if (feasible) {
            std::vector<std::size_t> pick(height, 0);
            while (true) {
                std::vector<LayerCospan> layers;
                layers.reserve(height);
                for (std::size_t a = 0; a < height; ++a) layers.push_back(options[a][pick[a]]);
                out.push_back(LevelGraph(sizes, std::move(layers)));
                std::size_t a = height;
                while (a > 0 && pick[a - 1] + 1 == options[a - 1].size()) {
                    pick[a - 1] = 0;
                    --a;
                }
                if (a == 0) break;
                ++pick[a - 1];
            }
        }
        std::size_t i = height + 1;
        while (i > 0 && sizes[i - 1] == level_bound) {
            sizes[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
        ++sizes[i - 1];
    }
    return out;
}

}  // namespace propcat
