#include "propcat/cospan.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tokens.hpp"

namespace propcat {

NormalizedCospan normalize_with_map(const FinMap& left, const FinMap& right) {
    if (left.cod_size != right.cod_size) {
        throw StructureError("cospan legs land in different middles: " +
                             std::to_string(left.cod_size) + " vs " +
                             std::to_string(right.cod_size));
    }
    const std::size_t k = left.cod_size;
    std::vector<std::size_t> renumber(k, 0);
    std::size_t next = 0;
    for (std::size_t t : left.targets) {
        if (renumber[t - 1] == 0) renumber[t - 1] = ++next;
    }
    for (std::size_t t : right.targets) {
        if (renumber[t - 1] == 0) renumber[t - 1] = ++next;
    }
    const std::size_t touched = next;
    for (std::size_t j = 0; j < k; ++j) {
        if (renumber[j] == 0) renumber[j] = ++next;
    }
    FinMap relabel(k, k, std::move(renumber));
    Cospan c;
    c.src = left.dom_size;
    c.tgt = right.dom_size;
    c.touched = touched;
    c.closed = k - touched;
    c.left = compose_map(left, relabel);
    c.right = compose_map(right, relabel);
    return NormalizedCospan{std::move(c), std::move(relabel)};
}

Cospan normalize(const FinMap& left, const FinMap& right) {
    return normalize_with_map(left, right).cospan;
}

Cospan identity_cospan(std::size_t n) {
    Cospan c;
    c.src = n;
    c.tgt = n;
    c.touched = n;
    c.closed = 0;
    c.left = FinMap::identity(n);
    c.right = FinMap::identity(n);
    return c;
}

Cospan closed_points(std::size_t count) {
    Cospan c;
    c.touched = 0;
    c.closed = count;
    c.left = FinMap(0, count, {});
    c.right = FinMap(0, count, {});
    return c;
}

ComposedCospan compose_with_maps(const Cospan& a, const Cospan& b) {
    if (a.tgt != b.src) {
        throw StructureError("cospan endpoints do not meet: " + std::to_string(a.tgt) +
                             " vs " + std::to_string(b.src));
    }
    PushoutLegs po = pushout_span(a.right, b.left);
    FinMap raw_left = compose_map(a.left, po.from_left);
    FinMap raw_right = compose_map(b.right, po.from_right);
    NormalizedCospan n = normalize_with_map(raw_left, raw_right);
    return ComposedCospan{
        std::move(n.cospan),
        compose_map(po.from_left, n.relabel),
        compose_map(po.from_right, n.relabel),
    };
}

Cospan compose(const Cospan& a, const Cospan& b) {
    return compose_with_maps(a, b).cospan;
}

TensoredCospan tensor_with_maps(const Cospan& a, const Cospan& b) {
    const std::size_t ka = a.middle();
    const std::size_t kb = b.middle();
    FinMap into_a(ka, ka + kb, FinMap::identity(ka).targets);
    std::vector<std::size_t> shifted(kb);
    for (std::size_t i = 0; i < kb; ++i) shifted[i] = ka + i + 1;
    FinMap into_b(kb, ka + kb, std::move(shifted));
    FinMap raw_left = sum_map(a.left, b.left);
    FinMap raw_right = sum_map(a.right, b.right);
    NormalizedCospan n = normalize_with_map(raw_left, raw_right);
    return TensoredCospan{
        std::move(n.cospan),
        compose_map(into_a, n.relabel),
        compose_map(into_b, n.relabel),
    };
}

Cospan tensor(const Cospan& a, const Cospan& b) {
    return tensor_with_maps(a, b).cospan;
}

Cospan symmetry(std::size_t n, std::size_t m) {
    Cospan c;
    c.src = n + m;
    c.tgt = m + n;
    c.touched = n + m;
    c.closed = 0;
    c.left = FinMap::identity(n + m);
    // Element j of the target word m+n is wire m+j for j <= n... spelled
    // out: the first m target positions read the last m middle wires, the
    // remaining n read the first n. That is exactly block_swap(m, n).
    c.right = block_swap(m, n);
    return c;
}

bool is_reduced(const Cospan& a) { return a.closed == 0; }

bool is_connected(const Cospan& a) { return a.middle() == 1; }

ReducedClosedSplit split_reduced_closed(const Cospan& a) {
    Cospan reduced;
    reduced.src = a.src;
    reduced.tgt = a.tgt;
    reduced.touched = a.touched;
    reduced.closed = 0;
    reduced.left = FinMap(a.src, a.touched, a.left.targets);
    reduced.right = FinMap(a.tgt, a.touched, a.right.targets);
    return ReducedClosedSplit{std::move(reduced), a.closed};
}

std::vector<CospanComponent> components(const Cospan& a) {
    std::vector<CospanComponent> out;
    out.reserve(a.middle());
    for (std::size_t q = 1; q <= a.middle(); ++q) {
        CospanComponent comp;
        comp.inputs = preimage(a.left, q);
        comp.outputs = preimage(a.right, q);
        comp.part.src = comp.inputs.size();
        comp.part.tgt = comp.outputs.size();
        comp.part.touched = (q <= a.touched) ? 1 : 0;
        comp.part.closed = 1 - comp.part.touched;
        comp.part.left = FinMap::constant(comp.part.src, 1, 1);
        comp.part.right = FinMap::constant(comp.part.tgt, 1, 1);
        out.push_back(std::move(comp));
    }
    return out;
}

namespace detail {

RawCospanLegs parse_cospan_raw(TokenCursor& cur) {
    cur.expect("cospan");
    std::size_t n = cur.next_number();
    std::size_t k = cur.next_number();
    std::size_t m = cur.next_number();
    cur.expect(":");
    std::vector<std::size_t> lt;
    lt.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t t = cur.next_number();
        if (t < 1 || t > k) {
            cur.fail("left target " + std::to_string(t) + " outside middle of size " +
                     std::to_string(k));
        }
        lt.push_back(t);
    }
    cur.expect("|");
    std::vector<std::size_t> rt;
    rt.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t t = cur.next_number();
        if (t < 1 || t > k) {
            cur.fail("right target " + std::to_string(t) + " outside middle of size " +
                     std::to_string(k));
        }
        rt.push_back(t);
    }
    return RawCospanLegs{FinMap(n, k, std::move(lt)), FinMap(m, k, std::move(rt))};
}

Cospan parse_cospan_at(TokenCursor& cur) {
    RawCospanLegs raw = parse_cospan_raw(cur);
    return normalize(raw.left, raw.right);
}

}  // namespace detail

Cospan parse_cospan(const std::string& text) {
    detail::TokenCursor cur(text);
    Cospan c = detail::parse_cospan_at(cur);
    cur.expect_end();
    return c;
}

std::string print_cospan(const Cospan& a) {
    std::ostringstream os;
    os << "cospan " << a.src << ' ' << a.middle() << ' ' << a.tgt << " :";
    for (std::size_t t : a.left.targets) os << ' ' << t;
    os << " |";
    for (std::size_t t : a.right.targets) os << ' ' << t;
    return os.str();
}

std::vector<Cospan> all_cospans(std::size_t n, std::size_t m, std::size_t middle_bound) {
    std::set<Cospan> seen;
    for (std::size_t k = 0; k <= middle_bound; ++k) {
        for (const FinMap& l : all_maps(n, k)) {
            for (const FinMap& r : all_maps(m, k)) {
                seen.insert(normalize(l, r));
            }
        }
    }
    return std::vector<Cospan>(seen.begin(), seen.end());
}

}  // namespace propcat
