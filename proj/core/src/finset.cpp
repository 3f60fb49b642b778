#include "propcat/finset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace propcat {

FinMap::FinMap(std::size_t dom, std::size_t cod, std::vector<std::size_t> targets_)
    : dom_size(dom), cod_size(cod), targets(std::move(targets_)) {
    if (targets.size() != dom_size) {
        throw StructureError("finite map has " + std::to_string(targets.size()) +
                             " targets for domain of size " + std::to_string(dom_size));
    }
    for (std::size_t t : targets) {
        if (t < 1 || t > cod_size) {
            throw StructureError("finite map target " + std::to_string(t) +
                                 " outside codomain of size " + std::to_string(cod_size));
        }
    }
}

FinMap FinMap::identity(std::size_t n) {
    std::vector<std::size_t> t(n);
    std::iota(t.begin(), t.end(), std::size_t{1});
    return FinMap(n, n, std::move(t));
}

FinMap FinMap::constant(std::size_t dom, std::size_t cod, std::size_t value) {
    return FinMap(dom, cod, std::vector<std::size_t>(dom, value));
}

std::size_t FinMap::operator()(std::size_t i) const {
    if (i < 1 || i > dom_size) {
        throw StructureError("element " + std::to_string(i) +
                             " outside domain of size " + std::to_string(dom_size));
    }
    return targets[i - 1];
}

bool FinMap::is_identity() const {
    if (dom_size != cod_size) return false;
    for (std::size_t i = 0; i < dom_size; ++i) {
        if (targets[i] != i + 1) return false;
    }
    return true;
}

bool FinMap::is_bijection() const {
    if (dom_size != cod_size) return false;
    std::vector<bool> hit(cod_size, false);
    for (std::size_t t : targets) {
        if (hit[t - 1]) return false;
        hit[t - 1] = true;
    }
    return true;
}

FinMap FinMap::inverse() const {
    if (!is_bijection()) {
        throw StructureError("inverse requested for a non-bijective map");
    }
    std::vector<std::size_t> inv(dom_size);
    for (std::size_t i = 0; i < dom_size; ++i) {
        inv[targets[i] - 1] = i + 1;
    }
    return FinMap(cod_size, dom_size, std::move(inv));
}

FinMap compose_map(const FinMap& f, const FinMap& g) {
    if (f.cod_size != g.dom_size) {
        throw StructureError("composite of maps with mismatched middle: " +
                             std::to_string(f.cod_size) + " vs " +
                             std::to_string(g.dom_size));
    }
    std::vector<std::size_t> t(f.dom_size);
    for (std::size_t i = 0; i < f.dom_size; ++i) {
        t[i] = g.targets[f.targets[i] - 1];
    }
    return FinMap(f.dom_size, g.cod_size, std::move(t));
}

FinMap sum_map(const FinMap& f, const FinMap& g) {
    std::vector<std::size_t> t;
    t.reserve(f.dom_size + g.dom_size);
    for (std::size_t x : f.targets) t.push_back(x);
    for (std::size_t x : g.targets) t.push_back(x + f.cod_size);
    return FinMap(f.dom_size + g.dom_size, f.cod_size + g.cod_size, std::move(t));
}

FinMap block_swap(std::size_t n, std::size_t m) {
    std::vector<std::size_t> t;
    t.reserve(n + m);
    for (std::size_t i = 1; i <= n; ++i) t.push_back(i + m);
    for (std::size_t j = 1; j <= m; ++j) t.push_back(j);
    return FinMap(n + m, n + m, std::move(t));
}

std::vector<std::size_t> preimage(const FinMap& f, std::size_t j) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < f.dom_size; ++i) {
        if (f.targets[i] == j) out.push_back(i + 1);
    }
    return out;
}

namespace {

// Union-find over 0-based indices with path halving.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        // Keep the smaller index as root so roots are class minima.
        if (b < a) std::swap(a, b);
        parent_[b] = a;
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

PushoutLegs pushout_span(const FinMap& f, const FinMap& g) {
    if (f.dom_size != g.dom_size) {
        throw StructureError("pushout of a span with mismatched apex: " +
                             std::to_string(f.dom_size) + " vs " +
                             std::to_string(g.dom_size));
    }
    const std::size_t d = f.cod_size;
    const std::size_t e = g.cod_size;
    UnionFind uf(d + e);
    for (std::size_t b = 0; b < f.dom_size; ++b) {
        uf.unite(f.targets[b] - 1, d + g.targets[b] - 1);
    }
    // Number classes by smallest representative, D block first. Since unite
    // keeps minima as roots, scanning indices in order meets each class at
    // its smallest member first.
    std::vector<std::size_t> number(d + e, 0);
    std::size_t next = 0;
    std::vector<std::size_t> left(d), right(e);
    for (std::size_t i = 0; i < d + e; ++i) {
        std::size_t root = uf.find(i);
        if (number[root] == 0) number[root] = ++next;
        if (i < d) {
            left[i] = number[root];
        } else {
            right[i - d] = number[root];
        }
    }
    return PushoutLegs{FinMap(d, next, std::move(left)), FinMap(e, next, std::move(right))};
}

std::vector<FinMap> all_maps(std::size_t dom, std::size_t cod) {
    std::vector<FinMap> out;
    if (dom == 0) {
        out.push_back(FinMap(0, cod, {}));
        return out;
    }
    if (cod == 0) return out;  // no maps from a nonempty set into 0
    std::vector<std::size_t> t(dom, 1);
    while (true) {
        out.push_back(FinMap(dom, cod, t));
        std::size_t i = dom;
        while (i > 0 && t[i - 1] == cod) {
            t[i - 1] = 1;
            --i;
        }
        if (i == 0) break;
        ++t[i - 1];
    }
    return out;
}

std::vector<FinMap> all_permutations(std::size_t n) {
    std::vector<std::size_t> t(n);
    std::iota(t.begin(), t.end(), std::size_t{1});
    std::vector<FinMap> out;
    do {
        out.push_back(FinMap(n, n, t));
    } while (std::next_permutation(t.begin(), t.end()));
    return out;
}

}  // namespace propcat
