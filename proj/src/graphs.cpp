#include "bsc/graphs.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace bsc {

namespace {

std::vector<std::vector<std::size_t>> neighbor_lists(const BipartiteGraph& g) {
    const auto n_in = static_cast<std::size_t>(g.n_in());
    std::vector<std::vector<std::size_t>> nb(n_in + static_cast<std::size_t>(g.n_out()));
    for (Eigen::Index i = 0; i < g.n_in(); ++i)
        for (Eigen::Index j = 0; j < g.n_out(); ++j)
            if (g.inc(i, j) > 0) {
                nb[i].push_back(n_in + j);
                nb[n_in + j].push_back(i);
            }
    return nb;
}

std::vector<std::vector<std::size_t>> neighbor_lists(const Graph& g) {
    std::vector<std::vector<std::size_t>> nb(g.n());
    for (Eigen::Index i = 0; i < g.n(); ++i)
        for (Eigen::Index j = 0; j < g.n(); ++j)
            if (i != j && g.adj(i, j) > 0) nb[i].push_back(j);
    return nb;
}

Components label_components(const std::vector<std::vector<std::size_t>>& nb) {
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    Components out;
    out.label.assign(nb.size(), unset);
    for (std::size_t s = 0; s < nb.size(); ++s) {
        if (out.label[s] != unset) continue;
        std::deque<std::size_t> queue{s};
        out.label[s] = out.count;
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            for (auto w : nb[u])
                if (out.label[w] == unset) {
                    out.label[w] = out.count;
                    queue.push_back(w);
                }
        }
        ++out.count;
    }
    return out;
}

std::vector<std::size_t> bfs_distances(const std::vector<std::vector<std::size_t>>& nb, std::size_t s) {
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(nb.size(), unset);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        for (auto w : nb[u])
            if (dist[w] == unset) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

void require_subgroup(const FiniteGroup& group, const FiniteGroup& sub, const char* what) {
    if (!sub.is_subgroup_of(group)) throw std::invalid_argument(std::string(what) + ": not a subgroup of G");
}

void require_elements(const FiniteGroup& group, std::span<const std::size_t> connection) {
    if (connection.empty()) throw std::invalid_argument("connection multiset is empty");
    for (auto s : connection)
        if (s >= group.order()) throw std::invalid_argument("connection element is not in G");
}

}  // namespace

std::vector<std::size_t> element_indices(const FiniteGroup& group, std::span<const Permutation> elems) {
    std::vector<std::size_t> out;
    out.reserve(elems.size());
    for (const auto& p : elems) {
        auto idx = group.index_of(p);
        if (!idx) throw std::invalid_argument("element is not in the group");
        out.push_back(*idx);
    }
    return out;
}

Graph cayley_graph(const FiniteGroup& group, std::span<const std::size_t> connection) {
    require_elements(group, connection);
    const auto n = static_cast<Eigen::Index>(group.order());
    Graph g{Eigen::MatrixXi::Zero(n, n)};
    for (std::size_t x = 0; x < group.order(); ++x) {
        for (auto s : connection) {
            const auto y = group.multiply(s, x);
            if (y == x) {
                g.adj(x, x) += 1;
            } else {
                g.adj(x, y) += 1;
                g.adj(y, x) += 1;
            }
        }
    }
    return g;
}

Graph coset_graph(const FiniteGroup& group, const FiniteGroup& sub, std::span<const std::size_t> connection) {
    require_subgroup(group, sub, "coset_graph");
    require_elements(group, connection);

    const auto h_idx = element_indices(group, sub.elements());
    std::vector<bool> hs(group.order(), false), hsh(group.order(), false);
    for (auto h : h_idx)
        for (auto s : connection) hs[group.multiply(h, s)] = true;
    for (std::size_t x = 0; x < group.order(); ++x) {
        if (!hs[x]) continue;
        for (auto h : h_idx) {
            const auto y = group.multiply(x, h);
            hsh[y] = true;
            hsh[group.inverse(y)] = true;
        }
    }

    const auto cosets = right_cosets(group, sub);
    const auto m = static_cast<Eigen::Index>(cosets.count());
    Graph g{Eigen::MatrixXi::Zero(m, m)};
    std::vector<std::size_t> rep_inv(cosets.count());
    for (std::size_t c = 0; c < cosets.count(); ++c) rep_inv[c] = group.inverse(cosets.representatives[c]);
    for (Eigen::Index a = 0; a < m; ++a)
        for (Eigen::Index b = a; b < m; ++b)
            if (hsh[group.multiply(cosets.representatives[b], rep_inv[a])]) {
                g.adj(a, b) = 1;
                g.adj(b, a) = 1;
            }
    return g;
}

BipartiteGraph bicoset_graph(const FiniteGroup& group, const FiniteGroup& left, const FiniteGroup& right,
                             std::span<const std::size_t> connection, bool simple) {
    require_subgroup(group, left, "bicoset_graph (L)");
    require_subgroup(group, right, "bicoset_graph (N)");
    require_elements(group, connection);

    const auto lc = right_cosets(group, left);
    const auto nc = right_cosets(group, right);
    BipartiteGraph x{Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(lc.count()),
                                           static_cast<Eigen::Index>(nc.count()))};
    for (std::size_t g = 0; g < group.order(); ++g)
        for (auto s : connection) x.inc(lc.coset_of[g], nc.coset_of[group.multiply(s, g)]) += 1;
    return simple ? x.simple() : x;
}

std::pair<Permutation, Permutation> bicoset_right_action(const FiniteGroup& group, const FiniteGroup& left,
                                                         const FiniteGroup& right, std::size_t x) {
    auto induced = [&](const CosetPartition& part) {
        std::vector<Point> im(part.count());
        for (std::size_t c = 0; c < part.count(); ++c)
            im[c] = static_cast<Point>(part.coset_of[group.multiply(part.representatives[c], x)]);
        return Permutation(std::move(im));
    };
    return {induced(right_cosets(group, left)), induced(right_cosets(group, right))};
}

BipartiteGraph extended_double_cover(const Graph& g) {
    if (!g.is_simple()) throw std::invalid_argument("extended_double_cover: graph is not simple");
    return {g.adj + Eigen::MatrixXi::Identity(g.n(), g.n())};
}

BipartiteGraph gq22_incidence() {
    std::vector<std::pair<int, int>> points;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) points.emplace_back(a, b);

    std::vector<std::vector<std::pair<int, int>>> lines;
    std::vector<std::pair<int, int>> current;
    std::vector<bool> used(6, false);
    auto extend = [&](auto&& self) -> void {
        int first = 0;
        while (first < 6 && used[first]) ++first;
        if (first == 6) {
            lines.push_back(current);
            return;
        }
        used[first] = true;
        for (int b = first + 1; b < 6; ++b) {
            if (used[b]) continue;
            used[b] = true;
            current.emplace_back(first, b);
            self(self);
            current.pop_back();
            used[b] = false;
        }
        used[first] = false;
    };
    extend(extend);

    BipartiteGraph x{Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(points.size()),
                                           static_cast<Eigen::Index>(lines.size()))};
    for (std::size_t p = 0; p < points.size(); ++p)
        for (std::size_t l = 0; l < lines.size(); ++l)
            if (std::find(lines[l].begin(), lines[l].end(), points[p]) != lines[l].end()) x.inc(p, l) = 1;
    return x;
}

Components connected_components(const Graph& g) { return label_components(neighbor_lists(g)); }

Components connected_components(const BipartiteGraph& g) { return label_components(neighbor_lists(g)); }

bool generates(const FiniteGroup& group, std::span<const std::size_t> elems) {
    std::vector<Permutation> gens;
    for (auto e : elems) gens.push_back(group.element(e));
    return closure(group.degree(), std::move(gens), group.order() + 1).order() == group.order();
}

std::vector<std::size_t> quotient_set(const FiniteGroup& group, std::span<const std::size_t> connection) {
    std::vector<std::size_t> out;
    out.reserve(connection.size() * connection.size());
    for (auto s : connection)
        for (auto t : connection) out.push_back(group.multiply(group.inverse(s), t));
    return out;
}

std::size_t girth(const BipartiteGraph& g) {
    const auto nb = neighbor_lists(g);
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::size_t best = unset;
    for (std::size_t s = 0; s < nb.size(); ++s) {
        std::vector<std::size_t> dist(nb.size(), unset), parent(nb.size(), unset);
        std::deque<std::size_t> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            for (auto w : nb[u]) {
                if (dist[w] == unset) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best == unset ? 0 : best;
}

std::size_t diameter(const BipartiteGraph& g) {
    const auto nb = neighbor_lists(g);
    std::size_t best = 0;
    for (std::size_t s = 0; s < nb.size(); ++s) {
        for (auto d : bfs_distances(nb, s)) {
            if (d == std::numeric_limits<std::size_t>::max())
                throw std::invalid_argument("diameter: graph is disconnected");
            best = std::max(best, d);
        }
    }
    return best;
}

namespace graphs {

Graph from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) {
    const auto m = static_cast<Eigen::Index>(n);
    Graph g{Eigen::MatrixXi::Zero(m, m)};
    for (auto [a, b] : edges) {
        if (a >= n || b >= n) throw std::invalid_argument("from_edges: vertex out of range");
        if (a == b) {
            g.adj(a, a) += 1;
        } else {
            g.adj(a, b) += 1;
            g.adj(b, a) += 1;
        }
    }
    return g;
}

Graph cycle(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return from_edges(n, e);
}

Graph complete(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return from_edges(n, e);
}

Graph path(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return from_edges(n, e);
}

}  // namespace graphs

}  // namespace bsc
