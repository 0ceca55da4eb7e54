#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bsc/permgroup.hpp"

namespace bsc {

/// Undirected multigraph. adj is symmetric; adj(i, i) counts loops at i.
struct Graph {
    Eigen::MatrixXi adj;

    Eigen::Index n() const { return adj.rows(); }
    /// Loops contribute 2.
    int degree(Eigen::Index i) const { return adj.row(i).sum() + adj(i, i); }
    bool has_loops() const { return adj.diagonal().any(); }
    bool is_simple() const { return !has_loops() && (adj.array() <= 1).all(); }

    bool operator==(const Graph& o) const { return adj == o.adj; }
};

/// Bipartite multigraph between n_in inputs and n_out outputs.
struct BipartiteGraph {
    Eigen::MatrixXi inc;

    Eigen::Index n_in() const { return inc.rows(); }
    Eigen::Index n_out() const { return inc.cols(); }
    int input_degree(Eigen::Index i) const { return inc.row(i).sum(); }
    int output_degree(Eigen::Index j) const { return inc.col(j).sum(); }

    BipartiteGraph transposed() const { return {inc.transpose()}; }
    BipartiteGraph simple() const { return {(inc.array() > 0).cast<int>().matrix()}; }

    bool operator==(const BipartiteGraph& o) const { return inc == o.inc; }
};

/// Element indices of the given permutations in `group`; throws if one is missing.
std::vector<std::size_t> element_indices(const FiniteGroup& group, std::span<const Permutation> elems);

/// X(G, S): one undirected edge {g, sg} for every g and every s in the multiset S.
Graph cayley_graph(const FiniteGroup& group, std::span<const std::size_t> connection);

/// X(G, H; S) on the right cosets of H: Hg1 ~ Hg2 iff g2 g1^-1 lies in HSH or
/// (HSH)^-1. Simple 0/1 adjacency; a coset carries one loop when e is in HSH.
Graph coset_graph(const FiniteGroup& group, const FiniteGroup& sub, std::span<const std::size_t> connection);

/// C(G, L, N; S) with the edge multiset {{Lg, Nsg} : g in G, s in S}.
///
/// inc(Lg, Nh) counts the pairs (g', s) with g' in Lg and s g' in Nh, so every
/// input has degree |L||S|, every output |N||S|, and right multiplication by G
/// preserves multiplicities. With simple = true entries are collapsed to 0/1.
BipartiteGraph bicoset_graph(const FiniteGroup& group, const FiniteGroup& left, const FiniteGroup& right,
                             std::span<const std::size_t> connection, bool simple = false);

/// The induced permutations of [G:L] and [G:N] under right multiplication by x.
std::pair<Permutation, Permutation> bicoset_right_action(const FiniteGroup& group, const FiniteGroup& left,
                                                         const FiniteGroup& right, std::size_t x);

/// Incidence A + I of a simple graph.
BipartiteGraph extended_double_cover(const Graph& g);

/// Points (pairs of a 6-set) versus lines (perfect matchings of the 6-set) of the
/// generalized quadrangle of order (2,2), each side listed lexicographically.
BipartiteGraph gq22_incidence();

struct Components {
    std::size_t count = 0;
    std::vector<std::size_t> label;  // for bipartite graphs: inputs first, then outputs
};

Components connected_components(const Graph& g);
Components connected_components(const BipartiteGraph& g);

/// Whether the given elements generate the whole group.
bool generates(const FiniteGroup& group, std::span<const std::size_t> elems);

/// Indices of s^-1 t for all ordered pairs (s, t) of the multiset.
std::vector<std::size_t> quotient_set(const FiniteGroup& group, std::span<const std::size_t> connection);

/// Length of a shortest cycle in the simple graph underlying the bipartite
/// graph, or 0 when it is a forest.
std::size_t girth(const BipartiteGraph& g);

/// Largest eccentricity of the simple graph underlying a connected bipartite graph.
std::size_t diameter(const BipartiteGraph& g);

namespace graphs {

Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges);

}  // namespace graphs

}  // namespace bsc
