#ifndef CQF_POSET_HPP
#define CQF_POSET_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cqf/combinat.hpp"

namespace cqf {

// Strict partial order on [n], stored as a dense relation: bit b of up(a) is
// set iff a <_P b.
class Poset {
public:
    Poset() = default;
    // The antichain on [n].
    explicit Poset(int n);

    // `relations` must list every strict relation (a, b) meaning a <_P b;
    // transitivity is validated, never inferred.
    static Poset from_relations(int n, const std::vector<std::pair<int, int>>& relations);
    // i <_P j iff j - i >= k
    static Poset pnk(int n, int k);
    // i <_P j iff j > bound[i-1]; bound must be weakly increasing with
    // i <= bound[i-1] <= n.
    static Poset from_upper_bounds(const std::vector<int>& bound);

    int size() const { return n_; }
    bool less(int a, int b) const { return (up_[a] >> b) & 1u; }
    bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
    std::uint32_t up_set(int a) const { return up_[a]; }
    std::uint32_t down_set(int a) const;
    std::vector<std::pair<int, int>> relations() const;
    std::string to_string() const;

    friend bool operator==(const Poset&, const Poset&) = default;
    friend auto operator<=>(const Poset&, const Poset&) = default;

private:
    int n_ = 0;
    std::array<std::uint32_t, kMaxN + 1> up_{};
};

// Simple undirected graph on [n].
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph complete(int n);
    static Graph path(int n);

    int size() const { return n_; }
    void add_edge(int a, int b);
    bool has_edge(int a, int b) const { return (adj_[a] >> b) & 1u; }
    std::uint32_t neighbors(int a) const { return adj_[a]; }
    // Edges {a, b} with a < b, lexicographic.
    std::vector<std::pair<int, int>> edges() const;
    int num_edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::array<std::uint32_t, kMaxN + 1> adj_{};
};

Graph incomparability_graph(const Poset& p);

bool is_nuio(const Poset& p);
// Every natural unit interval order on [n], ordered by its upper-bound sequence.
std::vector<Poset> enumerate_nuio(int n);
// Every labelled poset on [n] (3^{n(n-1)/2} candidates; n <= 6, 130023 posets at n = 6).
std::vector<Poset> enumerate_all_posets(int n);
bool is_three_plus_one_free(const Poset& p);

struct PosetGraphStats {
    Subset des_p;
    int maj_p = 0;
    int des_count = 0;
    int inv_g = 0;
};

PosetGraphStats poset_graph_stats(const Permutation& sigma, const Poset& p, const Graph& g);

// An acyclic orientation of a fixed graph.  Bit e of `forward` set means the
// e-th edge {a < b} of Graph::edges() is directed a -> b.
struct AcyclicOrientation {
    std::uint64_t forward = 0;
    int sinks = 0;
    // directed edges (i, j) with i < j
    int asc = 0;
};

// Each acyclic orientation exactly once, sorted by `forward`.
std::vector<AcyclicOrientation> acyclic_orientations(const Graph& g);

// Set partition of [n] in restricted-growth form: block[i] is the block
// index of element i + 1, first occurrences increasing.
struct SetPartition {
    std::vector<std::uint8_t> block;

    int num_blocks() const;
    std::vector<std::uint32_t> block_masks() const;
    Partition type() const;
};

std::vector<SetPartition> set_partitions(int n);
bool is_g_connected(const SetPartition& pi, const Graph& g);

// For each integer partition lambda of n, the sum of |mu_G(0, pi)| over the
// G-connected set partitions pi of type lambda.
std::map<Partition, std::int64_t> g_connected_moebius(const Graph& g);

} // namespace cqf

#endif
