#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <set>

#include "cqf/errors.hpp"
#include "cqf/poset.hpp"

using namespace cqf;

namespace {

// Axioms checked literally on triples, independent of the library predicate.
bool nuio_oracle(const Poset& p)
{
    const int n = p.size();
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            if (p.less(x, y) && x > y)
                return false;
            for (int z = 1; z <= n; ++z) {
                if (x == y || y == z || x == z || !p.less(x, z))
                    continue;
                const bool induced_sum = !p.less(x, y) && !p.less(y, x) && !p.less(y, z) && !p.less(z, y);
                if (induced_sum && !(x < y && y < z))
                    return false;
            }
        }
    return true;
}

// All 2^|E| orientations with a cycle check by repeated sink removal.
std::set<std::uint64_t> orientations_oracle(const Graph& g)
{
    const auto edges = g.edges();
    std::set<std::uint64_t> out;
    for (std::uint64_t fwd = 0; fwd < (std::uint64_t{1} << edges.size()); ++fwd) {
        std::uint32_t alive = 0;
        for (int v = 1; v <= g.size(); ++v)
            alive |= 1u << v;
        bool progress = true;
        while (alive && progress) {
            progress = false;
            for (int v = 1; v <= g.size(); ++v) {
                if (!((alive >> v) & 1u))
                    continue;
                bool sink = true;
                for (std::size_t e = 0; e < edges.size(); ++e) {
                    const int tail = ((fwd >> e) & 1u) ? edges[e].first : edges[e].second;
                    const int head = ((fwd >> e) & 1u) ? edges[e].second : edges[e].first;
                    if (tail == v && ((alive >> head) & 1u))
                        sink = false;
                }
                if (sink) {
                    alive &= ~(1u << v);
                    progress = true;
                }
            }
        }
        if (!alive)
            out.insert(fwd);
    }
    return out;
}

} // namespace

TEST_CASE("P_{n,k} and incomparability graphs")
{
    Poset p = Poset::pnk(4, 2);
    CHECK(p.less(1, 3));
    CHECK(p.less(1, 4));
    CHECK(p.less(2, 4));
    CHECK_FALSE(p.comparable(1, 2));
    CHECK(incomparability_graph(p) == Graph::path(4));
    CHECK(incomparability_graph(Poset::pnk(5, 5)) == Graph::complete(5));
    CHECK(incomparability_graph(Poset::pnk(5, 1)).num_edges() == 0);
    CHECK_THROWS_AS(Poset::pnk(3, 0), ParameterError);
    CHECK_THROWS_AS(Poset::pnk(3, 5), ParameterError);
}

TEST_CASE("relations are validated, not closed")
{
    CHECK_THROWS_AS(Poset::from_relations(3, {{1, 2}, {2, 3}}), ParameterError);
    CHECK_NOTHROW(Poset::from_relations(3, {{1, 2}, {2, 3}, {1, 3}}));
    CHECK_THROWS_AS(Poset::from_relations(2, {{1, 2}, {2, 1}}), ParameterError);
    CHECK_THROWS_AS(Poset::from_relations(2, {{1, 1}}), ParameterError);
    CHECK_THROWS_AS(Poset::from_relations(2, {{1, 3}}), ParameterError);
}

TEST_CASE("NUIO enumeration gives Catalan numbers and matches brute force")
{
    const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int n = 1; n <= 8; ++n)
        CHECK(enumerate_nuio(n).size() == catalan[n]);
    for (int n = 1; n <= 5; ++n) {
        std::set<Poset> brute;
        for (const auto& p : enumerate_all_posets(n)) {
            CHECK(is_nuio(p) == nuio_oracle(p));
            if (nuio_oracle(p))
                brute.insert(p);
        }
        auto list = enumerate_nuio(n);
        CHECK(std::set<Poset>(list.begin(), list.end()) == brute);
    }
}

TEST_CASE("labelled poset counts")
{
    const std::size_t counts[] = {1, 1, 3, 19, 219, 4231};
    for (int n = 0; n <= 5; ++n)
        CHECK(enumerate_all_posets(n).size() == counts[n]);
}

TEST_CASE("(3+1)-freeness")
{
    CHECK(is_three_plus_one_free(Poset::pnk(5, 2)));
    auto bad = Poset::from_relations(4, {{1, 2}, {2, 3}, {1, 3}});
    CHECK_FALSE(is_three_plus_one_free(bad));
    for (const auto& p : enumerate_nuio(6))
        CHECK(is_three_plus_one_free(p));
}

TEST_CASE("poset/graph statistics")
{
    Poset p = Poset::pnk(3, 2);
    Graph g = incomparability_graph(p);
    // 3 1 2: 3 >_P 1 gives a P-descent at 1; inversions (3,2) and (2,1)... only 3>2 is an edge
    auto st = poset_graph_stats(Permutation{3, 1, 2}, p, g);
    CHECK(st.des_p.members() == std::vector<int>{1});
    CHECK(st.maj_p == 1);
    CHECK(st.inv_g == 1);
    CHECK_THROWS_AS(poset_graph_stats(Permutation{1, 2}, p, g), ParameterError);
}

TEST_CASE("acyclic orientations match the exhaustive enumeration")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : enumerate_nuio(n)) {
            Graph g = incomparability_graph(p);
            std::set<std::uint64_t> got;
            for (const auto& o : acyclic_orientations(g))
                got.insert(o.forward);
            CHECK(got == orientations_oracle(g));
        }
    // path 1-2-3: sinks/asc table
    auto list = acyclic_orientations(Graph::path(3));
    CHECK(list.size() == 4);
    int one_sink = 0, two_sinks = 0;
    for (const auto& o : list)
        (o.sinks == 1 ? one_sink : two_sinks) += 1;
    CHECK(one_sink == 3);
    CHECK(two_sinks == 1);
}

TEST_CASE("set partitions are Bell many")
{
    const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
    for (int n = 1; n <= 6; ++n)
        CHECK(set_partitions(n).size() == bell[n]);
}

TEST_CASE("connected Moebius sums")
{
    auto path = g_connected_moebius(Graph::path(3));
    CHECK(path.size() == 3);
    CHECK(path[Partition{1, 1, 1}] == 1);
    CHECK(path[Partition{2, 1}] == 2);
    CHECK(path[Partition{3}] == 1);
    // complete graph: the full partition lattice, |mu| = prod (|B|-1)!
    for (int n = 2; n <= 5; ++n) {
        std::map<Partition, std::int64_t> expect;
        for (const auto& pi : set_partitions(n)) {
            std::int64_t v = 1;
            for (auto b : pi.block_masks())
                v *= static_cast<std::int64_t>(factorial(std::popcount(b) - 1));
            expect[pi.type()] += v;
        }
        CHECK(g_connected_moebius(Graph::complete(n)) == expect);
    }
}

TEST_CASE("P_{n,k} specializations of the poset statistics")
{
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            const Poset p = Poset::pnk(n, k);
            const Graph g = incomparability_graph(p);
            for_each_permutation(n, [&](const Permutation& s) {
                const auto st = poset_graph_stats(s, p, g);
                CHECK(st.des_p == descent_set_ge(s, k));
                CHECK(st.inv_g == rawlings_stats(s, k).inv_lt_k);
            });
        }
}

TEST_CASE("small worked examples")
{
    CHECK_FALSE(is_nuio(Poset::from_relations(3, {{1, 2}})));
    const auto k3 = acyclic_orientations(Graph::complete(3));
    CHECK(k3.size() == 6);
    for (const auto& o : k3)
        CHECK(o.sinks == 1);
    const auto empty = acyclic_orientations(Graph(3));
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].sinks == 3);
    const auto mu = g_connected_moebius(Graph(3));
    CHECK(mu.size() == 1);
    CHECK(mu.at(Partition::rectangle(1, 3)) == 1);
    CHECK(z_lambda(Partition{2, 1}) == 2);
}
