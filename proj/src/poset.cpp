#include "cqf/poset.hpp"

#include <bit>
#include <set>

#include "cqf/errors.hpp"

namespace cqf {

namespace {

void check_size(int n)
{
    if (n < 0 || n > kMaxN)
        throw ParameterError("size must lie in [0, " + std::to_string(kMaxN) + "]");
}

std::uint32_t vertex_mask(int n) { return ((1u << (n + 1)) - 1u) & ~1u; }

} // namespace

// ---- Poset -----------------------------------------------------------------

Poset::Poset(int n) : n_(n) { check_size(n); }

Poset Poset::from_relations(int n, const std::vector<std::pair<int, int>>& relations)
{
    Poset p(n);
    for (auto [a, b] : relations) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw ParameterError("poset relation (" + std::to_string(a) + "," + std::to_string(b) +
                                 ") outside [n]");
        if (a == b)
            throw ParameterError("poset relation is not irreflexive");
        p.up_[a] |= 1u << b;
    }
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (!p.less(a, b))
                continue;
            if (p.less(b, a))
                throw ParameterError("poset relation is not antisymmetric");
            // a < b < c must already list a < c
            if ((p.up_[b] & ~p.up_[a]) != 0)
                throw ParameterError("poset relation is not transitive: (" + std::to_string(a) + "," +
                                     std::to_string(b) + ") needs its closure listed");
        }
    return p;
}

Poset Poset::pnk(int n, int k)
{
    if (n >= 1 && (k < 1 || k > n))
        throw ParameterError("P_{n,k} requires 1 <= k <= n");
    Poset p(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + k; j <= n; ++j)
            p.up_[i] |= 1u << j;
    return p;
}

Poset Poset::from_upper_bounds(const std::vector<int>& bound)
{
    const int n = static_cast<int>(bound.size());
    Poset p(n);
    for (int i = 1; i <= n; ++i) {
        const int m = bound[i - 1];
        if (m < i || m > n || (i > 1 && m < bound[i - 2]))
            throw ParameterError("upper-bound sequence must be weakly increasing with i <= m_i <= n");
        for (int j = m + 1; j <= n; ++j)
            p.up_[i] |= 1u << j;
    }
    return p;
}

std::uint32_t Poset::down_set(int a) const
{
    std::uint32_t d = 0;
    for (int b = 1; b <= n_; ++b)
        if (less(b, a))
            d |= 1u << b;
    return d;
}

std::vector<std::pair<int, int>> Poset::relations() const
{
    std::vector<std::pair<int, int>> r;
    for (int a = 1; a <= n_; ++a)
        for (int b = 1; b <= n_; ++b)
            if (less(a, b))
                r.emplace_back(a, b);
    return r;
}

std::string Poset::to_string() const
{
    std::string s = "n=" + std::to_string(n_) + " {";
    bool first = true;
    for (auto [a, b] : relations()) {
        if (!first)
            s += ",";
        s += std::to_string(a) + "<" + std::to_string(b);
        first = false;
    }
    return s + "}";
}

// ---- Graph -----------------------------------------------------------------

Graph::Graph(int n) : n_(n) { check_size(n); }

Graph Graph::complete(int n)
{
    Graph g(n);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            g.add_edge(a, b);
    return g;
}

Graph Graph::path(int n)
{
    Graph g(n);
    for (int a = 1; a < n; ++a)
        g.add_edge(a, a + 1);
    return g;
}

void Graph::add_edge(int a, int b)
{
    if (a < 1 || a > n_ || b < 1 || b > n_)
        throw ParameterError("edge endpoint outside [n]");
    if (a == b)
        throw ParameterError("graphs have no loops");
    adj_[a] |= 1u << b;
    adj_[b] |= 1u << a;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> e;
    for (int a = 1; a <= n_; ++a)
        for (int b = a + 1; b <= n_; ++b)
            if (has_edge(a, b))
                e.emplace_back(a, b);
    return e;
}

int Graph::num_edges() const
{
    int m = 0;
    for (int a = 1; a <= n_; ++a)
        m += std::popcount(adj_[a]);
    return m / 2;
}

Graph incomparability_graph(const Poset& p)
{
    Graph g(p.size());
    for (int a = 1; a <= p.size(); ++a)
        for (int b = a + 1; b <= p.size(); ++b)
            if (!p.comparable(a, b))
                g.add_edge(a, b);
    return g;
}

// ---- NUIO ------------------------------------------------------------------

bool is_nuio(const Poset& p)
{
    const int n = p.size();
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            if (p.less(x, y) && !(x < y))
                return false;
    // {x <_P z} + {y} induced forces x < y < z
    for (int x = 1; x <= n; ++x)
        for (int z = 1; z <= n; ++z) {
            if (!p.less(x, z))
                continue;
            for (int y = 1; y <= n; ++y) {
                if (y == x || y == z || p.comparable(x, y) || p.comparable(y, z))
                    continue;
                if (!(x < y && y < z))
                    return false;
            }
        }
    return true;
}

namespace {

void bounds_rec(int n, int i, std::vector<int>& bound, std::vector<Poset>& out)
{
    if (i > n) {
        Poset p = Poset::from_upper_bounds(bound);
        if (is_nuio(p))
            out.push_back(p);
        return;
    }
    const int lo = std::max(i, i > 1 ? bound[i - 2] : 1);
    for (int m = lo; m <= n; ++m) {
        bound.push_back(m);
        bounds_rec(n, i + 1, bound, out);
        bound.pop_back();
    }
}

} // namespace

std::vector<Poset> enumerate_nuio(int n)
{
    check_size(n);
    std::vector<Poset> out;
    std::vector<int> bound;
    bounds_rec(n, 1, bound, out);
    return out;
}

std::vector<Poset> enumerate_all_posets(int n)
{
    check_size(n);
    if (n > 6)
        throw ParameterError("enumerate_all_posets: n > 6 is infeasible");
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            pairs.emplace_back(a, b);
    std::vector<Poset> out;
    std::vector<int> state(pairs.size(), 0);
    // base-3 counter: 0 incomparable, 1 a<b, 2 b<a
    while (true) {
        std::array<std::uint32_t, kMaxN + 1> up{};
        for (std::size_t e = 0; e < pairs.size(); ++e) {
            auto [a, b] = pairs[e];
            if (state[e] == 1)
                up[a] |= 1u << b;
            else if (state[e] == 2)
                up[b] |= 1u << a;
        }
        bool transitive = true;
        for (int a = 1; a <= n && transitive; ++a)
            for (int b = 1; b <= n; ++b)
                if (((up[a] >> b) & 1u) && (up[b] & ~up[a])) {
                    transitive = false;
                    break;
                }
        if (transitive) {
            std::vector<std::pair<int, int>> rel;
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    if ((up[a] >> b) & 1u)
                        rel.emplace_back(a, b);
            out.push_back(Poset::from_relations(n, rel));
        }
        std::size_t e = 0;
        while (e < state.size() && state[e] == 2)
            state[e++] = 0;
        if (e == state.size())
            break;
        ++state[e];
    }
    return out;
}

bool is_three_plus_one_free(const Poset& p)
{
    const int n = p.size();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (!p.less(a, b))
                continue;
            for (int c = 1; c <= n; ++c) {
                if (!p.less(b, c))
                    continue;
                for (int d = 1; d <= n; ++d)
                    if (d != a && d != b && d != c && !p.comparable(d, a) && !p.comparable(d, b) &&
                        !p.comparable(d, c))
                        return false;
            }
        }
    return true;
}

PosetGraphStats poset_graph_stats(const Permutation& sigma, const Poset& p, const Graph& g)
{
    const int n = sigma.size();
    if (p.size() != n || g.size() != n)
        throw ParameterError("poset_graph_stats: poset, graph and permutation sizes differ");
    PosetGraphStats st;
    std::uint32_t des = 0;
    for (int i = 1; i <= n; ++i) {
        if (i < n && p.less(sigma(i + 1), sigma(i))) {
            des |= 1u << i;
            st.maj_p += i;
            ++st.des_count;
        }
        for (int j = i + 1; j <= n; ++j)
            if (sigma(i) > sigma(j) && g.has_edge(sigma(i), sigma(j)))
                ++st.inv_g;
    }
    st.des_p = Subset(n, des);
    return st;
}

// ---- acyclic orientations --------------------------------------------------

std::vector<AcyclicOrientation> acyclic_orientations(const Graph& g)
{
    const auto edges = g.edges();
    if (edges.size() > 64)
        throw ParameterError("acyclic_orientations: too many edges");
    const int n = g.size();
    // every acyclic orientation is induced by a linear order of the vertices
    std::set<std::uint64_t> seen;
    for_each_permutation(n, [&](const Permutation& order) {
        std::uint64_t fwd = 0;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (order.inverse_at(edges[e].first) < order.inverse_at(edges[e].second))
                fwd |= std::uint64_t{1} << e;
        seen.insert(fwd);
    });
    std::vector<AcyclicOrientation> out;
    out.reserve(seen.size());
    for (std::uint64_t fwd : seen) {
        AcyclicOrientation o;
        o.forward = fwd;
        o.asc = std::popcount(fwd);
        std::uint32_t has_out = 0;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const bool f = (fwd >> e) & 1u;
            has_out |= 1u << (f ? edges[e].first : edges[e].second);
        }
        o.sinks = std::popcount(vertex_mask(n) & ~has_out);
        out.push_back(o);
    }
    return out;
}

// ---- set partitions and Moebius values -------------------------------------

int SetPartition::num_blocks() const
{
    int m = 0;
    for (auto b : block)
        m = std::max(m, static_cast<int>(b) + 1);
    return m;
}

std::vector<std::uint32_t> SetPartition::block_masks() const
{
    std::vector<std::uint32_t> masks(num_blocks(), 0);
    for (std::size_t i = 0; i < block.size(); ++i)
        masks[block[i]] |= 1u << (i + 1);
    return masks;
}

Partition SetPartition::type() const
{
    std::vector<int> sizes;
    for (auto m : block_masks())
        sizes.push_back(std::popcount(m));
    return Partition::from_unsorted(std::move(sizes));
}

namespace {

void rgs_rec(int n, std::vector<std::uint8_t>& cur, int max_block, std::vector<SetPartition>& out)
{
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(SetPartition{cur});
        return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
        cur.push_back(static_cast<std::uint8_t>(b));
        rgs_rec(n, cur, std::max(max_block, b), out);
        cur.pop_back();
    }
}

bool connected_within(std::uint32_t block, const Graph& g)
{
    const std::uint32_t start = block & (~block + 1);
    std::uint32_t reached = start;
    std::uint32_t frontier = start;
    while (frontier) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const std::uint32_t fresh = g.neighbors(v) & block & ~reached;
        reached |= fresh;
        frontier |= fresh;
    }
    return reached == block;
}

} // namespace

std::vector<SetPartition> set_partitions(int n)
{
    std::vector<SetPartition> out;
    std::vector<std::uint8_t> cur;
    if (n == 0) {
        out.push_back(SetPartition{});
        return out;
    }
    rgs_rec(n, cur, -1, out);
    return out;
}

bool is_g_connected(const SetPartition& pi, const Graph& g)
{
    for (auto m : pi.block_masks())
        if (!connected_within(m, g))
            return false;
    return true;
}

std::map<Partition, std::int64_t> g_connected_moebius(const Graph& g)
{
    const int n = g.size();
    std::vector<SetPartition> conn;
    for (auto& pi : set_partitions(n))
        if (is_g_connected(pi, g))
            conn.push_back(std::move(pi));
    // finer partitions (more blocks) come first, so every theta < pi precedes pi
    std::stable_sort(conn.begin(), conn.end(),
                     [](const SetPartition& a, const SetPartition& b) { return a.num_blocks() > b.num_blocks(); });
    std::vector<std::vector<std::uint32_t>> masks;
    masks.reserve(conn.size());
    for (auto& pi : conn)
        masks.push_back(pi.block_masks());

    auto refines = [&](std::size_t theta, std::size_t pi) {
        for (auto b : masks[theta]) {
            const int elem = std::countr_zero(b);
            if ((b & ~masks[pi][conn[pi].block[elem - 1]]) != 0)
                return false;
        }
        return true;
    };

    std::vector<std::int64_t> mu(conn.size(), 0);
    std::map<Partition, std::int64_t> out;
    for (std::size_t pi = 0; pi < conn.size(); ++pi) {
        if (conn[pi].num_blocks() == n) {
            mu[pi] = 1;
        } else {
            std::int64_t s = 0;
            for (std::size_t theta = 0; theta < pi; ++theta)
                if (conn[theta].num_blocks() > conn[pi].num_blocks() && refines(theta, pi))
                    s += mu[theta];
            mu[pi] = -s;
        }
        out[conn[pi].type()] += mu[pi] < 0 ? -mu[pi] : mu[pi];
    }
    return out;
}

} // namespace cqf
