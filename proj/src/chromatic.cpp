#include "cqf/chromatic.hpp"

#include <bit>
#include <functional>

#include "cqf/errors.hpp"

namespace cqf {

namespace {

const MultiPoly kT = MultiPoly::var(Var::t);

std::uint32_t all_vertices(int n) { return ((1u << (n + 1)) - 1u) & ~1u; }

// count tables indexed by t-degree, turned into MultiPoly at the end
using DegreeCounts = std::vector<std::uint64_t>;

void bump(DegreeCounts& c, int deg)
{
    if (static_cast<int>(c.size()) <= deg)
        c.resize(deg + 1, 0);
    ++c[deg];
}

MultiPoly to_poly(const DegreeCounts& c)
{
    MultiPoly out;
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j])
            out += MultiPoly(mpz_class(static_cast<unsigned long>(c[j]))) * MultiPoly::var(Var::t, j);
    return out;
}

// Multiply a function in a multiplicative basis (e, h, p raw) by b_k.
SymFunc times_part(const SymFunc& f, int k, const MultiPoly& coef)
{
    SymFunc out(f.degree() + k, f.basis());
    for (const auto& [lambda, c] : f.terms())
        out.add(lambda.merged_with(Partition{k}), c * coef);
    return out;
}

} // namespace

// ---- X_G(x,t) --------------------------------------------------------------

QSymFunc x_direct(const Graph& g)
{
    const int n = g.size();
    if (n < 1)
        throw ParameterError("x_direct: empty graph");
    std::map<std::uint32_t, DegreeCounts> acc;
    std::vector<int> parts;
    // Peel off color classes 1, 2, ...: each is a nonempty independent subset
    // of the uncolored vertices R.  An edge {v < w} is an ascent when v gets
    // the smaller color.
    std::function<void(std::uint32_t, int)> rec = [&](std::uint32_t rest, int asc) {
        if (rest == 0) {
            bump(acc[Subset::from_composition(parts).bits()], asc);
            return;
        }
        for (std::uint32_t s = rest; s; s = (s - 1) & rest) {
            bool independent = true;
            int extra = 0;
            const std::uint32_t later = rest & ~s;
            for (std::uint32_t b = s; b; b &= b - 1) {
                const int v = std::countr_zero(b);
                if (g.neighbors(v) & s) {
                    independent = false;
                    break;
                }
                extra += std::popcount(g.neighbors(v) & later & ~((2u << v) - 1u));
            }
            if (!independent)
                continue;
            parts.push_back(std::popcount(s));
            rec(later, asc + extra);
            parts.pop_back();
        }
    };
    rec(all_vertices(n), 0);
    QSymFunc out(n, QBasis::M);
    for (const auto& [bits, c] : acc)
        out.add(Subset(n, bits), to_poly(c));
    return out;
}

QSymFunc omega_x_via_F(const Poset& p)
{
    const int n = p.size();
    if (n < 1)
        throw ParameterError("omega_x_via_F: empty poset");
    const Graph g = incomparability_graph(p);
    std::map<std::uint32_t, DegreeCounts> acc;
    for_each_permutation(n, [&](const Permutation& s) {
        const auto st = poset_graph_stats(s, p, g);
        bump(acc[st.des_p.bits()], st.inv_g);
    });
    QSymFunc out(n, QBasis::F);
    for (const auto& [bits, c] : acc)
        out.add(Subset(n, bits), to_poly(c));
    return out;
}

QSymFunc x_via_F(const Poset& p) { return omega_F(omega_x_via_F(p)); }

SymFunc x_sym(const Poset& p, Basis basis)
{
    if (!is_nuio(p))
        throw ParameterError("x_sym: poset is not a natural unit interval order");
    const auto r = is_symmetric(x_via_F(p));
    if (!r.symmetric) {
        std::string a, b;
        for (int x : r.offending)
            a += std::to_string(x);
        for (int x : r.sorted)
            b += std::to_string(x);
        throw InternalError("x_sym: M-coefficients of " + a + " and " + b + " differ for " + p.to_string());
    }
    return convert_basis(*r.symmetric, basis);
}

// ---- P-tableaux ------------------------------------------------------------

std::vector<PTableauCount> ptableau_counts(const Poset& p, const Graph& g)
{
    const int n = p.size();
    std::vector<PTableauCount> out;
    for (const auto& lambda : partitions(n)) {
        std::vector<int> row_of, col_of;
        for (int r = 0; r < lambda.length(); ++r)
            for (int c = 0; c < lambda[r]; ++c) {
                row_of.push_back(r);
                col_of.push_back(c);
            }
        // index of the cell above, or -1
        std::vector<int> above(n, -1);
        {
            int base = 0, prev = 0;
            for (int r = 0; r < lambda.length(); ++r) {
                for (int c = 0; c < lambda[r]; ++c)
                    if (r > 0)
                        above[base + c] = prev + c;
                prev = base;
                base += lambda[r];
            }
        }
        std::vector<int> fill(n, 0);
        std::map<int, long> by_inv;
        std::function<void(int, std::uint32_t)> rec = [&](int cell, std::uint32_t used) {
            if (cell == n) {
                int inv = 0;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (row_of[a] > row_of[b] && fill[a] < fill[b] && g.has_edge(fill[a], fill[b]))
                            ++inv;
                ++by_inv[inv];
                return;
            }
            for (int y = 1; y <= n; ++y) {
                if ((used >> y) & 1u)
                    continue;
                if (col_of[cell] > 0 && !p.less(fill[cell - 1], y))
                    continue;
                if (above[cell] >= 0 && p.less(y, fill[above[cell]]))
                    continue;
                fill[cell] = y;
                rec(cell + 1, used | (1u << y));
            }
        };
        rec(0, 0);
        for (const auto& [inv, cnt] : by_inv)
            out.push_back({lambda, inv, cnt});
    }
    return out;
}

SymFunc schur_via_ptableaux(const Poset& p, const Graph& g)
{
    SymFunc out(p.size(), Basis::s);
    for (const auto& pt : ptableau_counts(p, g))
        out.add(pt.shape, MultiPoly(pt.count) * MultiPoly::var(Var::t, pt.inv));
    return out;
}

// ---- e-coefficients --------------------------------------------------------

namespace {

// Word has no P-descents and no left-to-right P-maximum after its first letter.
bool no_descents_no_maxima(const Poset& p, const int* w, int len)
{
    std::uint32_t prefix = 0;
    for (int r = 0; r < len; ++r) {
        if (r > 0) {
            if (p.less(w[r], w[r - 1]))
                return false;
            if ((prefix & ~p.down_set(w[r])) == 0)
                return false;
        }
        prefix |= 1u << w[r];
    }
    return true;
}

// No P-ascents and the first letter is the smallest.
bool no_ascents_min_first(const Poset& p, const int* w, int len)
{
    for (int r = 1; r < len; ++r) {
        if (p.less(w[r - 1], w[r]))
            return false;
        if (w[r] < w[0])
            return false;
    }
    return true;
}

} // namespace

MultiPoly c_P(const Poset& p)
{
    const int n = p.size();
    const Graph g = incomparability_graph(p);
    DegreeCounts acc;
    for_each_permutation(n, [&](const Permutation& s) {
        const auto w = s.word();
        if (no_descents_no_maxima(p, w.data(), n))
            bump(acc, poset_graph_stats(s, p, g).inv_g);
    });
    return to_poly(acc);
}

MultiPoly e_coefficient_product(const Graph& g)
{
    const int n = g.size();
    MultiPoly out = q_integer(n, Var::t);
    for (int i = 2; i <= n; ++i)
        out *= q_integer(std::popcount(g.neighbors(i) & ((1u << i) - 1u)), Var::t);
    return out;
}

std::vector<MultiPoly> orientation_table(const Graph& g)
{
    std::vector<MultiPoly> out(g.size() + 1);
    for (const auto& o : acyclic_orientations(g))
        out[o.sinks] += kT.pow(o.asc);
    return out;
}

std::vector<MultiPoly> grouped_e_coefficients(const SymFunc& x)
{
    const SymFunc e = convert_basis(x, Basis::e);
    std::vector<MultiPoly> out(x.degree() + 1);
    for (const auto& [lambda, c] : e.terms())
        out[lambda.length()] += c;
    return out;
}

ECoefficientChecks e_coefficient_checks(const Poset& p, const Graph& g)
{
    return {c_P(p), e_coefficient_product(g), orientation_table(g)};
}

// ---- power sums ------------------------------------------------------------

SymFunc power_sum_candidates(const Poset& p, int variant)
{
    if (variant != 1 && variant != 2)
        throw ParameterError("power_sum_candidates: variant must be 1 or 2");
    const int n = p.size();
    const Graph g = incomparability_graph(p);
    const auto mus = partitions(n);
    std::vector<DegreeCounts> acc(mus.size());
    for_each_permutation(n, [&](const Permutation& s) {
        const auto w = s.word();
        int inv = -1;
        for (std::size_t k = 0; k < mus.size(); ++k) {
            int start = 0;
            bool ok = true;
            for (int len : mus[k].parts()) {
                ok = variant == 1 ? no_descents_no_maxima(p, w.data() + start, len)
                                  : no_ascents_min_first(p, w.data() + start, len);
                if (!ok)
                    break;
                start += len;
            }
            if (!ok)
                continue;
            if (inv < 0)
                inv = poset_graph_stats(s, p, g).inv_g;
            bump(acc[k], inv);
        }
    });
    SymFunc out(n, Basis::p);
    for (std::size_t k = 0; k < mus.size(); ++k) {
        MultiPoly c = to_poly(acc[k]);
        if (variant == 2)
            for (int part : mus[k].parts())
                c *= q_integer(part, Var::t);
        out.add(mus[k], c);
    }
    return out;
}

// ---- toric series ----------------------------------------------------------

std::vector<SymFunc> toric_series_upto(int n, Flavor flavor)
{
    if (n < 0)
        throw ParameterError("toric_series: negative degree");
    const Basis b = flavor == Flavor::h ? Basis::h : Basis::e;
    std::vector<SymFunc> q;
    SymFunc q0(0, b);
    q0.add(Partition{}, 1);
    q.push_back(q0);
    for (int m = 1; m <= n; ++m) {
        SymFunc qm = SymFunc::single(b, Partition{m});
        for (int k = 2; k <= m; ++k)
            qm += times_part(q[m - k], k, kT * q_integer(k - 1, Var::t));
        q.push_back(std::move(qm));
    }
    return q;
}

SymFunc toric_series(int n, Flavor flavor) { return toric_series_upto(n, flavor).back(); }

SymFunc toric_closed_form(int n)
{
    if (n < 1)
        throw ParameterError("toric_closed_form: n must be positive");
    SymFunc out(n, Basis::h);
    for (const auto& k : compositions(n + 1)) {
        if (std::any_of(k.begin(), k.end(), [](int x) { return x < 2; }))
            continue;
        const int m = static_cast<int>(k.size());
        MultiPoly c = MultiPoly::var(Var::t, m - 1);
        std::vector<int> parts{k[0] - 1};
        for (int i = 0; i < m; ++i) {
            c *= q_integer(k[i] - 1, Var::t);
            if (i > 0)
                parts.push_back(k[i]);
        }
        out.add(Partition::from_unsorted(parts), c);
    }
    return out;
}

SymFunc toric_power_sum_form(int n)
{
    SymFunc out(n, Basis::p);
    for (const auto& lambda : partitions(n)) {
        MultiPoly c = eulerian_polynomial(lambda.length(), Var::t);
        for (int part : lambda.parts())
            c *= q_integer(part, Var::t);
        out.add(lambda, c);
    }
    return out;
}

// ---- marked tableaux -------------------------------------------------------

MultiPoly marked_tableaux_poly(const Partition& lambda)
{
    const int n = lambda.size();
    std::vector<std::vector<int>> cells;
    for (int part : lambda.parts())
        cells.emplace_back(part, 0);
    MultiPoly out;
    for (int k = 0; 2 * k <= n; ++k) {
        std::function<void(int, int)> fill = [&](int r, int c) {
            if (r == lambda.length()) {
                std::vector<int> count(k + 1, 0);
                for (const auto& row : cells)
                    for (int v : row)
                        ++count[v];
                MultiPoly w(1);
                for (int a = 1; a <= k; ++a) {
                    if (count[a] < 2)
                        return;
                    // the marked copy may be any but the leftmost; its index is
                    // the number of copies in smaller columns
                    MultiPoly marks;
                    for (int idx = 1; idx < count[a]; ++idx)
                        marks += MultiPoly::var(Var::t, idx);
                    w *= marks;
                }
                out += w;
                return;
            }
            const int nr = c + 1 == lambda[r] ? r + 1 : r;
            const int nc = c + 1 == lambda[r] ? 0 : c + 1;
            int lo = 0;
            if (c > 0)
                lo = std::max(lo, cells[r][c - 1]);
            if (r > 0)
                lo = std::max(lo, cells[r - 1][c] + 1);
            for (int v = lo; v <= k; ++v) {
                cells[r][c] = v;
                fill(nr, nc);
            }
        };
        fill(0, 0);
    }
    return out;
}

// ---- fundamental expansions of the toric series ----------------------------

FrobeniusSides frobenius_F(int n)
{
    std::map<std::uint32_t, DegreeCounts> left, right;
    for_each_permutation(n, [&](const Permutation& s) {
        bump(left[descent_set_ge(s, 2).bits()], classic_stats(s.inverse()).des);
        bump(right[dex_set(s).bits()], classic_stats(s).exc);
    });
    FrobeniusSides out{QSymFunc(n, QBasis::F), QSymFunc(n, QBasis::F)};
    for (const auto& [bits, c] : left)
        out.rawlings_side.add(Subset(n, bits), to_poly(c));
    for (const auto& [bits, c] : right)
        out.dex_side.add(Subset(n, bits), to_poly(c));
    return out;
}

QSymFunc smirnov_words(int n)
{
    if (n < 1)
        throw ParameterError("smirnov_words: n must be positive");
    std::map<std::uint32_t, DegreeCounts> acc;
    std::vector<int> w(n), content(n + 1, 0);
    std::function<void(int, int)> rec = [&](int i, int des) {
        if (i == n) {
            Composition alpha;
            for (int a = 1; a <= n && content[a]; ++a)
                alpha.push_back(content[a]);
            int total = 0;
            for (int x : alpha)
                total += x;
            if (total == n)
                bump(acc[Subset::from_composition(alpha).bits()], des);
            return;
        }
        for (int a = 1; a <= n; ++a) {
            if (i > 0 && w[i - 1] == a)
                continue;
            w[i] = a;
            ++content[a];
            rec(i + 1, des + (i > 0 && w[i - 1] > a));
            --content[a];
        }
    };
    rec(0, 0);
    QSymFunc out(n, QBasis::M);
    for (const auto& [bits, c] : acc)
        out.add(Subset(n, bits), to_poly(c));
    return out;
}

// ---- t = 1 -----------------------------------------------------------------

SymFunc stanley_p_t1(const Graph& g)
{
    SymFunc out(g.size(), Basis::p);
    for (const auto& [lambda, mu] : g_connected_moebius(g))
        out.add(lambda, MultiPoly(mpz_class(static_cast<long>(mu))) *
                            MultiPoly(mpz_class(static_cast<unsigned long>(z_lambda(lambda)))));
    return out;
}

mpz_class count_proper_colorings(const Graph& g, int m)
{
    const int n = g.size();
    std::vector<int> color(n + 1, 0);
    mpz_class total = 0;
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            ++total;
            return;
        }
        for (int c = 1; c <= m; ++c) {
            bool ok = true;
            for (int u = 1; u < v; ++u)
                if (color[u] == c && g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            color[v] = c;
            rec(v + 1);
        }
        color[v] = 0;
    };
    rec(1);
    return total;
}

mpz_class evaluate_at_ones(const QSymFunc& f, int m)
{
    const QSymFunc mf = f.basis() == QBasis::M ? f : F_to_M(f);
    mpz_class total = 0;
    for (const auto& [key, c] : mf.terms()) {
        MultiPoly v = c.evaluate(Var::t, 1).evaluate(Var::q, 1).evaluate(Var::p, 1);
        mpz_class choose;
        const int len = key.size() + 1;
        mpz_bin_uiui(choose.get_mpz_t(), m, len);
        total += v.constant_term() * choose;
    }
    return total;
}

} // namespace cqf
