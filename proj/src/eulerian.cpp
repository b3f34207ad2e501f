#include "cqf/eulerian.hpp"

#include <algorithm>

#include "cqf/chromatic.hpp"
#include "cqf/errors.hpp"

namespace cqf {

namespace {

const MultiPoly kT = MultiPoly::var(Var::t);

// Integer counts of monomials q^a p^b t^c, converted once at the end.
class Tally {
public:
    void bump(int q, int p, int t)
    {
        Monomial m;
        m[Var::q] = static_cast<std::uint16_t>(q);
        m[Var::p] = static_cast<std::uint16_t>(p);
        m[Var::t] = static_cast<std::uint16_t>(t);
        ++counts_[m];
    }
    MultiPoly poly() const
    {
        MultiPoly out;
        for (const auto& [m, c] : counts_)
            out.add_term(m, mpz_class(static_cast<unsigned long>(c)));
        return out;
    }

private:
    std::map<Monomial, std::uint64_t> counts_;
};

void require_degree(int n, const char* what)
{
    if (n < 0 || n > kMaxN)
        throw ParameterError(std::string(what) + ": degree out of range");
}

} // namespace

EulerianRecord eulerian_record(const MultiPoly& a) { return {a, a.coefficients_in(Var::t)}; }

EulerianRecord eulerian_poly(const Poset& p)
{
    const Graph g = incomparability_graph(p);
    Tally tally;
    for_each_permutation(p.size(), [&](const Permutation& s) {
        const auto st = poset_graph_stats(s, p, g);
        tally.bump(st.maj_p, 0, st.inv_g);
    });
    return eulerian_record(tally.poly());
}

std::vector<MultiPoly> eulerian_recurrence_upto(int n)
{
    require_degree(n, "eulerian_recurrence");
    std::vector<MultiPoly> a{MultiPoly(1)};
    for (int m = 1; m <= n; ++m) {
        MultiPoly sum;
        for (int k = 2; k <= m; ++k)
            sum += q_integer(k - 1, Var::t) * q_binomial(m, k, Var::q) * a[m - k];
        a.push_back(MultiPoly(1) + kT * sum);
    }
    return a;
}

MultiPoly eulerian_recurrence(int n) { return eulerian_recurrence_upto(n).back(); }

MultiPoly eulerian_closed_form(int n)
{
    require_degree(n, "eulerian_closed_form");
    if (n == 0)
        return MultiPoly(1);
    MultiPoly out;
    for (const auto& k : compositions(n + 1)) {
        if (std::any_of(k.begin(), k.end(), [](int x) { return x < 2; }))
            continue;
        const int m = static_cast<int>(k.size());
        std::vector<int> ks(k.begin(), k.end());
        ks[0] -= 1;
        MultiPoly c = MultiPoly::var(Var::t, m - 1) * q_multinomial(ks, Var::q);
        for (int x : k)
            c *= q_integer(x - 1, Var::t);
        out += c;
    }
    return out;
}

MultiPoly q_eulerian_by_exc(int n)
{
    require_degree(n, "q_eulerian_by_exc");
    Tally tally;
    for_each_permutation(n, [&](const Permutation& s) {
        const auto st = classic_stats(s);
        tally.bump(st.maj - st.exc, 0, st.exc);
    });
    return tally.poly();
}

MultiPoly maj_exc_poly(int n)
{
    require_degree(n, "maj_exc_poly");
    Tally tally;
    for_each_permutation(n, [&](const Permutation& s) {
        const auto st = classic_stats(s);
        tally.bump(st.maj, 0, st.exc);
    });
    return tally.poly();
}

MultiPoly rmaj2_desinv_poly(int n)
{
    require_degree(n, "rmaj2_desinv_poly");
    Tally tally;
    for_each_permutation(n, [&](const Permutation& s) {
        const int rmaj = n >= 2 ? rawlings_stats(s, 2).rmaj_k : 0;
        tally.bump(rmaj, 0, classic_stats(s.inverse()).des);
    });
    return tally.poly();
}

MultiPoly rawlings_eulerian(int n, int k)
{
    if (n < 1 || k < 1 || k > n)
        throw ParameterError("rawlings_eulerian: requires 1 <= k <= n");
    Tally tally;
    for_each_permutation(n, [&](const Permutation& s) {
        const auto st = rawlings_stats(s, k);
        tally.bump(st.maj_ge_k, 0, st.inv_lt_k);
    });
    return tally.poly();
}

MultiPoly rmaj_distribution(int n, int k)
{
    if (n < 1 || k < 1 || k > n)
        throw ParameterError("rmaj_distribution: requires 1 <= k <= n");
    Tally tally;
    for_each_permutation(n, [&](const Permutation& s) { tally.bump(rawlings_stats(s, k).rmaj_k, 0, 0); });
    return tally.poly();
}

RootOfUnityResult root_of_unity(const Poset& p, const MultiPoly& a, int d)
{
    const int n = p.size();
    if (d < 1 || n < 1 || n % d != 0)
        throw ParameterError("root_of_unity: d must divide n");
    RootOfUnityResult r;
    r.d = d;
    r.m = n / d;
    const auto ce = cyclotomic_eval(a, d);
    r.via_cyclotomic = ce.residue;
    r.rational = ce.is_rational();
    if (is_nuio(p)) {
        const SymFunc wx = convert_basis(omega(x_sym(p, Basis::e)), Basis::p);
        r.via_p_coefficient = wx.coefficient(Partition::rectangle(d, r.m));
    }
    if (r.rational) {
        const auto div = divide_monic(r.via_cyclotomic, q_integer(d, Var::t).pow(r.m), Var::t);
        if (div.remainder.is_zero())
            r.quotient = div.quotient;
    }
    return r;
}

RootOfUnityResult root_of_unity(const Poset& p, int d) { return root_of_unity(p, eulerian_poly(p).A, d); }

MultiPoly triple_poly(const Poset& p)
{
    const Graph g = incomparability_graph(p);
    Tally tally;
    for_each_permutation(p.size(), [&](const Permutation& s) {
        const auto st = poset_graph_stats(s, p, g);
        tally.bump(st.maj_p, st.des_count, st.inv_g);
    });
    return tally.poly();
}

std::vector<mpz_class> betti(const EulerianRecord& r)
{
    std::vector<mpz_class> out;
    for (const auto& c : r.by_j)
        out.push_back(c.evaluate(Var::q, 1).constant_term());
    return out;
}

std::vector<mpz_class> betti(const Poset& p) { return betti(eulerian_poly(p)); }

MomentGraph moment_graph(const Poset& p)
{
    const int n = p.size();
    if (n > 8)
        throw ParameterError("moment_graph: n must be at most 8");
    MomentGraph mg;
    mg.n = n;
    mg.vertices = permutations(n);
    const auto pairs = incomparability_graph(p).edges();
    for (std::size_t v = 0; v < mg.vertices.size(); ++v) {
        auto w = mg.vertices[v].word();
        for (const auto& [i, j] : pairs) {
            std::swap(w[i - 1], w[j - 1]);
            const Permutation nb(w);
            std::swap(w[i - 1], w[j - 1]);
            const auto it = std::lower_bound(mg.vertices.begin(), mg.vertices.end(), nb);
            const int u = static_cast<int>(it - mg.vertices.begin());
            if (static_cast<int>(v) < u)
                mg.edges.emplace_back(static_cast<int>(v), u);
        }
    }
    return mg;
}

HesschromPartial hesschrom_partial(const Poset& p)
{
    const int n = p.size();
    const SymFunc wm = convert_basis(omega(x_sym(p, Basis::e)), Basis::m);
    const MultiPoly c = wm.coefficient(Partition::rectangle(1, n));
    HesschromPartial out;
    for (const auto& cj : c.coefficients_in(Var::t))
        out.m_coefficients.push_back(cj.constant_term());
    out.betti = betti(p);
    return out;
}

} // namespace cqf
