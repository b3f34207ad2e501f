#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "cqf/chromatic.hpp"
#include "cqf/errors.hpp"
#include "cqf/eulerian.hpp"

using namespace cqf;

namespace {

const MultiPoly q = MultiPoly::var(Var::q);
const MultiPoly t = MultiPoly::var(Var::t);
const MultiPoly pv = MultiPoly::var(Var::p);

MultiPoly pw(const MultiPoly& x, int k) { return x.pow(k); }

// maj of the descents of a word at positions 1..n-1
int maj_of(const std::vector<int>& w)
{
    int s = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1])
            s += static_cast<int>(i) + 1;
    return s;
}

} // namespace

TEST_CASE("small Eulerian polynomials")
{
    const Poset p12 = Poset::from_relations(3, {{1, 2}});
    CHECK(eulerian_poly(p12).A == (MultiPoly(1) + q) + MultiPoly(2) * t + (MultiPoly(1) + pw(q, 2)) * pw(t, 2));
    const MultiPoly a3 = MultiPoly(1) + (MultiPoly(2) + q + pw(q, 2)) * t + pw(t, 2);
    CHECK(eulerian_poly(Poset::pnk(3, 2)).A == a3);
    CHECK(eulerian_recurrence(3) == a3);
    CHECK(eulerian_recurrence(2) == MultiPoly(1) + t);
    CHECK(eulerian_recurrence(0) == MultiPoly(1));
    for (int n = 1; n <= 7; ++n) {
        const auto r = eulerian_poly(Poset::pnk(n, 1));
        CHECK(r.A == q_factorial(n));
        CHECK(r.by_j.size() == 1);
    }
}

TEST_CASE("recurrence, closed form and enumeration agree")
{
    const auto rec = eulerian_recurrence_upto(10);
    for (int n = 1; n <= 10; ++n) {
        CHECK(rec[n] == eulerian_closed_form(n));
        CHECK(rec[n].substitute(Var::t, q) == q_factorial(n));
        CHECK(rec[n].evaluate(Var::q, 1) == eulerian_polynomial(n));
    }
    for (int n = 2; n <= 7; ++n) {
        CHECK(rec[n] == eulerian_poly(Poset::pnk(n, 2)).A);
        CHECK(rec[n] == q_eulerian_by_exc(n));
        CHECK(rec[n] == rawlings_eulerian(n, 2));
    }
}

TEST_CASE("equidistribution of rmaj_2/des-inverse and maj/exc")
{
    const MultiPoly want = MultiPoly(1) + (MultiPoly(2) * q + pw(q, 2) + pw(q, 3)) * t + pw(q, 2) * pw(t, 2);
    CHECK(maj_exc_poly(3) == want);
    CHECK(rmaj2_desinv_poly(3) == want);
    for (int n = 1; n <= 7; ++n)
        CHECK(rmaj2_desinv_poly(n) == maj_exc_poly(n));
}

TEST_CASE("Rawlings major index is Mahonian")
{
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(rmaj_distribution(n, k) == q_factorial(n));
    // rmaj_1 = maj by direct enumeration
    MultiPoly majs;
    for (const auto& s : permutations(5))
        majs += pw(q, maj_of(s.word()));
    CHECK(rmaj_distribution(5, 1) == majs);
    CHECK_THROWS_AS(rmaj_distribution(3, 4), ParameterError);
}

TEST_CASE("P_{n,k} recovers the Rawlings polynomials")
{
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(eulerian_poly(Poset::pnk(n, k)).A == rawlings_eulerian(n, k));
}

TEST_CASE("Kasraoui identity and palindromicity on NUIOs")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : enumerate_nuio(n)) {
            const auto r = eulerian_poly(p);
            CHECK(r.A.substitute(Var::t, q) == q_factorial(n));
            const int e = incomparability_graph(p).num_edges();
            REQUIRE(static_cast<int>(r.by_j.size()) == e + 1);
            for (int j = 0; j <= e; ++j)
                CHECK(r.by_j[j] == r.by_j[e - j]);
            CHECK(is_unimodal(r.A.evaluate(Var::q, 1)));
        }
}

TEST_CASE("principal specialization of the F-expansion")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : enumerate_all_posets(n))
            CHECK(ps_qn(omega_x_via_F(p)) == eulerian_poly(p).A);
}

TEST_CASE("roots of unity")
{
    const auto r = root_of_unity(Poset::pnk(4, 2), 2);
    CHECK(r.rational);
    CHECK(r.via_cyclotomic == pw(MultiPoly(1) + t, 3));
    REQUIRE(r.via_p_coefficient);
    CHECK(*r.via_p_coefficient == r.via_cyclotomic);
    REQUIRE(r.quotient);
    CHECK(*r.quotient == MultiPoly(1) + t);

    const auto one = root_of_unity(Poset::pnk(3, 2), 1);
    CHECK(one.via_cyclotomic == eulerian_poly(Poset::pnk(3, 2)).A.evaluate(Var::q, 1));

    for (int n = 2; n <= 7; ++n)
        for (int d = 1; d <= n; ++d) {
            if (n % d)
                continue;
            const auto u = root_of_unity(Poset::pnk(n, 2), d);
            CHECK(u.rational);
            CHECK(u.via_cyclotomic == eulerian_polynomial(n / d) * q_integer(d, Var::t).pow(n / d));
            CHECK(u.via_p_coefficient == u.via_cyclotomic);
        }
    for (const auto& p : enumerate_nuio(6))
        for (int d : {2, 3, 6}) {
            const auto u = root_of_unity(p, d);
            CHECK(u.rational);
            CHECK(u.via_p_coefficient == u.via_cyclotomic);
            REQUIRE(u.quotient);
            CHECK(u.quotient->is_nonnegative());
        }
    CHECK_THROWS_AS(root_of_unity(Poset::pnk(4, 2), 3), ParameterError);
}

TEST_CASE("triple polynomial")
{
    const MultiPoly want = MultiPoly(1) + (MultiPoly(2) + pv * q + pv * pw(q, 2)) * t + pw(t, 2);
    CHECK(triple_poly(Poset::pnk(3, 2)) == want);
    for (int n = 2; n <= 6; ++n) {
        const Poset p = Poset::pnk(n, 2);
        const MultiPoly tp = triple_poly(p);
        CHECK(tp.evaluate(Var::p, 1) == eulerian_poly(p).A);
        CHECK(tp.evaluate(Var::p, 1).evaluate(Var::q, 1) == eulerian_polynomial(n));
    }
}

TEST_CASE("Betti numbers")
{
    CHECK(betti(Poset::pnk(3, 2)) == std::vector<mpz_class>{1, 4, 1});
    CHECK(betti(Poset::pnk(4, 1)) == std::vector<mpz_class>{24});
    for (int n = 2; n <= 7; ++n) {
        const auto b = betti(Poset::pnk(n, 2));
        const auto e = eulerian_polynomial(n).coefficients_in(Var::t);
        REQUIRE(b.size() == e.size());
        for (std::size_t j = 0; j < b.size(); ++j)
            CHECK(b[j] == e[j].constant_term());
    }
}

TEST_CASE("moment graph")
{
    const auto mg = moment_graph(Poset::pnk(3, 2));
    CHECK(mg.vertices.size() == 6);
    CHECK(mg.edges.size() == 6);
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : enumerate_nuio(n)) {
            const auto m = moment_graph(p);
            const int e = incomparability_graph(p).num_edges();
            std::vector<int> deg(m.vertices.size(), 0);
            std::set<std::pair<int, int>> seen;
            for (const auto& [a, b] : m.edges) {
                ++deg[a];
                ++deg[b];
                CHECK(seen.insert({a, b}).second);
                // the two ends differ in exactly two positions
                int diff = 0;
                for (int i = 1; i <= n; ++i)
                    diff += m.vertices[a](i) != m.vertices[b](i);
                CHECK(diff == 2);
            }
            CHECK(m.edges.size() == m.vertices.size() * e / 2);
            CHECK(std::all_of(deg.begin(), deg.end(), [&](int x) { return x == e; }));
        }
}

TEST_CASE("m_{1^n} coefficient matches the Betti numbers")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : enumerate_nuio(n))
            CHECK(hesschrom_partial(p).holds());
    const auto chain = hesschrom_partial(Poset::pnk(4, 1));
    CHECK(chain.m_coefficients == std::vector<mpz_class>{24});
}
