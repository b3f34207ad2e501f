#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "cqf/combinat.hpp"
#include "cqf/errors.hpp"

using namespace cqf;

TEST_CASE("subset basics")
{
    Subset s = Subset::from_members(5, std::vector<int>{1, 3});
    CHECK(s.size() == 2);
    CHECK(s.sum() == 4);
    CHECK(s.members() == std::vector<int>{1, 3});
    CHECK(s.complement().members() == std::vector<int>{2, 4});
    CHECK(s.reversed().members() == std::vector<int>{2, 4});
    CHECK(s.composition() == Composition{1, 2, 2});
    CHECK(Subset::from_composition({1, 2, 2}) == s);
    CHECK(Subset::full(4).members() == std::vector<int>{1, 2, 3});
    CHECK(Subset::from_members(2, std::vector<int>{}).composition() == Composition{2});
    CHECK_THROWS_AS(Subset::from_members(3, std::vector<int>{3}), ParameterError);
}

TEST_CASE("permutation parsing and inverse")
{
    Permutation p = Permutation::parse("531462");
    CHECK(p.size() == 6);
    CHECK(p(1) == 5);
    CHECK(p.inverse_at(5) == 1);
    CHECK(p.inverse().inverse() == p);
    CHECK(p.to_string() == "531462");
    CHECK_THROWS_AS(Permutation({1, 1, 2}), ParameterError);
    CHECK_THROWS_AS(Permutation::parse("1a2"), ParameterError);
}

TEST_CASE("for_each_permutation visits n! distinct permutations")
{
    for (int n = 0; n <= 6; ++n) {
        std::set<std::vector<int>> seen;
        for_each_permutation(n, [&](const Permutation& s) { seen.insert(s.word()); });
        CHECK(seen.size() == factorial(n));
    }
}

TEST_CASE("classic statistics on a fixed permutation")
{
    // 3 1 4 2: descents at 1 and 3, excedances at 1 and 3
    auto st = classic_stats(Permutation{3, 1, 4, 2});
    CHECK(st.des == 2);
    CHECK(st.maj == 4);
    CHECK(st.inv == 3);
    CHECK(st.exc == 2);
    CHECK(st.des_set.members() == std::vector<int>{1, 3});
    CHECK(excedance_set(Permutation{3, 1, 4, 2}).members() == std::vector<int>{1, 3});
}

TEST_CASE("inv and maj are equidistributed, exc and des are Eulerian")
{
    const std::map<int, std::vector<int>> eulerian = {
        {4, {1, 11, 11, 1}}, {5, {1, 26, 66, 26, 1}}};
    for (int n = 1; n <= 6; ++n) {
        std::map<int, int> inv, maj;
        std::vector<int> exc(n), des(n);
        for_each_permutation(n, [&](const Permutation& s) {
            auto st = classic_stats(s);
            ++inv[st.inv];
            ++maj[st.maj];
            ++exc[st.exc];
            ++des[st.des];
        });
        CHECK(inv == maj);
        CHECK(exc == des);
        if (eulerian.count(n))
            CHECK(exc == eulerian.at(n));
    }
}

TEST_CASE("rawlings statistics interpolate between maj and inv")
{
    for_each_permutation(5, [&](const Permutation& s) {
        auto c = classic_stats(s);
        CHECK(rawlings_stats(s, 1).rmaj_k == c.maj);
        CHECK(rawlings_stats(s, 5).rmaj_k == c.inv);
        // inv_{<2} is the descent number of the inverse
        CHECK(rawlings_stats(s, 2).inv_lt_k == classic_stats(s.inverse()).des);
        CHECK(descent_set_ge(s, 1) == c.des_set);
    });
    CHECK_THROWS_AS(rawlings_stats(Permutation{1, 2}, 3), ParameterError);
    CHECK_THROWS_AS(rawlings_stats(Permutation{1, 2}, 0), ParameterError);
}

TEST_CASE("dex set: descents of the barred word")
{
    // 3 1 2: position 1 is an excedance, so the word is 3bar 1 2
    CHECK(dex_set(Permutation{3, 1, 2}).empty());
    // 2 3 1: 2bar 3bar 1
    CHECK(dex_set(Permutation{2, 3, 1}).empty());
    // 1 3 2: 1 3bar 2 -> descent at 1
    CHECK(dex_set(Permutation{1, 3, 2}).members() == std::vector<int>{1});
}

TEST_CASE("partitions")
{
    const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n)
        CHECK(partitions(n).size() == std::size_t(counts[n]));
    auto p4 = partitions(4);
    CHECK(p4.front() == Partition{4});
    CHECK(p4.back() == Partition{1, 1, 1, 1});
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition{4, 2, 2, 1}.conjugate().conjugate() == Partition{4, 2, 2, 1});
    CHECK(Partition::from_unsorted({1, 3, 2}) == Partition{3, 2, 1});
    CHECK(Partition{2, 1}.merged_with(Partition{2}) == Partition{2, 2, 1});
    CHECK(Partition::rectangle(2, 3) == Partition{2, 2, 2});
    CHECK(Partition{2, 2}.dominated_by(Partition{3, 1}));
    CHECK_FALSE(Partition{3, 1}.dominated_by(Partition{2, 2}));
    CHECK_THROWS_AS(Partition({1, 2}), ParameterError);
    CHECK_THROWS_AS(Partition({2, 0}), ParameterError);
    CHECK(partitions(6, 2).size() == 3);
}

TEST_CASE("z_lambda sums to 1 over 1/z")
{
    // sum_lambda n!/z_lambda = n!
    for (int n = 1; n <= 9; ++n) {
        std::uint64_t total = 0;
        for (const auto& l : partitions(n))
            total += factorial(n) / z_lambda(l);
        CHECK(total == factorial(n));
    }
    CHECK(z_lambda(Partition{2, 2, 1}) == 8);
}

TEST_CASE("compositions")
{
    CHECK(compositions(4).size() == 8);
    CHECK(compositions(0).size() == 1);
    const auto c5 = compositions(5);
    std::set<Composition> all(c5.begin(), c5.end());
    CHECK(all.size() == 16);
    CHECK(descents_of_word({3, 1, 2, 2, 1}) == 2);
}

TEST_CASE("worked examples on 531462")
{
    const Permutation s = Permutation::parse("531462");
    const auto st = classic_stats(s);
    CHECK(st.exc == 3);
    CHECK(st.des_set.members() == std::vector<int>{1, 2, 5});
    CHECK(st.maj == 8);
    CHECK(st.inv == 8);
    CHECK(dex_set(s).members() == std::vector<int>{1, 4});
    CHECK(dex_set(Permutation{2, 1}).empty());

    const auto r = rawlings_stats(Permutation{3, 2, 1}, 2);
    CHECK(r.maj_ge_k == 0);
    CHECK(r.inv_lt_k == 2);
    CHECK(r.rmaj_k == 2);
    CHECK(rawlings_stats(Permutation{3, 2, 1}, 1).rmaj_k == 3);
}

TEST_CASE("sum of Dex is maj minus exc")
{
    for (int n = 1; n <= 7; ++n)
        for_each_permutation(n, [&](const Permutation& s) {
            const auto c = classic_stats(s);
            CHECK(dex_set(s).sum() == c.maj - c.exc);
        });
}
