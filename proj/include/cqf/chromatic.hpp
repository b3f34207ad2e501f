#ifndef CQF_CHROMATIC_HPP
#define CQF_CHROMATIC_HPP

#include <map>
#include <vector>

#include "cqf/poset.hpp"
#include "cqf/symfunc.hpp"

namespace cqf {

// Graded functions keep t inside the coefficients.

// X_G(x,t) in the M basis, from the proper colorings of G whose colors form
// an initial segment [k] (these carry every compact monomial).
QSymFunc x_direct(const Graph& g);

// omega X_{inc(P)}(x,t) = sum_sigma t^{inv_G(sigma)} F_{n, Des_P(sigma)}; any poset.
QSymFunc omega_x_via_F(const Poset& p);
// X_{inc(P)}(x,t) in the F basis.
QSymFunc x_via_F(const Poset& p);

// X_{inc(P)}(x,t) as a symmetric function in `basis`.  Requires a natural
// unit interval order (ParameterError otherwise); throws InternalError if the
// computed function turns out not to be symmetric.
SymFunc x_sym(const Poset& p, Basis basis = Basis::e);

// Gasharov P-tableaux: rows P-increasing, no cell P-below the one above it.
struct PTableauCount {
    Partition shape;
    int inv = 0;
    long count = 0;
};
std::vector<PTableauCount> ptableau_counts(const Poset& p, const Graph& g);
// sum_T t^{inv_G(T)} s_{lambda(T)}, where i counts against j when i sits in a
// strictly lower row than j.
SymFunc schur_via_ptableaux(const Poset& p, const Graph& g);

// Permutations with no P-descents and no nontrivial left-to-right P-maxima.
MultiPoly c_P(const Poset& p);
// [n]_t prod_{i>=2} [a_i]_t, a_i = #{j < i : {i,j} in E}
MultiPoly e_coefficient_product(const Graph& g);
// entry j: sum of t^{asc(o)} over acyclic orientations with j sinks
std::vector<MultiPoly> orientation_table(const Graph& g);
// entry j: sum of the e_lambda coefficients over partitions with j parts
std::vector<MultiPoly> grouped_e_coefficients(const SymFunc& x);

struct ECoefficientChecks {
    MultiPoly cP;
    MultiPoly product;
    std::vector<MultiPoly> orientations;
};
ECoefficientChecks e_coefficient_checks(const Poset& p, const Graph& g);

// Candidate p-expansions of omega X, normalized power-sum basis.
// Variant 1: segments without P-descents or nontrivial left-to-right
// P-maxima.  Variant 2: segments without P-ascents, each starting with its
// smallest letter, weighted by prod [mu_i]_t.
SymFunc power_sum_candidates(const Poset& p, int variant);

enum class Flavor { h, e };
// Degree-n coefficient of (1-t)H(z)/(H(tz)-tH(z)) from
// Q_n = h_n + t sum_{k=2}^n [k-1]_t h_k Q_{n-k}; the e flavor swaps h for e.
SymFunc toric_series(int n, Flavor flavor = Flavor::h);
std::vector<SymFunc> toric_series_upto(int n, Flavor flavor = Flavor::h);
// Composition-sum closed form, h basis.
SymFunc toric_closed_form(int n);
// sum_lambda A_{l(lambda)}(t) prod [lambda_i]_t z^{-1} p_lambda
SymFunc toric_power_sum_form(int n);

// Marked tableaux of shape lambda counted by index.
MultiPoly marked_tableaux_poly(const Partition& lambda);

struct FrobeniusSides {
    // sum t^{des(sigma^-1)} F_{Des_{>=2}(sigma)}
    QSymFunc rawlings_side;
    // sum t^{exc(sigma)} F_{Dex(sigma)}
    QSymFunc dex_side;
};
FrobeniusSides frobenius_F(int n);

// Smirnov words of length n with compact content, graded by descents (M basis).
QSymFunc smirnov_words(int n);

// omega X_G at t = 1 from the connected Moebius values; normalized p basis.
SymFunc stanley_p_t1(const Graph& g);

// Proper colorings with colors [m], by backtracking.
mpz_class count_proper_colorings(const Graph& g, int m);
// f(1^m) for an M-expansion with integer coefficients (t set to 1).
mpz_class evaluate_at_ones(const QSymFunc& f, int m);

} // namespace cqf

#endif
