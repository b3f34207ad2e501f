#ifndef CQF_EULERIAN_HPP
#define CQF_EULERIAN_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cqf/poset.hpp"
#include "cqf/symfunc.hpp"

namespace cqf {

// A_P(q,t) = sum_sigma q^{maj_P(sigma)} t^{inv_{inc(P)}(sigma)}, and its
// t-coefficients a_{P,j}(q).
struct EulerianRecord {
    MultiPoly A;
    std::vector<MultiPoly> by_j;
};
EulerianRecord eulerian_poly(const Poset& p);
EulerianRecord eulerian_record(const MultiPoly& a);

// A_n(q,t) from A_n = 1 + t sum_{k=2}^n [k-1]_t [n choose k]_q A_{n-k}.
MultiPoly eulerian_recurrence(int n);
std::vector<MultiPoly> eulerian_recurrence_upto(int n);
// Sum over compositions (k_1, ..., k_m) of n + 1 with parts >= 2 of
// t^{m-1} [n; k_1 - 1, k_2, ..., k_m]_q prod [k_i - 1]_t.
MultiPoly eulerian_closed_form(int n);

// sum q^{maj - exc} t^{exc}
MultiPoly q_eulerian_by_exc(int n);
// sum q^{maj} t^{exc}
MultiPoly maj_exc_poly(int n);
// sum q^{rmaj_2} t^{des(sigma^-1)}
MultiPoly rmaj2_desinv_poly(int n);
// A^{(k)}_n(q,t) = sum q^{maj_{>=k}} t^{inv_{<k}}
MultiPoly rawlings_eulerian(int n, int k);
// sum q^{rmaj_k}
MultiPoly rmaj_distribution(int n, int k);

struct RootOfUnityResult {
    int d = 1;
    int m = 1;
    // A_P reduced modulo Phi_d(q); rational iff constant in q
    MultiPoly via_cyclotomic;
    bool rational = false;
    // coefficient of z^{-1} p_{d^m} in omega X, when P is a natural unit interval order
    std::optional<MultiPoly> via_p_coefficient;
    // A_P(xi_d, t) / [d]_t^m when the division is exact
    std::optional<MultiPoly> quotient;
};
// Requires d | n.
RootOfUnityResult root_of_unity(const Poset& p, int d);
RootOfUnityResult root_of_unity(const Poset& p, const MultiPoly& a, int d);

// sum q^{maj_P} p^{des_P} t^{inv_{inc(P)}}
MultiPoly triple_poly(const Poset& p);

// t-coefficients of A_P(1,t)
std::vector<mpz_class> betti(const Poset& p);
std::vector<mpz_class> betti(const EulerianRecord& r);

// Vertices S_n in lexicographic order; sigma ~ sigma (i j) for {i,j} in E(inc(P)).
struct MomentGraph {
    int n = 0;
    std::vector<Permutation> vertices;
    std::vector<std::pair<int, int>> edges;
};
MomentGraph moment_graph(const Poset& p);

// Per t-degree j: the coefficient of m_{1^n} in omega X next to a_{P,j}(1).
struct HesschromPartial {
    std::vector<mpz_class> m_coefficients;
    std::vector<mpz_class> betti;
    bool holds() const { return m_coefficients == betti; }
};
HesschromPartial hesschrom_partial(const Poset& p);

} // namespace cqf

#endif
