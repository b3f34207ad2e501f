#ifndef CQF_SYMFUNC_HPP
#define CQF_SYMFUNC_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "cqf/combinat.hpp"
#include "cqf/poly.hpp"

namespace cqf {

// Symmetric function bases.  `p` coefficients are taken with respect to the
// normalized power sums z_lambda^{-1} p_lambda, which keeps every element of
// Lambda_Z integral.
enum class Basis { m, e, h, p, s };
const char* basis_name(Basis b);
Basis parse_basis(std::string_view name);
inline constexpr Basis kAllBases[] = {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s};

// Highest degree for which basis transitions are computed (s needs the
// semistandard tableau enumeration, the others only products).
inline constexpr int kMaxSchurDegree = 9;
inline constexpr int kMaxTransitionDegree = 10;

// Homogeneous symmetric function of degree n with MultiPoly coefficients.
class SymFunc {
public:
    using Terms = std::map<Partition, MultiPoly>;

    SymFunc() = default;
    SymFunc(int n, Basis basis);
    static SymFunc single(Basis basis, const Partition& lambda, const MultiPoly& coef = MultiPoly(1));

    int degree() const { return n_; }
    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    MultiPoly coefficient(const Partition& lambda) const;
    bool is_zero() const { return terms_.empty(); }

    void add(const Partition& lambda, const MultiPoly& coef);
    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc& operator*=(const MultiPoly& c);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const MultiPoly& c) { return a *= c; }

    // Coefficient of t^j, keeping the other variables.
    SymFunc t_piece(int j) const;
    int t_degree() const;
    SymFunc evaluate(Var v, long value) const;
    // Every coefficient has nonnegative integer coefficients.
    bool is_positive() const;

    friend bool operator==(const SymFunc&, const SymFunc&) = default;

    std::string to_string() const;

private:
    int n_ = 0;
    Basis basis_ = Basis::m;
    Terms terms_;
};

enum class QBasis { F, M };
const char* qbasis_name(QBasis b);

// Homogeneous quasisymmetric function.  F-keys are subsets S of [n-1]; a
// monomial M_alpha is keyed by Subset::from_composition(alpha).
//
// F_{n,S} follows the decreasing convention: the sum of x_f over
// f(1) >= ... >= f(n) with f(i) > f(i+1) for i in S.
class QSymFunc {
public:
    using Terms = std::map<Subset, MultiPoly>;

    QSymFunc() = default;
    QSymFunc(int n, QBasis basis);

    int degree() const { return n_; }
    QBasis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    MultiPoly coefficient(const Subset& key) const;
    MultiPoly coefficient(const Composition& alpha) const;
    bool is_zero() const { return terms_.empty(); }

    void add(const Subset& key, const MultiPoly& coef);
    void add(const Composition& alpha, const MultiPoly& coef);
    QSymFunc& operator+=(const QSymFunc& o);
    QSymFunc& operator-=(const QSymFunc& o);
    friend QSymFunc operator+(QSymFunc a, const QSymFunc& b) { return a += b; }
    friend QSymFunc operator-(QSymFunc a, const QSymFunc& b) { return a -= b; }

    QSymFunc t_piece(int j) const;
    QSymFunc evaluate(Var v, long value) const;

    friend bool operator==(const QSymFunc&, const QSymFunc&) = default;

    std::string to_string() const;

private:
    int n_ = 0;
    QBasis basis_ = QBasis::F;
    Terms terms_;
};

// Exact coefficient of every monomial x_1^{a_1} ... x_N^{a_N}, sum a_i = n.
struct MonomialTable {
    using Exponents = std::vector<std::uint8_t>;

    int num_vars = 0;
    int degree = 0;
    std::map<Exponents, MultiPoly> coeffs;

    MultiPoly coefficient(const Exponents& a) const;
    friend bool operator==(const MonomialTable&, const MonomialTable&) = default;
};

// Which exponent vectors a table lists: all of them, the compact ones (zeros
// only at the end; enough to pin down a quasisymmetric function) or the
// weakly decreasing ones (enough for a symmetric function).
enum class TableScope { full, compact, dominant };

// Throws ParameterError when N < n: such tables do not determine the function.
MonomialTable monomial_expand(const SymFunc& f, int num_vars, TableScope scope = TableScope::full);
MonomialTable monomial_expand(const QSymFunc& f, int num_vars, TableScope scope = TableScope::full);

// Coefficient of x^a in a single basis element (the raw p_lambda for p).
mpz_class monomial_coefficient(Basis b, const Partition& lambda, const MonomialTable::Exponents& a);

// Equality of the underlying functions, decided by monomial tables at N = n.
bool same_function(const SymFunc& a, const SymFunc& b);
bool same_function(const QSymFunc& a, const QSymFunc& b);
bool same_function(const SymFunc& a, const QSymFunc& b);

SymFunc convert_basis(const SymFunc& f, Basis target);

// h_i <-> e_i, s_lambda -> s_lambda', p_lambda -> (-1)^{n - l(lambda)} p_lambda.
SymFunc omega(const SymFunc& f);
// F_{n,S} -> F_{n,[n-1] \ S}
QSymFunc omega_F(const QSymFunc& f);

QSymFunc F_to_M(const QSymFunc& f);
QSymFunc M_to_F(const QSymFunc& f);
// Quasisymmetric expansion of a symmetric function in the requested basis.
QSymFunc to_quasisymmetric(const SymFunc& f, QBasis basis);

struct SymmetryCheck {
    // m-basis, present iff symmetric
    std::optional<SymFunc> symmetric;
    // on failure: a composition whose M-coefficient differs from that of its sorting
    Composition offending;
    Composition sorted;
};
SymmetryCheck is_symmetric(const QSymFunc& f);

// (q;q)_n ps(f) = sum_S c_S q^{sum S}; f must be in the F basis.
MultiPoly ps_qn(const QSymFunc& f);

// ---- transition matrices ---------------------------------------------------

// Row lambda of `numerator` holds denominator * (coefficients of from_lambda in
// the target basis); rows and columns are indexed by `index`.
struct Transition {
    int degree = 0;
    Basis from = Basis::m;
    Basis to = Basis::m;
    std::vector<Partition> index;
    mpz_class denominator = 1;
    std::vector<std::vector<mpz_class>> numerator;

    std::string to_json() const;
    static Transition from_json(const std::string& text);
    friend bool operator==(const Transition&, const Transition&) = default;
};

// Computes and memoizes transitions; optionally persists them as
// <dir>/transitions/deg{n}/{from}-{to}.json with atomic replacement.
class TransitionCache {
public:
    explicit TransitionCache(std::optional<std::filesystem::path> dir = std::nullopt);

    // CQF_CACHE_DIR when set (the value "off" disables persistence), else ./cache.
    static TransitionCache& global();

    const Transition& get(int n, Basis from, Basis to);
    std::optional<std::filesystem::path> directory() const;
    void set_directory(std::optional<std::filesystem::path> dir);
    void clear_memory();

private:
    mutable std::mutex mu_;
    std::optional<std::filesystem::path> dir_;
    std::map<std::tuple<int, int, int>, Transition> memo_;
};

const Transition& transition(int n, Basis from, Basis to);
// Direct computation, bypassing every cache.
Transition compute_transition(int n, Basis from, Basis to);

std::optional<std::filesystem::path> default_cache_dir();

struct CacheStats {
    std::vector<int> degrees;
    std::size_t files = 0;
    std::uintmax_t bytes = 0;
};
CacheStats cache_stats(const std::filesystem::path& dir);
// Removes the cached transition files; throws IoError if the directory cannot be written.
void cache_clear(const std::filesystem::path& dir);

} // namespace cqf

#endif
