#ifndef CQF_POLY_HPP
#define CQF_POLY_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cqf {

enum class Var : int { q = 0, p = 1, t = 2 };
inline constexpr int kNumVars = 3;
const char* var_name(Var v);

// Exponent vector over (q, p, t).
struct Monomial {
    std::array<std::uint16_t, kNumVars> exp{};

    std::uint16_t operator[](Var v) const { return exp[static_cast<int>(v)]; }
    std::uint16_t& operator[](Var v) { return exp[static_cast<int>(v)]; }
    Monomial operator*(const Monomial& o) const;
    int total_degree() const { return exp[0] + exp[1] + exp[2]; }

    // Ordered by t, then p, then q, so terms print grouped by t-degree.
    friend auto operator<=>(const Monomial& a, const Monomial& b)
    {
        if (auto c = a.exp[2] <=> b.exp[2]; c != 0)
            return c;
        if (auto c = a.exp[1] <=> b.exp[1]; c != 0)
            return c;
        return a.exp[0] <=> b.exp[0];
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Sparse polynomial in q, p, t with arbitrary-precision integer coefficients.
// No zero coefficient is ever stored.
class MultiPoly {
public:
    using Terms = std::map<Monomial, mpz_class>;

    MultiPoly() = default;
    MultiPoly(long c);
    MultiPoly(const mpz_class& c);

    static MultiPoly var(Var v, unsigned e = 1);
    static MultiPoly term(const Monomial& m, const mpz_class& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t num_terms() const { return terms_.size(); }
    // Returns -1 for the zero polynomial.
    int degree(Var v) const;
    int min_degree(Var v) const;
    bool involves(Var v) const { return degree(v) > 0; }
    mpz_class constant_term() const;
    mpz_class coefficient(const Monomial& m) const;
    bool is_nonnegative() const;

    // Coefficient of v^e, a polynomial in the remaining variables.
    MultiPoly coefficient_of(Var v, int e) const;
    // [c_0, ..., c_deg] with f = sum c_j v^j.
    std::vector<MultiPoly> coefficients_in(Var v) const;
    static MultiPoly from_coefficients(Var v, std::span<const MultiPoly> coeffs);

    MultiPoly evaluate(Var v, long value) const;
    MultiPoly substitute(Var v, const MultiPoly& value) const;

    void add_term(const Monomial& m, const mpz_class& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const mpz_class& c);
    MultiPoly operator-() const;
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const mpz_class& c) { return a *= c; }
    friend MultiPoly operator*(const mpz_class& c, MultiPoly a) { return a *= c; }
    MultiPoly pow(unsigned e) const;

    // Exact division by an integer; nullopt if some coefficient is not divisible.
    std::optional<MultiPoly> divided_by(const mpz_class& c) const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;
    friend bool operator<(const MultiPoly& a, const MultiPoly& b) { return a.terms_ < b.terms_; }

    std::string to_string() const;

private:
    Terms terms_;
};

// Division with remainder by a divisor that is monic in v (coefficients of f
// may involve the other variables).
struct DivisionResult {
    MultiPoly quotient;
    MultiPoly remainder;
};
DivisionResult divide_monic(const MultiPoly& f, const MultiPoly& divisor, Var v);

// ---- q-analogs -------------------------------------------------------------

// [n]_v = 1 + v + ... + v^{n-1}; [0]_v = 0.
MultiPoly q_integer(int n, Var v = Var::q);
MultiPoly q_factorial(int n, Var v = Var::q);
MultiPoly q_binomial(int n, int k, Var v = Var::q);
// [n; k_1, ..., k_m]_v with sum k_i = n.
MultiPoly q_multinomial(std::span<const int> ks, Var v = Var::q);
// (a; q)_n = prod_{j=1}^n (1 - a q^{j-1})
MultiPoly q_pochhammer(const MultiPoly& a, int n);
// Classical Eulerian polynomial sum_sigma v^{des(sigma)}; A_0 = 1.
MultiPoly eulerian_polynomial(int n, Var v = Var::t);

// ---- shape predicates ------------------------------------------------------

// Half-integers, stored doubled.
struct HalfInteger {
    int twice = 0;
    friend bool operator==(const HalfInteger&, const HalfInteger&) = default;
    std::string to_string() const;
};

// Center of symmetry when f, read as a polynomial in v from v^0 to its top
// degree, has a_j = a_{deg-j}.  Throws ParameterError on the zero polynomial.
std::optional<HalfInteger> is_palindromic(const MultiPoly& f, Var v = Var::t);

// First index j at which a sequence fails unimodality under the
// coefficientwise order: either d_j = a_{j+1} - a_j is neither >= 0 nor
// <= 0, or a decrease is followed by an increase at j.
template <class T, class NonNeg>
std::optional<std::size_t> unimodality_violation(const std::vector<T>& seq, NonNeg nonneg)
{
    bool descending = false;
    for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
        const T up = seq[j + 1] - seq[j];
        const T down = seq[j] - seq[j + 1];
        const bool ge = nonneg(up);
        const bool le = nonneg(down);
        if (!descending) {
            if (ge)
                continue;
            if (!le)
                return j;
            descending = true;
        } else if (!le) {
            return j;
        }
    }
    return std::nullopt;
}

bool is_unimodal(const MultiPoly& f, Var v = Var::t);
std::optional<std::size_t> unimodality_violation(const MultiPoly& f, Var v = Var::t);

// ---- cyclotomic evaluation -------------------------------------------------

// d-th cyclotomic polynomial in v, by exact division of v^d - 1.
const MultiPoly& cyclotomic_polynomial(int d, Var v = Var::q);

// f reduced modulo Phi_d(q): the value of f at a primitive d-th root of unity,
// written in the power basis 1, q, ..., q^{phi(d)-1}.
struct CyclotomicElement {
    int d = 1;
    MultiPoly residue;

    bool is_rational() const { return !residue.involves(Var::q); }
};

CyclotomicElement cyclotomic_eval(const MultiPoly& f, int d);

} // namespace cqf

#endif
