#include "cqf/poly.hpp"

#include <mutex>

#include "cqf/errors.hpp"

namespace cqf {

const char* var_name(Var v)
{
    switch (v) {
    case Var::q:
        return "q";
    case Var::p:
        return "p";
    case Var::t:
        return "t";
    }
    return "?";
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial m;
    for (int i = 0; i < kNumVars; ++i) {
        const unsigned e = unsigned(exp[i]) + o.exp[i];
        if (e > 0xffffu)
            throw ParameterError("monomial exponent overflow");
        m.exp[i] = static_cast<std::uint16_t>(e);
    }
    return m;
}

// ---- MultiPoly -------------------------------------------------------------

MultiPoly::MultiPoly(long c)
{
    if (c != 0)
        terms_.emplace(Monomial{}, mpz_class(c));
}

MultiPoly::MultiPoly(const mpz_class& c)
{
    if (c != 0)
        terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::var(Var v, unsigned e)
{
    Monomial m;
    m[v] = static_cast<std::uint16_t>(e);
    return term(m, 1);
}

MultiPoly MultiPoly::term(const Monomial& m, const mpz_class& c)
{
    MultiPoly f;
    f.add_term(m, c);
    return f;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }

int MultiPoly::degree(Var v) const
{
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, int(m[v]));
    return d;
}

int MultiPoly::min_degree(Var v) const
{
    if (terms_.empty())
        return -1;
    int d = 0xffff;
    for (const auto& [m, c] : terms_)
        d = std::min(d, int(m[v]));
    return d;
}

mpz_class MultiPoly::constant_term() const { return coefficient(Monomial{}); }

mpz_class MultiPoly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

bool MultiPoly::is_nonnegative() const
{
    for (const auto& [m, c] : terms_)
        if (c < 0)
            return false;
    return true;
}

MultiPoly MultiPoly::coefficient_of(Var v, int e) const
{
    MultiPoly out;
    for (const auto& [m, c] : terms_)
        if (int(m[v]) == e) {
            Monomial r = m;
            r[v] = 0;
            out.terms_.emplace(r, c);
        }
    return out;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const
{
    std::vector<MultiPoly> out(std::max(degree(v) + 1, 0));
    for (const auto& [m, c] : terms_) {
        Monomial r = m;
        r[v] = 0;
        out[m[v]].terms_.emplace(r, c);
    }
    return out;
}

MultiPoly MultiPoly::from_coefficients(Var v, std::span<const MultiPoly> coeffs)
{
    MultiPoly out;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        for (const auto& [m, c] : coeffs[j].terms_) {
            Monomial r = m;
            r[v] = static_cast<std::uint16_t>(r[v] + j);
            out.add_term(r, c);
        }
    return out;
}

MultiPoly MultiPoly::evaluate(Var v, long value) const
{
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        Monomial r = m;
        r[v] = 0;
        mpz_class k;
        mpz_pow_ui(k.get_mpz_t(), mpz_class(value).get_mpz_t(), m[v]);
        out.add_term(r, c * k);
    }
    return out;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const
{
    auto coeffs = coefficients_in(v);
    MultiPoly out;
    // Horner
    for (std::size_t j = coeffs.size(); j-- > 0;) {
        out *= value;
        out += coeffs[j];
    }
    return out;
}

void MultiPoly::add_term(const Monomial& m, const mpz_class& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(ma * mb, ca * cb);
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o)
{
    *this = *this * o;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const mpz_class& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, k] : terms_)
        k *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly out = *this;
    for (auto& [m, k] : out.terms_)
        k = -k;
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const
{
    MultiPoly result(1);
    MultiPoly base = *this;
    while (e) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

std::optional<MultiPoly> MultiPoly::divided_by(const mpz_class& c) const
{
    if (c == 0)
        throw ParameterError("division by zero");
    MultiPoly out;
    for (const auto& [m, k] : terms_) {
        if (!mpz_divisible_p(k.get_mpz_t(), c.get_mpz_t()))
            return std::nullopt;
        mpz_class r;
        mpz_divexact(r.get_mpz_t(), k.get_mpz_t(), c.get_mpz_t());
        out.terms_.emplace(m, r);
    }
    return out;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpz_class a = abs(c);
        const bool neg = c < 0;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        std::string mono;
        for (Var v : {Var::q, Var::p, Var::t}) {
            if (m[v] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += var_name(v);
            if (m[v] > 1)
                mono += "^" + std::to_string(m[v]);
        }
        if (mono.empty())
            s += a.get_str();
        else if (a == 1)
            s += mono;
        else
            s += a.get_str() + "*" + mono;
    }
    return s;
}

DivisionResult divide_monic(const MultiPoly& f, const MultiPoly& divisor, Var v)
{
    const int dg = divisor.degree(v);
    if (dg < 0)
        throw ParameterError("divide_monic: zero divisor");
    if (divisor.coefficient_of(v, dg) != MultiPoly(1))
        throw ParameterError("divide_monic: divisor is not monic");
    DivisionResult r{MultiPoly(), f};
    for (int d = r.remainder.degree(v); d >= dg; d = r.remainder.degree(v)) {
        MultiPoly lead = r.remainder.coefficient_of(v, d) * MultiPoly::var(v, d - dg);
        r.quotient += lead;
        r.remainder -= lead * divisor;
    }
    return r;
}

// ---- q-analogs -------------------------------------------------------------

MultiPoly q_integer(int n, Var v)
{
    MultiPoly out;
    for (int i = 0; i < n; ++i)
        out += MultiPoly::var(v, i);
    return out;
}

MultiPoly q_factorial(int n, Var v)
{
    MultiPoly out(1);
    for (int i = 2; i <= n; ++i)
        out *= q_integer(i, v);
    return out;
}

MultiPoly q_binomial(int n, int k, Var v)
{
    if (k < 0 || k > n)
        return MultiPoly();
    // rows of the q-Pascal triangle: [n;k] = [n-1;k-1] + v^k [n-1;k]
    std::vector<MultiPoly> row{MultiPoly(1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<MultiPoly> next(m + 1);
        for (int j = 0; j <= m; ++j) {
            if (j > 0)
                next[j] += row[j - 1];
            if (j < m)
                next[j] += MultiPoly::var(v, j) * row[j];
        }
        row = std::move(next);
    }
    return row[k];
}

MultiPoly q_multinomial(std::span<const int> ks, Var v)
{
    MultiPoly out(1);
    int total = 0;
    for (int k : ks) {
        if (k < 0)
            throw ParameterError("q_multinomial: negative part");
        total += k;
        out *= q_binomial(total, k, v);
    }
    return out;
}

MultiPoly q_pochhammer(const MultiPoly& a, int n)
{
    MultiPoly out(1);
    for (int j = 1; j <= n; ++j)
        out *= MultiPoly(1) - a * MultiPoly::var(Var::q, j - 1);
    return out;
}

MultiPoly eulerian_polynomial(int n, Var v)
{
    if (n < 0)
        throw ParameterError("eulerian_polynomial: negative n");
    // a(m,k) = (k+1) a(m-1,k) + (m-k) a(m-1,k-1)
    std::vector<mpz_class> row{1};
    for (int m = 1; m <= n; ++m) {
        std::vector<mpz_class> next(m, 0);
        for (int k = 0; k < m; ++k) {
            if (k < static_cast<int>(row.size()))
                next[k] += (k + 1) * row[k];
            if (k >= 1 && k - 1 < static_cast<int>(row.size()))
                next[k] += (m - k) * row[k - 1];
        }
        row = std::move(next);
    }
    MultiPoly out;
    for (std::size_t k = 0; k < row.size(); ++k)
        out += MultiPoly(row[k]) * MultiPoly::var(v, static_cast<unsigned>(k));
    return out;
}

// ---- shape predicates ------------------------------------------------------

std::string HalfInteger::to_string() const
{
    if (twice % 2 == 0)
        return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

std::optional<HalfInteger> is_palindromic(const MultiPoly& f, Var v)
{
    if (f.is_zero())
        throw ParameterError("is_palindromic: zero polynomial");
    const auto a = f.coefficients_in(v);
    const std::size_t deg = a.size() - 1;
    for (std::size_t j = 0; j <= deg / 2; ++j)
        if (a[j] != a[deg - j])
            return std::nullopt;
    return HalfInteger{static_cast<int>(deg)};
}

std::optional<std::size_t> unimodality_violation(const MultiPoly& f, Var v)
{
    return unimodality_violation(f.coefficients_in(v), [](const MultiPoly& d) { return d.is_nonnegative(); });
}

bool is_unimodal(const MultiPoly& f, Var v) { return !unimodality_violation(f, v).has_value(); }

// ---- cyclotomic ------------------------------------------------------------

namespace {

MultiPoly compute_cyclotomic(int d, Var v, std::map<int, MultiPoly>& memo)
{
    if (auto it = memo.find(d); it != memo.end())
        return it->second;
    MultiPoly f = MultiPoly::var(v, d) - MultiPoly(1);
    for (int e = 1; e < d; ++e) {
        if (d % e != 0)
            continue;
        DivisionResult r = divide_monic(f, compute_cyclotomic(e, v, memo), v);
        if (!r.remainder.is_zero())
            throw InternalError("cyclotomic_polynomial: inexact division");
        f = std::move(r.quotient);
    }
    memo.emplace(d, f);
    return f;
}

} // namespace

const MultiPoly& cyclotomic_polynomial(int d, Var v)
{
    if (d < 1)
        throw ParameterError("cyclotomic_polynomial: d must be positive");
    static std::mutex mu;
    static std::map<std::pair<int, int>, MultiPoly> cache;
    std::lock_guard lock(mu);
    const auto key = std::make_pair(d, static_cast<int>(v));
    if (auto it = cache.find(key); it != cache.end())
        return it->second;
    std::map<int, MultiPoly> memo;
    return cache.emplace(key, compute_cyclotomic(d, v, memo)).first->second;
}

CyclotomicElement cyclotomic_eval(const MultiPoly& f, int d)
{
    const MultiPoly& phi = cyclotomic_polynomial(d, Var::q);
    return CyclotomicElement{d, divide_monic(f, phi, Var::q).remainder};
}

} // namespace cqf
