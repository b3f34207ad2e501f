#include "cqf/symfunc.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "cqf/errors.hpp"
#include "json.hpp"

namespace cqf {

using Exponents = MonomialTable::Exponents;

const char* basis_name(Basis b)
{
    switch (b) {
    case Basis::m:
        return "m";
    case Basis::e:
        return "e";
    case Basis::h:
        return "h";
    case Basis::p:
        return "p";
    case Basis::s:
        return "s";
    }
    return "?";
}

Basis parse_basis(std::string_view name)
{
    for (Basis b : kAllBases)
        if (name == basis_name(b))
            return b;
    throw ParameterError("unknown basis '" + std::string(name) + "'");
}

const char* qbasis_name(QBasis b) { return b == QBasis::F ? "F" : "M"; }

namespace {

std::string coef_prefix(const MultiPoly& c)
{
    if (c == MultiPoly(1))
        return "";
    if (c.num_terms() == 1 && c.is_constant())
        return c.to_string() + "*";
    return "(" + c.to_string() + ")*";
}

template <class Key>
void add_into(std::map<Key, MultiPoly>& terms, const Key& k, const MultiPoly& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

} // namespace

// ---- SymFunc ---------------------------------------------------------------

SymFunc::SymFunc(int n, Basis basis) : n_(n), basis_(basis)
{
    if (n < 0)
        throw ParameterError("negative degree");
}

SymFunc SymFunc::single(Basis basis, const Partition& lambda, const MultiPoly& coef)
{
    SymFunc f(lambda.size(), basis);
    f.add(lambda, coef);
    return f;
}

MultiPoly SymFunc::coefficient(const Partition& lambda) const
{
    auto it = terms_.find(lambda);
    return it == terms_.end() ? MultiPoly() : it->second;
}

void SymFunc::add(const Partition& lambda, const MultiPoly& coef)
{
    if (lambda.size() != n_)
        throw ParameterError("partition " + lambda.to_string() + " has the wrong size for degree " + std::to_string(n_));
    add_into(terms_, lambda, coef);
}

SymFunc& SymFunc::operator+=(const SymFunc& o)
{
    if (o.n_ != n_ || o.basis_ != basis_)
        throw ParameterError("adding symmetric functions of different degree or basis");
    for (const auto& [k, c] : o.terms_)
        add_into(terms_, k, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o)
{
    if (o.n_ != n_ || o.basis_ != basis_)
        throw ParameterError("subtracting symmetric functions of different degree or basis");
    for (const auto& [k, c] : o.terms_)
        add_into(terms_, k, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const MultiPoly& c)
{
    Terms out;
    for (const auto& [k, v] : terms_)
        add_into(out, k, v * c);
    terms_ = std::move(out);
    return *this;
}

SymFunc SymFunc::t_piece(int j) const
{
    SymFunc out(n_, basis_);
    for (const auto& [k, c] : terms_)
        add_into(out.terms_, k, c.coefficient_of(Var::t, j));
    return out;
}

int SymFunc::t_degree() const
{
    int d = -1;
    for (const auto& [k, c] : terms_)
        d = std::max(d, c.degree(Var::t));
    return d;
}

SymFunc SymFunc::evaluate(Var v, long value) const
{
    SymFunc out(n_, basis_);
    for (const auto& [k, c] : terms_)
        add_into(out.terms_, k, c.evaluate(v, value));
    return out;
}

bool SymFunc::is_positive() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_nonnegative(); });
}

std::string SymFunc::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += coef_prefix(c) + basis_name(basis_) + k.to_string();
    }
    return s;
}

// ---- QSymFunc --------------------------------------------------------------

QSymFunc::QSymFunc(int n, QBasis basis) : n_(n), basis_(basis)
{
    if (n < 1 || n > kMaxN)
        throw ParameterError("quasisymmetric degree out of range");
}

MultiPoly QSymFunc::coefficient(const Subset& key) const
{
    auto it = terms_.find(key);
    return it == terms_.end() ? MultiPoly() : it->second;
}

MultiPoly QSymFunc::coefficient(const Composition& alpha) const { return coefficient(Subset::from_composition(alpha)); }

void QSymFunc::add(const Subset& key, const MultiPoly& coef)
{
    if (key.ambient() != n_)
        throw ParameterError("subset key has the wrong ambient size");
    add_into(terms_, key, coef);
}

void QSymFunc::add(const Composition& alpha, const MultiPoly& coef) { add(Subset::from_composition(alpha), coef); }

QSymFunc& QSymFunc::operator+=(const QSymFunc& o)
{
    if (o.n_ != n_ || o.basis_ != basis_)
        throw ParameterError("adding quasisymmetric functions of different degree or basis");
    for (const auto& [k, c] : o.terms_)
        add_into(terms_, k, c);
    return *this;
}

QSymFunc& QSymFunc::operator-=(const QSymFunc& o)
{
    if (o.n_ != n_ || o.basis_ != basis_)
        throw ParameterError("subtracting quasisymmetric functions of different degree or basis");
    for (const auto& [k, c] : o.terms_)
        add_into(terms_, k, -c);
    return *this;
}

QSymFunc QSymFunc::t_piece(int j) const
{
    QSymFunc out(n_, basis_);
    for (const auto& [k, c] : terms_)
        add_into(out.terms_, k, c.coefficient_of(Var::t, j));
    return out;
}

QSymFunc QSymFunc::evaluate(Var v, long value) const
{
    QSymFunc out(n_, basis_);
    for (const auto& [k, c] : terms_)
        add_into(out.terms_, k, c.evaluate(v, value));
    return out;
}

std::string QSymFunc::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += coef_prefix(c) + qbasis_name(basis_);
        if (basis_ == QBasis::F) {
            s += k.to_string();
        } else {
            std::string a;
            for (int part : k.composition())
                a += (a.empty() ? "" : ",") + std::to_string(part);
            s += "(" + a + ")";
        }
    }
    return s;
}

MultiPoly MonomialTable::coefficient(const Exponents& a) const
{
    auto it = coeffs.find(a);
    return it == coeffs.end() ? MultiPoly() : it->second;
}

// ---- single coefficients ---------------------------------------------------

namespace {

// Truncated polynomial arithmetic: only exponents <= bound are kept.
using IntTable = std::map<Exponents, mpz_class>;

// Every vector v <= room with |v| = k and (for 0/1 rows) entries <= 1.
void row_vectors(const Exponents& room, int k, bool zero_one, std::size_t i, Exponents& cur,
                 const std::function<void(const Exponents&)>& visit)
{
    if (i == room.size()) {
        if (k == 0)
            visit(cur);
        return;
    }
    const int cap = std::min<int>(zero_one ? 1 : k, room[i]);
    for (int x = 0; x <= cap && x <= k; ++x) {
        cur[i] = static_cast<std::uint8_t>(x);
        row_vectors(room, k - x, zero_one, i + 1, cur, visit);
    }
    cur[i] = 0;
}

mpz_class product_coefficient(Basis b, const Partition& lambda, const Exponents& a)
{
    IntTable cur;
    cur.emplace(Exponents(a.size(), 0), 1);
    for (int k : lambda.parts()) {
        IntTable next;
        for (const auto& [e, c] : cur) {
            Exponents room(a.size());
            for (std::size_t i = 0; i < a.size(); ++i)
                room[i] = static_cast<std::uint8_t>(a[i] - e[i]);
            if (b == Basis::p) {
                for (std::size_t i = 0; i < a.size(); ++i)
                    if (room[i] >= k) {
                        Exponents f = e;
                        f[i] = static_cast<std::uint8_t>(f[i] + k);
                        next[f] += c;
                    }
                continue;
            }
            Exponents v(a.size(), 0);
            row_vectors(room, k, b == Basis::e, 0, v, [&](const Exponents& row) {
                Exponents f = e;
                for (std::size_t i = 0; i < f.size(); ++i)
                    f[i] = static_cast<std::uint8_t>(f[i] + row[i]);
                next[f] += c;
            });
        }
        cur = std::move(next);
    }
    auto it = cur.find(a);
    return it == cur.end() ? mpz_class(0) : it->second;
}

// Number of semistandard tableaux of shape lambda with content a, built by
// removing the horizontal strip of largest entries.
struct KostkaCounter {
    const Exponents& a;
    std::map<std::pair<std::vector<int>, int>, mpz_class> memo;

    mpz_class count(const std::vector<int>& shape, int letters)
    {
        int size = 0;
        for (int r : shape)
            size += r;
        if (letters == 0)
            return size == 0 ? 1 : 0;
        auto key = std::make_pair(shape, letters);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        mpz_class total = 0;
        std::vector<int> inner(shape.size());
        strips(shape, inner, 0, a[letters - 1], letters, total);
        memo.emplace(std::move(key), total);
        return total;
    }

    void strips(const std::vector<int>& shape, std::vector<int>& inner, std::size_t row, int remaining, int letters,
                mpz_class& total)
    {
        if (row == shape.size()) {
            if (remaining != 0)
                return;
            std::vector<int> nu = inner;
            while (!nu.empty() && nu.back() == 0)
                nu.pop_back();
            total += count(nu, letters - 1);
            return;
        }
        const int below = row + 1 < shape.size() ? shape[row + 1] : 0;
        for (int take = 0; take <= remaining && shape[row] - take >= below; ++take) {
            inner[row] = shape[row] - take;
            strips(shape, inner, row + 1, remaining - take, letters, total);
        }
    }
};

} // namespace

mpz_class monomial_coefficient(Basis b, const Partition& lambda, const Exponents& a)
{
    int total = 0;
    for (auto x : a)
        total += x;
    if (total != lambda.size())
        return 0;
    switch (b) {
    case Basis::m: {
        std::vector<int> nz;
        for (auto x : a)
            if (x)
                nz.push_back(x);
        return Partition::from_unsorted(nz) == lambda ? 1 : 0;
    }
    case Basis::e:
    case Basis::h:
    case Basis::p:
        return product_coefficient(b, lambda, a);
    case Basis::s: {
        KostkaCounter k{a, {}};
        return k.count(lambda.parts(), static_cast<int>(a.size()));
    }
    }
    return 0;
}

// ---- monomial tables -------------------------------------------------------

namespace {

void weak_compositions(int n, int parts, Exponents& cur, int i, std::vector<Exponents>& out)
{
    if (i == parts - 1) {
        cur[i] = static_cast<std::uint8_t>(n);
        out.push_back(cur);
        return;
    }
    for (int x = 0; x <= n; ++x) {
        cur[i] = static_cast<std::uint8_t>(x);
        weak_compositions(n - x, parts, cur, i + 1, out);
    }
}

std::vector<Exponents> exponent_vectors(int n, int num_vars, TableScope scope)
{
    std::vector<Exponents> out;
    switch (scope) {
    case TableScope::full: {
        Exponents cur(num_vars, 0);
        weak_compositions(n, num_vars, cur, 0, out);
        break;
    }
    case TableScope::compact:
        for (const auto& alpha : compositions(n))
            if (static_cast<int>(alpha.size()) <= num_vars) {
                Exponents a(num_vars, 0);
                std::copy(alpha.begin(), alpha.end(), a.begin());
                out.push_back(a);
            }
        break;
    case TableScope::dominant:
        for (const auto& lambda : partitions(n))
            if (lambda.length() <= num_vars) {
                Exponents a(num_vars, 0);
                std::copy(lambda.parts().begin(), lambda.parts().end(), a.begin());
                out.push_back(a);
            }
        break;
    }
    return out;
}

void check_table_args(int n, int num_vars)
{
    if (num_vars < n)
        throw ParameterError("monomial table needs at least n = " + std::to_string(n) + " variables");
    if (num_vars > 32)
        throw ParameterError("monomial table: too many variables");
}

std::uint32_t dense(const Subset& s) { return s.bits() >> 1; }
Subset from_dense(int n, std::uint32_t i) { return Subset(n, i << 1); }

std::vector<MultiPoly> dense_coeffs(const QSymFunc& f)
{
    std::vector<MultiPoly> v(std::size_t(1) << (f.degree() - 1));
    for (const auto& [k, c] : f.terms())
        v[dense(k)] = c;
    return v;
}

// g(T) = sum_{S <= T} v(S), or its Moebius inverse when sign < 0.
void subset_transform(std::vector<MultiPoly>& v, int bits, int sign)
{
    for (int b = 0; b < bits; ++b)
        for (std::size_t i = 0; i < v.size(); ++i)
            if (i & (std::size_t(1) << b)) {
                if (sign > 0)
                    v[i] += v[i ^ (std::size_t(1) << b)];
                else
                    v[i] -= v[i ^ (std::size_t(1) << b)];
            }
}

} // namespace

MonomialTable monomial_expand(const SymFunc& f, int num_vars, TableScope scope)
{
    const int n = f.degree();
    check_table_args(n, num_vars);
    MonomialTable table{num_vars, n, {}};
    const bool normalized = f.basis() == Basis::p;
    const mpz_class nfact = static_cast<unsigned long>(factorial(n));
    for (const auto& a : exponent_vectors(n, num_vars, scope)) {
        MultiPoly sum;
        for (const auto& [lambda, c] : f.terms()) {
            mpz_class k = monomial_coefficient(f.basis(), lambda, a);
            if (k == 0)
                continue;
            if (normalized)
                k *= nfact / static_cast<unsigned long>(z_lambda(lambda));
            sum += c * k;
        }
        if (normalized) {
            auto exact = sum.divided_by(nfact);
            if (!exact)
                throw InternalError("monomial_expand: power-sum combination is not integral");
            sum = std::move(*exact);
        }
        if (!sum.is_zero())
            table.coeffs.emplace(a, std::move(sum));
    }
    return table;
}

MonomialTable monomial_expand(const QSymFunc& f, int num_vars, TableScope scope)
{
    const int n = f.degree();
    check_table_args(n, num_vars);
    MonomialTable table{num_vars, n, {}};
    std::vector<MultiPoly> g = dense_coeffs(f);
    if (f.basis() == QBasis::F)
        subset_transform(g, n - 1, +1);
    for (const auto& a : exponent_vectors(n, num_vars, scope)) {
        Composition alpha;
        if (f.basis() == QBasis::F) {
            // the weakly decreasing f with content a changes value exactly at
            // the partial sums of (a_N, ..., a_1) with zeros dropped
            for (int i = num_vars - 1; i >= 0; --i)
                if (a[i])
                    alpha.push_back(a[i]);
        } else {
            for (auto x : a)
                if (x)
                    alpha.push_back(x);
        }
        const MultiPoly& c = g[dense(Subset::from_composition(alpha))];
        if (!c.is_zero())
            table.coeffs.emplace(a, c);
    }
    return table;
}

bool same_function(const SymFunc& a, const SymFunc& b)
{
    if (a.degree() != b.degree())
        return a.is_zero() && b.is_zero();
    const int n = a.degree();
    return monomial_expand(a, n, TableScope::dominant) == monomial_expand(b, n, TableScope::dominant);
}

bool same_function(const QSymFunc& a, const QSymFunc& b)
{
    if (a.degree() != b.degree())
        return a.is_zero() && b.is_zero();
    const int n = a.degree();
    return monomial_expand(a, n, TableScope::compact) == monomial_expand(b, n, TableScope::compact);
}

bool same_function(const SymFunc& a, const QSymFunc& b)
{
    if (a.degree() != b.degree())
        return a.is_zero() && b.is_zero();
    const int n = a.degree();
    return monomial_expand(a, n, TableScope::compact) == monomial_expand(b, n, TableScope::compact);
}

// ---- quasisymmetric conversions -------------------------------------------

QSymFunc omega_F(const QSymFunc& f)
{
    if (f.basis() != QBasis::F)
        throw ParameterError("omega_F expects the F basis");
    QSymFunc out(f.degree(), QBasis::F);
    for (const auto& [k, c] : f.terms())
        out.add(k.complement(), c);
    return out;
}

// F_S = sum over U containing rev(S) of M_U.
QSymFunc F_to_M(const QSymFunc& f)
{
    if (f.basis() != QBasis::F)
        throw ParameterError("F_to_M expects the F basis");
    const int n = f.degree();
    std::vector<MultiPoly> d(std::size_t(1) << (n - 1));
    for (const auto& [k, c] : f.terms())
        d[dense(k.reversed())] = c;
    subset_transform(d, n - 1, +1);
    QSymFunc out(n, QBasis::M);
    for (std::size_t i = 0; i < d.size(); ++i)
        out.add(from_dense(n, static_cast<std::uint32_t>(i)), d[i]);
    return out;
}

QSymFunc M_to_F(const QSymFunc& f)
{
    if (f.basis() != QBasis::M)
        throw ParameterError("M_to_F expects the M basis");
    const int n = f.degree();
    std::vector<MultiPoly> d = dense_coeffs(f);
    subset_transform(d, n - 1, -1);
    QSymFunc out(n, QBasis::F);
    for (std::size_t i = 0; i < d.size(); ++i)
        out.add(from_dense(n, static_cast<std::uint32_t>(i)).reversed(), d[i]);
    return out;
}

QSymFunc to_quasisymmetric(const SymFunc& f, QBasis basis)
{
    const SymFunc m = convert_basis(f, Basis::m);
    QSymFunc out(m.degree(), QBasis::M);
    for (const auto& [lambda, c] : m.terms()) {
        std::vector<int> alpha = lambda.parts();
        std::sort(alpha.begin(), alpha.end());
        do {
            out.add(alpha, c);
        } while (std::next_permutation(alpha.begin(), alpha.end()));
    }
    return basis == QBasis::M ? out : M_to_F(out);
}

SymmetryCheck is_symmetric(const QSymFunc& f)
{
    const QSymFunc m = f.basis() == QBasis::M ? f : F_to_M(f);
    SymmetryCheck r;
    for (const auto& alpha : compositions(m.degree())) {
        Composition sorted = alpha;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        if (m.coefficient(alpha) != m.coefficient(sorted)) {
            r.offending = alpha;
            r.sorted = sorted;
            return r;
        }
    }
    SymFunc sym(m.degree(), Basis::m);
    for (const auto& lambda : partitions(m.degree()))
        sym.add(lambda, m.coefficient(lambda.parts()));
    r.symmetric = std::move(sym);
    return r;
}

MultiPoly ps_qn(const QSymFunc& f)
{
    if (f.basis() != QBasis::F)
        throw ParameterError("ps_qn expects the F basis");
    MultiPoly out;
    for (const auto& [k, c] : f.terms())
        out += c * MultiPoly::var(Var::q, k.sum());
    return out;
}

// ---- transitions -----------------------------------------------------------

namespace {

using QMatrix = std::vector<std::vector<mpq_class>>;

// Row lambda: coefficients of from_lambda in the monomial basis.
QMatrix to_monomial_matrix(int n, Basis b, const std::vector<Partition>& index)
{
    const std::size_t k = index.size();
    QMatrix r(k, std::vector<mpq_class>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Exponents a(n, 0);
            std::copy(index[j].parts().begin(), index[j].parts().end(), a.begin());
            mpq_class v(monomial_coefficient(b, index[i], a));
            if (b == Basis::p)
                v /= mpq_class(mpz_class(static_cast<unsigned long>(z_lambda(index[i]))));
            r[i][j] = v;
        }
    return r;
}

QMatrix invert(QMatrix a)
{
    const std::size_t k = a.size();
    QMatrix inv(k, std::vector<mpq_class>(k));
    for (std::size_t i = 0; i < k; ++i)
        inv[i][i] = 1;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && a[piv][col] == 0)
            ++piv;
        if (piv == k)
            throw InternalError("transition matrix is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const mpq_class scale = 1 / a[col][col];
        for (std::size_t j = 0; j < k; ++j) {
            a[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            const mpq_class f = a[r][col];
            for (std::size_t j = 0; j < k; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

void check_transition_degree(int n, Basis from, Basis to)
{
    if (n < 0)
        throw ParameterError("negative degree");
    if ((from == Basis::s || to == Basis::s) && n > kMaxSchurDegree)
        throw ParameterError("Schur transitions are limited to degree " + std::to_string(kMaxSchurDegree));
    if (n > kMaxTransitionDegree)
        throw ParameterError("basis transitions are limited to degree " + std::to_string(kMaxTransitionDegree));
}

std::filesystem::path transition_path(const std::filesystem::path& dir, int n, Basis from, Basis to)
{
    return dir / "transitions" / ("deg" + std::to_string(n)) /
           (std::string(basis_name(from)) + "-" + basis_name(to) + ".json");
}

void write_atomically(const std::filesystem::path& target, const std::string& text)
{
    std::filesystem::create_directories(target.parent_path());
    std::ostringstream tmpname;
    tmpname << target.filename().string() << ".tmp." << ::getpid() << "." << std::this_thread::get_id();
    const auto tmp = target.parent_path() / tmpname.str();
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot write " + tmp.string());
        out << text;
        if (!out.flush())
            throw IoError("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

} // namespace

Transition compute_transition(int n, Basis from, Basis to)
{
    check_transition_degree(n, from, to);
    Transition t;
    t.degree = n;
    t.from = from;
    t.to = to;
    t.index = partitions(n);
    const std::size_t k = t.index.size();
    QMatrix rat(k, std::vector<mpq_class>(k));
    if (from == to) {
        for (std::size_t i = 0; i < k; ++i)
            rat[i][i] = 1;
    } else {
        QMatrix a = from == Basis::m ? QMatrix{} : to_monomial_matrix(n, from, t.index);
        QMatrix binv = to == Basis::m ? QMatrix{} : invert(to_monomial_matrix(n, to, t.index));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                if (from == Basis::m)
                    rat[i][j] = binv[i][j];
                else if (to == Basis::m)
                    rat[i][j] = a[i][j];
                else {
                    mpq_class s = 0;
                    for (std::size_t l = 0; l < k; ++l)
                        s += a[i][l] * binv[l][j];
                    rat[i][j] = s;
                }
            }
    }
    mpz_class den = 1;
    for (const auto& row : rat)
        for (const auto& v : row)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    t.denominator = den;
    t.numerator.assign(k, std::vector<mpz_class>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            mpq_class v = rat[i][j] * mpq_class(den);
            t.numerator[i][j] = v.get_num();
        }
    return t;
}

std::string Transition::to_json() const
{
    nlohmann::ordered_json j;
    j["degree"] = degree;
    j["from"] = basis_name(from);
    j["to"] = basis_name(to);
    auto parts = nlohmann::ordered_json::array();
    for (const auto& p : index)
        parts.push_back(p.parts());
    j["partitions"] = parts;
    j["denominator"] = denominator.get_str();
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : numerator) {
        auto r = nlohmann::ordered_json::array();
        for (const auto& v : row)
            r.push_back(v.get_str());
        rows.push_back(r);
    }
    j["matrix"] = rows;
    return j.dump() + "\n";
}

Transition Transition::from_json(const std::string& text)
{
    try {
        const auto j = nlohmann::json::parse(text);
        Transition t;
        t.degree = j.at("degree").get<int>();
        t.from = parse_basis(j.at("from").get<std::string>());
        t.to = parse_basis(j.at("to").get<std::string>());
        for (const auto& p : j.at("partitions"))
            t.index.emplace_back(p.get<std::vector<int>>());
        t.denominator = mpz_class(j.at("denominator").get<std::string>());
        for (const auto& row : j.at("matrix")) {
            std::vector<mpz_class> r;
            for (const auto& v : row)
                r.emplace_back(v.get<std::string>());
            if (r.size() != t.index.size())
                throw ParameterError("transition matrix row has the wrong length");
            t.numerator.push_back(std::move(r));
        }
        if (t.numerator.size() != t.index.size() || t.denominator <= 0)
            throw ParameterError("malformed transition matrix");
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("malformed transition file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParameterError(std::string("malformed transition file: ") + e.what());
    }
}

TransitionCache::TransitionCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

TransitionCache& TransitionCache::global()
{
    static TransitionCache cache(default_cache_dir());
    return cache;
}

std::optional<std::filesystem::path> default_cache_dir()
{
    if (const char* env = std::getenv("CQF_CACHE_DIR")) {
        if (std::string_view(env) == "off")
            return std::nullopt;
        if (*env)
            return std::filesystem::path(env);
    }
    return std::filesystem::path("cache");
}

const Transition& TransitionCache::get(int n, Basis from, Basis to)
{
    check_transition_degree(n, from, to);
    std::lock_guard lock(mu_);
    const auto key = std::make_tuple(n, static_cast<int>(from), static_cast<int>(to));
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;
    std::optional<Transition> t;
    if (dir_) {
        const auto path = transition_path(*dir_, n, from, to);
        std::ifstream in(path, std::ios::binary);
        if (in) {
            std::stringstream buf;
            buf << in.rdbuf();
            try {
                Transition loaded = Transition::from_json(buf.str());
                if (loaded.degree == n && loaded.from == from && loaded.to == to && loaded.index == partitions(n))
                    t = std::move(loaded);
            } catch (const ParameterError&) {
                // unreadable entry: recompute and overwrite below
            }
        }
        if (!t) {
            t = compute_transition(n, from, to);
            try {
                write_atomically(path, t->to_json());
            } catch (const std::exception&) {
                // persistence is best effort; the in-memory copy is authoritative
            }
        }
    } else {
        t = compute_transition(n, from, to);
    }
    return memo_.emplace(key, std::move(*t)).first->second;
}

std::optional<std::filesystem::path> TransitionCache::directory() const
{
    std::lock_guard lock(mu_);
    return dir_;
}

void TransitionCache::set_directory(std::optional<std::filesystem::path> dir)
{
    std::lock_guard lock(mu_);
    dir_ = std::move(dir);
}

void TransitionCache::clear_memory()
{
    std::lock_guard lock(mu_);
    memo_.clear();
}

const Transition& transition(int n, Basis from, Basis to) { return TransitionCache::global().get(n, from, to); }

CacheStats cache_stats(const std::filesystem::path& dir)
{
    CacheStats st;
    const auto root = dir / "transitions";
    std::error_code ec;
    if (!std::filesystem::is_directory(root, ec))
        return st;
    for (const auto& d : std::filesystem::directory_iterator(root, ec)) {
        const std::string name = d.path().filename().string();
        if (!d.is_directory() || name.rfind("deg", 0) != 0)
            continue;
        std::size_t files = 0;
        for (const auto& f : std::filesystem::directory_iterator(d.path(), ec))
            if (f.is_regular_file() && f.path().extension() == ".json") {
                ++files;
                st.bytes += f.file_size();
            }
        if (files) {
            st.degrees.push_back(std::atoi(name.c_str() + 3));
            st.files += files;
        }
    }
    std::sort(st.degrees.begin(), st.degrees.end());
    return st;
}

void cache_clear(const std::filesystem::path& dir)
{
    std::error_code ec;
    std::filesystem::remove_all(dir / "transitions", ec);
    if (ec)
        throw IoError("cannot clear " + (dir / "transitions").string() + ": " + ec.message());
}

// ---- basis changes ---------------------------------------------------------

SymFunc convert_basis(const SymFunc& f, Basis target)
{
    if (f.basis() == target)
        return f;
    const int n = f.degree();
    SymFunc out(n, target);
    if (n == 0) {
        for (const auto& [k, c] : f.terms())
            out.add(k, c);
        return out;
    }
    const Transition& t = transition(n, f.basis(), target);
    std::map<Partition, std::size_t> pos;
    for (std::size_t i = 0; i < t.index.size(); ++i)
        pos.emplace(t.index[i], i);
    std::vector<MultiPoly> acc(t.index.size());
    for (const auto& [lambda, c] : f.terms()) {
        const auto& row = t.numerator[pos.at(lambda)];
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0)
                acc[j] += c * row[j];
    }
    for (std::size_t j = 0; j < acc.size(); ++j) {
        if (acc[j].is_zero())
            continue;
        auto exact = t.denominator == 1 ? std::optional<MultiPoly>(acc[j]) : acc[j].divided_by(t.denominator);
        if (!exact)
            throw InternalError("basis change produced a non-integral coefficient");
        out.add(t.index[j], *exact);
    }
    return out;
}

SymFunc omega(const SymFunc& f)
{
    const int n = f.degree();
    switch (f.basis()) {
    case Basis::e:
    case Basis::h: {
        SymFunc out(n, f.basis() == Basis::e ? Basis::h : Basis::e);
        for (const auto& [k, c] : f.terms())
            out.add(k, c);
        return out;
    }
    case Basis::s: {
        SymFunc out(n, Basis::s);
        for (const auto& [k, c] : f.terms())
            out.add(k.conjugate(), c);
        return out;
    }
    case Basis::p: {
        SymFunc out(n, Basis::p);
        for (const auto& [k, c] : f.terms())
            out.add(k, (n - k.length()) % 2 ? -c : c);
        return out;
    }
    case Basis::m:
        return convert_basis(omega(convert_basis(f, Basis::h)), Basis::m);
    }
    return f;
}

} // namespace cqf
