#include "cqf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "cqf/chromatic.hpp"
#include "cqf/errors.hpp"
#include "cqf/eulerian.hpp"

namespace cqf {

const char* check_kind_name(CheckKind k)
{
    switch (k) {
    case CheckKind::theorem:
        return "theorem";
    case CheckKind::conjecture:
        return "conjecture";
    case CheckKind::identity:
        return "identity";
    }
    return "?";
}

const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::skipped:
        return "skipped";
    }
    return "?";
}

Instance Instance::degree(int n, std::optional<int> d) { return {n, std::nullopt, d}; }
Instance Instance::of(const Poset& p, std::optional<int> d) { return {p.size(), p, d}; }

std::string Instance::descriptor() const
{
    std::string s = poset ? poset_descriptor(*poset) : "n=" + std::to_string(n);
    if (d)
        s += (poset ? " d=" : ",d=") + std::to_string(*d);
    return s;
}

Json CheckVerdict::to_json(bool timing) const
{
    Json j;
    j["check"] = check;
    j["kind"] = check_kind_name(kind);
    j["instance"] = instance;
    j["verdict"] = verdict_name(verdict);
    if (counterexample())
        j["counterexample"] = true;
    if (!witness.is_null())
        j["witness"] = witness;
    if (!values.is_null())
        j["values"] = values;
    if (!reason.empty())
        j["reason"] = reason;
    if (timing)
        j["elapsed_ms"] = elapsed_ms;
    return j;
}

Json SweepSummary::to_json() const
{
    return {{"summary",
             {{"total", total},
              {"pass", passed},
              {"fail", failed},
              {"skipped", skipped},
              {"counterexamples", counterexamples},
              {"aborted", aborted}}}};
}

namespace {

using Exps = MonomialTable::Exponents;

const MultiPoly kT = MultiPoly::var(Var::t);

struct Skip {
    std::string reason;
};

std::string monomial_label(const Monomial& m) { return MultiPoly::term(m, 1).to_string(); }

std::string exps_label(const Exps& e)
{
    std::string s = "x^(";
    for (std::size_t i = 0; i < e.size(); ++i)
        s += (i ? "," : "") + std::to_string(e[i]);
    return s + ")";
}

// Comparisons record the first mismatch as a witness.
class Ctx {
public:
    explicit Ctx(bool fault) : fault_(fault) {}

    bool failed() const { return failed_; }
    const Json& witness() const { return witness_; }
    const Json& values() const { return values_; }
    void record(const std::string& key, Json value) { values_[key] = std::move(value); }

    void eq(const std::string& what, const MultiPoly& expected, MultiPoly actual)
    {
        if (take_fault())
            actual += MultiPoly(1);
        if (expected == actual)
            return;
        std::set<Monomial> keys;
        for (const auto& [m, c] : expected.terms())
            keys.insert(m);
        for (const auto& [m, c] : actual.terms())
            keys.insert(m);
        for (const auto& m : keys) {
            const auto a = expected.coefficient(m), b = actual.coefficient(m);
            if (a != b) {
                fail({{"what", what},
                      {"key", monomial_label(m)},
                      {"expected", a.get_str()},
                      {"actual", b.get_str()},
                      {"expected_value", expected.to_string()},
                      {"actual_value", actual.to_string()}});
                return;
            }
        }
    }

    // Both sides must already be written in the same basis.
    void eq(const std::string& what, const SymFunc& expected, SymFunc actual)
    {
        if (take_fault()) {
            const Partition key = expected.is_zero() ? Partition{expected.degree()} : expected.terms().begin()->first;
            actual.add(key, MultiPoly(1));
        }
        if (expected == actual)
            return;
        if (expected.basis() != actual.basis() || expected.degree() != actual.degree()) {
            fail({{"what", what},
                  {"key", "basis"},
                  {"expected", basis_name(expected.basis())},
                  {"actual", basis_name(actual.basis())}});
            return;
        }
        std::set<Partition> keys;
        for (const auto& [k, c] : expected.terms())
            keys.insert(k);
        for (const auto& [k, c] : actual.terms())
            keys.insert(k);
        for (const auto& k : keys) {
            const auto a = expected.coefficient(k), b = actual.coefficient(k);
            if (a != b) {
                fail({{"what", what},
                      {"key", std::string(basis_name(expected.basis())) + k.to_string()},
                      {"expected", a.to_string()},
                      {"actual", b.to_string()}});
                return;
            }
        }
    }

    void eq(const std::string& what, const std::vector<MultiPoly>& expected, std::vector<MultiPoly> actual)
    {
        if (take_fault()) {
            if (actual.empty())
                actual.emplace_back(0);
            actual[0] += MultiPoly(1);
        }
        const std::size_t len = std::max(expected.size(), actual.size());
        for (std::size_t i = 0; i < len; ++i) {
            const MultiPoly a = i < expected.size() ? expected[i] : MultiPoly();
            const MultiPoly b = i < actual.size() ? actual[i] : MultiPoly();
            if (a != b) {
                fail({{"what", what}, {"key", i}, {"expected", a.to_string()}, {"actual", b.to_string()}});
                return;
            }
        }
    }

    void eq(const std::string& what, const std::vector<mpz_class>& expected, std::vector<mpz_class> actual)
    {
        std::vector<MultiPoly> a(expected.begin(), expected.end()), b(actual.begin(), actual.end());
        eq(what, a, b);
    }

    void eq(const std::string& what, const std::map<Exps, MultiPoly>& expected, std::map<Exps, MultiPoly> actual)
    {
        if (take_fault()) {
            const Exps key = expected.empty() ? Exps{} : expected.begin()->first;
            actual[key] += MultiPoly(1);
        }
        std::erase_if(actual, [](const auto& kv) { return kv.second.is_zero(); });
        if (expected == actual)
            return;
        std::set<Exps> keys;
        for (const auto& [k, c] : expected)
            keys.insert(k);
        for (const auto& [k, c] : actual)
            keys.insert(k);
        for (const auto& k : keys) {
            const auto ia = expected.find(k);
            const auto ib = actual.find(k);
            const MultiPoly a = ia == expected.end() ? MultiPoly() : ia->second;
            const MultiPoly b = ib == actual.end() ? MultiPoly() : ib->second;
            if (a != b) {
                fail({{"what", what}, {"key", exps_label(k)}, {"expected", a.to_string()}, {"actual", b.to_string()}});
                return;
            }
        }
    }

    void require(const std::string& what, bool cond, Json detail = nullptr)
    {
        if (take_fault())
            cond = false;
        if (cond)
            return;
        Json w{{"what", what}};
        if (!detail.is_null())
            w["detail"] = detail;
        fail(w);
    }

private:
    bool take_fault()
    {
        const bool f = fault_;
        fault_ = false;
        return f;
    }
    void fail(Json w)
    {
        if (failed_)
            return;
        failed_ = true;
        witness_ = std::move(w);
    }

    bool fault_;
    bool failed_ = false;
    Json witness_;
    Json values_;
};

// Values shared by the checks of one poset; one entry per thread.
struct PosetMemo {
    std::optional<Poset> poset;
    std::optional<QSymFunc> omega_f;
    std::optional<SymFunc> x_e;
    std::optional<SymFunc> omega_p;
    std::optional<EulerianRecord> eulerian;
};

PosetMemo& memo_for(const Poset& p)
{
    thread_local PosetMemo memo;
    if (!memo.poset || !(*memo.poset == p))
        memo = PosetMemo{p, {}, {}, {}, {}};
    return memo;
}

const QSymFunc& omega_f(const Poset& p)
{
    auto& m = memo_for(p);
    if (!m.omega_f)
        m.omega_f = omega_x_via_F(p);
    return *m.omega_f;
}

const SymFunc& x_e(const Poset& p)
{
    auto& m = memo_for(p);
    if (!m.x_e)
        m.x_e = x_sym(p, Basis::e);
    return *m.x_e;
}

const SymFunc& omega_p(const Poset& p)
{
    const SymFunc& x = x_e(p);
    auto& m = memo_for(p);
    if (!m.omega_p)
        m.omega_p = convert_basis(omega(x), Basis::p);
    return *m.omega_p;
}

const EulerianRecord& eul(const Poset& p)
{
    auto& m = memo_for(p);
    if (!m.eulerian)
        m.eulerian = eulerian_poly(p);
    return *m.eulerian;
}

std::vector<int> divisors(const Instance& inst)
{
    if (inst.d) {
        if (*inst.d < 1 || inst.n % *inst.d != 0)
            throw Skip{"d does not divide n"};
        return {*inst.d};
    }
    std::vector<int> out;
    for (int d = 1; d <= inst.n; ++d)
        if (inst.n % d == 0)
            out.push_back(d);
    return out;
}

SymFunc times_part(const SymFunc& f, int k, const MultiPoly& coef)
{
    SymFunc out(f.degree() + k, f.basis());
    for (const auto& [lambda, c] : f.terms())
        out.add(lambda.merged_with(Partition{k}), c * coef);
    return out;
}

std::vector<SymFunc> pieces(const SymFunc& f)
{
    std::vector<SymFunc> out;
    for (int j = 0; j <= f.t_degree(); ++j)
        out.push_back(f.t_piece(j));
    return out;
}

template <class T>
void check_palindromic_seq(Ctx& c, const std::string& what, const std::vector<T>& seq, std::size_t top)
{
    for (std::size_t j = 0; j <= top; ++j) {
        const T a = j < seq.size() ? seq[j] : T();
        const T b = top - j < seq.size() ? seq[top - j] : T();
        if (!(a == b)) {
            c.require(what, false, {{"j", j}, {"mirror", top - j}});
            return;
        }
    }
    c.require(what, seq.size() <= top + 1, {{"length", seq.size()}});
}

Poset toric_poset(int n) { return Poset::pnk(n, std::min(n, 2)); }

void symfunc_palindromic(Ctx& c, const std::string& what, const SymFunc& f, int top)
{
    const auto ps = pieces(f);
    for (int j = 0; j <= top; ++j) {
        const SymFunc a = j < static_cast<int>(ps.size()) ? ps[j] : SymFunc(f.degree(), f.basis());
        const SymFunc b = top - j < static_cast<int>(ps.size()) ? ps[top - j] : SymFunc(f.degree(), f.basis());
        if (!(a == b)) {
            c.require(what, false, {{"j", j}, {"piece", a.to_string()}, {"mirror", b.to_string()}});
            return;
        }
    }
    c.require(what, static_cast<int>(ps.size()) <= top + 1);
}

void symfunc_unimodal(Ctx& c, const std::string& what, const SymFunc& f)
{
    const auto ps = pieces(f);
    const auto bad = unimodality_violation(ps, [](const SymFunc& g) { return g.is_positive(); });
    Json detail = nullptr;
    if (bad)
        detail = {{"j", *bad}, {"piece", ps[*bad].to_string()}, {"next", ps[*bad + 1].to_string()}};
    c.require(what, !bad, detail);
}

void poly_unimodal(Ctx& c, const std::string& what, const MultiPoly& f)
{
    const auto bad = unimodality_violation(f, Var::t);
    Json detail = nullptr;
    if (bad)
        detail = {{"j", *bad}, {"value", f.to_string()}};
    c.require(what, !bad, detail);
}

void poly_palindromic(Ctx& c, const std::string& what, const MultiPoly& f, int top)
{
    const auto coeffs = f.coefficients_in(Var::t);
    check_palindromic_seq(c, what, coeffs, static_cast<std::size_t>(top));
}

using CheckFn = std::function<void(Ctx&, const Instance&)>;

struct Entry {
    CheckInfo info;
    CheckFn fn;
};

int edges_of(const Poset& p) { return incomparability_graph(p).num_edges(); }

std::vector<Entry> build_registry()
{
    using K = CheckKind;
    using D = Domain;
    std::vector<Entry> r;
    auto add = [&](std::string name, K kind, D dom, int lo, int hi, std::string summary, CheckFn fn) {
        r.push_back({{std::move(name), kind, dom, lo, hi, std::move(summary)}, std::move(fn)});
    };

    // ---- golden closed forms ----------------------------------------------
    add("pn1", K::identity, D::degree, 1, 8, "X for the chain P_{n,1} is e_1^n", [](Ctx& c, const Instance& in) {
        c.eq("x_sym(P_{n,1})", SymFunc::single(Basis::e, Partition::rectangle(1, in.n)), x_sym(Poset::pnk(in.n, 1)));
    });
    add("pn2", K::identity, D::degree, 1, 8, "X for the antichain P_{n,n} is [n]_t! e_n", [](Ctx& c, const Instance& in) {
        c.eq("x_sym(P_{n,n})", SymFunc::single(Basis::e, Partition{in.n}, q_factorial(in.n, Var::t)),
             x_sym(Poset::pnk(in.n, in.n)));
    });
    add("comps", K::identity, D::degree, 3, 8, "e-expansion of X for P_{n,n-1}", [](Ctx& c, const Instance& in) {
        const int n = in.n;
        auto qi = [](int k) { return q_integer(k, Var::t); };
        SymFunc f(n, Basis::e);
        f.add(Partition{n}, qi(n) * qi(n - 2));
        f.add(Partition{n - 1, 1}, MultiPoly::var(Var::t, n - 2));
        c.eq("x_sym(P_{n,n-1})", f * q_factorial(n - 2, Var::t), x_sym(Poset::pnk(n, n - 1)));
    });
    add("comps2", K::identity, D::degree, 4, 8, "e-expansion of X for P_{n,n-2}", [](Ctx& c, const Instance& in) {
        const int n = in.n;
        auto qi = [](int k) { return q_integer(k, Var::t); };
        SymFunc f(n, Basis::e);
        f.add(Partition{n}, qi(n) * qi(n - 3).pow(3));
        f.add(Partition{n - 1, 1}, qi(n - 2) * MultiPoly::var(Var::t, n - 3) * (qi(n - 3) + qi(2) * qi(n - 4)));
        f.add(Partition::from_unsorted({n - 2, 2}), MultiPoly::var(Var::t, 2 * n - 7) * qi(2));
        c.eq("x_sym(P_{n,n-2})", f * q_factorial(n - 4, Var::t), x_sym(Poset::pnk(n, n - 2)));
    });

    // ---- permutation statistics -------------------------------------------
    add("raweq", K::theorem, D::degree, 1, 8, "rmaj_k is Mahonian for every k", [](Ctx& c, const Instance& in) {
        for (int k = 1; k <= in.n; ++k)
            c.eq("rmaj_" + std::to_string(k), q_factorial(in.n), rmaj_distribution(in.n, k));
    });
    add("eqEu", K::theorem, D::degree, 1, 8, "(rmaj_2, des of inverse) ~ (maj, exc); a^(2)_{n,j} = a_{n,j}",
        [](Ctx& c, const Instance& in) {
            c.eq("rmaj_2/des^-1 vs maj/exc", maj_exc_poly(in.n), rmaj2_desinv_poly(in.n));
            if (in.n >= 2)
                c.eq("A^(2)_n vs A_n", q_eulerian_by_exc(in.n), rawlings_eulerian(in.n, 2));
        });
    add("expgeneq", K::identity, D::degree, 1, 8,
        "A_n(q,t): recurrence = composition closed form = maj-exc enumeration = A_{P_{n,2}}",
        [](Ctx& c, const Instance& in) {
            const MultiPoly rec = eulerian_recurrence(in.n);
            c.eq("closed form", rec, eulerian_closed_form(in.n));
            c.eq("maj-exc enumeration", rec, q_eulerian_by_exc(in.n));
            c.eq("A_{P_{n,2}}", rec, eul(toric_poset(in.n)).A);
        });
    add("unieuth", K::theorem, D::degree, 1, 8, "(a_{n,j}(q))_j is palindromic and unimodal",
        [](Ctx& c, const Instance& in) {
            const MultiPoly a = q_eulerian_by_exc(in.n);
            poly_palindromic(c, "palindromic", a, in.n - 1);
            poly_unimodal(c, "unimodal", a);
        });
    add("unity", K::theorem, D::degree, 1, 8, "A_n(xi_d,t) = A_m(t)[d]_t^m, both evaluation routes",
        [](Ctx& c, const Instance& in) {
            const Poset p = toric_poset(in.n);
            for (int d : divisors(in)) {
                const int m = in.n / d;
                const auto r = root_of_unity(p, eul(p).A, d);
                const std::string tag = "d=" + std::to_string(d);
                c.require(tag + " residue is rational", r.rational, {{"residue", r.via_cyclotomic.to_string()}});
                c.record(tag, r.via_cyclotomic.to_string());
                c.eq(tag + " cyclotomic route", eulerian_polynomial(m) * q_integer(d, Var::t).pow(m), r.via_cyclotomic);
                c.require(tag + " p-coefficient route available", r.via_p_coefficient.has_value());
                if (r.via_p_coefficient)
                    c.eq(tag + " p-coefficient route", r.via_cyclotomic, *r.via_p_coefficient);
            }
        });
    add("eultoreq", K::theorem, D::degree, 1, 8, "Betti numbers of P_{n,2} are the Eulerian numbers",
        [](Ctx& c, const Instance& in) {
            std::vector<mpz_class> e;
            for (const auto& x : eulerian_polynomial(in.n).coefficients_in(Var::t))
                e.push_back(x.constant_term());
            c.eq("betti", e, betti(eul(toric_poset(in.n))));
        });

    // ---- toric series -----------------------------------------------------
    add("symeuler", K::identity, D::degree, 1, 9, "Q_n solves (H(tz) - tH(z)) Q = (1-t) H(z), h and e flavors",
        [](Ctx& c, const Instance& in) {
            for (Flavor fl : {Flavor::h, Flavor::e}) {
                const Basis b = fl == Flavor::h ? Basis::h : Basis::e;
                const auto q = toric_series_upto(in.n, fl);
                SymFunc lhs = q[in.n] * (MultiPoly(1) - kT);
                for (int k = 1; k <= in.n; ++k)
                    lhs += times_part(q[in.n - k], k, kT.pow(k) - kT);
                c.eq(std::string("series identity, ") + basis_name(b),
                     SymFunc::single(b, Partition{in.n}, MultiPoly(1) - kT), lhs);
            }
        });
    add("formQ", K::theorem, D::degree, 1, 9, "Q_n closed form; h-positive, palindromic, h-unimodal",
        [](Ctx& c, const Instance& in) {
            const SymFunc q = toric_series(in.n);
            c.eq("closed form", q, toric_closed_form(in.n));
            c.require("h-positive", q.is_positive());
            symfunc_palindromic(c, "palindromic", q, in.n - 1);
            symfunc_unimodal(c, "h-unimodal", q);
        });
    add("torchrom", K::theorem, D::degree, 1, 8, "omega X_{inc(P_{n,2})} = Q_n", [](Ctx& c, const Instance& in) {
        c.eq("omega x_sym in h", toric_series(in.n), omega(x_e(toric_poset(in.n))));
    });
    add("stanth", K::theorem, D::degree, 1, 7, "Smirnov words by descents give the e-flavor series",
        [](Ctx& c, const Instance& in) {
            const SymFunc y = toric_series(in.n, Flavor::e);
            const auto s = is_symmetric(smirnov_words(in.n));
            c.require("Smirnov series is symmetric", s.symmetric.has_value());
            if (s.symmetric)
                c.eq("Smirnov words", convert_basis(y, Basis::m), *s.symmetric);
        });
    add("stancor", K::theorem, D::degree, 1, 9, "omega of the e-flavor series is the h-flavor series",
        [](Ctx& c, const Instance& in) {
            c.eq("omega Y", toric_series(in.n, Flavor::h), omega(toric_series(in.n, Flavor::e)));
        });
    add("stemdecomp", K::theorem, D::degree, 1, 7, "marked tableaux count the Schur coefficients of Q_n",
        [](Ctx& c, const Instance& in) {
            const SymFunc s = convert_basis(toric_series(in.n), Basis::s);
            SymFunc marked(in.n, Basis::s);
            for (const auto& lambda : partitions(in.n))
                marked.add(lambda, marked_tableaux_poly(lambda));
            c.eq("marked tableaux", s, marked);
        });
    add("swdecomp", K::theorem, D::degree, 1, 7, "P_{n,2}-tableaux of conjugate shape match marked tableaux",
        [](Ctx& c, const Instance& in) {
            const Poset p = toric_poset(in.n);
            SymFunc pt(in.n, Basis::s);
            for (const auto& x : ptableau_counts(p, incomparability_graph(p)))
                pt.add(x.shape.conjugate(), MultiPoly(x.count) * MultiPoly::var(Var::t, x.inv));
            SymFunc marked(in.n, Basis::s);
            for (const auto& lambda : partitions(in.n))
                marked.add(lambda, marked_tableaux_poly(lambda));
            c.eq("conjugate P-tableaux", marked, pt);
        });
    add("pdecomp", K::theorem, D::degree, 1, 8, "p-expansion of Q_n via A_{l(lambda)}(t)", [](Ctx& c, const Instance& in) {
        c.eq("p-expansion", convert_basis(toric_series(in.n), Basis::p), toric_power_sum_form(in.n));
    });
    add("fundeq", K::theorem, D::degree, 1, 8, "Rawlings and Dex F-expansions agree and equal Q_n",
        [](Ctx& c, const Instance& in) {
            const auto f = frobenius_F(in.n);
            const auto diff = f.dex_side - f.rawlings_side;
            c.require("two F-expansions agree", diff.is_zero(), {{"difference", diff.to_string()}});
            c.eq("F-expansion vs Q_n", monomial_expand(toric_series(in.n), in.n, TableScope::dominant).coeffs,
                 monomial_expand(f.dex_side, in.n, TableScope::dominant).coeffs);
        });
    add("pscor", K::theorem, D::degree, 1, 8, "(q;q)_n ps of the Dex expansion is A_n(q,t)",
        [](Ctx& c, const Instance& in) {
            c.eq("ps of Dex side", q_eulerian_by_exc(in.n), ps_qn(frobenius_F(in.n).dex_side));
        });
    add("hposqpos", K::theorem, D::degree, 1, 8, "(q;q)_n ps(s_lambda) has nonnegative coefficients",
        [](Ctx& c, const Instance& in) {
            for (const auto& lambda : partitions(in.n)) {
                const MultiPoly v = ps_qn(to_quasisymmetric(SymFunc::single(Basis::s, lambda), QBasis::F));
                c.require("nonnegative at s" + lambda.to_string(), v.is_nonnegative(), {{"value", v.to_string()}});
            }
        });

    // ---- posets: chromatic side ---------------------------------------------
    add("symprop", K::theorem, D::nuio, 1, 8, "X_{inc(P)}(x,t) is symmetric", [](Ctx& c, const Instance& in) {
        const auto s = is_symmetric(omega_F(omega_f(*in.poset)));
        Json d = nullptr;
        if (!s.symmetric)
            d = {{"composition", s.offending}, {"sorted", s.sorted}};
        c.require("symmetric", s.symmetric.has_value(), d);
    });
    add("main", K::theorem, D::any_poset, 1, 7, "x_direct and the F-expansion agree monomial by monomial",
        [](Ctx& c, const Instance& in) {
            const Poset& p = *in.poset;
            auto direct = monomial_expand(x_direct(incomparability_graph(p)), in.n, TableScope::compact).coeffs;
            auto viaf = monomial_expand(omega_F(omega_f(p)), in.n, TableScope::compact).coeffs;
            std::erase_if(direct, [](const auto& kv) { return kv.second.is_zero(); });
            c.eq("monomial table", direct, viaf);
        });
    add("maincor", K::theorem, D::any_poset, 1, 8, "(q;q)_n ps(omega X) = A_P(q,t)", [](Ctx& c, const Instance& in) {
        c.eq("principal specialization", eul(*in.poset).A, ps_qn(omega_f(*in.poset)));
    });
    add("palinchromth", K::theorem, D::nuio, 1, 8, "X_{inc(P)}(x,t) is palindromic in t", [](Ctx& c, const Instance& in) {
        symfunc_palindromic(c, "palindromic", x_e(*in.poset), edges_of(*in.poset));
    });
    add("schurcon", K::theorem, D::nuio, 1, 7, "P-tableaux give the Schur expansion", [](Ctx& c, const Instance& in) {
        const Poset& p = *in.poset;
        c.eq("s-expansion", convert_basis(x_e(p), Basis::s), schur_via_ptableaux(p, incomparability_graph(p)));
    });
    add("gash", K::theorem, D::any_poset, 1, 7, "Gasharov at t = 1 for (3+1)-free posets", [](Ctx& c, const Instance& in) {
        const Poset& p = *in.poset;
        if (!is_three_plus_one_free(p))
            throw Skip{"poset is not (3+1)-free"};
        const auto s = is_symmetric(omega_F(omega_f(p)).evaluate(Var::t, 1));
        c.require("X at t=1 is symmetric", s.symmetric.has_value());
        if (s.symmetric)
            c.eq("s-expansion at t=1", convert_basis(*s.symmetric, Basis::s),
                 schur_via_ptableaux(p, incomparability_graph(p)).evaluate(Var::t, 1));
    });
    add("acyclicth", K::theorem, D::nuio, 1, 7, "grouped e-coefficients count acyclic orientations by sinks",
        [](Ctx& c, const Instance& in) {
            c.eq("orientations", grouped_e_coefficients(x_e(*in.poset)),
                 orientation_table(incomparability_graph(*in.poset)));
        });
    add("ecoefth", K::theorem, D::nuio, 1, 8, "c_P(t) is the coefficient of e_n", [](Ctx& c, const Instance& in) {
        c.eq("c_P", x_e(*in.poset).coefficient(Partition{in.n}), c_P(*in.poset));
    });
    add("stan", K::theorem, D::nuio, 1, 8, "Stanley's p-expansion at t = 1", [](Ctx& c, const Instance& in) {
        c.eq("p-expansion at t=1", omega_p(*in.poset).evaluate(Var::t, 1),
             stanley_p_t1(incomparability_graph(*in.poset)));
    });
    add("chromatic", K::theorem, D::any_poset, 1, 7, "X_G(1^m) at t = 1 is the chromatic polynomial",
        [](Ctx& c, const Instance& in) {
            const Graph g = incomparability_graph(*in.poset);
            const auto x = x_direct(g);
            for (int m = 0; m <= in.n; ++m)
                c.eq("m=" + std::to_string(m), MultiPoly(count_proper_colorings(g, m)), MultiPoly(evaluate_at_ones(x, m)));
        });

    // ---- posets: Eulerian side -------------------------------------------
    add("kasraoui", K::theorem, D::nuio, 1, 8, "A_P(q,q) = [n]_q!", [](Ctx& c, const Instance& in) {
        c.eq("A_P(q,q)", q_factorial(in.n), eul(*in.poset).A.substitute(Var::t, MultiPoly::var(Var::q)));
    });
    add("palinAth", K::theorem, D::nuio, 1, 8, "(a_{P,j}(q))_j is palindromic", [](Ctx& c, const Instance& in) {
        check_palindromic_seq(c, "palindromic", eul(*in.poset).by_j, static_cast<std::size_t>(edges_of(*in.poset)));
    });
    add("hesseuth", K::theorem, D::nuio, 1, 8, "A_P(1,t) is palindromic and unimodal", [](Ctx& c, const Instance& in) {
        const MultiPoly a = eul(*in.poset).A.evaluate(Var::q, 1);
        poly_palindromic(c, "palindromic", a, edges_of(*in.poset));
        poly_unimodal(c, "unimodal", a);
    });
    add("thdes", K::theorem, D::nuio, 1, 8, "A_P(xi_d,t) is the z^-1 p_{d^m} coefficient of omega X",
        [](Ctx& c, const Instance& in) {
            const Poset& p = *in.poset;
            for (int d : divisors(in)) {
                const int m = in.n / d;
                const auto ce = cyclotomic_eval(eul(p).A, d);
                const std::string tag = "d=" + std::to_string(d);
                c.require(tag + " residue is rational", ce.is_rational(), {{"residue", ce.residue.to_string()}});
                c.eq(tag, omega_p(p).coefficient(Partition::rectangle(d, m)), ce.residue);
            }
        });
    add("moment", K::theorem, D::any_poset, 1, 7, "moment graph is |E|-regular with n!|E|/2 edges",
        [](Ctx& c, const Instance& in) {
            const auto mg = moment_graph(*in.poset);
            const std::size_t e = edges_of(*in.poset);
            std::vector<std::size_t> deg(mg.vertices.size(), 0);
            for (const auto& [a, b] : mg.edges) {
                ++deg[a];
                ++deg[b];
            }
            c.require("edge count", mg.edges.size() * 2 == mg.vertices.size() * e,
                      {{"edges", mg.edges.size()}, {"vertices", mg.vertices.size()}});
            c.require("regular", std::all_of(deg.begin(), deg.end(), [&](std::size_t x) { return x == e; }));
        });

    // ---- conjectures --------------------------------------------------------
    add("quasistan", K::conjecture, D::nuio, 1, 8, "X_{inc(P)}(x,t) is e-positive and e-unimodal",
        [](Ctx& c, const Instance& in) {
            const SymFunc& x = x_e(*in.poset);
            c.require("e-positive", x.is_positive(), {{"value", x.to_string()}});
            symfunc_unimodal(c, "e-unimodal", x);
        });
    add("stancon", K::conjecture, D::any_poset, 1, 7, "X_G(x) is e-positive for (3+1)-free P",
        [](Ctx& c, const Instance& in) {
            const Poset& p = *in.poset;
            if (!is_three_plus_one_free(p))
                throw Skip{"poset is not (3+1)-free"};
            const auto s = is_symmetric(omega_F(omega_f(p)).evaluate(Var::t, 1));
            c.require("X at t=1 is symmetric", s.symmetric.has_value());
            if (s.symmetric) {
                const SymFunc e = convert_basis(*s.symmetric, Basis::e);
                c.require("e-positive", e.is_positive(), {{"value", e.to_string()}});
            }
        });
    add("unieucon", K::conjecture, D::nuio, 1, 8, "(a_{P,j}(q))_j is unimodal", [](Ctx& c, const Instance& in) {
        poly_unimodal(c, "unimodal", eul(*in.poset).A);
    });
    add("ecoefcon", K::conjecture, D::nuio, 1, 8, "c_P(t) = [n]_t prod [a_i]_t", [](Ctx& c, const Instance& in) {
        c.eq("product formula", e_coefficient_product(incomparability_graph(*in.poset)), c_P(*in.poset));
    });
    add("powercon1", K::conjecture, D::nuio, 1, 8, "p-expansion via segments without P-descents or P-maxima",
        [](Ctx& c, const Instance& in) { c.eq("p-expansion", omega_p(*in.poset), power_sum_candidates(*in.poset, 1)); });
    add("powercon2", K::conjecture, D::nuio, 1, 8, "p-expansion via segments without P-ascents",
        [](Ctx& c, const Instance& in) { c.eq("p-expansion", omega_p(*in.poset), power_sum_candidates(*in.poset, 2)); });
    add("genunity", K::conjecture, D::nuio, 1, 8, "A_P(xi_d,t) = B(t)[d]_t^m with B in N[t]; values palindromic unimodal",
        [](Ctx& c, const Instance& in) {
            const Poset& p = *in.poset;
            const int e = edges_of(p);
            for (int d : divisors(in)) {
                const auto r = root_of_unity(p, eul(p).A, d);
                const std::string tag = "d=" + std::to_string(d);
                c.require(tag + " residue is rational", r.rational, {{"residue", r.via_cyclotomic.to_string()}});
                if (!r.rational)
                    continue;
                c.require(tag + " divisible by [d]_t^m", r.quotient.has_value(),
                          {{"value", r.via_cyclotomic.to_string()}});
                c.record(tag, {{"value", r.via_cyclotomic.to_string()},
                               {"quotient", r.quotient ? Json(r.quotient->to_string()) : Json(nullptr)}});
                if (r.quotient)
                    c.require(tag + " quotient in N[t]", r.quotient->is_nonnegative(),
                              {{"quotient", r.quotient->to_string()}});
                c.require(tag + " values nonnegative", r.via_cyclotomic.is_nonnegative(),
                          {{"value", r.via_cyclotomic.to_string()}});
                if (!r.via_cyclotomic.is_zero()) {
                    poly_palindromic(c, tag + " palindromic", r.via_cyclotomic, e);
                    poly_unimodal(c, tag + " unimodal", r.via_cyclotomic);
                }
            }
        });
    add("triple", K::conjecture, D::nuio, 1, 8, "A_P(q,p,t) is palindromic and unimodal in t",
        [](Ctx& c, const Instance& in) {
            const MultiPoly a = triple_poly(*in.poset);
            poly_palindromic(c, "palindromic", a, edges_of(*in.poset));
            poly_unimodal(c, "unimodal", a);
        });
    add("hesschrom", K::conjecture, D::nuio, 1, 8,
        "m_{1^n}-coefficient of omega X equals a_{P,j}(1) (checkable part of the Hessenberg conjecture)",
        [](Ctx& c, const Instance& in) {
            const auto h = hesschrom_partial(*in.poset);
            c.eq("m_{1^n} coefficients", h.betti, h.m_coefficients);
        });
    return r;
}

const std::vector<Entry>& registry()
{
    static const std::vector<Entry> r = build_registry();
    return r;
}

const Entry* find_entry(std::string_view name)
{
    for (const auto& e : registry())
        if (e.info.name == name)
            return &e;
    return nullptr;
}

} // namespace

const std::vector<CheckInfo>& check_registry()
{
    static const std::vector<CheckInfo> infos = [] {
        std::vector<CheckInfo> v;
        for (const auto& e : registry())
            v.push_back(e.info);
        return v;
    }();
    return infos;
}

const CheckInfo* find_check(std::string_view name)
{
    const Entry* e = find_entry(name);
    return e ? &e->info : nullptr;
}

std::vector<std::string> select_checks(std::string_view list)
{
    std::vector<std::string> out;
    auto add_kind = [&](std::optional<CheckKind> kind) {
        for (const auto& e : registry())
            if (!kind || e.info.kind == *kind)
                out.push_back(e.info.name);
    };
    if (list == "all")
        add_kind(std::nullopt);
    else if (list == "theorems")
        add_kind(CheckKind::theorem);
    else if (list == "conjectures")
        add_kind(CheckKind::conjecture);
    else if (list == "identities")
        add_kind(CheckKind::identity);
    else {
        std::size_t start = 0;
        while (start <= list.size()) {
            const auto end = std::min(list.find(',', start), list.size());
            const std::string name(list.substr(start, end - start));
            if (!name.empty()) {
                if (!find_entry(name))
                    throw ParameterError("unknown check '" + name + "'");
                if (std::find(out.begin(), out.end(), name) == out.end())
                    out.push_back(name);
            }
            start = end + 1;
        }
    }
    if (out.empty())
        throw ParameterError("no checks selected");
    return out;
}

CheckVerdict run_check(std::string_view name, const Instance& instance, const RunOptions& options)
{
    const Entry* e = find_entry(name);
    if (!e)
        throw ParameterError("unknown check '" + std::string(name) + "'");
    CheckVerdict v;
    v.check = e->info.name;
    v.kind = e->info.kind;
    v.instance = instance.descriptor();
    const auto t0 = std::chrono::steady_clock::now();
    auto skip = [&](std::string why) {
        v.verdict = Verdict::skipped;
        v.reason = std::move(why);
    };
    if (instance.n < e->info.min_n || instance.n > e->info.max_n)
        skip("n outside [" + std::to_string(e->info.min_n) + ", " + std::to_string(e->info.max_n) + "]");
    else if (e->info.domain != Domain::degree && !instance.poset)
        skip("check needs a poset");
    else if (e->info.domain == Domain::nuio && !is_nuio(*instance.poset))
        skip("poset is not a natural unit interval order");
    else {
        Ctx ctx(options.inject_fault);
        try {
            e->fn(ctx, instance);
            v.values = ctx.values();
            if (ctx.failed()) {
                v.verdict = Verdict::fail;
                v.witness = ctx.witness();
            }
        } catch (const Skip& s) {
            skip(s.reason);
        } catch (const std::exception& ex) {
            v.verdict = Verdict::fail;
            v.witness = {{"what", "exception"}, {"error", ex.what()}};
        }
    }
    v.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return v;
}

SweepSummary sweep(const SweepOptions& options, std::ostream& report,
                   const std::function<void(const CheckVerdict&)>& on_verdict)
{
    if (options.n_min < 1 || options.n_max < options.n_min || options.n_max > 9)
        throw ParameterError("sweep range must satisfy 1 <= n_min <= n_max <= 9");
    if (options.jobs < 1)
        throw ParameterError("jobs must be positive");
    for (const auto& name : options.checks)
        if (!find_entry(name))
            throw ParameterError("unknown check '" + name + "'");

    struct Task {
        std::string check;
        Instance instance;
        bool fault = false;
    };
    std::vector<Task> tasks;
    bool fault_pending = options.fault_check.has_value();
    for (int n = options.n_min; n <= options.n_max; ++n) {
        std::vector<Poset> posets;
        bool need_posets = false;
        for (const auto& name : options.checks)
            need_posets |= find_entry(name)->info.domain != Domain::degree;
        if (need_posets)
            posets = enumerate_nuio(n);
        for (const auto& name : options.checks) {
            const auto& info = find_entry(name)->info;
            if (info.domain != Domain::degree)
                continue;
            tasks.push_back({name, Instance::degree(n)});
        }
        // poset checks grouped by poset so the per-thread memo is reused
        for (const auto& p : posets)
            for (const auto& name : options.checks)
                if (find_entry(name)->info.domain != Domain::degree)
                    tasks.push_back({name, Instance::of(p)});
    }
    if (fault_pending)
        for (auto& t : tasks)
            if (t.check == *options.fault_check && fault_pending) {
                const auto& info = find_entry(t.check)->info;
                if (t.instance.n >= info.min_n && t.instance.n <= info.max_n) {
                    t.fault = true;
                    fault_pending = false;
                }
            }

    std::vector<std::optional<CheckVerdict>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex mu;
    std::condition_variable cv;

    auto worker = [&] {
        while (!stop.load()) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size())
                break;
            CheckVerdict v = run_check(tasks[i].check, tasks[i].instance, RunOptions{tasks[i].fault});
            if (v.verdict == Verdict::fail && v.kind != CheckKind::conjecture)
                stop.store(true);
            {
                std::lock_guard lock(mu);
                results[i] = std::move(v);
            }
            cv.notify_all();
        }
        cv.notify_all();
    };

    std::vector<std::thread> pool;
    const int jobs = std::min<int>(options.jobs, std::max<std::size_t>(tasks.size(), 1));
    for (int j = 0; j < jobs; ++j)
        pool.emplace_back(worker);

    SweepSummary summary;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        CheckVerdict v;
        {
            std::unique_lock lock(mu);
            cv.wait(lock, [&] { return results[i].has_value(); });
            v = *results[i];
        }
        ++summary.total;
        switch (v.verdict) {
        case Verdict::pass:
            ++summary.passed;
            break;
        case Verdict::skipped:
            ++summary.skipped;
            break;
        case Verdict::fail:
            ++summary.failed;
            if (v.counterexample())
                ++summary.counterexamples;
            summary.failures.push_back(v);
            break;
        }
        report << v.to_json(options.timing).dump() << '\n';
        report.flush();
        if (on_verdict)
            on_verdict(v);
        if (v.verdict == Verdict::fail && v.kind != CheckKind::conjecture) {
            summary.aborted = i + 1 < tasks.size();
            break;
        }
    }
    stop.store(true);
    for (auto& t : pool)
        t.join();
    report << summary.to_json().dump() << '\n';
    report.flush();
    return summary;
}

} // namespace cqf
