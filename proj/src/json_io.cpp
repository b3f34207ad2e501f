#include "cqf/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "cqf/errors.hpp"

namespace cqf {

namespace {

int to_int(std::string_view s, const char* what)
{
    int v = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size())
        throw ParameterError(std::string("invalid integer in ") + what + ": '" + std::string(s) + "'");
    return v;
}

Json parse_text(const std::string& text, const std::string& origin)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError("invalid JSON in " + origin + ": " + e.what());
    }
}

Json number_or_string(const mpz_class& v)
{
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

Var parse_var(const std::string& name)
{
    if (name == "q")
        return Var::q;
    if (name == "p")
        return Var::p;
    if (name == "t")
        return Var::t;
    throw ParameterError("unknown polynomial variable '" + name + "'");
}

Json partition_json(const Partition& lambda)
{
    Json a = Json::array();
    for (int x : lambda.parts())
        a.push_back(x);
    return a;
}

} // namespace

// ---- posets ----------------------------------------------------------------

Json poset_to_json(const Poset& p)
{
    Json rel = Json::array();
    for (const auto& [a, b] : p.relations())
        rel.push_back({a, b});
    Json j;
    j["n"] = p.size();
    j["relations"] = rel;
    return j;
}

Poset poset_from_json(const Json& j)
{
    try {
        if (!j.is_object())
            throw ParameterError("poset JSON must be an object");
        const int n = j.at("n").get<int>();
        if (j.contains("type")) {
            const auto type = j.at("type").get<std::string>();
            if (type != "pnk")
                throw ParameterError("unknown poset type '" + type + "'");
            return Poset::pnk(n, j.at("k").get<int>());
        }
        std::vector<std::pair<int, int>> rel;
        for (const auto& r : j.at("relations")) {
            if (!r.is_array() || r.size() != 2)
                throw ParameterError("each relation must be a pair [a, b]");
            rel.emplace_back(r[0].get<int>(), r[1].get<int>());
        }
        return Poset::from_relations(n, rel);
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("malformed poset JSON: ") + e.what());
    }
}

Poset parse_poset_selector(std::string_view selector)
{
    if (selector.starts_with("pnk:")) {
        const auto body = selector.substr(4);
        const auto comma = body.find(',');
        if (comma == std::string_view::npos)
            throw ParameterError("poset selector must look like pnk:n,k");
        return Poset::pnk(to_int(body.substr(0, comma), "pnk selector"),
                          to_int(body.substr(comma + 1), "pnk selector"));
    }
    if (selector.starts_with("nuio:")) {
        const Json j = parse_text(std::string(selector.substr(5)), "nuio selector");
        return Poset::from_upper_bounds(j.get<std::vector<int>>());
    }
    if (selector.starts_with("@")) {
        const std::string path(selector.substr(1));
        std::ifstream in(path);
        if (!in)
            throw ParameterError("cannot read poset file '" + path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return poset_from_json(parse_text(ss.str(), path));
    }
    if (selector.starts_with("{"))
        return poset_from_json(parse_text(std::string(selector), "poset argument"));
    throw ParameterError("poset selector must be pnk:n,k, nuio:[...], @file.json or inline JSON");
}

std::optional<std::pair<int, int>> as_pnk(const Poset& p)
{
    const int n = p.size();
    for (int k = 1; k <= n; ++k)
        if (Poset::pnk(n, k) == p)
            return std::pair{n, k};
    return std::nullopt;
}

std::optional<std::vector<int>> nuio_upper_bounds(const Poset& p)
{
    if (!is_nuio(p))
        return std::nullopt;
    std::vector<int> b;
    for (int i = 1; i <= p.size(); ++i) {
        int m = i;
        for (int j = i + 1; j <= p.size(); ++j)
            if (!p.less(i, j))
                m = j;
        b.push_back(m);
    }
    return b;
}

std::string poset_descriptor(const Poset& p)
{
    if (const auto nk = as_pnk(p))
        return "pnk:" + std::to_string(nk->first) + "," + std::to_string(nk->second);
    if (const auto b = nuio_upper_bounds(p))
        return "nuio:" + Json(*b).dump();
    return poset_to_json(p).dump();
}

// ---- polynomials -----------------------------------------------------------

Json poly_to_json(const MultiPoly& f)
{
    std::vector<Var> vars;
    for (Var v : {Var::q, Var::p, Var::t})
        if (f.involves(v))
            vars.push_back(v);
    Json names = Json::array();
    for (Var v : vars)
        names.push_back(var_name(v));
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms()) {
        Json e = Json::array();
        for (Var v : vars)
            e.push_back(m[v]);
        terms.push_back({{"exp", e}, {"coef", c.get_str()}});
    }
    return {{"vars", names}, {"terms", terms}};
}

MultiPoly poly_from_json(const Json& j)
{
    try {
        std::vector<Var> vars;
        for (const auto& name : j.at("vars"))
            vars.push_back(parse_var(name.get<std::string>()));
        MultiPoly out;
        for (const auto& term : j.at("terms")) {
            const auto& e = term.at("exp");
            if (e.size() != vars.size())
                throw ParameterError("polynomial term has the wrong number of exponents");
            Monomial m;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                const int x = e[i].get<int>();
                if (x < 0)
                    throw ParameterError("negative exponent in polynomial JSON");
                m[vars[i]] = static_cast<std::uint16_t>(x);
            }
            mpz_class c;
            if (c.set_str(term.at("coef").get<std::string>(), 10) != 0)
                throw ParameterError("polynomial coefficient is not a decimal integer");
            out.add_term(m, c);
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("malformed polynomial JSON: ") + e.what());
    }
}

// ---- symmetric and quasisymmetric functions ---------------------------------

Json symfunc_to_json(const SymFunc& f)
{
    Json terms = Json::array();
    for (const auto& [lambda, c] : f.terms())
        terms.push_back({{"partition", partition_json(lambda)}, {"coef", poly_to_json(c)}});
    return {{"degree", f.degree()}, {"basis", basis_name(f.basis())}, {"terms", terms}};
}

SymFunc symfunc_from_json(const Json& j)
{
    try {
        SymFunc out(j.at("degree").get<int>(), parse_basis(j.at("basis").get<std::string>()));
        for (const auto& term : j.at("terms")) {
            const auto lambda = Partition::from_unsorted(term.at("partition").get<std::vector<int>>());
            if (lambda.size() != out.degree())
                throw ParameterError("partition size does not match the degree");
            out.add(lambda, poly_from_json(term.at("coef")));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("malformed symmetric function JSON: ") + e.what());
    }
}

Json qsym_to_json(const QSymFunc& f)
{
    Json terms = Json::array();
    for (const auto& [key, c] : f.terms()) {
        Json t;
        if (f.basis() == QBasis::F)
            t["set"] = key.members();
        else
            t["composition"] = key.composition();
        t["coef"] = poly_to_json(c);
        terms.push_back(t);
    }
    return {{"degree", f.degree()}, {"basis", qbasis_name(f.basis())}, {"terms", terms}};
}

Json graded_to_json(const SymFunc& f)
{
    Json out = Json::array();
    for (int j = 0; j <= f.t_degree(); ++j) {
        Json rec = symfunc_to_json(f.t_piece(j));
        rec["t_degree"] = j;
        out.push_back(rec);
    }
    return out;
}

Json graded_to_json(const QSymFunc& f)
{
    int top = -1;
    for (const auto& [key, c] : f.terms())
        top = std::max(top, c.degree(Var::t));
    Json out = Json::array();
    for (int j = 0; j <= top; ++j) {
        Json rec = qsym_to_json(f.t_piece(j));
        rec["t_degree"] = j;
        out.push_back(rec);
    }
    return out;
}

Json integers_to_json(const std::vector<mpz_class>& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(number_or_string(x));
    return out;
}

Json moment_graph_to_json(const MomentGraph& g)
{
    auto label = [](const Permutation& s) {
        std::string out;
        for (int i = 1; i <= s.size(); ++i) {
            if (s.size() > 9 && i > 1)
                out += ' ';
            out += std::to_string(s(i));
        }
        return out;
    };
    Json vertices = Json::array();
    for (const auto& v : g.vertices)
        vertices.push_back(label(v));
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges)
        edges.push_back({label(g.vertices[a]), label(g.vertices[b])});
    return {{"n", g.n}, {"vertices", vertices}, {"edges", edges}};
}

} // namespace cqf
