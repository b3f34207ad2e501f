#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cqf/chromatic.hpp"
#include "cqf/errors.hpp"
#include "cqf/eulerian.hpp"
#include "cqf/json_io.hpp"
#include "cqf/verify.hpp"

using namespace cqf;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void emit(const Json& j, const std::string& out)
{
    if (out.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream f(out);
    if (!f)
        throw IoError("cannot write '" + out + "'");
    f << j.dump(2) << '\n';
}

struct ComputeArgs {
    std::string what;
    std::string poset;
    std::optional<int> n;
    std::string basis = "e";
    std::string flavor = "h";
    bool omega_side = false;
    std::string out;
};

int run_compute(const ComputeArgs& a)
{
    auto need_poset = [&] {
        if (a.poset.empty())
            throw ParameterError("--poset is required for 'compute " + a.what + "'");
        return parse_poset_selector(a.poset);
    };
    Json j;
    if (a.what == "x") {
        const Poset p = need_poset();
        j["poset"] = poset_descriptor(p);
        j["omega"] = a.omega_side;
        if (a.basis == "F") {
            const QSymFunc w = omega_x_via_F(p);
            j["function"] = graded_to_json(a.omega_side ? w : omega_F(w));
        } else {
            SymFunc x = x_sym(p, Basis::e);
            if (a.omega_side)
                x = omega(x);
            j["function"] = graded_to_json(convert_basis(x, parse_basis(a.basis)));
        }
    } else if (a.what == "eulerian") {
        const Poset p = need_poset();
        const auto r = eulerian_poly(p);
        Json by_j = Json::array();
        for (const auto& c : r.by_j)
            by_j.push_back(poly_to_json(c));
        j = {{"poset", poset_descriptor(p)}, {"A", poly_to_json(r.A)}, {"by_j", by_j}, {"text", r.A.to_string()}};
    } else if (a.what == "triple") {
        const Poset p = need_poset();
        const MultiPoly t = triple_poly(p);
        j = {{"poset", poset_descriptor(p)}, {"A", poly_to_json(t)}, {"text", t.to_string()}};
    } else if (a.what == "betti") {
        j = integers_to_json(betti(need_poset()));
    } else if (a.what == "moment") {
        j = moment_graph_to_json(moment_graph(need_poset()));
    } else if (a.what == "series") {
        if (!a.n)
            throw ParameterError("--n is required for 'compute series'");
        if (a.flavor != "h" && a.flavor != "e")
            throw ParameterError("--flavor must be h or e");
        const SymFunc q = toric_series(*a.n, a.flavor == "h" ? Flavor::h : Flavor::e);
        j = graded_to_json(convert_basis(q, parse_basis(a.basis == "F" ? "h" : a.basis)));
    } else {
        throw ParameterError("unknown quantity '" + a.what + "'");
    }
    emit(j, a.out);
    return 0;
}

struct CheckArgs {
    std::string name;
    std::string poset;
    std::optional<int> n;
    std::optional<int> d;
    bool fault = false;
};

int run_single_check(const CheckArgs& a)
{
    const CheckInfo* info = find_check(a.name);
    if (!info)
        throw ParameterError("unknown check '" + a.name + "'");
    Instance inst;
    if (!a.poset.empty()) {
        inst = Instance::of(parse_poset_selector(a.poset), a.d);
    } else if (a.n) {
        if (info->domain != Domain::degree)
            throw ParameterError("check '" + a.name + "' needs --poset");
        inst = Instance::degree(*a.n, a.d);
    } else {
        throw ParameterError("give --poset or --n");
    }
    const auto v = run_check(a.name, inst, RunOptions{a.fault});
    std::cout << v.to_json().dump() << '\n';
    if (v.counterexample())
        std::cerr << "COUNTEREXAMPLE " << v.check << " " << v.instance << '\n';
    return v.verdict == Verdict::fail ? kExitFail : 0;
}

struct SweepArgs {
    int n_min = 1;
    int n_max = 1;
    std::string checks = "all";
    int jobs = 1;
    std::string report;
    bool no_timing = false;
    std::string fault;
};

int run_sweep(const SweepArgs& a)
{
    SweepOptions opt;
    opt.n_min = a.n_min;
    opt.n_max = a.n_max;
    opt.checks = select_checks(a.checks);
    opt.jobs = a.jobs;
    opt.timing = !a.no_timing;
    if (!a.fault.empty()) {
        if (!find_check(a.fault))
            throw ParameterError("unknown check '" + a.fault + "'");
        opt.fault_check = a.fault;
    }
    std::ofstream out(a.report);
    if (!out)
        throw IoError("cannot write report '" + a.report + "'");
    const auto summary = sweep(opt, out, [](const CheckVerdict& v) {
        if (v.counterexample())
            std::cerr << "COUNTEREXAMPLE " << v.check << " " << v.instance << " " << v.witness.dump() << '\n';
        else if (v.verdict == Verdict::fail)
            std::cerr << "FAILED " << v.check << " " << v.instance << " " << v.witness.dump() << '\n';
    });
    std::cout << summary.to_json().dump() << '\n';
    return summary.exit_code();
}

int run_cache(const std::string& cmd, const std::string& dir_arg)
{
    std::filesystem::path dir;
    if (!dir_arg.empty())
        dir = dir_arg;
    else if (const auto d = default_cache_dir())
        dir = *d;
    else
        throw ParameterError("cache persistence is disabled (CQF_CACHE_DIR=off); pass --dir");
    if (cmd == "stats") {
        const auto s = cache_stats(dir);
        std::cout << Json{{"dir", dir.string()}, {"degrees", s.degrees}, {"files", s.files}, {"bytes", s.bytes}}.dump()
                  << '\n';
    } else if (cmd == "clear") {
        cache_clear(dir);
        std::cout << Json{{"dir", dir.string()}, {"cleared", true}}.dump() << '\n';
    } else {
        throw ParameterError("cache command must be stats or clear");
    }
    return 0;
}

int run_list()
{
    for (const auto& c : check_registry()) {
        const char* dom = c.domain == Domain::degree ? "degree" : c.domain == Domain::nuio ? "nuio" : "poset";
        std::cout << Json{{"name", c.name},
                          {"kind", check_kind_name(c.kind)},
                          {"domain", dom},
                          {"n", {c.min_n, c.max_n}},
                          {"summary", c.summary}}
                         .dump()
                  << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chromatic quasisymmetric functions and q-Eulerian polynomials"};
    app.require_subcommand(1);

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "Compute a quantity for a poset or degree");
    compute->add_option("what", ca.what, "x | eulerian | triple | betti | series | moment")->required();
    compute->add_option("--poset", ca.poset, "pnk:n,k | nuio:[b1,...] | @file.json | inline JSON");
    compute->add_option("--n", ca.n, "degree (series)");
    compute->add_option("--basis", ca.basis, "m | e | h | p | s | F")->capture_default_str();
    compute->add_option("--flavor", ca.flavor, "series flavor h | e")->capture_default_str();
    compute->add_flag("--omega", ca.omega_side, "apply omega to X");
    compute->add_option("--out", ca.out, "write JSON to this file");

    CheckArgs ka;
    auto* check = app.add_subcommand("check", "Run one named check on one instance");
    check->add_option("name", ka.name, "check name (see 'cqf list')")->required();
    check->add_option("--poset", ka.poset, "poset selector");
    check->add_option("--n", ka.n, "degree");
    check->add_option("--d", ka.d, "root-of-unity order");
    check->add_flag("--inject-fault", ka.fault, "perturb the first compared value");

    SweepArgs sa;
    auto* sw = app.add_subcommand("sweep", "Run checks over every natural unit interval order up to n");
    sw->add_option("--n-min", sa.n_min)->capture_default_str();
    sw->add_option("--n-max", sa.n_max)->required();
    sw->add_option("--checks", sa.checks, "all | theorems | conjectures | identities | name,name,...")
        ->capture_default_str();
    sw->add_option("--jobs", sa.jobs)->capture_default_str();
    sw->add_option("--report", sa.report, "JSON-lines report file")->required();
    sw->add_flag("--no-timing", sa.no_timing, "omit elapsed times for byte-identical reports");
    sw->add_option("--inject-fault", sa.fault, "perturb the first instance of this check");

    std::string cache_cmd, cache_dir;
    auto* cache = app.add_subcommand("cache", "Inspect or clear the transition cache");
    cache->add_option("command", cache_cmd, "stats | clear")->required();
    cache->add_option("--dir", cache_dir, "cache directory (default: CQF_CACHE_DIR or ./cache)");

    auto* list = app.add_subcommand("list", "List the registered checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*compute)
            return run_compute(ca);
        if (*check)
            return run_single_check(ka);
        if (*sw)
            return run_sweep(sa);
        if (*cache)
            return run_cache(cache_cmd, cache_dir);
        if (*list)
            return run_list();
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
