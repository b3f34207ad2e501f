#ifndef CQF_VERIFY_HPP
#define CQF_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cqf/json_io.hpp"
#include "cqf/poset.hpp"

namespace cqf {

// A failing theorem or identity means a bug (or a falsified result) and stops
// a sweep; a failing conjecture is a counterexample and the sweep goes on.
enum class CheckKind { theorem, conjecture, identity };
const char* check_kind_name(CheckKind k);

// What a check is instantiated on: a degree n, every natural unit interval
// order on [n], or any poset on [n].
enum class Domain { degree, nuio, any_poset };

enum class Verdict { pass, fail, skipped };
const char* verdict_name(Verdict v);

struct Instance {
    int n = 0;
    std::optional<Poset> poset;
    // root-of-unity checks: a single d instead of every divisor of n
    std::optional<int> d;

    static Instance degree(int n, std::optional<int> d = std::nullopt);
    static Instance of(const Poset& p, std::optional<int> d = std::nullopt);
    std::string descriptor() const;
};

struct CheckVerdict {
    std::string check;
    CheckKind kind = CheckKind::theorem;
    std::string instance;
    Verdict verdict = Verdict::pass;
    // first differing key with both values; null unless failed
    Json witness;
    // computed values worth reporting on success (e.g. root-of-unity evaluations)
    Json values;
    std::string reason;
    std::int64_t elapsed_ms = 0;

    bool counterexample() const { return verdict == Verdict::fail && kind == CheckKind::conjecture; }
    Json to_json(bool timing = true) const;
};

struct CheckInfo {
    std::string name;
    CheckKind kind;
    Domain domain;
    int min_n;
    int max_n;
    std::string summary;
};

const std::vector<CheckInfo>& check_registry();
const CheckInfo* find_check(std::string_view name);
// "all", "theorems", "conjectures", "identities" or a comma-separated list of
// names; ParameterError on an unknown name.
std::vector<std::string> select_checks(std::string_view list);

struct RunOptions {
    // perturb the first value compared, to exercise the failure path
    bool inject_fault = false;
};

// ParameterError for an unknown name; out-of-domain instances are skipped.
CheckVerdict run_check(std::string_view name, const Instance& instance, const RunOptions& options = {});

struct SweepOptions {
    int n_min = 1;
    int n_max = 1;
    std::vector<std::string> checks;
    int jobs = 1;
    bool timing = true;
    // inject a fault into the first instance of this check
    std::optional<std::string> fault_check;
};

struct SweepSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::size_t counterexamples = 0;
    bool aborted = false;
    std::vector<CheckVerdict> failures;

    int exit_code() const { return failed == 0 ? 0 : 1; }
    Json to_json() const;
};

// Writes one JSON line per verdict in a fixed order, then a summary line.
SweepSummary sweep(const SweepOptions& options, std::ostream& report,
                   const std::function<void(const CheckVerdict&)>& on_verdict = {});

} // namespace cqf

#endif
