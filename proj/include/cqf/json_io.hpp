#ifndef CQF_JSON_IO_HPP
#define CQF_JSON_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cqf/eulerian.hpp"
#include "cqf/poset.hpp"
#include "cqf/symfunc.hpp"

namespace cqf {

using Json = nlohmann::ordered_json;

// {"n": 4, "relations": [[1,3], ...]} or {"type": "pnk", "n": 6, "k": 3}.
Json poset_to_json(const Poset& p);
Poset poset_from_json(const Json& j);
// "pnk:n,k", "@file.json" or inline JSON text.
Poset parse_poset_selector(std::string_view selector);
// Compact reproducible label: "pnk:n,k", "nuio:[b_1,...]" or the relation JSON.
std::string poset_descriptor(const Poset& p);
// For a natural unit interval order: b_i = max{j : not i <_P j}.
std::optional<std::vector<int>> nuio_upper_bounds(const Poset& p);
// (n, k) when p equals P_{n,k}.
std::optional<std::pair<int, int>> as_pnk(const Poset& p);

// {"vars": ["q","t"], "terms": [{"exp": [1,2], "coef": "3"}]}
Json poly_to_json(const MultiPoly& f);
MultiPoly poly_from_json(const Json& j);

Json symfunc_to_json(const SymFunc& f);
SymFunc symfunc_from_json(const Json& j);
Json qsym_to_json(const QSymFunc& f);

// One record per t-degree, the coefficients there being polynomials in the other variables.
Json graded_to_json(const SymFunc& f);
Json graded_to_json(const QSymFunc& f);

Json integers_to_json(const std::vector<mpz_class>& v);
Json moment_graph_to_json(const MomentGraph& g);

} // namespace cqf

#endif
