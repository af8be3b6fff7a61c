#pragma once

#include "partot/cosimplicial.hpp"
#include "partot/cover.hpp"
#include "partot/deloop.hpp"
#include "partot/poset.hpp"
#include "partot/simplicial_complex.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

namespace partot::cli {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "partot 0.1.0";

enum class PosetAction { homology, dim, wedge_check };

// Report builders. Every report has a "weakenings" array naming the
// homology-level stand-ins it relies on (empty when the result is exact).

Json homology_report(const SimplicialComplex& k, bool reduced);
Json poset_report(const FinPoset& p, PosetAction action);
Json inclusion_report(const InclusionReport& r);
Json tot_bound_report(int n, int m);
Json cover_report(const CoverReport& r);
/// Tower homology by default; one stage with `stage`; a fiber (and, for
/// m = n + 1, its comparison with the shifted piece N^m) with `fiber`.
Json tot_report(const CosimplicialChain& x, std::optional<std::pair<int, int>> fiber, std::optional<int> stage);
/// Nonzero entries of E_1 .. E_pages keyed "s,t", E_infinity, the graded
/// homology of Tot_M and the E_2 comparison; fringe bookkeeping on request.
Json ss_report(const CosimplicialChain& x, int pages, std::optional<int> fringe);

/// Pretty-printed with sorted keys and a trailing newline.
std::string render(const Json& j);

/// Runs one command. Exit codes: 0 success, 2 input error, 3 invariant
/// violation, 4 precondition failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace partot::cli
