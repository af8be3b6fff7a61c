#include "partot/cli.hpp"

#include "partot/errors.hpp"
#include "partot/json_io.hpp"
#include "partot/spectral_sequence.hpp"
#include "partot/totalization.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

namespace partot::cli {

namespace {

using json_io::to_json;

Json nonzero_table(const BigradedGroups& groups) {
    Json j = Json::object();
    for (const auto& [st, g] : groups)
        if (!g.is_zero()) j[std::to_string(st.first) + "," + std::to_string(st.second)] = g.to_string();
    return j;
}

Json signature_json(const std::optional<WedgeSignature>& w) {
    if (!w) return nullptr;
    return Json{{"sphere_dim", w->sphere_dim}, {"count", w->count}};
}

const Json kStableModel = {"spaces replaced by bounded chain complexes of free abelian groups; loops act as shifts",
                           "equivalences checked as isomorphisms on integral homology"};

// "q=2" or "2".
int parse_assignment(const std::string& s, const std::string& name) {
    const auto eq = s.find('=');
    const std::string value = eq == std::string::npos ? s : s.substr(eq + 1);
    if (eq != std::string::npos && s.substr(0, eq) != name)
        throw InputError("expected " + name + "=<value>, got " + s);
    try {
        std::size_t used = 0;
        const int v = std::stoi(value, &used);
        if (used != value.size()) throw InputError("not an integer: " + s);
        return v;
    } catch (const std::logic_error&) {
        throw InputError("not an integer: " + s);
    }
}

std::size_t nonnegative(int v, const std::string& name) {
    if (v < 0) throw InputError(name + " must be nonnegative");
    return static_cast<std::size_t>(v);
}

void emit(const Json& report, const std::string& output, std::ostream& out) {
    const std::string text = render(report);
    if (output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(output);
    if (!file) throw InputError("cannot write " + output);
    file << text;
}

} // namespace

std::string render(const Json& j) { return j.dump(2) + "\n"; }

Json homology_report(const SimplicialComplex& k, bool reduced) {
    const auto h = simplicial_homology(k, reduced);
    Json j;
    j["reduced"] = reduced;
    j["homology"] = to_json(h);
    j["dimension"] = k.dimension();
    j["euler_characteristic"] = k.euler_characteristic();
    j["weakenings"] = Json::array();
    return j;
}

Json poset_report(const FinPoset& p, PosetAction action) {
    Json j;
    switch (action) {
    case PosetAction::dim:
        j["dim"] = poset_dimension(p);
        j["weakenings"] = Json::array();
        return j;
    case PosetAction::homology:
        j["elements"] = p.size();
        j["reduced_homology"] = to_json(simplicial_homology(order_complex(p), true));
        j["weakenings"] = Json::array();
        return j;
    case PosetAction::wedge_check: {
        const auto h = simplicial_homology(order_complex(p), true);
        bool free = true;
        for (const auto& g : h.groups) free = free && g.is_free();
        const auto w = wedge_signature(h);
        j["free"] = free;
        j["degree"] = w ? Json(w->sphere_dim) : Json(nullptr);
        j["rank"] = w ? Json(w->count) : Json(nullptr);
        j["weakenings"] = {"wedge of spheres certified by free integral homology in a single degree"};
        return j;
    }
    }
    return j;
}

Json inclusion_report(const InclusionReport& r) {
    Json j;
    j["p"] = r.p ? Json(*r.p) : Json(nullptr);
    j["complement_dim"] = r.complement_dim;
    j["d_max"] = r.d_max ? Json(*r.d_max) : Json(nullptr);
    j["unbounded"] = r.unbounded;
    j["diagnostics"] = r.diagnostics;
    j["disclaimer"] = r.disclaimer;
    Json pointwise = Json::array();
    for (const auto& pw : r.pointwise)
        pointwise.push_back({{"element", to_json(pw.element)}, {"in_sub", pw.in_sub}, {"signature", signature_json(pw.signature)}});
    j["pointwise"] = std::move(pointwise);
    j["weakenings"] = {"values of T certified as wedges of spheres by integral homology",
                       "desuspension read off from sphere dimension and dimension of the complement"};
    return j;
}

Json tot_bound_report(int n, int m) {
    const auto b = tot_truncation_bound(n, m);
    Json j;
    j["valid"] = b.valid;
    if (b.bound) j["bound"] = *b.bound;
    j["weakenings"] = {"arithmetic bound only; no totalization is built"};
    return j;
}

Json cover_report(const CoverReport& r) {
    Json j;
    j["n"] = r.n;
    j["r"] = r.r;
    j["bound"] = r.bound;
    j["acyclic_ok"] = r.precondition_ok;
    j["connectivity_ok"] = r.connectivity_ok;
    j["hocolim_matches"] = r.hocolim_matches;
    j["reduced_homology"] = to_json(r.reduced_homology);
    Json failures = Json::array();
    for (const auto& w : r.precondition_failures)
        failures.push_back({{"pieces", piece_numbers(w.pieces)}, {"reduced_homology", to_json(w.reduced)}});
    j["precondition_failures"] = std::move(failures);
    j["failures"] = r.failures;
    j["weakenings"] = r.weakenings;
    return j;
}

Json tot_report(const CosimplicialChain& x, std::optional<std::pair<int, int>> fiber, std::optional<int> stage) {
    const auto c = conormalize(x);
    Json j;
    j["truncation"] = x.truncation();
    if (fiber) {
        const auto [n, m] = *fiber;
        const auto h = homology(tower_fiber(c, n, m));
        j["fiber"] = {{"n", n}, {"m", m}, {"homology", to_json(h)}};
        if (m == n + 1) {
            const auto piece = homology(c.n.column(m));
            Json shifted = Json::object();
            bool matches = true;
            for (int i = h.lo; i <= h.hi(); ++i) {
                shifted[std::to_string(i)] = piece.at(i + m).to_string();
                matches = matches && h.at(i) == piece.at(i + m);
            }
            for (int t = piece.lo; t <= piece.hi(); ++t) matches = matches && piece.at(t) == h.at(t - m);
            j["identification"] = {{"piece", m}, {"shifted_piece_homology", shifted}, {"matches", matches}};
        }
    } else if (stage) {
        if (*stage < 0 || *stage > x.truncation()) throw InputError("--tot needs 0 <= n <= truncation");
        j["tot"] = {{"n", *stage}, {"homology", to_json(homology(stripe_complex(c, 0, *stage)))}};
    } else {
        Json stages = Json::array(), pieces = Json::array();
        for (int k = 0; k <= x.truncation(); ++k) {
            stages.push_back({{"n", k}, {"homology", to_json(homology(stripe_complex(c, 0, k)))}});
            pieces.push_back({{"s", k}, {"homology", to_json(homology(c.n.column(k)))}});
        }
        j["stages"] = std::move(stages);
        j["pieces"] = std::move(pieces);
    }
    j["weakenings"] = kStableModel;
    return j;
}

Json ss_report(const CosimplicialChain& x, int pages, std::optional<int> fringe) {
    const auto ss = spectral_sequence(x, pages);
    Json j;
    j["truncation"] = x.truncation();
    Json ps = Json::object(), ds = Json::object();
    for (int r = 1; r <= pages; ++r) {
        ps[std::to_string(r)] = nonzero_table(ss.page(r).entries);
        ds[std::to_string(r)] = nonzero_table(ss.page(r).differentials);
    }
    j["pages"] = std::move(ps);
    j["differentials"] = std::move(ds);
    j["E2"] = nonzero_table(ss.page(2).entries);
    j["e_infinity"] = nonzero_table(ss.e_infinity);
    j["graded_homology"] = nonzero_table(ss.graded_homology);
    j["converges"] = ss.converges;
    j["pages_consistent"] = ss.pages_consistent;
    j["e2_matches_levelwise_homology"] = e2_from_levelwise_homology(x) == ss.page(2).entries;
    if (fringe) {
        const auto report = fringe_filtration_check(ss, *fringe);
        Json entries = Json::array();
        for (const auto& e : report.entries)
            entries.push_back({{"s", e.s},
                               {"e2", e.e2.to_string()},
                               {"supports", e.supports},
                               {"hit_by", e.hit_by},
                               {"survives", e.survives},
                               {"in_range", e.in_range}});
        j["fringe"] = {{"n", report.n}, {"passed", report.passed}, {"entries", std::move(entries)}};
    }
    j["weakenings"] = kStableModel;
    if (fringe) j["weakenings"].push_back("fringe check is bookkeeping over the computed pages only");
    return j;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact integral checks for poset inclusions, covers and Tot towers", "partot"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string output, file;
    auto add_output = [&](CLI::App* sub) { sub->add_option("--output,-o", output, "Write the report to this path"); };

    auto* hom = app.add_subcommand("homology", "Homology of a simplicial complex given by facets");
    bool unreduced = false;
    hom->add_option("file", file, "Complex JSON {\"facets\": [...]}")->required();
    hom->add_flag("--unreduced", unreduced, "Unreduced homology");
    add_output(hom);

    auto* pos = app.add_subcommand("poset", "Order-complex homology, dimension or wedge check of a poset");
    int subset_size = -1, min_card = 1, max_card = -1, max_dim = -1;
    std::vector<std::string> subspace;
    std::string action = "homology";
    pos->add_option("--subset-size", subset_size, "Use the subsets of {0..N-1}");
    pos->add_option("--min-card", min_card, "Smallest subset size");
    pos->add_option("--max-card", max_card, "Largest subset size");
    pos->add_option("--subspace", subspace, "Use the subspaces of F_q^n: q=<prime> n=<dim>")->expected(2);
    pos->add_option("--max-dim", max_dim, "Largest subspace dimension");
    pos->add_option("action", action, "homology | dim | wedge-check")
        ->check(CLI::IsMember({"homology", "dim", "wedge-check"}));
    pos->add_option("file", file, "Poset JSON {\"elements\", \"relations\"}");
    add_output(pos);

    auto* del = app.add_subcommand("deloop", "Deloopability analysis of a poset inclusion");
    std::vector<int> tot_nm, subset_nr;
    std::vector<std::string> subspace_qnr;
    del->add_option("--tot", tot_nm, "Bound for the fiber of Tot_m -> Tot_n: n m")->expected(2);
    del->add_option("--subset", subset_nr, "Subsets of size <= r inside all nonempty subsets of an N-set: N r")
        ->expected(2);
    del->add_option("--subspace", subspace_qnr, "Subspaces of dimension <= r inside all of F_q^n: q n r")->expected(3);
    del->add_option("file", file, "Inclusion JSON {\"elements\", \"relations\", \"sub\"}");
    add_output(del);

    auto* cov = app.add_subcommand("cover", "Acyclicity, connectivity and bar-construction checks for a cover");
    int r = 0;
    cov->add_option("--r", r, "Acyclicity level r")->required();
    cov->add_option("file", file, "Cover JSON {\"complex\", \"pieces\", \"basepoint\"}")->required();
    add_output(cov);

    auto* tot = app.add_subcommand("tot", "Tot tower, stages and fibers of a cosimplicial chain object");
    std::vector<int> fiber_nm;
    int stage = -1;
    tot->add_option("--fiber", fiber_nm, "Fiber of Tot_m -> Tot_n: n m")->expected(2);
    tot->add_option("--tot", stage, "Homology of Tot_n");
    tot->add_option("file", file, "Cosimplicial JSON")->required();
    add_output(tot);

    auto* ss = app.add_subcommand("ss", "Spectral sequence of the Tot tower");
    int pages = 2, fringe = -1;
    ss->add_option("--pages", pages, "Report pages E_1 .. E_R");
    ss->add_option("--fringe", fringe, "Fringe bookkeeping above filtration N");
    ss->add_option("file", file, "Cosimplicial JSON")->required();
    add_output(ss);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*hom) {
            emit(homology_report(json_io::complex_from_json(json_io::read_file(file), file), !unreduced), output, out);
        } else if (*pos) {
            const PosetAction act = action == "dim"        ? PosetAction::dim
                                    : action == "wedge-check" ? PosetAction::wedge_check
                                                              : PosetAction::homology;
            FinPoset p;
            if (subset_size >= 0) {
                const auto n = nonnegative(subset_size, "--subset-size");
                p = subset_poset(n, nonnegative(min_card, "--min-card"),
                                 max_card < 0 ? n : nonnegative(max_card, "--max-card"));
            } else if (!subspace.empty()) {
                const auto n = nonnegative(parse_assignment(subspace.at(1), "n"), "n");
                p = subspace_poset(static_cast<unsigned>(nonnegative(parse_assignment(subspace.at(0), "q"), "q")), n,
                                   max_dim < 0 ? n : nonnegative(max_dim, "--max-dim"));
            } else if (!file.empty()) {
                p = json_io::poset_from_json(json_io::read_file(file), file);
            } else {
                throw InputError("poset needs --subset-size, --subspace or a file");
            }
            emit(poset_report(p, act), output, out);
        } else if (*del) {
            if (!tot_nm.empty()) {
                emit(tot_bound_report(tot_nm.at(0), tot_nm.at(1)), output, out);
            } else if (!subset_nr.empty()) {
                const auto n = nonnegative(subset_nr.at(0), "N"), rr = nonnegative(subset_nr.at(1), "r");
                auto inc = PosetInclusion::full_subposet(subset_poset(n, 1, n), subset_poset(n, 1, rr).elements());
                emit(inclusion_report(analyze_inclusion(inc)), output, out);
            } else if (!subspace_qnr.empty()) {
                const auto q = nonnegative(parse_assignment(subspace_qnr.at(0), "q"), "q");
                const auto n = nonnegative(parse_assignment(subspace_qnr.at(1), "n"), "n");
                const auto rr = nonnegative(parse_assignment(subspace_qnr.at(2), "r"), "r");
                const auto uq = static_cast<unsigned>(q);
                auto inc = PosetInclusion::full_subposet(subspace_poset(uq, n, n), subspace_poset(uq, n, rr).elements());
                emit(inclusion_report(analyze_inclusion(inc)), output, out);
            } else if (!file.empty()) {
                emit(inclusion_report(analyze_inclusion(json_io::inclusion_from_json(json_io::read_file(file), file))),
                     output, out);
            } else {
                throw InputError("deloop needs --tot, --subset, --subspace or a file");
            }
        } else if (*cov) {
            const auto report = verify_cover_theorem(json_io::cover_from_json(json_io::read_file(file), file), r);
            emit(cover_report(report), output, out);
            if (!report.precondition_ok) {
                err << "cover is not " << r << "-acyclic\n";
                return 4;
            }
        } else if (*tot) {
            const auto x = json_io::cosimplicial_from_json(json_io::read_file(file), file);
            std::optional<std::pair<int, int>> fb;
            if (!fiber_nm.empty()) {
                if (fiber_nm.at(0) < -1 || fiber_nm.at(0) > fiber_nm.at(1) || fiber_nm.at(1) > x.truncation())
                    throw InputError("--fiber needs -1 <= n <= m <= truncation");
                fb = std::make_pair(fiber_nm.at(0), fiber_nm.at(1));
            }
            emit(tot_report(x, fb, stage >= 0 ? std::optional<int>(stage) : std::nullopt), output, out);
        } else if (*ss) {
            const auto x = json_io::cosimplicial_from_json(json_io::read_file(file), file);
            emit(ss_report(x, pages, fringe >= 0 ? std::optional<int>(fringe) : std::nullopt), output, out);
        }
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << "\n";
        return 4;
    } catch (const InvariantError& e) {
        err << "invariant violated: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

} // namespace partot::cli
