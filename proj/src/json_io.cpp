#include "partot/json_io.hpp"

#include "partot/errors.hpp"

#include <fstream>
#include <limits>

namespace partot::json_io {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw InputError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(where + ": missing field \"" + key + "\"");
    return *it;
}

const Json& array_of(const Json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array");
    return j;
}

int int_from_json(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
    const auto v = j.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw InputError(where + ": integer out of range");
    return static_cast<int>(v);
}

std::size_t size_from_json(const Json& j, const std::string& where) {
    const int v = int_from_json(j, where);
    if (v < 0) throw InputError(where + ": expected a nonnegative integer");
    return static_cast<std::size_t>(v);
}

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

std::vector<std::vector<Label>> facets_from_json(const Json& j, const std::string& where) {
    std::vector<std::vector<Label>> facets;
    const auto& arr = array_of(j, where);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::vector<Label> f;
        for (std::size_t v = 0; v < array_of(arr[i], at(where, i)).size(); ++v)
            f.push_back(label_from_json(arr[i][v], at(at(where, i), v)));
        facets.push_back(std::move(f));
    }
    return facets;
}

std::vector<LevelMap> maps_from_json(const Json& j, const std::string& where, int lo, int hi,
                                     const std::vector<ChainComplexInt>& levels, int source, int target) {
    std::vector<LevelMap> out;
    const auto& arr = array_of(j, where);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string here = at(where, i);
        const auto& per_degree = array_of(arr[i], here);
        if (per_degree.size() != static_cast<std::size_t>(hi - lo + 1))
            throw InputError(here + ": expected one matrix per degree " + std::to_string(lo) + ".." + std::to_string(hi));
        LevelMap f;
        for (int t = lo; t <= hi; ++t) {
            const auto tu = static_cast<std::size_t>(t - lo);
            f.push_back(matrix_from_json(per_degree[tu], levels[static_cast<std::size_t>(target)].rank(t),
                                         levels[static_cast<std::size_t>(source)].rank(t), at(here, tu)));
        }
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace

Json to_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

Integer integer_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos) return Integer(s);
    }
    throw InputError(where + ": expected an integer");
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(i, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    const auto& arr = array_of(j, where);
    if (arr.size() != rows)
        throw InputError(where + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(arr.size()));
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = array_of(arr[i], at(where, i));
        if (row.size() != cols)
            throw InputError(at(where, i) + ": expected " + std::to_string(cols) + " entries, got " +
                             std::to_string(row.size()));
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = integer_from_json(row[c], at(at(where, i), c));
    }
    return m;
}

Json to_json(const ChainComplexInt& c) {
    Json j;
    j["lo"] = c.lo();
    j["ranks"] = c.ranks();
    Json bd = Json::array();
    for (int k = c.lo() + 1; k <= c.hi(); ++k) bd.push_back(to_json(c.boundary_dense(k)));
    j["boundaries"] = std::move(bd);
    return j;
}

ChainComplexInt chain_complex_from_json(const Json& j, const std::string& where) {
    const int lo = int_from_json(field(j, "lo", where), where + ".lo");
    std::vector<std::size_t> ranks;
    const auto& r = array_of(field(j, "ranks", where), where + ".ranks");
    for (std::size_t i = 0; i < r.size(); ++i) ranks.push_back(size_from_json(r[i], at(where + ".ranks", i)));
    if (ranks.empty()) return ChainComplexInt::zero(lo, lo - 1);
    const Json empty = Json::array();
    const auto& bd = j.contains("boundaries") ? array_of(j["boundaries"], where + ".boundaries") : empty;
    if (bd.size() + 1 != ranks.size())
        throw InputError(where + ".boundaries: expected " + std::to_string(ranks.size() - 1) + " matrices");
    std::vector<Matrix> ds{Matrix(0, ranks[0])};
    for (std::size_t i = 0; i < bd.size(); ++i)
        ds.push_back(matrix_from_json(bd[i], ranks[i], ranks[i + 1], at(where + ".boundaries", i)));
    try {
        return ChainComplexInt(lo, std::move(ranks), ds);
    } catch (const InvariantError& e) {
        throw InvariantError(where + ": " + e.what());
    }
}

Json to_json(const AbelianGroup& g) { return g.to_string(); }

Json to_json(const Homology& h) {
    Json j = Json::object();
    for (int k = h.lo; k <= h.hi(); ++k) j[std::to_string(k)] = to_json(h.at(k));
    return j;
}

Json to_json(const Label& l) {
    if (l.is_integer()) return Json(l.as_integer());
    return Json(l.as_string());
}

Label label_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Label(j.get<std::int64_t>());
    if (j.is_string()) return Label(j.get<std::string>());
    throw InputError(where + ": a label must be an integer or a string");
}

SimplicialComplex complex_from_json(const Json& j, const std::string& where) {
    auto facets = facets_from_json(field(j, "facets", where), where + ".facets");
    std::optional<Label> base;
    if (j.contains("basepoint") && !j["basepoint"].is_null())
        base = label_from_json(j["basepoint"], where + ".basepoint");
    return complex_from_facets(facets, base);
}

Json to_json(const SimplicialComplex& k) {
    Json j;
    Json facets = Json::array();
    for (const auto& f : k.facet_labels()) {
        Json row = Json::array();
        for (const auto& l : f) row.push_back(to_json(l));
        facets.push_back(std::move(row));
    }
    j["facets"] = std::move(facets);
    if (auto b = k.basepoint()) j["basepoint"] = to_json(*b);
    return j;
}

FinPoset poset_from_json(const Json& j, const std::string& where) {
    if (!j.is_object()) throw InputError(where + ": expected an object");
    if (j.contains("q") && !j.contains("elements")) {
        const auto q = size_from_json(j["q"], where + ".q");
        const auto n = size_from_json(field(j, "n", where), where + ".n");
        const auto max_dim = j.contains("max_dim") ? size_from_json(j["max_dim"], where + ".max_dim") : n;
        if (!is_prime(static_cast<unsigned>(q))) throw InputError(where + ".q: not a prime");
        return subspace_poset(static_cast<unsigned>(q), n, max_dim);
    }
    std::vector<Label> elements;
    const auto& el = array_of(field(j, "elements", where), where + ".elements");
    for (std::size_t i = 0; i < el.size(); ++i) elements.push_back(label_from_json(el[i], at(where + ".elements", i)));
    std::vector<std::pair<Label, Label>> pairs;
    for (const char* key : {"leq", "relations"}) {
        if (!j.contains(key)) continue;
        const std::string path = where + "." + key;
        const auto& rel = array_of(j[key], path);
        for (std::size_t i = 0; i < rel.size(); ++i) {
            const std::string here = at(path, i);
            if (!rel[i].is_array() || rel[i].size() != 2) throw InputError(here + ": expected a pair [a, b]");
            pairs.emplace_back(label_from_json(rel[i][0], here), label_from_json(rel[i][1], here));
        }
    }
    return FinPoset::from_relation(std::move(elements), pairs);
}

PosetInclusion inclusion_from_json(const Json& j, const std::string& where) {
    auto d = poset_from_json(j, where);
    std::vector<Label> sub;
    const auto& s = array_of(field(j, "sub", where), where + ".sub");
    for (std::size_t i = 0; i < s.size(); ++i) sub.push_back(label_from_json(s[i], at(where + ".sub", i)));
    return PosetInclusion::full_subposet(std::move(d), sub);
}

CoverDiagram cover_from_json(const Json& j, const std::string& where) {
    const auto& cx = field(j, "complex", where);
    const auto facets = facets_from_json(field(cx, "facets", where + ".complex"), where + ".complex.facets");
    const auto x = complex_from_json(cx, where + ".complex");
    std::vector<SimplicialComplex> pieces;
    const auto& ps = array_of(field(j, "pieces", where), where + ".pieces");
    for (std::size_t i = 0; i < ps.size(); ++i) {
        std::vector<std::vector<Label>> chosen;
        const auto& idx = array_of(ps[i], at(where + ".pieces", i));
        for (std::size_t a = 0; a < idx.size(); ++a) {
            const std::size_t f = size_from_json(idx[a], at(at(where + ".pieces", i), a));
            if (f >= facets.size()) throw InputError(at(at(where + ".pieces", i), a) + ": no such facet");
            chosen.push_back(facets[f]);
        }
        if (chosen.empty()) throw InputError(at(where + ".pieces", i) + ": a piece needs at least one facet");
        pieces.push_back(generated_subcomplex(chosen));
    }
    std::optional<Label> base;
    if (j.contains("basepoint") && !j["basepoint"].is_null()) base = label_from_json(j["basepoint"], where + ".basepoint");
    return cover_from_subcomplexes(x, std::move(pieces), base);
}

CosimplicialChain cosimplicial_from_json(const Json& j, const std::string& where) {
    const int m = int_from_json(field(j, "truncation", where), where + ".truncation");
    if (m < 0) throw InputError(where + ".truncation: must be nonnegative");
    const auto& lv = array_of(field(j, "levels", where), where + ".levels");
    if (lv.size() != static_cast<std::size_t>(m + 1))
        throw InputError(where + ".levels: expected " + std::to_string(m + 1) + " levels");
    std::vector<ChainComplexInt> levels;
    for (std::size_t i = 0; i < lv.size(); ++i) levels.push_back(chain_complex_from_json(lv[i], at(where + ".levels", i)));

    int lo = 0, hi = -1;
    bool any = false;
    for (const auto& c : levels)
        if (!c.ranks().empty()) {
            lo = any ? std::min(lo, c.lo()) : c.lo();
            hi = any ? std::max(hi, c.hi()) : c.hi();
            any = true;
        }
    if (j.contains("lo")) lo = int_from_json(j["lo"], where + ".lo");
    if (j.contains("hi")) hi = int_from_json(j["hi"], where + ".hi");
    for (auto& c : levels) c = pad_complex(c, lo, hi);

    std::vector<std::vector<LevelMap>> cofaces, codegeneracies;
    const auto& cf = array_of(field(j, "cofaces", where), where + ".cofaces");
    const auto& cd = array_of(field(j, "codegeneracies", where), where + ".codegeneracies");
    if (cf.size() != static_cast<std::size_t>(m)) throw InputError(where + ".cofaces: expected " + std::to_string(m) + " lists");
    if (cd.size() != static_cast<std::size_t>(m))
        throw InputError(where + ".codegeneracies: expected " + std::to_string(m) + " lists");
    for (int k = 0; k < m; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        cofaces.push_back(maps_from_json(cf[ku], at(where + ".cofaces", ku), lo, hi, levels, k, k + 1));
        codegeneracies.push_back(maps_from_json(cd[ku], at(where + ".codegeneracies", ku), lo, hi, levels, k + 1, k));
    }
    return CosimplicialChain(lo, hi, std::move(levels), std::move(cofaces), std::move(codegeneracies));
}

Json to_json(const CosimplicialChain& x) {
    Json j;
    j["truncation"] = x.truncation();
    j["lo"] = x.lo();
    j["hi"] = x.hi();
    Json levels = Json::array();
    for (int s = 0; s <= x.truncation(); ++s) levels.push_back(to_json(x.level(s)));
    j["levels"] = std::move(levels);
    auto maps = [](const std::vector<std::vector<LevelMap>>& all) {
        Json out = Json::array();
        for (const auto& per_level : all) {
            Json lvl = Json::array();
            for (const auto& f : per_level) {
                Json per_degree = Json::array();
                for (const auto& m : f) per_degree.push_back(to_json(m));
                lvl.push_back(std::move(per_degree));
            }
            out.push_back(std::move(lvl));
        }
        return out;
    };
    j["cofaces"] = maps(x.cofaces());
    j["codegeneracies"] = maps(x.codegeneracies());
    return j;
}

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

} // namespace partot::json_io
