#pragma once

#include "partot/chain_complex.hpp"
#include "partot/cosimplicial.hpp"
#include "partot/cover.hpp"
#include "partot/poset.hpp"
#include "partot/simplicial_complex.hpp"

#include <json.hpp>

#include <string>

namespace partot::json_io {

using Json = nlohmann::json;

// Every reader throws InputError with the offending path on malformed input.

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json(const Integer& v);
Integer integer_from_json(const Json& j, const std::string& where);

/// A matrix is a list of rows. Zero-row matrices are [] and take their
/// column count from `cols`.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);

/// {"lo": l, "ranks": [r_l, ..., r_h], "boundaries": [d_{l+1}, ..., d_h]}.
Json to_json(const ChainComplexInt& c);
ChainComplexInt chain_complex_from_json(const Json& j, const std::string& where);

/// "Z^2 + Z/3" style.
Json to_json(const AbelianGroup& g);
/// Degree (as a string key) -> group, for every degree in the stored range.
Json to_json(const Homology& h);

Json to_json(const Label& l);
Label label_from_json(const Json& j, const std::string& where);

/// {"facets": [[labels]], "basepoint": label?}
SimplicialComplex complex_from_json(const Json& j, const std::string& where);
Json to_json(const SimplicialComplex& k);

/// {"elements": [labels], "leq": [[a, b], ...]} with a <= b; covering pairs
/// suffice and "relations" is accepted as an alias. A subspace poset may be
/// given as {"q": p, "n": k, "max_dim": r}.
FinPoset poset_from_json(const Json& j, const std::string& where);

/// A poset as above plus "sub": [labels] naming the full subposet.
PosetInclusion inclusion_from_json(const Json& j, const std::string& where);

/// {"complex": {...}, "pieces": [[facet indices into complex.facets]],
///  "basepoint": label?}
CoverDiagram cover_from_json(const Json& j, const std::string& where);

/// {"truncation": M, "lo"?: l, "hi"?: h, "levels": [chain complexes],
///  "cofaces": [[[matrix per degree] per i] per k],
///  "codegeneracies": [[[matrix per degree] per j] per k]}.
/// cofaces[k][i] is d^i out of X^k; codegeneracies[k][j] is s^j out of X^{k+1}.
CosimplicialChain cosimplicial_from_json(const Json& j, const std::string& where);
Json to_json(const CosimplicialChain& x);

/// Parses a file; throws InputError if it cannot be read or is not JSON.
Json read_file(const std::string& path);

} // namespace partot::json_io
