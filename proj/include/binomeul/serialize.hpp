#pragma once

// JSON and CSV renderings. Big integers are decimal strings and rationals are
// "a/b" strings so no consumer has to guess at precision.

#include <string>

#include "json.hpp"

#include "binomeul/polyring.hpp"
#include "binomeul/simplicial.hpp"
#include "binomeul/symfunc.hpp"

namespace binomeul {

using Json = nlohmann::ordered_json;

std::string to_string(const mpq_class& q);

/// {"coeffs": ["1", "8", "4"]}
Json to_json(const IntPolynomial& p);
/// {"n": 4, "gammas": ["1", "61", "57"]}
Json to_json(const GammaExpansion& g);
/// {"degree": n, "p": {"2,1": "1/3"}}
Json to_json(const SymF& f);
/// {"s": {"2,1": "1"}}
Json schur_json(const SymF& f);

enum class Basis { p, s };
/// One entry per power of t.
Json to_json(const TPoly& p, Basis basis = Basis::p);
/// {"N": N, "terms": [TPoly, ...]}
Json to_json(const ZSeries& s, Basis basis = Basis::p);
/// {"vertices": [...], "facets": [[...]]}
Json to_json(const SimplicialComplex& c);

/// One facet per line, canonical vertex tokens separated by spaces.
std::string facet_text(const SimplicialComplex& c);

/// "c0;c1;..."
std::string csv_coeffs(const IntPolynomial& p);
std::string csv_row(int n, int r, const std::string& statistic, const IntPolynomial& p);
inline const char* csv_header() { return "n,r,statistic,polynomial"; }

}  // namespace binomeul
