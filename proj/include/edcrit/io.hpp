#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "edcrit/cases.hpp"
#include "edcrit/multipoly.hpp"
#include "edcrit/numlin.hpp"
#include "edcrit/oracle.hpp"
#include "edcrit/symsets.hpp"
#include "edcrit/transfer.hpp"
#include "edcrit/unipoly.hpp"

namespace edcrit::io {

using Json = nlohmann::json;

/// Parses a JSON document; syntax errors become InputError with the byte offset.
Json parse(const std::string& text, const std::string& origin = "input");
Json load_file(const std::string& path);

/// "1, 2.5,-3" -> (1, 2.5, -3)
Vector parse_vector_list(const std::string& text);

Vector vector_from_json(const Json& j);
Json to_json(const Vector& v);

/// {"rows": n, "cols": t, "data": [[...], ...]}
Matrix matrix_from_json(const Json& j);
Json to_json(const Matrix& m);

SymmetricSet set_from_json(const Json& j);
Json to_json(const SymmetricSet& s);

/// {"nvars": k, "terms": [{"exp": [...], "coef": c}, ...]}; coefficients may be
/// integers, decimal numbers (converted exactly) or strings like "-3/4".
MultiPoly multipoly_from_json(const Json& j);
Json to_json(const MultiPoly& p);

RatUniPoly unipoly_from_json(const Json& j);
Json to_json(const RatUniPoly& p);

Json to_json(const CriticalSet& c);
Json to_json(const MatrixCriticalSet& c);
Json to_json(const RegionVerdict& v);
Json to_json(const CountHistogram& h);
Json to_json(const OracleReport& r);
Json to_json(const std::vector<LedgerRow>& rows);

}  // namespace edcrit::io
