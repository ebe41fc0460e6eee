#pragma once

#include <string>

#include <json.hpp>

#include "bourbakikit/bourbaki.hpp"
#include "bourbakikit/catalog.hpp"
#include "bourbakikit/koszul.hpp"
#include "bourbakikit/matrix.hpp"
#include "bourbakikit/polynomial.hpp"
#include "bourbakikit/rees.hpp"

namespace bbk {

using json = nlohmann::json;

// Emitters produce canonical JSON: terms in canonical monomial order,
// coefficients as "num/den", object keys alphabetical under dump(). Identical
// values serialize to identical bytes.
json to_json(const Polynomial& f);
json to_json(const PolyMatrix& m);
json to_json(const IdealGens& g);
json to_json(const BourbakiCertificate& c);
json to_json(const ExtractionResult& r);
json to_json(const KoszulMap& d);
json to_json(const LabelCombo& c);
json to_json(const CatalogBundle& b);
json to_json(const MultigradedSearchReport& r);
json to_json(const GenericSearchResult& r);
json to_json(const HilbertBurchResult& r);
json to_json(const SemigroupDecomposition& d);
json to_json(const NormalityReport& r);
json to_json(const CanonicalModuleResult& r);
json to_json(const ReductionReport& r);

// Parsers accept any term order and normalize; they throw
// std::invalid_argument with a field path on malformed input.
Polynomial polynomial_from_json(const json& j);
PolyMatrix matrix_from_json(const json& j);
IdealGens ideal_from_json(const json& j);

// Stable rendering used for hashing and file output.
std::string dump_canonical(const json& j);

// FNV-1a 64-bit hash of the canonical serialization, "fnv1a:" + 16 hex digits.
std::string fingerprint(const PolyMatrix& m);

}  // namespace bbk
