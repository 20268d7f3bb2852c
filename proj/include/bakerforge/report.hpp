#pragma once

// JSON, CSV and text renderings of the module results.
//
// Intervals are written as ["lo", "hi"] decimal strings rounded outward, complex
// enclosures as {mid_re, mid_im, rad}. Object keys are sorted, so identical
// inputs give byte-identical output.

#include "json.hpp"

#include <string>

#include "bakerforge/bounds.hpp"
#include "bakerforge/forms.hpp"
#include "bakerforge/nested_log.hpp"
#include "bakerforge/pade.hpp"

namespace bakerforge {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "baker-forge/1";

enum class Format { Json, Csv, Text };
Format parse_format(const std::string& name);

Json to_json(const Interval& x, int digits = 20);
Json to_json(const ComplexInterval& z, int digits = 20);
Json to_json(Check c);
Json to_json(const QuadInt& z);
Json to_json(const FieldElem& z);

Json to_json(const GTuple& g);
Json to_json(const AlphaReport& rep);
Json to_json(const S2Result& s);
Json to_json(const ZResult& z);
Json to_json(const EpsilonChain& c);
Json to_json(const SiegelSolution& s);
Json to_json(const NuChoice& c);
Json to_json(const PadeSystem& sys);
Json to_json(const DerivedFamily& fam);
Json to_json(const DeterminantCheck& d);
Json to_json(const NumericalForms& f);
Json to_json(const RawBoundReport& r);
Json to_json(const QRReport& r);
Json to_json(const ConvergenceReport& r);
Json to_json(const BoundReport& b);
Json to_json(const Cor23Report& r);
Json to_json(const Cor24Report& r);
Json to_json(const ComparisonReport& c);
Json to_json(const PresetReport& p);
Json to_json(const EmpiricalTable& t);

/// {"schema", "command", "precision", "ok", "result"}.
Json envelope(const std::string& command, Precision prec, bool ok, Json result);

/// One "path,value" line per leaf, paths dotted, arrays indexed.
std::string to_csv(const Json& j);
/// One "path: value" line per leaf.
std::string to_text(const Json& j);
std::string render(const Json& j, Format f);

}  // namespace bakerforge
