#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "rcclab/automorphism.hpp"
#include "rcclab/constructions.hpp"
#include "rcclab/gf.hpp"
#include "rcclab/rcc.hpp"

namespace rcclab::io {

using nlohmann::json;

/// Parses text; malformed input raises InvalidInput carrying the byte position.
json parse(const std::string& text);
/// Reads a file, or stdin for "-".
json read_json(const std::string& path);

json to_json(const FiniteGroup& g);
json to_json(const GFPoly& f);
json to_json(const GFMatrix& a);
json to_json(const Automorphism& a);  // {"perm": [...]}
json to_json(const CycleStructure& cs);
json to_json(const FastPathCertificate& c);
json to_json(const ConstructedInstance& inst);

/// Accepts a table group {"order","table",...}, a permutation group {"degree","generators"},
/// {"catalog": name}, a bare catalog string, or a construct output (uses its "group").
FiniteGroup group_from_json(const json& j, const Limits& limits = default_limits());
GFPoly poly_from_json(const json& j);
GFMatrix matrix_from_json(const json& j);
/// {"perm": [...]} or {"gens": [...], "images": [...]}; a construct output uses its "automorphism".
Automorphism automorphism_from_json(const FiniteGroup& g, const json& j);

/// {"rcc","order","zeta","lambda","certificate","witness"} for one automorphism.
json verdict_record(std::span<const Elem> perm, std::size_t group_order, bool nilpotent,
                    bool all_certificates = false);
json verdict_record(const Automorphism& a, bool all_certificates = false);

struct AnalyzeOptions {
  bool records = true;
  bool all_certificates = false;
};

/// Full Aut(G) report; a packaged automorphism in the input is reported separately.
json analyze(const json& input, const AnalyzeOptions& opts = {}, const Limits& limits = default_limits());

json frobenius_report(const GFMatrix& a);
json poly_order_report(const GFPoly& f, const Limits& limits = default_limits());
json regular_basis_report(const GFMatrix& a, const Limits& limits = default_limits());

}  // namespace rcclab::io
