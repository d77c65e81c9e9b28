#pragma once

#include <string>

#include "json.hpp"

#include "bextlab/catring.hpp"

namespace bextlab {

using Json = nlohmann::json;

// Every file is {"format": 1, "kind": <kind>, "data": <payload>}. Structural
// problems (missing keys, wrong sizes, out-of-range entries) throw ParseError;
// mathematical validity is left to the validators.
//
// Shorthands accepted on input:
//   group     {"cyclic": n} | {"trivial": true} | {"product": [g, h]} | {"mul": [[..]..]}
//   ring      {"zmod": n} | {"zero_ring": n} | {"add": group, "mul": [[..]..], "unit": u}
//   bimodule  {"regular": true} | {"cyclic": m} | {"zero_action": group} | {"M", "left", "right"}
//   multiext  {"butterfly": cocycle} | {"identity": braided} | full tables
//   biext     g1, g2, x may be omitted (trivial tables)
// Output is always the full form.

Json to_json(const FinGroup& G);
FinGroup group_from_json(const Json& j);
Json to_json(const XMod& m);
XMod xmod_from_json(const Json& j);
Json to_json(const BraidedXMod& b);
BraidedXMod braided_from_json(const Json& j);
Json to_json(const BiextCocycle& c);
BiextCocycle biext_from_json(const Json& j);
Json to_json(const ButterflyCocycle& b);
ButterflyCocycle butterfly_from_json(const Json& j);
Json to_json(const MultiExt& m);
MultiExt multiext_from_json(const Json& j);
Json to_json(const FinRing& A);
FinRing ring_from_json(const Json& j);
Json to_json(const Bimodule& M);
Bimodule bimodule_from_json(const Json& j, const FinRing& A);
Json to_json(const Cochain5& xi);
Cochain5 cochain_from_json(const Json& j);
Json to_json(const RingPresentation& p);
RingPresentation presentation_from_json(const Json& j);
Json to_json(const MonoidData& m);
MonoidData monoid_from_json(const Json& j);
Json to_json(const Report& r);

Json make_document(const std::string& kind, Json data);
// Returns the payload; checks format and (when non-empty) kind.
Json open_document(const Json& doc, const std::string& kind);
Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
// Deterministic text: sorted keys, two-space indentation, trailing newline.
std::string dump(const Json& j);

}  // namespace bextlab
