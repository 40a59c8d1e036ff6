#pragma once

#include "poramsey/coloring_search.hpp"
#include "poramsey/engines.hpp"
#include "poramsey/grid.hpp"
#include "poramsey/interp.hpp"
#include "poramsey/structure.hpp"

#include <json.hpp>

#include <string>

namespace poramsey::io {

using Json = nlohmann::ordered_json;

/// {"p", "size", "partial_order", "linear_orders"} plus an optional "hasse" flag.
/// Throws InputError when fields are missing or of the wrong type; p defaults to the
/// number of linear orders when absent.
RawStructure raw_structure_from_json(const Json & j);
/// Parses and validates (InvalidStructure on a broken invariant).
Structure structure_from_json(const Json & j);
Structure load_structure(const std::string & path);

Json to_json(const Structure & s);
Json to_json(const LinearOrder & order);
Json to_json(const AnchoredSequence & a);
Json to_json(const AnchoredRigidSurjection & r);
Json to_json(const Tuple & t);
Json to_json(const ColoringCertificate & c);
Json to_json(const WitnessParams & w);
Json to_json(const GridStructure & g);
Json to_json(const ConstructResult & r);
Json to_json(const InterpretationReport & r);

/// Parses a file or a JSON text; throws InputError with the parser's message.
Json parse(const std::string & text);
Json read_file(const std::string & path);

/// "0,2,1" -> anchored sequence in `ambient`. Throws InputError on bad syntax.
AnchoredSequence parse_anchor(const std::string & text, int ambient);
std::vector<int> parse_int_list(const std::string & text);

/// Hasse diagram of P; nodes are labelled with their L_0 rank.
std::string to_dot(const Structure & s, const std::string & name = "P");

} // namespace poramsey::io
