#pragma once

#include <json.hpp>

#include "toricsys/admissible.hpp"
#include "toricsys/pseudoheight.hpp"
#include "toricsys/surface.hpp"
#include "toricsys/toric.hpp"
#include "toricsys/twist.hpp"

namespace toricsys {

using Json = nlohmann::ordered_json;

// {"lattice": id, "coords": [...]}
Json to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const Json& j);

// {"lattice": id, "entries": [[...], ...]}
Json to_json(const ToricSystem& ts);
ToricSystem toric_system_from_json(const Json& j);

// {"start": class, "steps": [class, ...], "result": class}
Json to_json(const ReductionTrace& trace);
ReductionTrace trace_from_json(const Json& j);

Json to_json(const ExceptionalityReport& r);
Json to_json(const EInvariant& e);
Json to_json(const ChainEvaluation& c);
Json to_json(const PseudoheightResult& r);
Json to_json(const Sequence& s);

// Reads a file, throwing DomainError when it is missing or malformed.
Json read_json_file(const std::string& path);

}  // namespace toricsys
