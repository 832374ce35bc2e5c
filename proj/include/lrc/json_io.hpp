#pragma once

#include <json.hpp>

#include "lrc/codebook.hpp"
#include "lrc/construct.hpp"
#include "lrc/locality.hpp"
#include "lrc/recover.hpp"
#include "lrc/structure.hpp"
#include "lrc/subcode.hpp"

// JSON file formats. Coordinates are 1-based on the wire; erased symbols
// are JSON null. Field order is stable, hence ordered_json throughout.

namespace lrc {

using json = nlohmann::ordered_json;

// {"q": int, "n": int, "codewords": [[int,...],...]}, codewords sorted
// lexicographically. Readers reject out-of-range symbols and duplicates.
json codebook_to_json(const Codebook& c);
Codebook codebook_from_json(const json& j, const Limits& limits = {});

// Same with "k" added after "n".
json systematic_to_json(const SystematicCode& c);
SystematicCode systematic_from_json(const json& j, const Limits& limits = {});

// [{"i": int, "locality": int|null, "witness": [int,...]|null}, ...]
json locality_profile_to_json(const LocalityProfile& profile);
LocalityProfile locality_profile_from_json(const json& j);

// {"steps":[{"i","S","T","sigma","size_after"}],"ell":int,"R":[int]}
json trace_to_json(const SubcodeTrace& trace);

// {"optimal","groups","partition":{"I","L","H"},"items","heavy_bound",
//  "applicable"[,"reason"]}
json structure_report_to_json(const StructureReport& report);

json bound_report_to_json(const BoundReport& report);
json singleton_report_to_json(const SingletonReport& report);
json tightness_report_to_json(const TightnessReport& report);

// {"construction":"pyramid","q","k","r","d"} or
// {"construction":"rs_mds","q","k","d"}
struct ConstructionSpec {
    enum class Kind { Pyramid, RsMds };
    Kind kind = Kind::Pyramid;
    int q = 0, k = 0, r = 0, d = 0;
};
ConstructionSpec construction_spec_from_json(const json& j);
json construction_spec_to_json(const ConstructionSpec& spec);

// {"seed": int} or {"perms": [[int,...],...]}
TwistSpec twist_spec_from_json(const json& j);

// {"word": [int|null, ...]}
json pattern_to_json(const ErasurePattern& pattern);
ErasurePattern pattern_from_json(const json& j);

// {"status":"unique"|"ambiguous"|"inconsistent"[,"word"][,"count"]}
json recovery_to_json(const RecoveryResult& result);

// [{"i": int, "S": [int,...]}, ...] replayed verbatim as first steps
Strategy forced_steps_from_json(const json& j);

}  // namespace lrc
