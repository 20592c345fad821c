#pragma once

#include "json.hpp"
#include <string>

#include "t1p/pipeline.hpp"

namespace t1p {

using Json = nlohmann::ordered_json;

// {"skeleton_rotations": {v: [...]}, "crossings": [[[a,c],[b,d]], ...], "dummies": [...]}
Json embedding_to_json(const T1PEmbedding& e);
T1PEmbedding embedding_from_json(const Json& j);

// A JSON number when it fits in 64 bits, otherwise a decimal string.
Json count_to_json(const Count& c);

Json delta_to_json(const GraphDelta& d);
Json trace_entry_to_json(const TraceEntry& e);
// One JSON object per line.
std::string trace_to_jsonl(const ReductionTrace& t);

// {"schema": 1, "is_t1p", "count", "witness", "reason", "trace_len"}
Json result_to_json(const RecognitionResult& r);

}  // namespace t1p
