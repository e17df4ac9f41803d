#pragma once
// JSON views of every public record type, via nlohmann ADL. Keys are emitted
// in sorted order, so serialized output is deterministic byte for byte.

#include <json.hpp>

#include "sumstruct/ap_cover.hpp"
#include "sumstruct/containers.hpp"
#include "sumstruct/experiments.hpp"
#include "sumstruct/family.hpp"
#include "sumstruct/oracles.hpp"

namespace sumstruct {

using nlohmann::json;

void to_json(json& j, const GroupCtx& g);
void to_json(json& j, const ElemSet& s);
void to_json(json& j, const ApWindow& w);
void to_json(json& j, const CoverResult& v);
void to_json(json& j, const JointCoverResult& v);
void to_json(json& j, const StabilityWitness& w);
void to_json(json& j, const DegreeCheck& v);

void to_json(json& j, const PollardVerdict& v);
void to_json(json& j, const SupersatVerdict& v);
void to_json(json& j, const RegularityReport& v);
void to_json(json& j, const KneserVerdict& v);
void to_json(json& j, const Almost1Verdict& v);
void to_json(json& j, const StabilityVerdict& v);
void to_json(json& j, const RelStabilityVerdict& v);
void to_json(json& j, const BinomVerdict& v);

void to_json(json& j, const EnumerateResult& v);
void to_json(json& j, const SampledPair& v);
void to_json(json& j, const SampleStats& v);
void to_json(json& j, const SampleResult& v);
void to_json(json& j, const StructurePairStat& v);
void to_json(json& j, const StructureReport& v);
void to_json(json& j, const CountReport& v);
void to_json(json& j, const CellSummary& v);
void to_json(json& j, const SweepOutcome& v);

void to_json(json& j, const RoundStats& v);
void to_json(json& j, const ContainerRecord& v);
void to_json(json& j, const ContainerPropertyReport& v);
void to_json(json& j, const FamilyEntry& v);
void to_json(json& j, const TreeStats& v);
void to_json(json& j, const FamilyResult& v);
void to_json(json& j, const FamilyReport& v);

}  // namespace sumstruct
