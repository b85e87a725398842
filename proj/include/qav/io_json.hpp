#pragma once

#include <json.hpp>
#include <string>

#include "qav/check_report.hpp"
#include "qav/hom_operator.hpp"
#include "qav/integrand.hpp"
#include "qav/probes.hpp"
#include "qav/quasiaffinity.hpp"
#include "qav/sample_grid.hpp"
#include "qav/trig.hpp"

namespace qav {

using Json = nlohmann::ordered_json;

// File helpers; parse errors are rethrown as std::invalid_argument carrying
// the path and the JSON library's position diagnostics.
Json loadJsonFile(const std::string& path);
void saveJsonFile(const Json& j, const std::string& path);

Json operatorToJson(const HomOperator& op);
HomOperator operatorFromJson(const Json& j);

Json integrandToJson(const PolyIntegrand& f);
PolyIntegrand integrandFromJson(const Json& j);

Json fieldToJson(const TrigField& field);
TrigField fieldFromJson(const Json& j);

Json gridToJson(const SampleGrid& grid);
SampleGrid gridFromJson(const Json& j);

Json witnessToJson(const Witness& w);
Witness witnessFromJson(const Json& j);

Json reportToJson(const CheckReport& report);
CheckReport reportFromJson(const Json& j);

Json quadBasisToJson(const QuadBasisReport& report);
Json rankProbeToJson(const RankProbeReport& report);
Json spanProbeToJson(const SpanProbeReport& report);
Json pairCheckToJson(const PairCheckReport& report);

}  // namespace qav
