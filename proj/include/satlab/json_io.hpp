#pragma once

#include "satlab/decomposition.hpp"
#include "satlab/oracle.hpp"
#include "satlab/optimizer.hpp"
#include "satlab/saturation.hpp"

#include <json.hpp>

namespace satlab {

using OrderedJson = nlohmann::ordered_json;

/// Round through "%.12g" so emitted floats carry 12 significant digits.
double round12(double x);

OrderedJson count_json(const Graph& g, const SaturationReport& report);
OrderedJson audit_json(const Graph& g, const AuditReport& report);
OrderedJson oracle_json(const OracleRecord& record);
OrderedJson optimize_json(const DensityProgram& prog, const OptimizationResult& result);

} // namespace satlab
