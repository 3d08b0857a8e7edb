#pragma once

#include <json.hpp>
#include <string>

#include "sphavg/endpoints.hpp"
#include "sphavg/experiments.hpp"
#include "sphavg/norms.hpp"
#include "sphavg/region.hpp"
#include "sphavg/testfunction.hpp"

namespace sphavg::io {

using json = nlohmann::json;

/// Numeric outputs carry 12 significant digits.
double round12(double v);
std::string fmt12(double v);

json to_json(const Rational& q);  // {"num": .., "den": ..}
Rational rational_from_json(const json& j);

json to_json(const region::ExponentPoint& p);
region::ExponentPoint point_from_json(const json& j);

json to_json(const region::LinearInequality& q, int n);
json to_json(const region::NecessaryRegion& r);
json to_json(const region::Containment& c, const region::NecessaryRegion& r);
json to_json(const region::Classification& c);
json to_json(const region::EndpointRecord& rec);
json to_json(const region::DiagonalSlice& s);

json to_json(const funcs::TestFunction& f);
funcs::TestFunction function_from_json(const json& j);
json to_json(const funcs::NormValue& v);

json to_json(const xpr::FitResult& f);

json to_json(const xpr::ScalingConfig& c);
xpr::ScalingConfig scaling_config_from_json(const json& j);
json to_json(const xpr::ScalingReport& r);

json to_json(const xpr::BlowupConfig& c);
xpr::BlowupConfig blowup_config_from_json(const json& j);
json to_json(const xpr::BlowupReport& r);

json to_json(const xpr::DecayConfig& c);
xpr::DecayConfig decay_config_from_json(const json& j);
json to_json(const xpr::DecayReport& r);

}  // namespace sphavg::io
