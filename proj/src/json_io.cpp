#include "sphavg/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace sphavg::io {

double round12(double v) {
    if (!std::isfinite(v)) return v;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

std::string fmt12(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

json to_json(const Rational& q) {
    return json{{"num", rational_num_i64(q)}, {"den", rational_den_i64(q)}};
}

Rational rational_from_json(const json& j) {
    return Rational(j.at("num").get<long long>(), j.at("den").get<long long>());
}

json to_json(const region::ExponentPoint& p) {
    json xs = json::array();
    for (const auto& c : p.x) xs.push_back(to_json(c));
    return json{{"n", p.n}, {"x", xs}, {"r", to_json(p.xr)}};
}

region::ExponentPoint point_from_json(const json& j) {
    std::vector<Rational> x;
    for (const auto& c : j.at("x")) x.push_back(rational_from_json(c));
    return region::ExponentPoint(j.at("n").get<int>(), std::move(x),
                                 rational_from_json(j.at("r")));
}

namespace {
std::string kind_name(region::FacetKind k) {
    using region::FacetKind;
    switch (k) {
        case FacetKind::TotalMass: return "total-mass";
        case FacetKind::SingleIndex: return "single-index";
        case FacetKind::PairIndex: return "pair-index";
        case FacetKind::BoxLower: return "box-lower";
        default: return "box-upper";
    }
}
}  // namespace

json to_json(const region::LinearInequality& q, int n) {
    json cx = json::array();
    for (const auto& c : q.coeff_x) cx.push_back(to_json(c));
    json out{{"family", kind_name(q.kind)},
             {"coeff_x", cx},
             {"coeff_r", to_json(q.coeff_xr)},
             {"rhs", to_json(q.rhs)},
             {"label", q.label(n)}};
    if (q.kind == region::FacetKind::SingleIndex) out["k"] = q.k;
    if (q.kind == region::FacetKind::PairIndex) {
        out["k"] = q.k;
        out["l"] = q.l;
    }
    if (q.is_box()) out["axis"] = q.axis;
    return out;
}

json to_json(const region::NecessaryRegion& r) {
    json qs = json::array();
    for (const auto& q : r.inequalities) qs.push_back(to_json(q, r.n));
    return json{{"n", r.n}, {"inequalities", qs}};
}

json to_json(const region::Containment& c, const region::NecessaryRegion& r) {
    auto labels = [&](const std::vector<std::size_t>& idx) {
        json out = json::array();
        for (auto i : idx) out.push_back(r.inequalities[i].label(r.n));
        return out;
    };
    json slack = json::array();
    for (std::size_t i = 0; i < c.slack.size(); ++i)
        slack.push_back(json{{"facet", r.inequalities[i].label(r.n)}, {"slack", to_json(c.slack[i])}});
    return json{{"member", c.member},
                {"tight", labels(c.tight)},
                {"violated", labels(c.violated)},
                {"slack", slack}};
}

json to_json(const region::Classification& c) {
    return json{{"strong", verdict_string(c.strong)},
                {"restricted", verdict_string(c.restricted)},
                {"weak", verdict_string(c.weak)},
                {"restricted_weak", verdict_string(c.restricted_weak)},
                {"source", c.source}};
}

json to_json(const region::EndpointRecord& rec) {
    return json{{"name", rec.name},
                {"orbit", rec.orbit},
                {"point", to_json(rec.point)},
                {"classification", to_json(rec.cls)}};
}

json to_json(const region::DiagonalSlice& s) {
    json vs = json::array();
    for (std::size_t i = 0; i < s.vertices.size(); ++i)
        vs.push_back(json{{"name", s.names[i]},
                          {"u", to_json(s.vertices[i].first)},
                          {"v", to_json(s.vertices[i].second)}});
    return json{{"n", s.n}, {"vertices", vs}};
}

json to_json(const funcs::TestFunction& f) {
    using namespace funcs;
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Constant>) {
                return json{{"type", "constant"}, {"c", v.c}};
            } else if constexpr (std::is_same_v<T, Indicator>) {
                return json{{"type", "indicator"}, {"lo", v.iv.lo}, {"hi", v.iv.hi}};
            } else if constexpr (std::is_same_v<T, PowerLog>) {
                return json{{"type", "powerlog"},
                            {"center", v.center},
                            {"power", v.power},
                            {"logpow", v.logpow},
                            {"radius", v.radius}};
            } else {
                json steps = json::array();
                for (const auto& s : v.steps)
                    steps.push_back(json{{"lo", s.iv.lo}, {"hi", s.iv.hi}, {"height", s.height}});
                return json{{"type", "stepsum"}, {"steps", steps}};
            }
        },
        f);
}

funcs::TestFunction function_from_json(const json& j) {
    using namespace funcs;
    const std::string type = j.at("type").get<std::string>();
    TestFunction f;
    if (type == "constant") {
        f = Constant{j.at("c").get<double>()};
    } else if (type == "indicator") {
        f = Indicator{{j.at("lo").get<double>(), j.at("hi").get<double>()}};
    } else if (type == "powerlog") {
        f = PowerLog{j.at("center").get<double>(), j.at("power").get<double>(),
                     j.at("logpow").get<double>(), j.at("radius").get<double>()};
    } else if (type == "stepsum") {
        StepSum ss;
        for (const auto& s : j.at("steps"))
            ss.steps.push_back(
                {{s.at("lo").get<double>(), s.at("hi").get<double>()}, s.at("height").get<double>()});
        f = std::move(ss);
    } else {
        throw error("unknown test-function type '" + type + "'");
    }
    validate(f);
    return f;
}

json to_json(const funcs::NormValue& v) {
    return json{{"value", std::isfinite(v.value) ? json(round12(v.value)) : json("inf")},
                {"method", v.method == funcs::NormValue::Method::Analytic ? "analytic" : "numeric"},
                {"estimated_error", round12(v.estimated_error)}};
}

json to_json(const xpr::FitResult& f) {
    return json{{"slope", round12(f.slope)},
                {"intercept", round12(f.intercept)},
                {"r_squared", round12(f.r_squared)},
                {"residual_max", round12(f.residual_max)}};
}

json to_json(const xpr::ScalingConfig& c) {
    return json{{"experiment", "scaling"},
                {"family", xpr::family_name(c.family.tag)},
                {"n", c.family.n},
                {"point", to_json(c.point)},
                {"scales", c.scales},
                {"resolution", c.resolution},
                {"ratio_tol", c.ratio_tol},
                {"pointwise_tol", c.pointwise_tol}};
}

xpr::ScalingConfig scaling_config_from_json(const json& j) {
    xpr::ScalingConfig c;
    c.family.tag = xpr::family_from_name(j.at("family").get<std::string>());
    c.family.n = j.at("n").get<int>();
    c.point = point_from_json(j.at("point"));
    c.scales = j.at("scales").get<std::vector<double>>();
    if (j.contains("resolution")) c.resolution = j.at("resolution").get<long>();
    if (j.contains("ratio_tol")) c.ratio_tol = j.at("ratio_tol").get<double>();
    if (j.contains("pointwise_tol")) c.pointwise_tol = j.at("pointwise_tol").get<double>();
    return c;
}

json to_json(const xpr::ScalingReport& r) {
    json samples = json::array();
    for (const auto& s : r.samples)
        samples.push_back(json{{"scale", round12(s.scale)},
                               {"ratio", round12(s.ratio)},
                               {"pointwise", round12(s.pointwise)},
                               {"resolution", s.resolution}});
    return json{{"config", to_json(r.config)},
                {"samples", samples},
                {"ratio_fit", to_json(r.ratio_fit)},
                {"pointwise_fit", to_json(r.pointwise_fit)},
                {"predicted_ratio_slope", round12(r.predicted_ratio_slope)},
                {"predicted_pointwise_slope", round12(r.predicted_pointwise_slope)},
                {"min_resolution_required", r.min_resolution_required},
                {"pass", r.pass},
                {"summary", r.summary}};
}

json to_json(const xpr::BlowupConfig& c) {
    return json{{"experiment", "blowup"}, {"probe", xpr::probe_name(c.probe)},
                {"theta", c.theta},     {"k_from", c.k_from},
                {"k_to", c.k_to},       {"resolution", c.resolution},
                {"band_factor", c.band_factor}};
}

xpr::BlowupConfig blowup_config_from_json(const json& j) {
    xpr::BlowupConfig c;
    c.probe = xpr::probe_from_name(j.at("probe").get<std::string>());
    if (j.contains("theta")) c.theta = j.at("theta").get<double>();
    if (j.contains("k_from")) c.k_from = j.at("k_from").get<int>();
    if (j.contains("k_to")) c.k_to = j.at("k_to").get<int>();
    if (j.contains("resolution")) c.resolution = j.at("resolution").get<long>();
    if (j.contains("band_factor")) c.band_factor = j.at("band_factor").get<double>();
    return c;
}

json to_json(const xpr::BlowupReport& r) {
    json samples = json::array();
    for (const auto& s : r.samples)
        samples.push_back(json{{"k", s.k},
                               {"x", round12(s.x)},
                               {"value", round12(s.value)},
                               {"ratio", round12(s.ratio)}});
    return json{{"config", to_json(r.config)},
                {"gamma", round12(r.gamma)},
                {"samples", samples},
                {"band_lo", round12(r.band_lo)},
                {"band_hi", round12(r.band_hi)},
                {"monotone_from", r.monotone_from},
                {"monotone_pass", r.monotone_pass},
                {"band_pass", r.band_pass},
                {"pass", r.pass},
                {"summary", r.summary}};
}

json to_json(const xpr::DecayConfig& c) {
    return json{{"experiment", "decay"},   {"n", c.n},
                {"xi_min", c.xi_min},      {"xi_max", c.xi_max},
                {"resolution", c.resolution}, {"slope_tol", c.slope_tol},
                {"sample_step", c.sample_step}};
}

xpr::DecayConfig decay_config_from_json(const json& j) {
    xpr::DecayConfig c;
    c.n = j.at("n").get<int>();
    if (j.contains("xi_min")) c.xi_min = j.at("xi_min").get<double>();
    if (j.contains("xi_max")) c.xi_max = j.at("xi_max").get<double>();
    if (j.contains("resolution")) c.resolution = j.at("resolution").get<long>();
    if (j.contains("slope_tol")) c.slope_tol = j.at("slope_tol").get<double>();
    if (j.contains("sample_step")) c.sample_step = j.at("sample_step").get<double>();
    return c;
}

json to_json(const xpr::DecayReport& r) {
    json envelope = json::array();
    for (const auto& [x, y] : r.envelope)
        envelope.push_back(json{{"xi", round12(x)}, {"max_abs", round12(y)}});
    return json{{"config", to_json(r.config)},
                {"envelope", envelope},
                {"fit", to_json(r.fit)},
                {"predicted_slope", round12(r.predicted_slope)},
                {"pass", r.pass},
                {"samples", r.samples.size()},
                {"summary", r.summary}};
}

}  // namespace sphavg::io
