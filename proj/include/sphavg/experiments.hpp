#pragma once

#include <string>
#include <vector>

#include "sphavg/operator.hpp"
#include "sphavg/region.hpp"

namespace sphavg::xpr {

using funcs::TestFunction;

// ---------------------------------------------------------------------------
// scaling families
// ---------------------------------------------------------------------------

/// A: large boxes chi_[-L,L); B: near-pole pair with the last slot pinched to
/// [1 - 2e^2, 1 + 2e^2); C: tangent boxes of radius e^2 at +-1/sqrt(2) in the
/// first two slots.
enum class FamilyTag { A, B, C };

struct ScalingFamily {
    FamilyTag tag;
    int n = 2;
};

std::string family_name(FamilyTag tag);
FamilyTag family_from_name(const std::string& name);

/// scale is L >= 2 for family A and epsilon in (0, 1/8] for B and C.
std::vector<TestFunction> family_functions(const ScalingFamily& family, double scale);

/// Slack of the necessary inequality matched by the family (total-mass for A,
/// single-index k=n for B, pair-index (1,2) for C). Nonnegative exactly when
/// the inequality holds at the point. The measured log-log slope of the norm
/// ratio equals +gap in epsilon for B and C, and -gap in L for A.
Rational predicted_gap(const ScalingFamily& family, const region::ExponentPoint& point);

// ---------------------------------------------------------------------------
// fitting
// ---------------------------------------------------------------------------

struct FitResult {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
    double residual_max = 0;
};

/// Least-squares line through (log x, log y); requires >= 3 strictly positive
/// samples of equal length.
FitResult fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys);

// ---------------------------------------------------------------------------
// experiment runners
// ---------------------------------------------------------------------------

struct ScalingSample {
    double scale = 0;
    double ratio = 0;
    double pointwise = 0;  // T(fs)(0)
    long resolution = 0;
};

struct ScalingConfig {
    ScalingFamily family;
    region::ExponentPoint point;
    std::vector<double> scales;
    long resolution = 0;  // 0 = automatic per scale
    double ratio_tol = 0.1;
    double pointwise_tol = 0.1;
};

struct ScalingReport {
    ScalingConfig config;
    std::vector<ScalingSample> samples;
    FitResult ratio_fit;
    FitResult pointwise_fit;
    double predicted_ratio_slope = 0;
    double predicted_pointwise_slope = 0;
    long min_resolution_required = 0;
    bool pass = false;
    std::string summary;
};

/// Measures norm_ratio and the witness value T(0) at every scale, fits both
/// in log-log, and compares against the exact predicted exponents. Aborts
/// with resolution_error when a pinned resolution cannot resolve the smallest
/// scale (the requirement is computed and reported).
ScalingReport run_scaling(const ScalingConfig& config);

enum class ProbeTag { E, P, G, BE };

std::string probe_name(ProbeTag tag);
ProbeTag probe_from_name(const std::string& name);

struct BlowupConfig {
    ProbeTag probe = ProbeTag::E;
    double theta = 0.5;  // BE only, restricted to [1/4, 3/4]
    int k_from = 6;
    int k_to = 18;
    long resolution = 0;  // 0 = automatic from k_to
    double band_factor = 4.0;
};

struct BlowupSample {
    int k = 0;
    double x = 0;      // evaluation point of the probe operator
    double value = 0;  // probe value
    double ratio = 0;  // value / |log 2^-k|^gamma
};

struct BlowupReport {
    BlowupConfig config;
    double gamma = 0;
    std::vector<BlowupSample> samples;
    double band_lo = 0, band_hi = 0;  // fitted from the first three samples
    int monotone_from = 0;            // first index from which values strictly increase
    bool monotone_pass = false;
    bool band_pass = false;
    bool pass = false;
    std::string summary;
};

/// Evaluates the probe's operator at the dyadic approach x_k and verifies the
/// logarithmic divergence: eventual strict monotone increase plus the
/// value / |log|x_k||^gamma band test (band fitted from the first three
/// samples, width `band_factor`).
BlowupReport run_blowup(const BlowupConfig& config);

struct DecayConfig {
    int n = 2;
    double xi_min = 10.0;
    double xi_max = 200.0;
    long resolution = 8192;
    double slope_tol = 0.05;
    double sample_step = 0.02;  // linear frequency step
};

struct DecaySample {
    double xi = 0;
    double re = 0, im = 0, abs = 0;
};

struct DecayReport {
    DecayConfig config;
    std::vector<DecaySample> samples;
    std::vector<std::pair<double, double>> envelope;  // (block geometric mean, block max)
    FitResult fit;
    double predicted_slope = 0;  // -(n-1)/2
    bool pass = false;
    std::string summary;
};

/// Samples |sigma-hat(0,...,0,xi)| on a linear grid, takes dyadic-block upper
/// envelopes and fits their log-log slope against -(n-1)/2. A frequency beyond
/// the grid's warning threshold is escalated to resolution_error.
DecayReport run_decay(const DecayConfig& config);

}  // namespace sphavg::xpr
