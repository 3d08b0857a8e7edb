#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sphavg/endpoints.hpp"
#include "sphavg/experiments.hpp"
#include "sphavg/json_io.hpp"
#include "sphavg/manifest.hpp"
#include "sphavg/norms.hpp"
#include "sphavg/operator.hpp"
#include "sphavg/svg.hpp"

namespace fs = std::filesystem;
using namespace sphavg;
using io::fmt12;
using io::json;

namespace {

// ---------------------------------------------------------------------------
// argument parsing helpers
// ---------------------------------------------------------------------------

/// "3/5 3/5 ; 2/5" -> ExponentPoint. Rationals only; decimals are rejected so
/// membership certificates stay exact.
region::ExponentPoint parse_point(const std::string& text) {
    const auto semi = text.find(';');
    if (semi == std::string::npos)
        throw parse_error("expected ';' before the 1/r coordinate", text.size());
    if (text.find(';', semi + 1) != std::string::npos)
        throw parse_error("more than one ';'", text.find(';', semi + 1));
    std::vector<Rational> xs;
    std::istringstream lhs(text.substr(0, semi));
    std::string token;
    std::size_t consumed = 0;
    while (lhs >> token) {
        const std::size_t at = text.find(token, consumed);
        xs.push_back(parse_rational(token, at));
        consumed = at + token.size();
    }
    if (xs.empty()) throw parse_error("no 1/p coordinates before ';'", 0);
    const Rational xr = parse_rational(text.substr(semi + 1), semi + 1);
    const int n = static_cast<int>(xs.size());
    return region::ExponentPoint(n, std::move(xs), xr);
}

double parse_number(const std::string& token, std::size_t offset = 0) {
    if (token.find('/') != std::string::npos) return to_double(parse_rational(token, offset));
    if (token.rfind("2^", 0) == 0) return std::pow(2.0, std::stod(token.substr(2)));
    std::size_t pos = 0;
    const double v = std::stod(token, &pos);
    if (pos != token.size()) throw parse_error("bad number '" + token + "'", offset + pos);
    return v;
}

/// "2^-4..2^-9" (unit exponent steps) | "2..64" (doubling) | "a,b,c".
std::vector<double> parse_scales(const std::string& text) {
    std::vector<double> out;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
        if (a.rfind("2^", 0) == 0 && b.rfind("2^", 0) == 0) {
            int ka = std::stoi(a.substr(2)), kb = std::stoi(b.substr(2));
            const int step = ka <= kb ? 1 : -1;
            for (int k = ka;; k += step) {
                out.push_back(std::pow(2.0, k));
                if (k == kb) break;
            }
        } else {
            double lo = parse_number(a), hi = parse_number(b);
            for (double v = lo; v <= hi * (1 + 1e-12); v *= 2) out.push_back(v);
        }
        return out;
    }
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_number(item));
    return out;
}

/// "constant:1" | "indicator:-1:1" | "powerlog:0:1/2:2/3:9/10"
/// | "steps:lo:hi:h[,lo:hi:h...]"
funcs::TestFunction parse_function(const std::string& text) {
    std::vector<std::string> parts;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw parse_error("empty function spec", 0);
    const std::string& kind = parts[0];
    auto need = [&](std::size_t n) {
        if (parts.size() != n + 1)
            throw parse_error(kind + " expects " + std::to_string(n) + " parameters", text.size());
    };
    funcs::TestFunction f;
    if (kind == "constant") {
        need(1);
        f = funcs::Constant{parse_number(parts[1])};
    } else if (kind == "indicator") {
        need(2);
        f = funcs::Indicator{{parse_number(parts[1]), parse_number(parts[2])}};
    } else if (kind == "powerlog") {
        need(4);
        f = funcs::PowerLog{parse_number(parts[1]), parse_number(parts[2]), parse_number(parts[3]),
                            parse_number(parts[4])};
    } else if (kind == "steps") {
        funcs::StepSum ss2;
        std::istringstream groups(text.substr(6));
        std::string g;
        while (std::getline(groups, g, ',')) {
            std::vector<std::string> c;
            std::istringstream gs(g);
            while (std::getline(gs, item, ':')) c.push_back(item);
            if (c.size() != 3) throw parse_error("steps group expects lo:hi:height", 0);
            ss2.steps.push_back({{parse_number(c[0]), parse_number(c[1])}, parse_number(c[2])});
        }
        f = std::move(ss2);
    } else {
        throw parse_error("unknown function kind '" + kind + "'", 0);
    }
    funcs::validate(f);
    return f;
}

sphere::VectorFamily parse_vectors(const std::string& text, int n) {
    sphere::VectorFamily v;
    v.n = n;
    std::istringstream rows(text);
    std::string row;
    while (std::getline(rows, row, ';')) {
        std::vector<double> r;
        std::istringstream comps(row);
        std::string c;
        while (std::getline(comps, c, ',')) r.push_back(parse_number(c));
        v.rows.push_back(std::move(r));
    }
    v.require_independent();
    return v;
}

// ---------------------------------------------------------------------------
// output plumbing
// ---------------------------------------------------------------------------

fs::path resolve_out(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("SPHAVG_OUT")) return env;
    return ".";
}

struct Emitter {
    fs::path dir;
    std::string command;
    json config;
    std::vector<std::string> outputs;

    void file(const std::string& name, const std::string& content) {
        fs::create_directories(dir);
        io::write_text_atomic(dir / name, content);
        outputs.push_back(name);
    }
    void finish() {
        fs::create_directories(dir);
        io::write_manifest(dir, {command, config, outputs});
    }
};

json load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot read config file " + path);
    json j = json::parse(in);
    if (j.contains("config")) return j.at("config");  // accept a manifest directly
    return j;
}

int experiment_exit(bool pass) { return pass ? 0 : 2; }

std::string csv_scaling(const xpr::ScalingReport& r) {
    std::string s = "scale,ratio,pointwise,resolution\n";
    for (const auto& x : r.samples)
        s += fmt12(x.scale) + "," + fmt12(x.ratio) + "," + fmt12(x.pointwise) + "," +
             std::to_string(x.resolution) + "\n";
    return s;
}

std::string csv_blowup(const xpr::BlowupReport& r) {
    std::string s = "k,x,value,ratio\n";
    for (const auto& x : r.samples)
        s += std::to_string(x.k) + "," + fmt12(x.x) + "," + fmt12(x.value) + "," + fmt12(x.ratio) +
             "\n";
    return s;
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

int cmd_region(int n, const std::string& format, bool slice, const std::string& out) {
    if (n < 2 || n > 6) throw error("region: n must be in [2,6]");
    if (format == "svg" && !(n == 2 || slice))
        throw error("region: svg output needs --slice for n != 2");

    const auto reg = region::build_region(n);
    Emitter em{resolve_out(out), "region",
               json{{"n", n}, {"format", format}, {"slice", slice}}};

    const auto slice_data = region::diagonal_slice(reg);
    if (format == "svg") {
        if (slice) {
            em.file("region_n" + std::to_string(n) + "_slice.svg", io::slice_svg(slice_data));
        } else {
            std::vector<region::EndpointRecord> recs;
            const auto named = region::named_endpoints(2);
            for (const auto& v : region::enumerate_vertices(reg)) {
                auto it = std::find_if(named.begin(), named.end(),
                                       [&](const auto& r) { return r.point == v; });
                if (it != named.end()) recs.push_back(*it);
                else recs.push_back({v, "V" + std::to_string(recs.size() + 1), "", {}});
            }
            em.file("region_n2.svg", io::region_n2_svg(recs));
        }
        em.finish();
        std::cout << "region n=" << n << ": wrote svg to " << em.dir.string() << "\n";
        return 0;
    }

    const auto vertices = region::enumerate_vertices(reg);
    const auto named = region::named_endpoints(n);
    struct Row {
        region::EndpointRecord rec;
        region::Containment cert;
    };
    std::vector<Row> rows;
    int anon = 0;
    for (const auto& v : vertices) {
        Row row;
        row.cert = region::contains(reg, v);
        auto it = std::find_if(named.begin(), named.end(),
                               [&](const auto& r) { return r.point == v; });
        if (it != named.end()) {
            row.rec = *it;
        } else {
            row.rec.point = v;
            row.rec.name = "V" + std::to_string(++anon);
            row.rec.orbit = row.rec.name;
            row.rec.cls = region::classify(reg, v);
        }
        rows.push_back(std::move(row));
    }
    auto name_of = [&](const region::ExponentPoint& p) -> std::string {
        for (const auto& r : rows)
            if (r.rec.point == p) return r.rec.name;
        return "";
    };

    if (format == "json") {
        json jv = json::array();
        for (const auto& row : rows) {
            json rec = io::to_json(row.rec);
            json tight = json::array();
            for (auto i : row.cert.tight) tight.push_back(reg.inequalities[i].label(n));
            rec["tight_facets"] = tight;
            json duals = json::array();
            for (int j = 1; j <= n; ++j)
                duals.push_back(json{{"slot", j}, {"image", name_of(dual_point(row.rec.point, j))}});
            rec["duals"] = duals;
            jv.push_back(std::move(rec));
        }
        json root{{"region", io::to_json(reg)}, {"vertices", jv}, {"slice", io::to_json(slice_data)}};
        em.file("region_n" + std::to_string(n) + ".json", root.dump(2) + "\n");
    } else if (format == "csv") {
        std::string s = "name,orbit";
        for (int i = 1; i <= n; ++i) s += ",x" + std::to_string(i);
        s += ",r,strong,restricted,weak,restricted_weak,source\n";
        for (const auto& row : rows) {
            s += row.rec.name + "," + row.rec.orbit;
            for (const auto& c : row.rec.point.x) s += "," + rational_string(c);
            s += "," + rational_string(row.rec.point.xr);
            s += "," + verdict_string(row.rec.cls.strong) + "," +
                 verdict_string(row.rec.cls.restricted) + "," + verdict_string(row.rec.cls.weak) +
                 "," + verdict_string(row.rec.cls.restricted_weak) + ",\"" + row.rec.cls.source +
                 "\"\n";
        }
        em.file("region_n" + std::to_string(n) + ".csv", s);
    } else {
        throw error("region: unknown format '" + format + "'");
    }
    em.finish();
    std::cout << "region n=" << n << ": " << vertices.size() << " vertices, wrote " << format
              << " to " << em.dir.string() << "\n";
    return 0;
}

int cmd_classify(const std::string& point_text, const std::string& out) {
    const auto p = parse_point(point_text);
    const auto reg = region::build_region(p.n);
    json report{{"point", io::to_json(p)}};
    int exit_code = 0;
    try {
        const auto cls = region::classify(reg, p);
        const auto cert = region::contains(reg, p);
        report["certificate"] = io::to_json(cert, reg);
        report["classification"] = io::to_json(cls);
        std::cout << p.str() << ": member of the necessary region\n";
        std::cout << "  strong=" << verdict_string(cls.strong)
                  << " restricted=" << verdict_string(cls.restricted)
                  << " weak=" << verdict_string(cls.weak)
                  << " restricted_weak=" << verdict_string(cls.restricted_weak) << "\n";
        std::cout << "  source: " << cls.source << "\n";
        for (auto i : cert.tight) std::cout << "  tight: " << reg.inequalities[i].label(p.n) << "\n";
    } catch (const region::not_a_member& e) {
        report["certificate"] = io::to_json(e.certificate, reg);
        std::cout << p.str() << ": NOT a member of the necessary region\n";
        for (auto i : e.certificate.violated)
            std::cout << "  violated: " << reg.inequalities[i].label(p.n)
                      << " (slack " << rational_string(e.certificate.slack[i]) << ")\n";
        exit_code = 0;  // a definite non-membership verdict is a successful run
    }
    if (!out.empty()) {
        Emitter em{resolve_out(out), "classify", json{{"point", point_text}}};
        em.file("classify_report.json", report.dump(2) + "\n");
        em.finish();
    }
    return exit_code;
}

int cmd_eval(int n, const std::vector<std::string>& fspecs, const std::string& vectors,
             const std::string& truncate, double xmin, double xmax, double dx, long resolution,
             const std::string& out) {
    if (static_cast<int>(fspecs.size()) != n) throw error("eval: need exactly n functions");
    std::vector<funcs::TestFunction> fs;
    for (const auto& s : fspecs) fs.push_back(parse_function(s));
    const auto grid = sphere::SphereGrid::build(n, resolution);
    auto v = vectors.empty() ? sphere::VectorFamily::standard(n) : parse_vectors(vectors, n);

    std::optional<sphere::TruncationMask> mask;
    if (!truncate.empty()) {
        const auto colon = truncate.find(':');
        if (colon == std::string::npos) throw parse_error("expected J:EPS", 0);
        mask = sphere::TruncationMask{std::stoi(truncate.substr(0, colon)),
                                      parse_number(truncate.substr(colon + 1))};
    }

    op::XGrid xg{xmin, xmax, dx};
    const long m = xg.count();
    std::string csv = "x,value\n";
    for (long i = 0; i < m; ++i) {
        const double x = xg.node(i);
        const double val = mask ? op::eval_U(fs, x, grid, v, *mask) : op::eval_T_v(fs, x, grid, v);
        csv += fmt12(x) + "," + fmt12(val) + "\n";
    }

    json cfg{{"n", n},    {"functions", json::array()}, {"xmin", xmin},
             {"xmax", xmax}, {"dx", dx},                {"resolution", grid.resolution()}};
    for (const auto& f : fs) cfg["functions"].push_back(io::to_json(f));
    if (!vectors.empty()) cfg["vectors"] = vectors;
    if (!truncate.empty()) cfg["truncate"] = truncate;
    Emitter em{resolve_out(out), "eval", cfg};
    em.file("eval_sweep.csv", csv);
    em.finish();
    std::cout << "eval: " << m << " samples on [" << fmt12(xmin) << ", " << fmt12(xmax)
              << ") at resolution " << grid.resolution() << "\n";
    return 0;
}

int cmd_norms(const std::string& fspec, const std::vector<double>& lps,
              const std::vector<std::string>& lorentz, const std::string& out) {
    const auto f = parse_function(fspec);
    json results = json::array();
    for (double p : lps) {
        const auto nv = funcs::lp_norm(f, p);
        results.push_back(json{{"kind", "lp"}, {"p", p}, {"norm", io::to_json(nv)}});
        std::cout << "||f||_" << fmt12(p) << " = " << fmt12(nv.value) << " ("
                  << (nv.method == funcs::NormValue::Method::Analytic ? "analytic" : "numeric")
                  << ")\n";
    }
    for (const auto& pq : lorentz) {
        const auto colon = pq.find(':');
        if (colon == std::string::npos) throw parse_error("expected P:Q", 0);
        const double p = parse_number(pq.substr(0, colon));
        const std::string qs = pq.substr(colon + 1);
        const double q = qs == "inf" ? std::numeric_limits<double>::infinity() : parse_number(qs);
        const auto nv = funcs::lorentz_norm(f, p, q);
        results.push_back(json{{"kind", "lorentz"}, {"p", p}, {"q", qs}, {"norm", io::to_json(nv)}});
        std::cout << "||f||_{" << fmt12(p) << "," << qs << "} = " << fmt12(nv.value) << " ("
                  << (nv.method == funcs::NormValue::Method::Analytic ? "analytic" : "numeric")
                  << ")\n";
    }
    if (!out.empty()) {
        Emitter em{resolve_out(out), "norms", json{{"function", io::to_json(f)}}};
        em.file("norms_report.json",
                json{{"function", io::to_json(f)}, {"results", results}}.dump(2) + "\n");
        em.finish();
    }
    return 0;
}

int cmd_fourier(int n, double xi_max, long samples, long resolution, const std::string& out) {
    const auto grid = sphere::SphereGrid::build(n, resolution);
    std::string csv = "xi,re,im,abs\n";
    long warnings = 0;
    for (long i = 0; i < samples; ++i) {
        const double x = xi_max * static_cast<double>(i) / static_cast<double>(samples - 1);
        std::vector<double> xi(n, 0.0);
        xi[n - 1] = x;
        const auto s = op::sphere_fourier(xi, grid);
        warnings += s.resolution_warning;
        csv += fmt12(x) + "," + fmt12(s.value.real()) + "," + fmt12(s.value.imag()) + "," +
               fmt12(std::abs(s.value)) + "\n";
    }
    Emitter em{resolve_out(out), "fourier",
               json{{"n", n}, {"xi_max", xi_max}, {"samples", samples},
                    {"resolution", grid.resolution()}}};
    em.file("fourier_sweep.csv", csv);
    em.finish();
    std::cout << "fourier: " << samples << " samples up to |xi| = " << fmt12(xi_max)
              << (warnings ? " (resolution warnings: " + std::to_string(warnings) + ")" : "")
              << "\n";
    return 0;
}

int cmd_scaling(const std::string& config_file, const std::string& family, int n,
                const std::string& point_text, const std::string& scales, long resolution,
                double ratio_tol, double pointwise_tol, const std::string& out) {
    xpr::ScalingConfig cfg;
    if (!config_file.empty()) {
        cfg = io::scaling_config_from_json(load_config_file(config_file));
    } else {
        cfg.family = {xpr::family_from_name(family), n};
        cfg.point = parse_point(point_text);
        cfg.scales = parse_scales(scales);
        cfg.resolution = resolution;
        cfg.ratio_tol = ratio_tol;
        cfg.pointwise_tol = pointwise_tol;
    }
    const auto report = xpr::run_scaling(cfg);
    Emitter em{resolve_out(out), "scaling", io::to_json(cfg)};
    em.file("scaling_report.json", io::to_json(report).dump(2) + "\n");
    em.file("scaling_samples.csv", csv_scaling(report));
    em.finish();
    std::cout << report.summary << "\n";
    return experiment_exit(report.pass);
}

int cmd_blowup(const std::string& config_file, const std::string& probe, double theta,
               const std::string& krange, long resolution, double band_factor,
               const std::string& out) {
    xpr::BlowupConfig cfg;
    if (!config_file.empty()) {
        cfg = io::blowup_config_from_json(load_config_file(config_file));
    } else {
        cfg.probe = xpr::probe_from_name(probe);
        cfg.theta = theta;
        const auto dots = krange.find("..");
        if (dots == std::string::npos) throw parse_error("expected K_FROM..K_TO", 0);
        cfg.k_from = std::stoi(krange.substr(0, dots));
        cfg.k_to = std::stoi(krange.substr(dots + 2));
        cfg.resolution = resolution;
        cfg.band_factor = band_factor;
    }
    const auto report = xpr::run_blowup(cfg);
    Emitter em{resolve_out(out), "blowup", io::to_json(cfg)};
    em.file("blowup_report.json", io::to_json(report).dump(2) + "\n");
    em.file("blowup_samples.csv", csv_blowup(report));
    em.finish();
    std::cout << report.summary << "\n";
    return experiment_exit(report.pass);
}

int cmd_decay(const std::string& config_file, int n, double xi_min, double xi_max, long resolution,
              double tol, const std::string& out) {
    xpr::DecayConfig cfg;
    if (!config_file.empty()) {
        cfg = io::decay_config_from_json(load_config_file(config_file));
    } else {
        cfg.n = n;
        cfg.xi_min = xi_min;
        cfg.xi_max = xi_max;
        cfg.resolution = resolution;
        cfg.slope_tol = tol;
    }
    const auto report = xpr::run_decay(cfg);
    Emitter em{resolve_out(out), "decay", io::to_json(cfg)};
    em.file("decay_report.json", io::to_json(report).dump(2) + "\n");
    {
        std::string csv = "xi,re,im,abs\n";
        for (const auto& s : report.samples)
            csv += fmt12(s.xi) + "," + fmt12(s.re) + "," + fmt12(s.im) + "," + fmt12(s.abs) + "\n";
        em.file("decay_samples.csv", csv);
    }
    {
        std::string csv = "xi,max_abs\n";
        for (const auto& [x, y] : report.envelope) csv += fmt12(x) + "," + fmt12(y) + "\n";
        em.file("decay_envelope.csv", csv);
    }
    em.finish();
    std::cout << report.summary << "\n";
    return experiment_exit(report.pass);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multilinear spherical averages: necessary region, norms, experiments"};
    app.require_subcommand(1);

    // region
    auto* region_cmd = app.add_subcommand("region", "necessary region, vertices, classifications");
    int reg_n = 2;
    std::string reg_format = "json", reg_out;
    bool reg_slice = false;
    region_cmd->add_option("--n", reg_n, "dimension (2..6)");
    region_cmd->add_option("--format", reg_format, "json | csv | svg");
    region_cmd->add_flag("--slice", reg_slice, "diagonal (1/p, 1/r) slice");
    region_cmd->add_option("--out", reg_out, "output directory");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "membership + boundedness verdict");
    std::string cls_point, cls_out;
    classify_cmd->add_option("--point", cls_point, "\"a/b c/d ; e/f\"")->required();
    classify_cmd->add_option("--out", cls_out, "output directory");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "profile sweep of the average");
    int ev_n = 2;
    std::vector<std::string> ev_fs;
    std::string ev_vectors, ev_truncate, ev_out;
    double ev_xmin = -2, ev_xmax = 2, ev_dx = 1.0 / 256;
    long ev_res = 4096;
    eval_cmd->add_option("--n", ev_n);
    eval_cmd->add_option("--f", ev_fs, "function spec (repeat n times)")->required();
    eval_cmd->add_option("--vectors", ev_vectors, "rows 'a,b;c,d' (default standard basis)");
    eval_cmd->add_option("--truncate", ev_truncate, "J:EPS restricts to |v_J.sigma| > EPS");
    eval_cmd->add_option("--xmin", ev_xmin);
    eval_cmd->add_option("--xmax", ev_xmax);
    eval_cmd->add_option("--dx", ev_dx);
    eval_cmd->add_option("--resolution", ev_res);
    eval_cmd->add_option("--out", ev_out);

    // norms
    auto* norms_cmd = app.add_subcommand("norms", "Lp / Lorentz norms of a test function");
    std::string no_f, no_out;
    std::vector<double> no_lp;
    std::vector<std::string> no_lorentz;
    norms_cmd->add_option("--function", no_f, "function spec")->required();
    norms_cmd->add_option("--lp", no_lp, "exponent p (repeatable)");
    norms_cmd->add_option("--lorentz", no_lorentz, "P:Q (repeatable, Q may be 'inf')");
    norms_cmd->add_option("--out", no_out);

    // fourier
    auto* fourier_cmd = app.add_subcommand("fourier", "surface-measure Fourier transform sweep");
    int fo_n = 2;
    double fo_ximax = 50;
    long fo_samples = 256, fo_res = 65536;
    std::string fo_out;
    fourier_cmd->add_option("--n", fo_n);
    fourier_cmd->add_option("--xi-max", fo_ximax);
    fourier_cmd->add_option("--samples", fo_samples);
    fourier_cmd->add_option("--resolution", fo_res);
    fourier_cmd->add_option("--out", fo_out);

    // scaling
    auto* scaling_cmd = app.add_subcommand("scaling", "extremal-family scaling law");
    std::string sc_config, sc_family = "B", sc_point, sc_scales, sc_out;
    int sc_n = 2;
    long sc_res = 0;
    double sc_rtol = 0.1, sc_ptol = 0.1;
    scaling_cmd->add_option("--config", sc_config, "JSON config or manifest");
    scaling_cmd->add_option("--family", sc_family, "A | B | C");
    scaling_cmd->add_option("--n", sc_n);
    scaling_cmd->add_option("--point", sc_point, "exponent point");
    scaling_cmd->add_option("--scales,--eps,--L", sc_scales, "e.g. 2^-4..2^-9 or 2..64");
    scaling_cmd->add_option("--resolution", sc_res, "0 = automatic");
    scaling_cmd->add_option("--ratio-tol", sc_rtol);
    scaling_cmd->add_option("--pointwise-tol", sc_ptol);
    scaling_cmd->add_option("--out", sc_out);

    // blowup
    auto* blowup_cmd = app.add_subcommand("blowup", "logarithmic blow-up probe");
    std::string bl_config, bl_probe = "E", bl_k = "6..18", bl_out;
    double bl_theta = 0.5, bl_band = 4.0;
    long bl_res = 0;
    blowup_cmd->add_option("--config", bl_config);
    blowup_cmd->add_option("--probe", bl_probe, "E | P | G | BE");
    blowup_cmd->add_option("--theta", bl_theta, "BE segment parameter in [1/4, 3/4]");
    blowup_cmd->add_option("--k", bl_k, "K_FROM..K_TO");
    blowup_cmd->add_option("--resolution", bl_res, "0 = automatic");
    blowup_cmd->add_option("--band-factor", bl_band);
    blowup_cmd->add_option("--out", bl_out);

    // decay
    auto* decay_cmd = app.add_subcommand("decay", "Fourier-decay envelope fit");
    std::string de_config, de_out;
    int de_n = 2;
    double de_ximin = 10, de_ximax = 200, de_tol = 0.05;
    long de_res = 8192;
    decay_cmd->add_option("--config", de_config);
    decay_cmd->add_option("--n", de_n);
    decay_cmd->add_option("--xi-min", de_ximin);
    decay_cmd->add_option("--xi-max", de_ximax);
    decay_cmd->add_option("--resolution", de_res);
    decay_cmd->add_option("--tol", de_tol);
    decay_cmd->add_option("--out", de_out);

    CLI11_PARSE(app, argc, argv);
    try {
        if (region_cmd->parsed()) return cmd_region(reg_n, reg_format, reg_slice, reg_out);
        if (classify_cmd->parsed()) return cmd_classify(cls_point, cls_out);
        if (eval_cmd->parsed())
            return cmd_eval(ev_n, ev_fs, ev_vectors, ev_truncate, ev_xmin, ev_xmax, ev_dx, ev_res,
                            ev_out);
        if (norms_cmd->parsed()) return cmd_norms(no_f, no_lp, no_lorentz, no_out);
        if (fourier_cmd->parsed()) return cmd_fourier(fo_n, fo_ximax, fo_samples, fo_res, fo_out);
        if (scaling_cmd->parsed())
            return cmd_scaling(sc_config, sc_family, sc_n, sc_point, sc_scales, sc_res, sc_rtol,
                               sc_ptol, sc_out);
        if (blowup_cmd->parsed())
            return cmd_blowup(bl_config, bl_probe, bl_theta, bl_k, bl_res, bl_band, bl_out);
        if (decay_cmd->parsed())
            return cmd_decay(de_config, de_n, de_ximin, de_ximax, de_res, de_tol, de_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
