// Command-line front end: generate meshes/fields from surface spec files,
// analyze angle fields, classify surfaces, fit axes, and run the built-in
// theorem checks.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "constangle/canonical.hpp"
#include "constangle/grid_export.hpp"
#include "constangle/surface_spec.hpp"

using namespace constangle;

namespace {

constexpr double kPi = 3.14159265358979323846;

Tolerances tolerances_from_env() {
    Tolerances tol;
    if (const char* env = std::getenv("CONSTANGLE_TOL")) {
        try {
            tol.angle_tol = std::stod(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("CONSTANGLE_TOL is not a number");
        }
        if (!tol.valid())
            throw std::invalid_argument("CONSTANGLE_TOL leaves tolerances invalid");
    }
    return tol;
}

std::pair<int, int> parse_grid(const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos)
        throw std::invalid_argument("--grid expects NSxNV, e.g. 40x40");
    const int ns = std::stoi(text.substr(0, x));
    const int nv = std::stoi(text.substr(x + 1));
    if (ns < 2 || nv < 2) throw std::invalid_argument("--grid counts must be >= 2");
    return {ns, nv};
}

Vec3 parse_direction(const std::string& text) {
    std::istringstream is(text);
    Vec3 v;
    char comma;
    if (!(is >> v.x >> comma >> v.y >> comma >> v.z) || v.norm() == 0.0)
        throw std::invalid_argument("--direction expects X,Y,Z");
    return v;
}

FieldFlags parse_fields(const std::string& text) {
    FieldFlags flags;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item == "normals") flags.normals = true;
        else if (item == "K") flags.gauss = true;
        else if (item == "angle") flags.angle = true;
        else if (!item.empty())
            throw std::invalid_argument("--fields accepts normals,K,angle");
    }
    return flags;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
}

int run_generate(const std::string& spec_path, const std::string& grid_text,
                 const std::string& out_path, const std::string& fields_text,
                 const std::string& direction_text, const std::string& csv_path,
                 double inset) {
    const Tolerances tol = tolerances_from_env();
    const Surface S = load_surface_spec(spec_path, tol);
    const auto [ns, nv] = parse_grid(grid_text);
    FieldFlags fields = parse_fields(fields_text);
    std::optional<Vec3> dir;
    if (!direction_text.empty()) dir = parse_direction(direction_text);

    const SurfaceGrid grid = sample_grid(S, ns, nv, fields, dir, tol, inset);
    write_file(out_path, export_obj(grid));
    std::cout << "wrote " << out_path << " (" << ns * nv << " vertices, "
              << 2 * (ns - 1) * (nv - 1) << " faces)\n";
    if (!csv_path.empty()) {
        write_file(csv_path, export_csv(grid));
        std::cout << "wrote " << csv_path << "\n";
    }
    return 0;
}

int run_analyze(const std::string& spec_path, const std::string& grid_text,
                const std::string& direction_text) {
    const Tolerances tol = tolerances_from_env();
    const Surface S = load_surface_spec(spec_path, tol);
    const auto [ns, nv] = parse_grid(grid_text);
    const Vec3 k = parse_direction(direction_text);

    const AngleField field = angle_field(S, k, ns, nv, tol);
    const AngleVerdict verdict = constant_angle_verdict(field, tol);
    std::cout << "samples = " << field.samples.size() << "\n";
    std::cout << "theta_mean = " << format_double(verdict.theta_mean) << "\n";
    std::cout << "max_dev = " << format_double(verdict.max_dev) << "\n";
    std::cout << "is_constant = " << (verdict.is_constant ? "true" : "false") << "\n";

    double k_min = 0.0, k_max = 0.0, k_absmean = 0.0;
    int k_count = 0;
    for (const AngleSample& a : field.samples) {
        try {
            const double K = gaussian_curvature(S, a.s, a.v, tol);
            if (k_count == 0) { k_min = k_max = K; }
            k_min = std::min(k_min, K);
            k_max = std::max(k_max, K);
            k_absmean += std::abs(K);
            ++k_count;
        } catch (const Error&) {
        }
    }
    if (k_count > 0) {
        std::cout << "K_min = " << format_double(k_min) << "\n";
        std::cout << "K_max = " << format_double(k_max) << "\n";
        std::cout << "K_absmean = " << format_double(k_absmean / k_count) << "\n";
    }
    return 0;
}

int run_classify(const std::string& spec_path, const std::string& grid_text) {
    const Tolerances tol = tolerances_from_env();
    const Surface S = load_surface_spec(spec_path, tol);
    const auto [ns, nv] = parse_grid(grid_text);
    std::cout << to_record(classify(S, tol, ns, nv));
    return 0;
}

int run_fit_axis(const std::string& spec_path, const std::string& grid_text,
                 bool brute_force) {
    const Tolerances tol = tolerances_from_env();
    const Surface S = load_surface_spec(spec_path, tol);
    const auto [ns, nv] = parse_grid(grid_text);

    const AngleField field = angle_field(S, {0.0, 0.0, 1.0}, ns, nv, tol);
    std::vector<Vec3> normals;
    normals.reserve(field.samples.size());
    for (const AngleSample& a : field.samples)
        normals.push_back(surface_normal(S, a.s, a.v, tol));

    const DirectionFit fit = brute_force ? fit_direction_brute_force(normals, 200)
                                         : fit_direction_to_circle(normals, tol);
    std::cout << "axis = " << format_double(fit.axis.x) << ","
              << format_double(fit.axis.y) << "," << format_double(fit.axis.z) << "\n";
    std::cout << "theta = " << format_double(fit.theta) << "\n";
    std::cout << "residual = " << format_double(fit.residual) << "\n";
    return 0;
}

// --- verify-theorem -------------------------------------------------------

struct CheckSink {
    int failures = 0;
    void check(bool ok, const std::string& what) {
        std::cout << (ok ? "PASS" : "FAIL") << ": " << what << "\n";
        if (!ok) ++failures;
    }
};

ScalarFn named_lambda(const std::string& name, Interval domain) {
    if (name == "neg-s") return {domain, [](double s) { return -s; }};
    if (name == "s") return {domain, [](double s) { return s; }};
    if (name == "2s") return {domain, [](double s) { return 2.0 * s; }};
    if (name == "s+0.3sin") return {domain, [](double s) { return s + 0.3 * std::sin(s); }};
    if (name == "s+0.2sin") return {domain, [](double s) { return s + 0.2 * std::sin(s); }};
    throw std::invalid_argument("unknown lambda '" + name + "'");
}

void verify_t1(CheckSink& sink, double theta, const std::string& lambda_name) {
    const Tolerances tol = tolerances_from_env();
    const ScalarFn lambda = named_lambda(lambda_name, {-10.0, 10.0});
    const Curve gen = generalized_helix({theta, lambda}, {0.0, 2.0 * kPi}, tol);
    const Surface S = build_ruled(gen, RuledKind::TangentDevelopable, {0.1, 1.0}, tol);
    const AngleField field = angle_field(S, {0.0, 0.0, 1.0}, 40, 40, tol);
    double max_dev = 0.0;
    for (const AngleSample& a : field.samples)
        max_dev = std::max(max_dev, std::abs(a.angle - theta));
    std::ostringstream what;
    what << "tangent developable angle field constant at theta (max dev "
         << format_double(max_dev) << ")";
    sink.check(max_dev <= 1e-4, what.str());
}

void verify_t2(CheckSink& sink, double theta, const std::string& lambda_name) {
    const Tolerances tol = tolerances_from_env();
    if (lambda_name == "neg-s") {
        Curve helix = circular_helix(theta);
        helix.domain = {0.0, 2.0 * kPi};
        const Surface A = build_ruled(helix, RuledKind::TangentDevelopable, {0.0, 1.0}, tol);
        const ScalarFn eta{{-50.0, 50.0}, [](double t) { return 0.5 * kPi - t; }};
        const Surface B = theorem_a_surface(theta, eta, {-0.5, 2.0 * kPi + 1.5},
                                            {0.0, 2.0 * kPi + 2.0}, tol);
        const CanonicalMap map{named_lambda("neg-s", {-10.0, 10.0}), theta};
        const TranslationEquivalence eq =
            verify_translation_equivalence(A, B, map, 20, 20, 1e-6);
        const Vec3 expected = Vec3{-0.5 * kPi, 1.0, 0.0} * std::cos(theta);
        sink.check(eq.equivalent,
                   "surfaces agree up to a horizontal translation (max dev " +
                       format_double(eq.max_dev) + ")");
        sink.check(max_abs_diff(eq.translation, expected) <= 1e-6,
                   "translation equals cos(theta) * (-pi/2, 1, 0)");
        return;
    }
    const ScalarFn lambda = named_lambda(lambda_name, {-1.0, 3.0});
    const Curve gen = generalized_helix({theta, lambda}, {0.0, 1.5}, tol);
    const Surface A = build_ruled(gen, RuledKind::TangentDevelopable, {0.1, 1.0}, tol);
    const ScalarFn eta = eta_from_lambda(lambda, tol);
    const Surface B = theorem_a_surface(theta, eta, {0.0, 2.6}, {-0.3, 1.7}, tol);
    const CanonicalMap map{lambda, theta};
    const TranslationEquivalence eq =
        verify_translation_equivalence(A, B, map, 25, 25, 1e-5);
    sink.check(eq.equivalent && eq.max_dev <= 1e-5,
               "general-lambda surfaces agree up to a horizontal translation (max dev " +
                   format_double(eq.max_dev) + ")");
}

void verify_t3_normal(CheckSink& sink) {
    const Tolerances tol = tolerances_from_env();
    const Curve circle = arclength_reparam(
        planar_curve(circle_profile(1.0), {0, 0, 0}, {1, 0, 0}, {0, 1, 0}), tol);
    const Surface plane_like =
        build_ruled(circle, RuledKind::NormalSurface, {-0.4, 0.4}, tol);
    const ClassificationReport pr = classify(plane_like, tol);
    sink.check(pr.constant_angle && pr.label && *pr.label == CaseLabel::Plane &&
                   pr.theta && std::abs(*pr.theta) <= 1e-6,
               "normal surface of a plane curve is a plane with theta = 0");

    const Surface twisted =
        build_ruled(circular_helix(kPi / 4.0), RuledKind::NormalSurface, {-0.5, 0.5}, tol);
    const ClassificationReport tr = classify(twisted, tol);
    sink.check(!tr.constant_angle, "normal surface of a helix is not constant angle");
}

void verify_t3_binormal(CheckSink& sink) {
    const Tolerances tol = tolerances_from_env();
    const Curve circle = arclength_reparam(
        planar_curve(circle_profile(1.0), {0, 0, 0}, {1, 0, 0}, {0, 1, 0}), tol);
    const Surface S = build_ruled(circle, RuledKind::BinormalSurface, {-1.0, 1.0}, tol);
    const ClassificationReport r = classify(S, tol);
    sink.check(r.constant_angle && r.label && *r.label == CaseLabel::Cylinder && r.theta &&
                   std::abs(*r.theta - 0.5 * kPi) <= 1e-6,
               "binormal surface of the unit circle is a cylinder with theta = pi/2");
}

void verify_cone(CheckSink& sink) {
    const Tolerances tol = tolerances_from_env();
    for (double phi : {kPi / 6.0, kPi / 3.0, kPi / 2.0}) {
        const Surface cone = build_cone(spherical_circle(phi), {0.2, 2.0}, tol);
        const ClassificationReport r = classify(cone, tol);
        std::ostringstream what;
        what << "cone over the phi = " << format_double(phi)
             << " circle is a circular cone with theta = pi/2 - phi";
        sink.check(r.constant_angle && r.label && *r.label == CaseLabel::CircularCone &&
                       r.theta && std::abs(*r.theta - (0.5 * kPi - phi)) <= 1e-4,
                   what.str());
    }
    const Surface wavy = build_cone(spherical_wave(), {0.2, 2.0}, tol);
    const ClassificationReport w = classify(wavy, tol);
    sink.check(!w.constant_angle, "cone over a wavy director is not constant angle");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constangle: constant-angle analysis of ruled surfaces"};
    app.require_subcommand(1);

    std::string spec_path, grid_text = "40x40", out_path, fields_text, direction_text,
                csv_path, which, lambda_name = "neg-s";
    double inset = 0.0;
    double theta = kPi / 6.0;
    bool brute = false;

    auto* gen = app.add_subcommand("generate", "sample a surface and export OBJ/CSV");
    gen->add_option("--surface", spec_path, "surface spec file")->required();
    gen->add_option("--grid", grid_text, "grid size NSxNV");
    gen->add_option("--out", out_path, "output OBJ path")->required();
    gen->add_option("--fields", fields_text, "comma list of normals,K,angle");
    gen->add_option("--direction", direction_text, "fixed direction X,Y,Z");
    gen->add_option("--csv", csv_path, "also write fields as CSV");
    gen->add_option("--inset", inset, "fractional grid inset per axis");

    auto* ana = app.add_subcommand("analyze", "angle field statistics vs a direction");
    ana->add_option("--surface", spec_path, "surface spec file")->required();
    ana->add_option("--direction", direction_text, "fixed direction X,Y,Z")->required();
    ana->add_option("--grid", grid_text, "grid size NSxNV");

    auto* cls = app.add_subcommand("classify", "constant-angle classification report");
    cls->add_option("--surface", spec_path, "surface spec file")->required();
    cls->add_option("--grid", grid_text, "grid size NSxNV");

    auto* fit = app.add_subcommand("fit-axis", "fit the Gauss-map circle axis");
    fit->add_option("--surface", spec_path, "surface spec file")->required();
    fit->add_option("--grid", grid_text, "grid size NSxNV");
    fit->add_flag("--brute-force", brute, "use the sphere-grid search oracle");

    auto* ver = app.add_subcommand("verify-theorem", "run a built-in theorem check");
    ver->add_option("--which", which, "t1 | t2 | t3-normal | t3-binormal | cone")
        ->required();
    ver->add_option("--theta", theta, "helix angle in (0, pi/2)");
    ver->add_option("--lambda", lambda_name, "neg-s | s | 2s | s+0.3sin | s+0.2sin");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return run_generate(spec_path, grid_text, out_path, fields_text,
                                direction_text, csv_path, inset);
        if (ana->parsed()) return run_analyze(spec_path, grid_text, direction_text);
        if (cls->parsed()) return run_classify(spec_path, grid_text);
        if (fit->parsed()) return run_fit_axis(spec_path, grid_text, brute);
        if (ver->parsed()) {
            CheckSink sink;
            if (which == "t1") verify_t1(sink, theta, lambda_name);
            else if (which == "t2") verify_t2(sink, theta, lambda_name);
            else if (which == "t3-normal") verify_t3_normal(sink);
            else if (which == "t3-binormal") verify_t3_binormal(sink);
            else if (which == "cone") verify_cone(sink);
            else throw std::invalid_argument("unknown check '" + which + "'");
            return sink.failures == 0 ? 0 : 1;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
