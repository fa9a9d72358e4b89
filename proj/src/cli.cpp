// casimir-wedge: CLI command execution and document emission.

#include "casimir/cli.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/greenfn.hpp"
#include "casimir/quad.hpp"
#include "casimir/verify.hpp"
#include "casimir/version.hpp"
#include "casimir/wedge.hpp"

namespace casimir::cli {

namespace {

constexpr double kPi = 3.14159265358979323846;

using json = nlohmann::ordered_json;

// Shortest decimal representation that round-trips to the same double.
std::string fmt_double(double v)
{
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

wedge::PhysicalConstants constants_for(const std::string& units)
{
    return units == "si" ? wedge::PhysicalConstants::si()
                         : wedge::PhysicalConstants::natural();
}

std::string stress_units(const std::string& units)
{
    return units == "si" ? "J/m^3" : "hbar*c/length^4";
}

std::string torque_units(const std::string& units)
{
    return units == "si" ? "N (per unit height)" : "hbar*c/length^5/rad";
}

void require_param(bool ok, const std::string& name)
{
    if (!ok) throw std::domain_error("missing or invalid required parameter: " + name);
}

void require_choice(const std::string& value, std::initializer_list<const char*> allowed,
                    const std::string& name)
{
    for (const char* a : allowed)
        if (value == a) return;
    std::string msg = name + " must be one of {";
    bool first = true;
    for (const char* a : allowed) {
        if (!first) msg += ", ";
        msg += a;
        first = false;
    }
    throw std::domain_error(msg + "} (got " + value + ")");
}

json trace_to_json(const wedge::ExtrapolationTrace& trace)
{
    json t;
    t["epsilons"] = trace.epsilons;
    t["values"] = trace.values;
    t["extrapolant"] = trace.extrapolant;
    t["error_estimate"] = trace.error_estimate;
    return t;
}

struct Document {
    json inputs;
    json results = json::object();
    json diagnostics = json::object();
    std::string csv;  // CSV body used when format == csv
};

std::string render(const Document& doc, const std::string& format)
{
    if (format == "csv") return doc.csv;
    json out;
    out["inputs"] = doc.inputs;
    out["results"] = doc.results;
    out["diagnostics"] = doc.diagnostics;
    out["version"] = casimir::kVersion;
    return out.dump(2) + "\n";
}

Document run_stress(const RunConfig& cfg)
{
    require_param(std::isfinite(cfg.beta), "beta");
    require_param(std::isfinite(cfg.rho), "rho");
    require_choice(cfg.method, {"closed", "series"}, "method");

    const wedge::WedgeGeometry geom(cfg.beta, cfg.rho);
    const auto consts = constants_for(cfg.units);

    Document doc;
    doc.inputs = {{"command", "stress"}, {"beta", cfg.beta},   {"rho", cfg.rho},
                  {"method", cfg.method}, {"tol", cfg.tol},    {"units", cfg.units}};

    wedge::StressResult result{};
    if (cfg.method == "series") {
        auto [sr, trace] = wedge::tphiphi_renormalized(geom, cfg.tol);
        result = sr;
        result.value *= consts.hbar_c;
        result.error_estimate *= consts.hbar_c;
        doc.diagnostics["extrapolation_trace"] = trace_to_json(trace);
    } else {
        result = wedge::tphiphi_closed(geom, consts);
    }

    doc.results = {{"value", result.value},
                   {"error_estimate", result.error_estimate},
                   {"method", wedge::method_name(result.method)},
                   {"units", stress_units(cfg.units)}};
    doc.csv = "beta,rho,method,value,error_estimate,units\n" + fmt_double(cfg.beta) + "," +
              fmt_double(cfg.rho) + "," + wedge::method_name(result.method) + "," +
              fmt_double(result.value) + "," + fmt_double(result.error_estimate) + "," +
              stress_units(cfg.units) + "\n";
    return doc;
}

Document run_torque(const RunConfig& cfg)
{
    require_param(std::isfinite(cfg.beta), "beta");
    require_param(std::isfinite(cfg.rho), "rho");

    const wedge::WedgeGeometry geom(cfg.beta, cfg.rho);
    const auto result = wedge::torque_density(geom, constants_for(cfg.units));

    Document doc;
    doc.inputs = {{"command", "torque"},
                  {"beta", cfg.beta},
                  {"rho", cfg.rho},
                  {"units", cfg.units}};
    doc.results = {{"value", result.value}, {"units", torque_units(cfg.units)}};
    if (std::fabs(cfg.beta / kPi - 1.0) <= 1.0e-6)
        doc.diagnostics["caveats"] = json::array(
            {"beta is numerically pi: the renormalized stress vanishes there while the "
             "torque density formula does not; interpret the value as the limit from "
             "neighboring angles"});
    doc.csv = "beta,rho,value,units\n" + fmt_double(cfg.beta) + "," + fmt_double(cfg.rho) +
              "," + fmt_double(result.value) + "," + torque_units(cfg.units) + "\n";
    return doc;
}

Document run_limit_table(const RunConfig& cfg)
{
    require_param(std::isfinite(cfg.d) && cfg.d > 0.0, "d");
    require_param(std::isfinite(cfg.beta_start), "beta-start");
    require_param(std::isfinite(cfg.beta_end), "beta-end");
    if (!(cfg.beta_end > 0.0) || !(cfg.beta_end < cfg.beta_start) ||
        !(cfg.beta_start <= kPi / 4.0))
        throw std::domain_error(
            "limit-table requires 0 < beta-end < beta-start <= pi/4 (got beta-start=" +
            std::to_string(cfg.beta_start) + ", beta-end=" + std::to_string(cfg.beta_end) +
            ")");
    if (cfg.steps < 2)
        throw std::domain_error("steps must be >= 2 (got " + std::to_string(cfg.steps) + ")");

    const double target = -kPi * kPi / 480.0;
    const double log_ratio = std::log(cfg.beta_end / cfg.beta_start);

    Document doc;
    doc.inputs = {{"command", "limit-table"}, {"d", cfg.d},
                  {"beta_start", cfg.beta_start}, {"beta_end", cfg.beta_end},
                  {"steps", cfg.steps}};
    json rows = json::array();
    std::string csv = "beta,rho,stress_d4,deviation\n";
    for (int i = 0; i < cfg.steps; ++i) {
        const double frac = static_cast<double>(i) / (cfg.steps - 1);
        const double beta = cfg.beta_start * std::exp(log_ratio * frac);
        const double rho = cfg.d / beta;
        const double value = wedge::parallel_plate_limit(cfg.d, beta);
        const double deviation = std::fabs(value - target);
        rows.push_back(
            {{"beta", beta}, {"rho", rho}, {"stress_d4", value}, {"deviation", deviation}});
        csv += fmt_double(beta) + "," + fmt_double(rho) + "," + fmt_double(value) + "," +
               fmt_double(deviation) + "\n";
    }
    doc.results = {{"target", target}, {"rows", rows},
                   {"units", "hbar*c (stress_d4 is T^phiphi d^4)"}};
    doc.csv = csv;
    return doc;
}

Document run_green(const RunConfig& cfg)
{
    require_param(std::isfinite(cfg.beta), "beta");
    require_param(std::isfinite(cfg.phi), "phi");
    require_param(std::isfinite(cfg.phi_prime), "phi-prime");
    require_param(std::isfinite(cfg.rho), "rho");
    require_param(std::isfinite(cfg.rho_prime), "rho-prime");
    require_param(std::isfinite(cfg.lambda), "lambda");
    if (cfg.m_max < 1)
        throw std::domain_error("m-max must be >= 1 (got " + std::to_string(cfg.m_max) + ")");

    const auto sum = greenfn::green_partial_sum(cfg.beta, cfg.phi, cfg.phi_prime, cfg.rho,
                                                cfg.rho_prime, cfg.lambda, cfg.m_max);

    Document doc;
    doc.inputs = {{"command", "green"},     {"beta", cfg.beta},
                  {"phi", cfg.phi},         {"phi_prime", cfg.phi_prime},
                  {"rho", cfg.rho},         {"rho_prime", cfg.rho_prime},
                  {"lambda", cfg.lambda},   {"m_max", cfg.m_max}};
    doc.results = {{"value", sum.value}, {"terms", sum.terms}};
    if (sum.coincidence_warning)
        doc.diagnostics["caveats"] = json::array(
            {"coincident evaluation point (rho == rho', phi == phi'): the mode sum is "
             "logarithmically divergent; the partial sum depends on m_max"});
    doc.csv = "beta,phi,phi_prime,rho,rho_prime,lambda,m_max,value\n" + fmt_double(cfg.beta) +
              "," + fmt_double(cfg.phi) + "," + fmt_double(cfg.phi_prime) + "," +
              fmt_double(cfg.rho) + "," + fmt_double(cfg.rho_prime) + "," +
              fmt_double(cfg.lambda) + "," + std::to_string(cfg.m_max) + "," +
              fmt_double(sum.value) + "\n";
    return doc;
}

Document run_verify(const RunConfig& cfg, bool& failed)
{
    const auto results = verify::run_suite(cfg.suite, cfg.tol);
    failed = !verify::all_passed(results);

    Document doc;
    doc.inputs = {{"command", "verify"}, {"suite", cfg.suite}, {"tol", cfg.tol}};
    json checks = json::array();
    std::string csv = "suite,check,passed,observed,threshold\n";
    int failures = 0;
    for (const auto& r : results) {
        checks.push_back({{"suite", r.suite},
                          {"check", r.name},
                          {"passed", r.passed},
                          {"observed", r.observed},
                          {"threshold", r.threshold},
                          {"detail", r.detail}});
        if (!r.passed) ++failures;
        csv += r.suite + "," + r.name + "," + (r.passed ? "true" : "false") + "," +
               fmt_double(r.observed) + "," + fmt_double(r.threshold) + "\n";
    }
    doc.results = {{"checks", checks},
                   {"passed", failures == 0},
                   {"total", static_cast<int>(results.size())},
                   {"failures", failures}};
    doc.csv = csv;
    return doc;
}

json inputs_echo_for_error(const RunConfig& cfg)
{
    json inputs;
    inputs["command"] = cfg.command;
    if (std::isfinite(cfg.beta)) inputs["beta"] = cfg.beta;
    if (std::isfinite(cfg.rho)) inputs["rho"] = cfg.rho;
    inputs["tol"] = cfg.tol;
    inputs["units"] = cfg.units;
    return inputs;
}

}  // namespace

RunOutcome run(const RunConfig& cfg)
{
    try {
        require_choice(cfg.units, {"natural", "si"}, "units");
        require_choice(cfg.format, {"json", "csv"}, "format");
        if (!(cfg.tol > 0.0))
            throw std::domain_error("tol must be > 0 (got " + std::to_string(cfg.tol) + ")");

        Document doc;
        bool verify_failed = false;
        if (cfg.command == "stress")
            doc = run_stress(cfg);
        else if (cfg.command == "torque")
            doc = run_torque(cfg);
        else if (cfg.command == "limit-table")
            doc = run_limit_table(cfg);
        else if (cfg.command == "green")
            doc = run_green(cfg);
        else if (cfg.command == "verify")
            doc = run_verify(cfg, verify_failed);
        else
            throw std::domain_error("unknown command: " + cfg.command);

        RunOutcome outcome;
        outcome.exit_code = verify_failed ? 2 : 0;
        if (verify_failed) outcome.diagnostic = "verify: one or more checks failed";
        outcome.document = render(doc, cfg.format);
        return outcome;
    } catch (const wedge::ExtrapolationError& e) {
        // Non-convergence: serialize the trace for post-mortem (always JSON).
        Document doc;
        doc.inputs = inputs_echo_for_error(cfg);
        doc.diagnostics = {{"error", e.what()},
                           {"extrapolation_trace", trace_to_json(e.trace)}};
        return {2, render(doc, "json"), e.what()};
    } catch (const quad::QuadratureError& e) {
        Document doc;
        doc.inputs = inputs_echo_for_error(cfg);
        doc.diagnostics = {{"error", e.what()},
                           {"quadrature_result",
                            {{"value", e.partial.value},
                             {"error_estimate", e.partial.error_estimate},
                             {"evaluations", e.partial.evaluations}}}};
        return {2, render(doc, "json"), e.what()};
    } catch (const wedge::AccuracyLossError& e) {
        return {2, "", e.what()};
    } catch (const std::overflow_error& e) {
        return {2, "", e.what()};
    } catch (const std::domain_error& e) {
        return {1, "", e.what()};
    } catch (const std::invalid_argument& e) {
        return {1, "", e.what()};
    }
}

namespace {

// Fills unset options from a JSON config file; a full output document is
// accepted too (its "inputs" object is used).
void merge_config_file(const std::string& path, CLI::App* sub, RunConfig& cfg)
{
    std::ifstream in(path);
    if (!in) throw std::domain_error("config: cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::domain_error("config: " + path + " is not valid JSON: " + e.what());
    }
    if (j.contains("inputs")) j = j["inputs"];
    if (!j.is_object()) throw std::domain_error("config: " + path + " must hold a JSON object");

    auto take_double = [&](const char* key, const char* flag, double& slot) {
        if (j.contains(key) && sub->count(flag) == 0) slot = j[key].get<double>();
    };
    auto take_int = [&](const char* key, const char* flag, int& slot) {
        if (j.contains(key) && sub->count(flag) == 0) slot = j[key].get<int>();
    };
    auto take_string = [&](const char* key, const char* flag, std::string& slot) {
        if (j.contains(key) && sub->count(flag) == 0) slot = j[key].get<std::string>();
    };

    if (j.contains("command") && j["command"].get<std::string>() != cfg.command)
        throw std::domain_error("config: command mismatch (config says " +
                                j["command"].get<std::string>() + ", invoked " + cfg.command +
                                ")");
    take_double("beta", "--beta", cfg.beta);
    take_double("rho", "--rho", cfg.rho);
    take_double("phi", "--phi", cfg.phi);
    take_double("phi_prime", "--phi-prime", cfg.phi_prime);
    take_double("rho_prime", "--rho-prime", cfg.rho_prime);
    take_double("lambda", "--lambda", cfg.lambda);
    take_double("d", "--d", cfg.d);
    take_double("beta_start", "--beta-start", cfg.beta_start);
    take_double("beta_end", "--beta-end", cfg.beta_end);
    take_int("steps", "--steps", cfg.steps);
    take_int("m_max", "--m-max", cfg.m_max);
    take_string("method", "--method", cfg.method);
    take_string("suite", "--suite", cfg.suite);
    take_double("tol", "--tol", cfg.tol);
    take_string("units", "--units", cfg.units);
    take_string("format", "--format", cfg.format);
}

void add_common_flags(CLI::App* sub, RunConfig& cfg, std::string& config_path)
{
    sub->add_option("--tol", cfg.tol, "Tolerance for iterative evaluations (default 1e-8)");
    sub->add_option("--units", cfg.units, "Output units: natural or si");
    sub->add_option("--format", cfg.format, "Output format: json or csv");
    sub->add_option("--out", cfg.out_path, "Write the document to PATH instead of stdout");
    sub->add_option("--config", config_path,
                    "JSON config file; explicit flags take precedence");
}

}  // namespace

int main_entry(int argc, char** argv)
{
    RunConfig cfg;
    std::string config_path;

    CLI::App app{"Vacuum stress and Casimir torque for a perfectly conducting wedge"};
    app.require_subcommand(1);

    CLI::App* stress = app.add_subcommand("stress", "Renormalized <T^phiphi> at (beta, rho)");
    stress->add_option("--beta", cfg.beta, "Opening angle in radians, (0, 2*pi]");
    stress->add_option("--rho", cfg.rho, "Radial distance > 0");
    stress->add_option("--method", cfg.method, "closed (analytic) or series (extrapolated)");
    add_common_flags(stress, cfg, config_path);

    CLI::App* torque = app.add_subcommand("torque", "Torque density per unit height");
    torque->add_option("--beta", cfg.beta, "Opening angle in radians, (0, 2*pi]");
    torque->add_option("--rho", cfg.rho, "Radial distance > 0");
    add_common_flags(torque, cfg, config_path);

    CLI::App* table = app.add_subcommand(
        "limit-table", "Parallel-plate limit sweep at fixed rho*beta = d");
    table->add_option("--d", cfg.d, "Plate separation d = rho*beta > 0");
    table->add_option("--beta-start", cfg.beta_start, "Largest beta (<= pi/4)");
    table->add_option("--beta-end", cfg.beta_end, "Smallest beta (> 0)");
    table->add_option("--steps", cfg.steps, "Number of rows (>= 2), geometric in beta");
    add_common_flags(table, cfg, config_path);

    CLI::App* green = app.add_subcommand("green", "Partial Green-function mode sum");
    green->add_option("--beta", cfg.beta, "Opening angle in radians, (0, 2*pi]");
    green->add_option("--phi", cfg.phi, "Angle phi in [0, beta]");
    green->add_option("--phi-prime", cfg.phi_prime, "Angle phi' in [0, beta]");
    green->add_option("--rho", cfg.rho, "Radius rho > 0");
    green->add_option("--rho-prime", cfg.rho_prime, "Radius rho' > 0");
    green->add_option("--lambda", cfg.lambda, "Euclidean radial momentum > 0");
    green->add_option("--m-max", cfg.m_max, "Number of modes (default 25)");
    add_common_flags(green, cfg, config_path);

    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
    verify_cmd->add_option("--suite", cfg.suite, "all, specfun, quad, wedge, or greenfn");
    add_common_flags(verify_cmd, cfg, config_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();

    if (!config_path.empty()) {
        try {
            merge_config_file(config_path, sub, cfg);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
    }

    const RunOutcome outcome = run(cfg);
    if (!outcome.diagnostic.empty()) std::cerr << "error: " << outcome.diagnostic << "\n";
    if (!outcome.document.empty()) {
        if (cfg.out_path.empty()) {
            std::cout << outcome.document;
        } else {
            std::ofstream out(cfg.out_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot open output path " << cfg.out_path << "\n";
                return 1;
            }
            out << outcome.document;
        }
    }
    return outcome.exit_code;
}

}  // namespace casimir::cli
