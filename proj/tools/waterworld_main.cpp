// Command line front end: verification suites, waterworld extraction, and
// figure-data emission for the exact quaternion-order geometry library.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ww/all.hpp"
#include "ww/config.hpp"
#include "ww/json_io.hpp"
#include "ww/plots.hpp"
#include "ww/verify.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadForm = 3;

struct Options {
    std::string preset = "hurwitz";
    std::string config_path;
    std::string bound_denominator; // empty -> D_A
    std::string box = "4";
    std::string out;
    std::string format = "json";
    int precision = 6;
    uint64_t seed = 20200823;
};

// presets are compiled in; anything else is read as an order config file
const ww::OrderCtx& resolve_order(const Options& opt) {
    if (opt.preset == "hurwitz" || opt.preset == "da3") return ww::order_preset(opt.preset);
    static std::map<std::string, ww::OrderCtx> loaded;
    auto it = loaded.find(opt.preset);
    if (it == loaded.end())
        it = loaded.emplace(opt.preset, ww::load_order_file(opt.preset)).first;
    return it->second;
}

ww::Region resolve_region(const Options& opt, const ww::OrderCtx& order) {
    ww::Region region = ww::default_region(order);
    if (!opt.bound_denominator.empty()) region.denom_norm_max = ww::Int(opt.bound_denominator);
    region.box_nsq = ww::parse_rat(opt.box);
    if (region.denom_norm_max <= 0 || region.box_nsq <= 0)
        throw ww::usage_error("region bounds must be positive");
    return region;
}

void apply_config_file(Options& opt) {
    if (opt.config_path.empty()) return;
    ww::KeyValues kv = ww::load_key_values(opt.config_path);
    if (kv.count("preset")) opt.preset = kv["preset"];
    if (kv.count("bound_denominator")) opt.bound_denominator = kv["bound_denominator"];
    if (kv.count("box")) opt.box = kv["box"];
    if (kv.count("format")) opt.format = kv["format"];
    if (kv.count("precision_digits")) opt.precision = std::stoi(kv["precision_digits"]);
    if (kv.count("seed")) opt.seed = std::stoull(kv["seed"]);
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty() || path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ww::usage_error("cannot open output file " + path);
    out << payload;
}

std::string decimal(const ww::Rat& r, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << ww::to_double(r);
    return os.str();
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const Options& opt, const std::string& suite) {
    auto names = ww::verify::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "unknown suite '" << suite << "'; available:";
        for (const auto& n : names) std::cerr << " " << n;
        std::cerr << "\n";
        return kExitUsage;
    }
    const ww::OrderCtx& order = resolve_order(opt);
    ww::verify::SuiteReport report = ww::verify::run_suite(suite, order, opt.seed);
    for (const auto& check : report.checks) {
        std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << report.suite << ": "
                  << check.name;
        if (!check.pass && !check.detail.empty()) std::cout << " -- " << check.detail;
        std::cout << "\n";
    }
    size_t passed = 0;
    for (const auto& check : report.checks) passed += check.pass;
    std::cout << "suite " << report.suite << ": " << passed << "/" << report.checks.size()
              << " checks passed\n";
    if (!opt.out.empty()) {
        ww::Json j;
        j["suite"] = report.suite;
        j["seed"] = opt.seed;
        j["checks"] = ww::Json::array();
        for (const auto& check : report.checks)
            j["checks"].push_back(
                {{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}});
        j["all_pass"] = report.all_pass();
        write_output(opt.out, j.dump(2) + "\n");
    }
    return report.all_pass() ? 0 : kExitVerifyFailed;
}

// ---- waterworld ------------------------------------------------------------

ww::HForm parse_form(const ww::OrderCtx& order, const std::string& inline_json,
                     const std::string& file) {
    std::string text = inline_json;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw ww::usage_error("cannot open form file " + file);
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    if (text.empty()) throw ww::usage_error("no form given; use --form or --form-file");
    return ww::form_from(order, ww::Json::parse(text));
}

int cmd_waterworld(const Options& opt, const std::string& form_json,
                   const std::string& form_file) {
    const ww::OrderCtx& order = resolve_order(opt);
    ww::HForm f = parse_form(order, form_json, form_file);
    if (!ww::is_integral(order, f) || ww::disc(f) <= 0) {
        std::cerr << "form must be integral and indefinite (disc = "
                  << ww::rat_str(ww::disc(f)) << ")\n";
        return kExitBadForm;
    }
    ww::Region region = resolve_region(opt, order);
    ww::WaterworldReport report = ww::extract(order, f, region);
    ww::Json j = ww::report_json(order, report);
    if (order.name == "hurwitz") {
        // table of values on the cells around the fundamental cell
        ww::Json table = ww::Json::array();
        for (const auto& row : ww::cell_values(order, f))
            table.push_back({{"cell", row.label}, {"F", ww::rat_str(row.value)}});
        j["fundamental_cell_values"] = table;
    }
    write_output(opt.out, j.dump(2) + "\n");
    return 0;
}

// ---- plot ------------------------------------------------------------------

std::string csv_escape(const std::string& s) {
    if (s.find(',') == std::string::npos) return s;
    return "\"" + s + "\"";
}

int cmd_plot(const Options& opt, const std::string& kind, const std::string& form_json,
             const std::string& form_file) {
    const ww::OrderCtx& order = resolve_order(opt);
    std::ostringstream csv;
    std::ostringstream svg;
    double scale = 160.0;
    auto sx = [&](double v) { return 320.0 + scale * v; };
    auto sy = [&](double v) { return 320.0 - scale * v; };
    svg << "<svg xmlns='http://www.w3.org/2000/svg' viewBox='0 0 640 640'>\n";

    if (kind == "horoball_slice") {
        ww::Region region = resolve_region(opt, order);
        csv << "cusp,center0,center1,center2,center3,radius_sq\n";
        for (const auto& row : ww::horoball_slice(order, region)) {
            const ww::Quat& a = row.cusp.alpha;
            csv << csv_escape(ww::cusp_str(row.cusp)) << "," << ww::rat_str(a.c[0]) << ","
                << ww::rat_str(a.c[1]) << "," << ww::rat_str(a.c[2]) << ","
                << ww::rat_str(a.c[3]) << "," << ww::rat_str(row.radius_sq) << "\n";
            double r = std::sqrt(ww::to_double(row.radius_sq));
            svg << "<circle cx='" << sx(ww::to_double(a.c[0])) << "' cy='"
                << sy(ww::to_double(a.c[1])) << "' r='" << scale * r
                << "' fill='none' stroke='steelblue'/>\n";
        }
    } else if (kind == "link_slice") {
        csv << "kind,alpha,beta,l0,l1,l2,c0,c1,w0,w1,rsq\n";
        for (const auto& row : ww::link_slice(order)) {
            if (row.kind == ww::SliceCurve::Line) {
                csv << "line," << csv_escape(ww::cusp_str(row.a)) << ","
                    << csv_escape(ww::cusp_str(row.b)) << "," << ww::rat_str(row.l0) << ","
                    << ww::rat_str(row.l1) << "," << ww::rat_str(row.l2) << ",,,,,\n";
                double a = ww::to_double(row.l0), b = ww::to_double(row.l1),
                       c = ww::to_double(row.l2);
                double x0, y0, x1, y1;
                if (std::abs(b) > std::abs(a)) {
                    x0 = -2;
                    x1 = 2;
                    y0 = (c - a * x0) / b;
                    y1 = (c - a * x1) / b;
                } else {
                    y0 = -2;
                    y1 = 2;
                    x0 = (c - b * y0) / a;
                    x1 = (c - b * y1) / a;
                }
                svg << "<line x1='" << sx(x0) << "' y1='" << sy(y0) << "' x2='" << sx(x1)
                    << "' y2='" << sy(y1) << "' stroke='darkred'/>\n";
            } else {
                csv << "conic," << csv_escape(ww::cusp_str(row.a)) << ","
                    << csv_escape(ww::cusp_str(row.b)) << ",,,," << ww::rat_str(row.c0)
                    << "," << ww::rat_str(row.c1) << "," << ww::rat_str(row.w0) << ","
                    << ww::rat_str(row.w1) << "," << ww::rat_str(row.rsq) << "\n";
                double rx = std::sqrt(ww::to_double(row.rsq / row.w0));
                double ry = std::sqrt(ww::to_double(row.rsq / row.w1));
                svg << "<ellipse cx='" << sx(ww::to_double(row.c0)) << "' cy='"
                    << sy(ww::to_double(row.c1)) << "' rx='" << scale * rx << "' ry='"
                    << scale * ry << "' fill='none' stroke='darkgreen'/>\n";
            }
        }
    } else if (kind == "values") {
        ww::HForm f = parse_form(order, form_json, form_file);
        if (!ww::is_integral(order, f) || ww::disc(f) <= 0) {
            std::cerr << "form must be integral and indefinite\n";
            return kExitBadForm;
        }
        csv << "cell,F,F_decimal\n";
        double y = 20;
        for (const auto& row : ww::cell_values(order, f)) {
            csv << csv_escape(row.label) << "," << ww::rat_str(row.value) << ","
                << decimal(row.value, opt.precision) << "\n";
            svg << "<text x='20' y='" << y << "' font-size='12'>" << row.label << " : "
                << ww::rat_str(row.value) << "</text>\n";
            y += 16;
        }
    } else {
        std::cerr << "unknown plot kind '" << kind
                  << "'; available: link_slice horoball_slice values\n";
        return kExitUsage;
    }
    svg << "</svg>\n";

    if (opt.format == "csv") {
        write_output(opt.out, csv.str());
    } else if (opt.format == "svg") {
        write_output(opt.out, svg.str());
    } else if (opt.format == "json") {
        ww::Json j;
        j["kind"] = kind;
        j["csv"] = csv.str();
        write_output(opt.out, j.dump(2) + "\n");
    } else {
        std::cerr << "unknown format '" << opt.format << "'\n";
        return kExitUsage;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact horoball geometry and waterworlds of binary Hamiltonian forms"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--config", opt.config_path, "key = value config file");
    app.add_option("--preset", opt.preset, "order preset (hurwitz, da3) or order file");
    app.add_option("--bound-denominator", opt.bound_denominator,
                   "denominator norm bound of the cusp region");
    app.add_option("--box", opt.box, "norm bound of the cusp region box");
    app.add_option("--out", opt.out, "output file ('-' for stdout)");
    app.add_option("--format", opt.format, "output format: json, csv, svg");
    app.add_option("--precision", opt.precision, "digits for decimal renderings");
    app.add_option("--seed", opt.seed, "seed for the randomized suites");

    std::string suite;
    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->fallthrough();
    verify->add_option("suite", suite, "suite name")->required();

    std::string form_json, form_file;
    CLI::App* world = app.add_subcommand("waterworld", "extract a waterworld report");
    world->fallthrough();
    world->add_option("--form", form_json, "form as inline JSON");
    world->add_option("--form-file", form_file, "form as a JSON file");

    std::string kind;
    CLI::App* plot = app.add_subcommand("plot", "emit figure data (CSV / SVG)");
    plot->fallthrough();
    plot->add_option("--kind", kind, "link_slice, horoball_slice or values")->required();
    plot->add_option("--form", form_json, "form as inline JSON (for values)");
    plot->add_option("--form-file", form_file, "form as a JSON file (for values)");

    try {
        app.parse(argc, argv);
        apply_config_file(opt);
        if (verify->parsed()) return cmd_verify(opt, suite);
        if (world->parsed()) return cmd_waterworld(opt, form_json, form_file);
        if (plot->parsed()) return cmd_plot(opt, kind, form_json, form_file);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const ww::usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
}
