#pragma once

// Command-line front end. run() parses arguments, dispatches to the library
// and writes results to `out`; errors go to `err` as "error: <Name>: ..."
// with a per-error exit status.

#include <abflux/error.hpp>
#include <abflux/fields.hpp>
#include <abflux/geometry.hpp>
#include <abflux/io.hpp>
#include <abflux/phase.hpp>
#include <abflux/quantize.hpp>
#include <abflux/stokes.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace abflux::cli {

using nlohmann::json;

inline constexpr int usage_error_status = 2;

inline constexpr const char* csv_help = R"(CSV output columns:
  circulation   circulation,winding
  flux          flux
  stokes        phi_1,phi_2,phi_total,circ_outer,circ_inner,discrepancy
  chart-audit   deviation,sector_sum,phi_2
  phase         angle,winding
  interfere     x,intensity   (default format for this subcommand)
  quantize      one charge or value per row, header first
Polyline CSV input: rows "x,y[,z]", optional header row, '#' comments.)";

enum class Format { json, csv };

/// Options shared by every subcommand that needs a field.
struct FieldOptions {
    std::string config;
    std::optional<double> B;
    std::optional<double> R;
    std::optional<double> gamma;
    std::optional<double> kappa;
    std::optional<double> rel_tol;
    std::optional<double> abs_tol;
    std::optional<std::uint64_t> max_subdivisions;
    std::optional<std::string> format;

    void attach(CLI::App& app) {
        app.add_option("--config", config, "JSON config {\"field\":{B,R,gamma},\"quadrature\":{...},\"format\":...}");
        app.add_option("--B", B, "field strength inside the solenoid (default 0)");
        app.add_option("--R", R, "solenoid radius (default 1)");
        app.add_option("--gamma", gamma, "exterior circulation parameter (default B R^2/2 + kappa)");
        app.add_option("--kappa", kappa, "offset of gamma from B R^2/2, used when --gamma is absent");
        app.add_option("--rel-tol", rel_tol, "quadrature relative tolerance");
        app.add_option("--abs-tol", abs_tol, "quadrature absolute tolerance");
        app.add_option("--max-subdivisions", max_subdivisions, "quadrature subdivision limit");
        app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    }

    json load_config() const {
        if (config.empty()) return json::object();
        return io::read_json_file(config);
    }

    SolenoidField field() const {
        const json cfg = load_config();
        const json fj = cfg.value("field", json::object());
        auto pick = [&](const std::optional<double>& flag, const char* key, std::optional<double> fallback) {
            if (flag) return flag;
            if (fj.contains(key)) return std::optional<double>(io::required<double>(fj, key));
            return fallback;
        };
        const double b = *pick(B, "B", 0.0);
        const double r = *pick(R, "R", 1.0);
        if (gamma) return {b, r, *gamma};
        if (kappa) return with_kappa(b, r, *kappa);
        // Config gamma only counts when neither field flag overrode B or R.
        if (fj.contains("gamma") && !B && !R) return {b, r, io::required<double>(fj, "gamma")};
        return ab_standard(b, r);
    }

    QuadratureSpec quadrature() const {
        const json cfg = load_config();
        QuadratureSpec s = cfg.contains("quadrature") ? io::quadrature_from_json(cfg["quadrature"]) : QuadratureSpec{};
        if (rel_tol) s.rel_tol = *rel_tol;
        if (abs_tol) s.abs_tol = *abs_tol;
        if (max_subdivisions) s.max_subdivisions = *max_subdivisions;
        s.validate();
        return s;
    }

    Format output_format(Format fallback = Format::json) const {
        std::string f;
        if (format) {
            f = *format;
        } else {
            const json cfg = load_config();
            if (!cfg.contains("format")) return fallback;
            f = io::required<std::string>(cfg, "format");
        }
        if (f == "json") return Format::json;
        if (f == "csv") return Format::csv;
        throw Error(ErrorCode::ConfigError, "unknown format '" + f + "'");
    }
};

/// Path selection for circulation and holonomy.
struct PathOptions {
    std::string circle;
    int turns = 1;
    std::string polyline;
    std::string path_json;

    void attach(CLI::App& app) {
        app.add_option("--circle", circle, "circle spec r=<radius>[,cx=..][,cy=..][,cz=..]");
        app.add_option("--turns", turns, "signed number of turns for --circle");
        app.add_option("--polyline", polyline, "CSV file of polyline vertices");
        app.add_option("--path", path_json, "JSON circle {\"center\":[x,y,z],\"radius\":r,\"turns\":n}");
    }

    bool given() const { return !circle.empty() || !polyline.empty() || !path_json.empty(); }

    ClosedPath path() const {
        const int count = !circle.empty() + !polyline.empty() + !path_json.empty();
        if (count != 1) throw Error(ErrorCode::ConfigError, "give exactly one of --circle, --polyline, --path");
        if (!polyline.empty()) return io::polyline_from_csv_file(polyline);
        if (!path_json.empty()) return io::circle_from_json(io::read_json_file(path_json));
        return parse_circle(circle, turns);
    }

    static ClosedPath parse_circle(const std::string& spec, int turns) {
        std::map<std::string, double> kv{{"cx", 0.0}, {"cy", 0.0}, {"cz", 0.0}};
        std::stringstream ss(spec);
        std::string item;
        bool have_r = false;
        while (std::getline(ss, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw Error(ErrorCode::ConfigError, "bad circle item '" + item + "'");
            const std::string key = item.substr(0, eq);
            if (key != "r" && !kv.count(key)) throw Error(ErrorCode::ConfigError, "unknown circle key '" + key + "'");
            try {
                kv[key] = std::stod(item.substr(eq + 1));
            } catch (const std::exception&) {
                throw Error(ErrorCode::ConfigError, "bad number in circle item '" + item + "'");
            }
            have_r = have_r || key == "r";
        }
        if (!have_r) throw Error(ErrorCode::ConfigError, "circle spec needs r=<radius>");
        return ClosedPath::circle(Point(kv["cx"], kv["cy"], kv["cz"]), kv["r"], turns);
    }
};

namespace detail {

inline json big_to_json(const BigInt& n) {
    if (n <= std::numeric_limits<std::int64_t>::max() && n >= std::numeric_limits<std::int64_t>::min())
        return n.convert_to<std::int64_t>();
    return n.str();
}

inline ChargeSpectrum parse_spectrum(const std::string& text) {
    const Rational n = Rational::parse(text);
    if (!n.is_integer()) throw Error(ErrorCode::InvalidSpectrum, "N must be an integer, got " + n.str());
    return ChargeSpectrum(n.numerator());
}

inline void emit(std::ostream& out, Format fmt, const json& doc, const std::vector<std::string>& csv_columns) {
    if (fmt == Format::json) {
        out << doc.dump() << "\n";
        return;
    }
    std::string header;
    std::string row;
    for (const auto& c : csv_columns) {
        header += (header.empty() ? "" : ",") + c;
        const json& v = doc.at(c);
        std::string cell = v.is_number_float() ? io::format_number(v.get<double>()) : v.is_string() ? v.get<std::string>() : v.dump();
        row += (row.empty() ? "" : ",") + cell;
    }
    out << header << "\n" << row << "\n";
}

}  // namespace detail

/// Entry point shared by the binary and the tests. argv[0] is the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Solenoid gauge potentials: circulation, Stokes decomposition, holonomy phases and charge quantization"};
    app.footer(csv_help);
    app.require_subcommand(1);

    FieldOptions fo_circ;
    PathOptions po;
    double L = 2.0;
    double q = 1.0;
    int w = 1;
    std::optional<double> compare_gamma;
    InterferometerGeometry geom;

    auto* c_circ = app.add_subcommand("circulation", "circulation of A around a closed path");
    fo_circ.attach(*c_circ);
    po.attach(*c_circ);

    FieldOptions fo_flux, fo_stokes, fo_chart, fo_phase, fo_inter;
    auto* c_flux = app.add_subcommand("flux", "direct flux of B through the disc of radius L");
    fo_flux.attach(*c_flux);
    c_flux->add_option("--L", L, "disc radius")->required();

    auto* c_stokes = app.add_subcommand("stokes", "Stokes decomposition report for the disc of radius L");
    fo_stokes.attach(*c_stokes);
    c_stokes->add_option("--L", L, "outer radius")->required();

    auto* c_chart = app.add_subcommand("chart-audit", "two-sector recomputation of the annulus flux");
    fo_chart.attach(*c_chart);
    c_chart->add_option("--L", L, "outer radius")->required();

    PathOptions po_phase;
    auto* c_phase = app.add_subcommand("phase", "holonomy phase angle theta of exp(-i theta)");
    fo_phase.attach(*c_phase);
    po_phase.attach(*c_phase);
    c_phase->add_option("--q", q, "charge in units of e")->required();
    c_phase->add_option("--w", w, "winding number for the closed form (ignored with a path)");
    c_phase->add_option("--compare-gamma", compare_gamma, "report whether this gamma gives the same phase");

    auto* c_inter = app.add_subcommand("interfere", "two-beam fringe pattern with the solenoid between the beams");
    fo_inter.attach(*c_inter);
    c_inter->add_option("--q", q, "charge in units of e")->required();
    c_inter->add_option("--d", geom.slit_separation, "slit separation");
    c_inter->add_option("--screen-distance", geom.screen_distance, "slit-to-screen distance");
    c_inter->add_option("--k", geom.wavenumber, "wavenumber");
    c_inter->add_option("--half-extent", geom.half_extent, "screen half-width");
    c_inter->add_option("--samples", geom.samples, "number of screen samples");

    auto* c_quant = app.add_subcommand("quantize", "exact charge-quantization checks");
    c_quant->require_subcommand(1);
    std::string qformat = "json";
    std::string charge_text;
    std::string kappa_text;
    std::string n_text = "1";
    std::int64_t nmin = 0;
    std::int64_t nmax = 0;
    std::vector<std::string> charge_list;

    auto* q_check = c_quant->add_subcommand("check", "is q an integer multiple of e/N");
    q_check->add_option("q", charge_text, "charge p/d in units of e")->required();
    q_check->add_option("--N", n_text, "spectrum denominator")->required();
    auto* q_spec = c_quant->add_subcommand("spectrum", "list n/N for n in [min, max]");
    q_spec->add_option("--N", n_text, "spectrum denominator")->required();
    q_spec->add_option("--min", nmin, "smallest n")->required();
    q_spec->add_option("--max", nmax, "largest n")->required();
    auto* q_infer = c_quant->add_subcommand("infer", "smallest N admitting every charge");
    q_infer->add_option("charges", charge_list, "charges p/d in units of e")->required();
    auto* q_kappa = c_quant->add_subcommand("kappa", "is kappa*e admissible (and compatible with charges)");
    q_kappa->add_option("kappa_e", kappa_text, "kappa times e as p/d")->required();
    q_kappa->add_option("--charges", charge_list, "charges the shift must leave unobservable");
    for (auto* sc : {q_check, q_spec, q_infer, q_kappa})
        sc->add_option("--format", qformat, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: UsageError: " << e.what() << "\n";
        return usage_error_status;
    }

    try {
        if (c_circ->parsed()) {
            const SolenoidField f = fo_circ.field();
            const ClosedPath path = po.path();
            const double c = circulation(f, path, fo_circ.quadrature());
            json doc{{"circulation", io::rounded(c)}};
            try {
                doc["winding"] = winding_number(path);
            } catch (const Error&) {
                doc["winding"] = nullptr;
            }
            detail::emit(out, fo_circ.output_format(), doc, {"circulation", "winding"});
        } else if (c_flux->parsed()) {
            const SolenoidField f = fo_flux.field();
            json doc{{"flux", io::rounded(flux_direct(f, L, fo_flux.quadrature()))}};
            detail::emit(out, fo_flux.output_format(), doc, {"flux"});
        } else if (c_stokes->parsed()) {
            const SolenoidField f = fo_stokes.field();
            const StokesReport r = verify_stokes(f, L, fo_stokes.quadrature());
            detail::emit(out, fo_stokes.output_format(), io::stokes_document(f, L, r),
                         {"phi_1", "phi_2", "phi_total", "circ_outer", "circ_inner", "discrepancy"});
        } else if (c_chart->parsed()) {
            const SolenoidField f = fo_chart.field();
            const ChartAudit a = chart_audit_detail(f, L, fo_chart.quadrature());
            json cuts = json::array();
            for (double c : a.cut_integrals) cuts.push_back(io::rounded(c));
            json doc{{"deviation", io::rounded(a.deviation)},
                     {"sector_sum", io::rounded(a.sector_sum)},
                     {"phi_2", io::rounded(a.phi_2)},
                     {"sector_flux", {io::rounded(a.sector_flux[0]), io::rounded(a.sector_flux[1])}},
                     {"sector_circ", {io::rounded(a.sector_circ[0]), io::rounded(a.sector_circ[1])}},
                     {"cut_integrals", cuts}};
            detail::emit(out, fo_chart.output_format(), doc, {"deviation", "sector_sum", "phi_2"});
        } else if (c_phase->parsed()) {
            const SolenoidField f = fo_phase.field();
            json doc{{"q", io::rounded(q)}, {"gamma", io::rounded(f.gamma())}};
            PhaseFactor p;
            if (po_phase.given()) {
                const ClosedPath path = po_phase.path();
                p = holonomy(f, path, q, fo_phase.quadrature());
                doc["winding"] = winding_number(path);
                doc["method"] = "holonomy";
            } else {
                p = phase_closed_form(q, f.gamma(), w);
                doc["winding"] = w;
                doc["method"] = "closed_form";
            }
            doc["angle"] = io::rounded(p.angle());
            if (compare_gamma) doc["equivalent"] = phases_equivalent(q, f.gamma(), *compare_gamma);
            if (q != 0.0) doc["periodic"] = periodicity_check(q, f.gamma());
            detail::emit(out, fo_phase.output_format(), doc, {"angle", "winding"});
        } else if (c_inter->parsed()) {
            const SolenoidField f = fo_inter.field();
            const auto rows = interference(f, q, geom);
            if (fo_inter.output_format(Format::csv) == Format::csv) {
                out << io::fringes_csv(rows);
            } else {
                json xs = json::array();
                json is = json::array();
                for (const auto& r : rows) {
                    xs.push_back(io::rounded(r.x));
                    is.push_back(io::rounded(r.intensity));
                }
                out << json{{"x", xs}, {"intensity", is}}.dump() << "\n";
            }
        } else if (c_quant->parsed()) {
            const Format fmt = qformat == "csv" ? Format::csv : Format::json;
            if (q_check->parsed()) {
                const RationalCharge qq = Rational::parse(charge_text);
                const ChargeSpectrum spec = detail::parse_spectrum(n_text);
                const bool ok = charge_allowed(qq, spec);
                json doc{{"q", qq.str()}, {"N", detail::big_to_json(spec.N())}, {"allowed", ok}};
                doc["n_q"] = ok ? json((qq * Rational(spec.N())).str()) : json(nullptr);
                detail::emit(out, fmt, doc, {"q", "N", "allowed"});
            } else if (q_spec->parsed()) {
                const ChargeSpectrum spec = detail::parse_spectrum(n_text);
                const auto qs = spectrum(spec, {nmin, nmax});
                if (fmt == Format::csv) {
                    out << "charge\n";
                    for (const auto& c : qs) out << c.str() << "\n";
                } else {
                    json doc{{"N", detail::big_to_json(spec.N())}, {"spectrum", io::charges_json(qs)}};
                    doc["antiparticle_closed"] = nmin == -nmax ? json(antiparticle_closure(spec, {nmin, nmax})) : json(nullptr);
                    out << doc.dump() << "\n";
                }
            } else if (q_infer->parsed()) {
                const ChargeSpectrum spec = infer_minimal_N(io::parse_charges(charge_list));
                detail::emit(out, fmt, json{{"N", detail::big_to_json(spec.N())}}, {"N"});
            } else if (q_kappa->parsed()) {
                const Rational k = Rational::parse(kappa_text);
                json doc{{"kappa_times_e", k.str()}, {"allowed", kappa_allowed(k)}};
                std::vector<std::string> cols{"kappa_times_e", "allowed"};
                if (!charge_list.empty()) {
                    doc["charges_unaffected"] = kappa_constraints(io::parse_charges(charge_list), k);
                    cols.push_back("charges_unaffected");
                }
                detail::emit(out, fmt, doc, cols);
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_status(e.code());
    } catch (const std::exception& e) {
        err << "error: InternalError: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace abflux::cli
