#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "omgci/analysis.hpp"
#include "omgci/cohinfo.hpp"
#include "omgci/errors.hpp"

namespace omgci::cli {

namespace {

using json = nlohmann::ordered_json;

std::string_view base_name(LogBase b) { return b == LogBase::Two ? "bits" : "nats"; }

// JSON has no infinities; they are written as strings.
json number(double v) {
    if (std::isfinite(v)) return v;
    return format_number(v);
}

json optional_number(const std::optional<double>& v) { return v ? number(*v) : json(nullptr); }

std::string optional_text(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

struct Csv {
    std::ostream& os;
    void header_comment(LogBase base) { os << "# base=" << base_name(base) << '\n'; }
    template <typename... Ts>
    void row(const Ts&... cells) {
        bool first = true;
        ((os << (first ? "" : ",") << cells, first = false), ...);
        os << '\n';
    }
};

std::string num(double v) { return format_number(v); }

struct Options {
    RunConfig config;
    std::string base = "nats";
    std::string format = "csv";
    std::string out_path;

    double tau = 0.0;
    double k = 0.0;
    double n = 0.0;
    double n_min = kGridNMin;
    double n_max = 1e6;
    std::size_t points = 400;
    double tau_min = 0.0;
    double tau_max = 2.0;
    double y_min = 0.0;
    double y_max = 2.0;
    std::size_t res = 101;
    std::size_t samples = VerifyConfig{}.samples;
    std::vector<std::string> tol;
};

int cmd_eval(const Options& o, std::ostream& os) {
    const SpectralParams s = spectral_params(o.n, o.k, o.tau);
    const double value = to_base(coherent_info(o.n, o.k, o.tau), o.config.log_base);
    if (o.config.format == OutputFormat::Json) {
        os << json{{"base", base_name(o.config.log_base)}, {"N", o.n}, {"K", o.k}, {"tau", o.tau},
                   {"G", number(value)}, {"eta", s.eta}, {"f", s.f}, {"ell", s.ell}, {"p", s.p}}
                  .dump(2)
           << '\n';
        return kExitOk;
    }
    Csv csv{os};
    csv.header_comment(o.config.log_base);
    csv.row("N", "K", "tau", "G", "eta", "f", "ell", "p");
    csv.row(num(o.n), num(o.k), num(o.tau), num(value), num(s.eta), num(s.f), num(s.ell), num(s.p));
    return kExitOk;
}

int cmd_scan(const Options& o, std::ostream& os) {
    const auto samples = scan(o.k, o.tau, o.n_min, o.n_max, o.points);
    const LogBase base = o.config.log_base;
    if (o.config.format == OutputFormat::Json) {
        json rows = json::array();
        for (const auto& s : samples) {
            rows.push_back({{"N", s.n}, {"G", number(to_base(s.value, base))},
                            {"dGdN", number(to_base(s.slope, base))}});
        }
        os << json{{"base", base_name(base)}, {"tau", o.tau}, {"K", o.k}, {"samples", rows}}.dump(2) << '\n';
        return kExitOk;
    }
    Csv csv{os};
    csv.header_comment(base);
    csv.row("N", "G", "dGdN");
    for (const auto& s : samples) csv.row(num(s.n), num(to_base(s.value, base)), num(to_base(s.slope, base)));
    return kExitOk;
}

int cmd_limit(const Options& o, std::ostream& os) {
    const double value = to_base(limit_inf(o.k, o.tau), o.config.log_base);
    if (o.config.format == OutputFormat::Json) {
        os << json{{"base", base_name(o.config.log_base)}, {"tau", o.tau}, {"K", o.k}, {"limit", number(value)}}
                  .dump(2)
           << '\n';
        return kExitOk;
    }
    Csv csv{os};
    csv.header_comment(o.config.log_base);
    csv.row("tau", "K", "limit");
    csv.row(num(o.tau), num(o.k), num(value));
    return kExitOk;
}

int cmd_sup(const Options& o, std::ostream& os) {
    const Supremum s = supremum(o.k, o.tau);
    const double value = to_base(s.value, o.config.log_base);
    const std::string at = s.attained_at == AttainedAt::InfiniteN ? "N=inf" : "N=0";
    if (o.config.format == OutputFormat::Json) {
        os << json{{"base", base_name(o.config.log_base)}, {"tau", o.tau}, {"K", o.k}, {"sup", number(value)},
                   {"attained_at", at}}
                  .dump(2)
           << '\n';
        return kExitOk;
    }
    Csv csv{os};
    csv.header_comment(o.config.log_base);
    csv.row("tau", "K", "sup", "attained_at");
    csv.row(num(o.tau), num(o.k), num(value), at);
    return kExitOk;
}

int cmd_stationary(const Options& o, std::ostream& os) {
    const StationaryReport r = stationary_point(o.k, o.tau);
    std::optional<double> value;
    if (r.value) value = to_base(*r.value, o.config.log_base);
    if (o.config.format == OutputFormat::Json) {
        os << json{{"base", base_name(o.config.log_base)}, {"tau", o.tau}, {"K", o.k}, {"exists", r.exists},
                   {"N_star", optional_number(r.n_star)}, {"G_star", optional_number(value)},
                   {"shape", to_string(r.shape)}}
                  .dump(2)
           << '\n';
        return kExitOk;
    }
    Csv csv{os};
    csv.header_comment(o.config.log_base);
    csv.row("tau", "K", "exists", "N_star", "G_star", "shape");
    csv.row(num(o.tau), num(o.k), r.exists ? "true" : "false", optional_text(r.n_star), optional_text(value),
            to_string(r.shape));
    return kExitOk;
}

int cmd_threshold(const Options& o, std::ostream& os) {
    const double kth = k_threshold(o.tau);
    if (o.config.format == OutputFormat::Json) {
        os << json{{"tau", o.tau}, {"K_th", kth}}.dump(2) << '\n';
        return kExitOk;
    }
    Csv csv{os};
    csv.row("tau", "K_th");
    csv.row(num(o.tau), num(kth));
    return kExitOk;
}

int cmd_region_map(const Options& o, std::ostream& os) {
    const RegionMap map = region_map({o.tau_min, o.tau_max}, {o.y_min, o.y_max}, o.res);
    const LogBase base = o.config.log_base;
    auto limit_of = [&](const RegionCell& c) -> std::optional<double> {
        if (!c.label.limit_value) return std::nullopt;
        return to_base(*c.label.limit_value, base);
    };
    if (o.config.format == OutputFormat::Json) {
        json cells = json::array();
        for (const auto& c : map.cells) {
            cells.push_back({{"tau", c.tau}, {"y", c.y}, {"K", optional_number(c.k)},
                             {"label", to_string(c.label.label)}, {"sub", to_string(c.label.sub)},
                             {"limit", optional_number(limit_of(c))}});
        }
        os << json{{"base", base_name(base)}, {"tau_points", map.tau_points}, {"y_points", map.y_points},
                   {"cells", cells}}
                  .dump(2)
           << '\n';
        return kExitOk;
    }
    Csv csv{os};
    csv.header_comment(base);
    csv.row("tau", "y", "K", "label", "limit");
    for (const auto& c : map.cells) {
        csv.row(num(c.tau), num(c.y), optional_text(c.k), to_string(c.label.label), optional_text(limit_of(c)));
    }
    return kExitOk;
}

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& items) {
    std::map<std::string, double> out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw DomainError("--tol expects name=value, got '" + item + "'");
        }
        const std::string value = item.substr(eq + 1);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (ec != std::errc() || ptr != value.data() + value.size() || !(v >= 0.0)) {
            throw DomainError("--tol value for '" + item.substr(0, eq) + "' must be a number >= 0");
        }
        out[item.substr(0, eq)] = v;
    }
    return out;
}

int cmd_verify(const Options& o, std::ostream& os, std::ostream& err) {
    VerifyConfig cfg;
    cfg.samples = o.samples;
    cfg.seed = o.config.seed;
    cfg.tolerances = o.config.tolerances;
    const VerifyReport report = run_verification(cfg);
    err << "verify: " << report.properties.size() << " properties in " << report.seconds << " s\n";
    if (o.config.format == OutputFormat::Csv) {
        Csv csv{os};
        csv.row("property", "samples", "violations", "worst", "tolerance", "passed");
        for (const auto& p : report.properties) {
            csv.row(p.name, p.samples, p.violations, num(p.worst), num(p.tolerance), p.passed() ? "true" : "false");
        }
    } else {
        json props = json::array();
        for (const auto& p : report.properties) {
            props.push_back({{"name", p.name}, {"metric", p.metric}, {"samples", p.samples},
                             {"violations", p.violations}, {"worst", number(p.worst)},
                             {"tolerance", p.tolerance}, {"passed", p.passed()}});
        }
        os << json{{"passed", report.passed()}, {"seed", cfg.seed}, {"samples", cfg.samples}, {"properties", props}}
                  .dump(2)
           << '\n';
    }
    for (const auto& p : report.properties) {
        if (!p.passed()) err << "verify: FAILED " << p.name << " (" << p.violations << " violations)\n";
    }
    return report.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, ec == std::errc() ? ptr : buf);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Coherent information of phase-insensitive one-mode Gaussian channels", "omgci"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--base", o.base, "Entropy units for reported values")
        ->check(CLI::IsMember({"nats", "bits"}));
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", o.out_path, "Write output to this file instead of stdout");
    app.add_option("--seed", o.config.seed, "Seed for randomised suites");

    auto add_tau = [&](CLI::App* sub) { sub->add_option("--tau", o.tau, "Transmissivity / gain tau")->required(); };
    auto add_k = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--k", o.k, "Added classical noise K");
        if (required) opt->required();
    };

    auto* eval = app.add_subcommand("eval", "G(N, K, tau) and its spectral parameters");
    add_tau(eval);
    add_k(eval, true);
    eval->add_option("--n", o.n, "Input mean photon number N")->required();

    auto* scan_cmd = app.add_subcommand("scan", "Log-spaced N scan, CSV N,G,dGdN");
    add_tau(scan_cmd);
    add_k(scan_cmd, true);
    scan_cmd->add_option("--n-min", o.n_min, "Smallest N")->capture_default_str();
    scan_cmd->add_option("--n-max", o.n_max, "Largest N")->capture_default_str();
    scan_cmd->add_option("--points", o.points, "Number of grid points")->capture_default_str();

    auto* limit = app.add_subcommand("limit", "Infinite-power value lim G(N -> inf)");
    add_tau(limit);
    add_k(limit, true);
    auto* sup = app.add_subcommand("sup", "Supremum over N and where it is attained");
    add_tau(sup);
    add_k(sup, true);
    auto* stationary = app.add_subcommand("stationary", "Stationary point of G in N and curve shape");
    add_tau(stationary);
    add_k(stationary, true);
    auto* threshold = app.add_subcommand("threshold", "Noise threshold K_th where the limit changes sign");
    add_tau(threshold);

    auto* region = app.add_subcommand("region-map", "Classify a (tau, y) grid, CSV tau,y,K,label,limit");
    region->add_option("--tau-min", o.tau_min)->capture_default_str();
    region->add_option("--tau-max", o.tau_max)->capture_default_str();
    region->add_option("--y-min", o.y_min)->capture_default_str();
    region->add_option("--y-max", o.y_max)->capture_default_str();
    region->add_option("--res", o.res, "Points per axis")->capture_default_str()->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Run the numerical property suites");
    verify->add_option("--samples", o.samples, "Draws for the main suites")->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify->add_option("--tol", o.tol, "Tolerance override name=value (repeatable)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "omgci: " << e.what() << '\n';
        return kExitUsage;
    }
    if (verify->parsed()) o.format = o.format == "csv" && !app.get_option("--format")->count() ? "json" : o.format;
    o.config.log_base = o.base == "bits" ? LogBase::Two : LogBase::Natural;
    o.config.format = o.format == "json" ? OutputFormat::Json : OutputFormat::Csv;

    std::ofstream file;
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file) {
            err << "omgci: cannot open " << o.out_path << " for writing\n";
            return kExitUsage;
        }
    }
    std::ostream& os = o.out_path.empty() ? out : file;

    try {
        o.config.tolerances = parse_tolerances(o.tol);
        if (eval->parsed()) return cmd_eval(o, os);
        if (scan_cmd->parsed()) return cmd_scan(o, os);
        if (limit->parsed()) return cmd_limit(o, os);
        if (sup->parsed()) return cmd_sup(o, os);
        if (stationary->parsed()) return cmd_stationary(o, os);
        if (threshold->parsed()) return cmd_threshold(o, os);
        if (region->parsed()) return cmd_region_map(o, os);
        if (verify->parsed()) return cmd_verify(o, os, err);
    } catch (const MultipleStationaryPoints& e) {
        err << "omgci: " << e.what() << '\n';
        return kExitVerifyFailed;
    } catch (const std::domain_error& e) {
        err << "omgci: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "omgci: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace omgci::cli
