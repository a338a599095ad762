// hypack - hyperball packing densities of the 5-dimensional hyperbolic
// regular prism tilings, and the pieces they are computed from.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <hypack/hypack.hpp>

namespace {

using nlohmann::json;

enum class OutputFormat { text, json, csv };

struct CliConfig {
    int digits = 8;
    double abs_tol = 1e-11;
    OutputFormat format = OutputFormat::text;

    hypack::QuadratureSettings quadrature() const {
        hypack::QuadratureSettings q;
        q.abs_tol = abs_tol;
        return q;
    }
};

// fixed-point rendering with half-even rounding; negative zero normalized
double round_to(double value, int digits) {
    const double scale = std::pow(10.0, digits);
    double r = std::nearbyint(value * scale) / scale;
    if (r == 0.0) r = 0.0;
    return r;
}

std::string fmt_fixed(double value, int digits) {
    char buf[512];  // %f of a large double spans hundreds of characters
    std::snprintf(buf, sizeof(buf), "%.*f", digits, round_to(value, digits));
    return buf;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

json report_json(const hypack::PackingReport& r, const CliConfig& cfg) {
    return json{{"symbol", r.symbol.text()},
                {"vol5", round_to(r.vol5, cfg.digits)},
                {"height", round_to(r.height, cfg.digits)},
                {"piece_volume", round_to(r.piece_volume, cfg.digits)},
                {"density", round_to(r.density, cfg.digits)}};
}

void print_report_csv(const std::vector<hypack::PackingReport>& reports,
                      const CliConfig& cfg) {
    std::cout << "symbol,vol5,height,piece_volume,density\n";
    for (const auto& r : reports) {
        std::cout << r.symbol.text() << ',' << fmt_fixed(r.vol5, cfg.digits) << ','
                  << fmt_fixed(r.height, cfg.digits) << ','
                  << fmt_fixed(r.piece_volume, cfg.digits) << ','
                  << fmt_fixed(r.density, cfg.digits) << "\n";
    }
}

int cmd_density(const std::string& symbol_text, const CliConfig& cfg) {
    const hypack::CoxeterSymbol symbol = hypack::parse_symbol(symbol_text);
    const hypack::PackingReport r = hypack::density(symbol, cfg.quadrature());
    switch (cfg.format) {
        case OutputFormat::text:
            std::cout << "symbol        " << r.symbol.text() << "\n"
                      << "vol5          " << fmt_fixed(r.vol5, cfg.digits) << "\n"
                      << "height        " << fmt_fixed(r.height, cfg.digits) << "\n"
                      << "piece_volume  " << fmt_fixed(r.piece_volume, cfg.digits) << "\n"
                      << "density       " << fmt_fixed(r.density, cfg.digits) << "\n";
            break;
        case OutputFormat::json:
            print_json(report_json(r, cfg));
            break;
        case OutputFormat::csv:
            print_report_csv({r}, cfg);
            break;
    }
    return 0;
}

int cmd_volume(const std::string& symbol_text, const CliConfig& cfg) {
    const hypack::CoxeterSymbol symbol = hypack::parse_symbol(symbol_text);
    const hypack::Volume5Result v = hypack::vol5_truncated(symbol, cfg.quadrature());
    switch (cfg.format) {
        case OutputFormat::text:
            std::cout << "symbol         " << symbol.text() << "\n"
                      << "vol5           " << fmt_fixed(v.value, cfg.digits) << "\n"
                      << "integral_part  " << fmt_fixed(v.integral_part, cfg.digits) << "\n"
                      << "constant_part  " << fmt_fixed(v.constant_part, cfg.digits) << "\n";
            break;
        case OutputFormat::json:
            print_json(json{{"symbol", symbol.text()},
                            {"vol5", round_to(v.value, cfg.digits)},
                            {"integral_part", round_to(v.integral_part, cfg.digits)},
                            {"constant_part", round_to(v.constant_part, cfg.digits)},
                            {"estimated_error", v.estimated_error}});
            break;
        case OutputFormat::csv:
            std::cout << "symbol,vol5\n"
                      << symbol.text() << ',' << fmt_fixed(v.value, cfg.digits) << "\n";
            break;
    }
    return 0;
}

int cmd_height(const std::string& symbol_text, const CliConfig& cfg) {
    const hypack::CoxeterSymbol symbol = hypack::parse_symbol(symbol_text);
    const double h = hypack::optimal_height(symbol);
    switch (cfg.format) {
        case OutputFormat::text:
            std::cout << "symbol  " << symbol.text() << "\n"
                      << "height  " << fmt_fixed(h, cfg.digits) << "\n";
            break;
        case OutputFormat::json:
            print_json(json{{"symbol", symbol.text()}, {"height", round_to(h, cfg.digits)}});
            break;
        case OutputFormat::csv:
            std::cout << "symbol,height\n"
                      << symbol.text() << ',' << fmt_fixed(h, cfg.digits) << "\n";
            break;
    }
    return 0;
}

int cmd_table(const CliConfig& cfg) {
    const std::vector<std::string> symbols = {"[5,3,3,3,3]", "[5,3,3,3,4]"};
    std::vector<hypack::PackingReport> reports;
    for (const auto& s : symbols)
        reports.push_back(hypack::density(hypack::parse_symbol(s), cfg.quadrature()));

    switch (cfg.format) {
        case OutputFormat::text: {
            const int w = cfg.digits + 6;
            std::printf("%-12s %*s %*s\n", "", w, symbols[0].c_str(), w,
                        symbols[1].c_str());
            const auto row = [&](const char* label, double a, double b) {
                std::printf("%-12s %*s %*s\n", label, w,
                            fmt_fixed(a, cfg.digits).c_str(), w,
                            fmt_fixed(b, cfg.digits).c_str());
            };
            row("Vol(S)", reports[0].vol5, reports[1].vol5);
            row("h", reports[0].height, reports[1].height);
            row("Vol(H)", reports[0].piece_volume, reports[1].piece_volume);
            row("delta_opt", reports[0].density, reports[1].density);
            break;
        }
        case OutputFormat::json: {
            json j;
            for (const auto& r : reports) {
                json e = report_json(r, cfg);
                e.erase("symbol");
                j[r.symbol.text()] = e;
            }
            print_json(j);
            break;
        }
        case OutputFormat::csv:
            print_report_csv(reports, cfg);
            break;
    }
    return 0;
}

int cmd_lobachevsky(double omega, const CliConfig& cfg) {
    const double value = hypack::lobachevsky(omega);
    switch (cfg.format) {
        case OutputFormat::text:
            std::cout << "L(" << fmt_fixed(omega, cfg.digits)
                      << ") = " << fmt_fixed(value, cfg.digits) << "\n";
            break;
        case OutputFormat::json:
            print_json(json{{"omega", round_to(omega, cfg.digits)},
                            {"L", round_to(value, cfg.digits)}});
            break;
        case OutputFormat::csv:
            std::cout << "omega,L\n"
                      << fmt_fixed(omega, cfg.digits) << ',' << fmt_fixed(value, cfg.digits)
                      << "\n";
            break;
    }
    return 0;
}

// Known maximal prism-tiling densities in dimensions 3 and 4, quoted from
// the literature; this tool does not compute them.
struct ReferenceConstant {
    int n;
    const char* symbol;
    double density;
};

constexpr ReferenceConstant kReferenceConstants[] = {
    {3, "[7,3,3]", 0.82251367},
    {4, "[3,5,3,3]", 0.57680322},
};

constexpr const char* kReferenceNote =
    "literature values for dimensions 3 and 4, quoted, not computed";

int cmd_reference_constants(const CliConfig& cfg) {
    switch (cfg.format) {
        case OutputFormat::text:
            for (const auto& rc : kReferenceConstants)
                std::printf("n=%d  %-10s %s\n", rc.n, rc.symbol,
                            fmt_fixed(rc.density, cfg.digits).c_str());
            std::printf("(%s)\n", kReferenceNote);
            break;
        case OutputFormat::json: {
            json rows = json::array();
            for (const auto& rc : kReferenceConstants)
                rows.push_back(json{{"n", rc.n},
                                    {"symbol", rc.symbol},
                                    {"density", round_to(rc.density, cfg.digits)}});
            print_json(json{{"references", rows}, {"note", kReferenceNote}});
            break;
        }
        case OutputFormat::csv:
            std::cout << "n,symbol,density\n";
            for (const auto& rc : kReferenceConstants)
                std::cout << rc.n << ',' << rc.symbol << ','
                          << fmt_fixed(rc.density, cfg.digits) << "\n";
            break;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperball packing densities of 5-dimensional hyperbolic prism tilings"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    std::string format_name = "text";
    app.add_option("--digits", cfg.digits, "display precision (decimals)")
        ->check(CLI::Range(1, 15))
        ->capture_default_str();
    app.add_option("--tol", cfg.abs_tol, "absolute quadrature tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    std::string symbol_text;
    double omega = 0.0;

    CLI::App* density = app.add_subcommand(
        "density", "packing report (vol5, height, piece volume, density) of a scheme");
    density->add_option("symbol", symbol_text, "Coxeter symbol, e.g. \"[5,3,3,3,3]\"")
        ->required();

    CLI::App* volume = app.add_subcommand(
        "volume", "volume of the truncated 5-orthoscheme of a scheme");
    volume->add_option("symbol", symbol_text, "Coxeter symbol")->required();

    CLI::App* height = app.add_subcommand(
        "height", "optimal hyperball height of a scheme");
    height->add_option("symbol", symbol_text, "Coxeter symbol")->required();

    CLI::App* table =
        app.add_subcommand("table", "full packing table for both supported schemes");

    CLI::App* lob = app.add_subcommand("lobachevsky", "Lobachevsky function L(omega)");
    lob->add_option("omega", omega, "argument in radians")->required();

    CLI::App* refs = app.add_subcommand(
        "reference-constants", "known maximal densities in dimensions 3 and 4");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e, std::cout, std::cerr);
        return 2;
    }

    if (format_name == "json")
        cfg.format = OutputFormat::json;
    else if (format_name == "csv")
        cfg.format = OutputFormat::csv;

    try {
        if (density->parsed()) return cmd_density(symbol_text, cfg);
        if (volume->parsed()) return cmd_volume(symbol_text, cfg);
        if (height->parsed()) return cmd_height(symbol_text, cfg);
        if (table->parsed()) return cmd_table(cfg);
        if (lob->parsed()) return cmd_lobachevsky(omega, cfg);
        if (refs->parsed()) return cmd_reference_constants(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
