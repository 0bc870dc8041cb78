#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "commands.hpp"
#include "rsb/representation.hpp"

using rsb::json;

namespace {

int emit_error(const std::string& command, const std::string& kind, const std::string& message, int code,
               const std::string& path = {}) {
    json err = {{"kind", kind}, {"message", message}};
    if (!path.empty()) err["path"] = path;
    json report = {{"schema", "rsb-report/1"}, {"command", command}, {"error", err}, {"exit_code", code}};
    std::cout << report.dump(2) << "\n";
    std::cerr << "rsb " << command << ": " << message << "\n";
    return code;
}

const std::map<std::string, std::string> descriptions = {
    {"pants-demo", "pants group representation: checks, trace, closed point, Jordan vectors, multicurve"},
    {"symplectic-check", "symplecticity of a matrix or of every generator image"},
    {"trace", "traces and their valuations for --word or all words up to --max-length"},
    {"translength", "translation length of a matrix or of --word images"},
    {"jordan", "Jordan projection and Newton polygon"},
    {"closed-point", "Closed / NotClosedIntegral / Unknown verdict with certificate"},
    {"maslov", "Maslov index of three Lagrangians"},
    {"crossratio", "crossratio of four Lagrangians and its valuation"},
    {"maximality", "verify a framing is maximal and equivariant"},
    {"periods", "periods from translation lengths and, with a framing, from crossratios"},
    {"multicurve", "multicurve certificate: smallest K <= --kmax with all periods in (1/K)Z"},
    {"distance", "building pseudodistance between g1 and g2"},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with surface group representations over ordered valued fields"};
    app.require_subcommand(1);
    rsb::cli::Flags flags;
    std::string input_path, inline_json;
    std::size_t threads = 1;

    for (const auto& name : rsb::cli::command_names()) {
        auto* sub = app.add_subcommand(name, descriptions.at(name));
        sub->add_option("--input,-i", input_path, "input JSON file ('-' for stdin)");
        sub->add_option("--json", inline_json, "inline input JSON");
        sub->add_option("--order", flags.order, "aplus:A | aminus:A | plusinf | minusinf");
        sub->add_option("--valuation", flags.valuation, "adic:A | atinf (default: paired with the order)");
        sub->add_option("--radius", flags.radius, "word search radius")->capture_default_str();
        sub->add_option("--kmax", flags.kmax, "largest denominator K for multicurve certificates")->capture_default_str();
        sub->add_option("--degree-bound", flags.degree_bound, "abort when an entry degree exceeds this")
            ->capture_default_str();
        sub->add_option("--norm", flags.norm, "sum | spread")->capture_default_str();
        sub->add_option("--threads", threads, "worker threads for word sweeps")->capture_default_str();
        sub->add_option("--max-length", flags.max_length, "word length for samples and certificates")
            ->capture_default_str();
        sub->add_option("--word,-w", flags.words, "word such as \"c1^-1 c3\" (repeatable)");
        sub->add_flag("--linear", flags.linear, "linear (PSL) spectra instead of symplectic");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    flags.threads = static_cast<unsigned>(std::max<std::size_t>(1, threads));
    const std::string command = app.get_subcommands().front()->get_name();

    json input = json::object();
    try {
        if (!input_path.empty() && !inline_json.empty())
            return emit_error(command, "schema", "give --input or --json, not both", 2);
        if (!inline_json.empty()) {
            input = json::parse(inline_json);
        } else if (input_path == "-") {
            input = json::parse(std::cin);
        } else if (!input_path.empty()) {
            std::ifstream in(input_path);
            if (!in) return emit_error(command, "io", "cannot open " + input_path, 1);
            input = json::parse(in);
        }
    } catch (const json::parse_error& e) {
        return emit_error(command, "schema", e.what(), 2);
    }

    auto start = std::chrono::steady_clock::now();
    try {
        json result = rsb::cli::run_command(command, input, flags);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::cout << rsb::cli::make_report(command, flags, std::move(result), ms).dump(2) << "\n";
        return 0;
    } catch (const rsb::SchemaError& e) {
        return emit_error(command, "schema", e.what(), 2, e.path());
    } catch (const json::exception& e) {
        return emit_error(command, "schema", e.what(), 2);
    } catch (const rsb::DegreeBoundExceeded& e) {
        return emit_error(command, "degree_bound", e.what(), 3);
    } catch (const rsb::RepresentationError& e) {
        return emit_error(command, "representation", e.what(), 1);
    } catch (const std::exception& e) {
        return emit_error(command, "computation", e.what(), 1);
    }
}
