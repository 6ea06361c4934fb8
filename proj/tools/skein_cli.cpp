// Command-line front end for the skein library.
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "skein/report.hpp"

namespace {

struct SurfaceArgs {
    std::optional<int> genus;
    std::optional<int> punctures;
    std::optional<std::string> datum;

    void attach(CLI::App* app) {
        app->add_option("--genus", genus, "genus g");
        app->add_option("--punctures", punctures, "number of punctures m");
        app->add_option("--datum", datum, "DT-datum JSON file (overrides the standard datum)");
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for sliced skein algebras of punctured surfaces"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

    SurfaceArgs analyze_args, coords_args, trace_args;
    int xi_order = 0;
    std::string coord_text, trace_coord_text;
    std::optional<int> pants;
    std::string grid = "rmax=4,nmax=12";
    std::uint64_t seed = 1;
    int samples = 2000;
    bool inject_fault = false;

    auto* analyze = app.add_subcommand("analyze", "center lattices and PI-degree at a root of unity");
    analyze_args.attach(analyze);
    analyze->add_option("--xi-order", xi_order, "order n of the root of unity xi")->required()->check(CLI::PositiveNumber);

    auto* coords = app.add_subcommand("coords", "monoid membership, d-embedding and face split of a coordinate");
    coords_args.attach(coords);
    coords->add_option("--coord", coord_text, "comma list n_1..n_r,t_1..t_r")->required();

    auto* trace = app.add_subcommand("trace", "quantum trace and lead term of a coordinate");
    trace_args.attach(trace);
    trace->add_option("--coord", trace_coord_text, "comma list (n then t)")->required();
    trace->add_option("--pants", pants, "single pants mode: boundary count j of P_j")->check(CLI::Range(1, 3));

    auto* check = app.add_subcommand("check", "run the verification suites");
    check->add_option("--grid", grid, "grid spec, e.g. rmax=4,nmax=12");
    check->add_option("--seed", seed, "random seed");
    check->add_option("--samples", samples, "random samples per suite and surface")->check(CLI::PositiveNumber);
    check->add_flag("--inject-fault", inject_fault, "corrupt the product form (negative control)");

    CLI11_PARSE(app, argc, argv);

    skein::report::Result result;
    try {
        if (*analyze) {
            auto d = skein::report::resolve_datum(analyze_args.genus, analyze_args.punctures, analyze_args.datum);
            result = skein::report::analyze(d, xi_order);
        } else if (*coords) {
            auto d = skein::report::resolve_datum(coords_args.genus, coords_args.punctures, coords_args.datum);
            result = skein::report::coords(d, skein::report::parse_global_coord(coord_text, d.curve_count()));
        } else if (*trace) {
            if (pants) {
                auto type = skein::pants_type_from_int(*pants);
                result = skein::report::trace_pants(type, skein::report::parse_pants_coord(trace_coord_text, type));
            } else {
                auto d = skein::report::resolve_datum(trace_args.genus, trace_args.punctures, trace_args.datum);
                result = skein::report::trace(d, skein::report::parse_global_coord(trace_coord_text, d.curve_count()));
            }
        } else if (*check) {
            skein::report::CheckOptions opts;
            opts.seed = seed;
            opts.samples = samples;
            opts.inject_fault = inject_fault;
            opts = skein::report::parse_grid(grid, opts);
            result = skein::report::check(opts);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (format == "text")
        std::cout << skein::report::to_text(result.json);
    else
        std::cout << result.json.dump(2) << "\n";
    return result.pass ? 0 : 1;
}
