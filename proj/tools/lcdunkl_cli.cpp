#include <iostream>

#include "CLI11.hpp"
#include "lcdunkl/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Linear canonical Dunkl transforms, wavelets and Sobolev extremal problems"};
    lcd::CliOptions opts;
    app.add_option("command", opts.command, "validate | transform | cwt | calderon | extremal | kernels")
        ->required()
        ->check(CLI::IsMember({"validate", "transform", "cwt", "calderon", "extremal", "kernels"}));
    app.add_option("--config", opts.config_path, "JSON run configuration; built-in defaults when omitted");
    app.add_option("--out", opts.out, "output file; overrides output.path, stdout when neither is set");
    app.add_flag("--force-large", opts.force_large, "kernels: every grid node in [-4, 4] on the x axis");
    app.add_option("--workers", opts.workers, "worker threads")->check(CLI::Range(1, 256));
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    return lcd::run_cli(opts, std::cout, std::cerr);
}
