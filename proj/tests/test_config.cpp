#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lcdunkl/config.hpp"
#include "lcdunkl/csv.hpp"

using namespace lcd;

namespace {

int error_line(const std::string& text) {
    try {
        parse_config(text, "cfg.json");
    } catch (const ConfigError& e) {
        return e.line;
    }
    return -1;
}

std::string error_text(const std::string& text) {
    try {
        parse_config(text, "cfg.json");
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

std::filesystem::path temp_dir() {
    auto p = std::filesystem::temp_directory_path() / "lcdunkl_test_config";
    std::filesystem::create_directories(p);
    return p;
}

}  // namespace

TEST_CASE("default config") {
    const auto c = default_config();
    CHECK(c.k == 0);
    CHECK(c.n == 2049);
    CHECK(c.space_grid()->same_as(*c.freq_grid()));
    CHECK(c.windows().size() == 4);
    const auto p = parse_config("{}", "empty.json");
    CHECK(p.rho_list == c.rho_list);
}

TEST_CASE("config errors carry the line of the offending key") {
    CHECK(error_line("{\n  \"k\": 0,\n  \"matrix\": [1, 2, 3, 4]\n}") == 3);
    CHECK(error_text("{\n \"k\": 0,\n \"sobolev\": {\n   \"s\": 0.5\n }\n}").find("cfg.json:4:") == 0);
    CHECK(error_text("{\"k\": 0, \"sobolev\": {\"s\": 0.5}}").find("sobolev order too small") != std::string::npos);
    CHECK(error_line("{\n\"k\": 1,\n\n\"sobolev\": {\"s\": 1}}") == 4);
    CHECK(error_line("{\n \"grid\": {\n  \"n\": 2048\n }\n}") == 2);
    CHECK(error_line("{\n \"grid\": {\"x_max\": 12, \"n\": 513}\n}") == 2);  // resolution guard
    CHECK(error_line("{\n \"k\": 0,\n \"typo\": 1\n}") == 3);
    CHECK(error_line("{\n \"k\": 0,\n \"grid\": {\"n\": 2049,}\n}") == 3);
    CHECK(error_line("{\"k\": -1.5}") == 1);
    CHECK(error_line("{\n\"calderon\": {\"epsilon_list\": [0.1, 0.2], \"delta_list\": [10, 20]}}") == 2);
    CHECK(error_line("{\n\"tikhonov\": {\"rho_list\": [1, 0]}}") == 2);
    CHECK(error_line("{\n\"signal\": {\"name\": \"sinc\"}}") == 2);
    CHECK(error_line("{\n\"output\": {\"format\": \"xml\"}}") == 2);
    CHECK(error_line("{\n\n\"seed\": -3}") == 3);
    CHECK(error_line("{\"wavelet\": {\"window\": \"morlet\"}}") == 1);
}

TEST_CASE("config values") {
    const auto c = parse_config(R"({"k": 1, "matrix": [0, -1, 1, 0], "grid": {"x_max": 8, "n": 257},
        "scales": {"alpha_min": 0.1, "alpha_max": 10, "m": 16}, "sobolev": {"s": 3},
        "tikhonov": {"rho": 0.5}, "signal": {"name": "hermite", "params": {"order": 2, "width": 1.5}},
        "seed": 7})",
                                "x.json");
    CHECK(c.k == 1);
    CHECK(c.canonical().b() == -1);
    CHECK(c.rho_list == std::vector<double>{0.5});
    CHECK(c.seed == 7);
    const auto f = make_signal(c, c.space_grid());
    const int j = c.space_grid()->center();
    CHECK(f.values[j].real() == doctest::Approx(-2.0));  // H_2(0) = -2
}

TEST_CASE("csv round trip is bit exact") {
    CsvTable t{{"a", "b"}, {}};
    for (double v : {0.1, 1.0 / 3, -2.5e-300, 6.02214076e23, 5e-324, -0.0, 1.7976931348623157e308})
        t.rows.push_back({v, std::nextafter(v, 1.0)});
    std::stringstream ss;
    write_csv(ss, t);
    const auto back = read_csv(ss, "mem");
    REQUIRE(back.rows.size() == t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (int c = 0; c < 2; ++c) CHECK(std::signbit(back.rows[i][c]) == std::signbit(t.rows[i][c]));
    for (std::size_t i = 0; i < t.rows.size(); ++i) CHECK(back.rows[i] == t.rows[i]);
    std::stringstream bad("x,y\n1,2\n3\n");
    CHECK_THROWS_WITH(read_csv(bad, "bad.csv"), "bad.csv:3: expected 2 columns");
}

TEST_CASE("table signals and windows") {
    const auto dir = temp_dir();
    {
        std::ofstream os(dir / "sig.csv");
        os << "x,re,im\n";
        for (int i = -400; i <= 400; ++i) {
            const double x = i * 0.05;
            os << x << "," << std::exp(-x * x / 2) << ",0\n";
        }
        std::ofstream ws(dir / "win.csv");
        ws << "u,w\n";
        for (int i = 0; i <= 600; ++i) {
            const double u = i * 0.01;
            ws << format_double(u) << "," << format_double(u * u * std::exp(-u * u)) << "\n";
        }
    }
    std::ofstream(dir / "cfg.json") << R"({"grid": {"x_max": 8, "n": 1025}, "signal": {"name": "table", "path": "sig.csv"},
        "wavelet": {"window": "win.csv"}})";
    const auto c = load_config((dir / "cfg.json").string());
    std::vector<std::string> warn;
    const auto f = make_signal(c, c.space_grid(), &warn);
    CHECK(warn.empty());
    for (int j = 0; j < c.n; j += 37)
        CHECK(std::abs(f.values[j] - std::exp(-c.space_grid()->nodes[j] * c.space_grid()->nodes[j] / 2)) < 1e-5);
    CHECK(admissibility(c.analysis_spec()).value == doctest::Approx(0.125).epsilon(1e-6));
    std::ofstream(dir / "cfg2.json") << "{\"signal\": {\"name\": \"table\",\n \"path\": \"missing.csv\"}}";
    CHECK_THROWS_AS(load_config((dir / "cfg2.json").string()), ConfigError);
}
