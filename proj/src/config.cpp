#include "lcdunkl/config.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lcdunkl/csv.hpp"
#include "lcdunkl/interp.hpp"

namespace lcd {

using nlohmann::json;

ConfigError::ConfigError(const std::string& source, int ln, const std::string& msg)
    : std::runtime_error(source + ":" + std::to_string(ln) + ": " + msg), line(ln) {}

namespace {

int line_at(const std::string& text, std::size_t pos) {
    int line = 1;
    for (std::size_t i = 0; i < pos && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

// Line of the last key of `path`, found by scanning for each key in turn.
int locate(const std::string& text, const std::vector<std::string>& path) {
    std::size_t pos = 0;
    for (const auto& key : path) {
        const std::string quoted = "\"" + key + "\"";
        for (;;) {
            pos = text.find(quoted, pos);
            if (pos == std::string::npos) return 0;
            std::size_t after = pos + quoted.size();
            while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) ++after;
            if (after < text.size() && text[after] == ':') break;
            pos += quoted.size();
        }
        pos += quoted.size();
    }
    return path.empty() ? 0 : line_at(text, pos);
}

std::string join(const std::vector<std::string>& path) {
    std::string s;
    for (const auto& p : path) s += (s.empty() ? "" : ".") + p;
    return s;
}

class Reader {
public:
    Reader(const std::string& text, std::string source) : text_(text), source_(std::move(source)) {}

    [[noreturn]] void fail(const std::vector<std::string>& path, const std::string& msg) const {
        throw ConfigError(source_, locate(text_, path), path.empty() ? msg : join(path) + ": " + msg);
    }

    void only_keys(const json& obj, const std::vector<std::string>& path, const std::set<std::string>& allowed) const {
        if (!obj.is_object()) fail(path, "expected an object");
        for (const auto& [key, v] : obj.items()) {
            (void)v;
            if (!allowed.count(key)) {
                auto p = path;
                p.push_back(key);
                fail(p, "unknown key");
            }
        }
    }

    double number(const json& v, const std::vector<std::string>& path) const {
        if (!v.is_number()) fail(path, "expected a number");
        const double d = v.get<double>();
        if (!std::isfinite(d)) fail(path, "expected a finite number");
        return d;
    }

    long long integer(const json& v, const std::vector<std::string>& path) const {
        if (!v.is_number_integer()) fail(path, "expected an integer");
        return v.get<long long>();
    }

    std::string string(const json& v, const std::vector<std::string>& path) const {
        if (!v.is_string()) fail(path, "expected a string");
        return v.get<std::string>();
    }

    std::vector<double> numbers(const json& v, const std::vector<std::string>& path) const {
        if (!v.is_array() || v.empty()) fail(path, "expected a non-empty array of numbers");
        std::vector<double> out;
        for (const auto& e : v) out.push_back(number(e, path));
        return out;
    }

private:
    const std::string& text_;
    std::string source_;
};

std::string resolve(const std::string& base, const std::string& p) {
    if (p.empty() || base.empty() || std::filesystem::path(p).is_absolute()) return p;
    return (std::filesystem::path(base) / p).string();
}

WaveletSpec window_spec(const std::string& name, const std::string& base) {
    if (name == "hermite2" || name == "hermite4") return WaveletSpec::by_name(name);
    const auto t = read_csv(resolve(base, name));
    return WaveletSpec::from_table(t.column("u"), t.column("w"));
}

// All preconditions that can be checked without running a pipeline.
void check(const RunConfig& c, const Reader& r) {
    try {
        Multiplicity k(c.k);
        (void)k;
    } catch (const std::exception& e) {
        r.fail({"k"}, e.what());
    }
    try {
        (void)c.canonical();
    } catch (const std::exception& e) {
        r.fail({"matrix"}, e.what());
    }
    GridPtr space, freq;
    try {
        space = c.space_grid();
    } catch (const std::exception& e) {
        r.fail({"grid"}, e.what());
    }
    try {
        freq = c.freq_grid();
    } catch (const std::exception& e) {
        r.fail({"freq_grid"}, e.what());
    }
    const double step = Transform::phase_increment(c.canonical(), *space, *freq);
    if (step > Transform::kMaxPhaseStep) {
        std::ostringstream os;
        os << "resolution guard: kernel phase step " << step << " rad exceeds pi/4; increase n or reduce x_max";
        r.fail({"grid"}, os.str());
    }
    try {
        (void)c.scale_grid();
    } catch (const std::exception& e) {
        r.fail({"scales"}, e.what());
    }
    for (const auto* key : {"window", "synthesis_window"}) {
        try {
            const auto spec = key == std::string("window") ? c.analysis_spec() : c.synthesis_spec();
            const auto a = admissibility(spec);
            if (!(a.value > 0) || !std::isfinite(a.value)) throw DomainError("window is not admissible");
        } catch (const std::exception& e) {
            r.fail({"wavelet", key}, e.what());
        }
    }
    try {
        require_kernel_order(c.s, c.k);
    } catch (const std::exception& e) {
        r.fail({"sobolev", "s"}, e.what());
    }
    for (double rho : c.rho_list)
        if (!(rho > 0)) r.fail({"tikhonov"}, "rho must be positive");
    if (c.epsilon_list.size() != c.delta_list.size())
        r.fail({"calderon"}, "epsilon_list and delta_list differ in length");
    try {
        const auto w = c.windows();
        for (std::size_t i = 1; i < w.size(); ++i)
            if (w[i].epsilon > w[i - 1].epsilon || w[i].delta < w[i - 1].delta)
                throw DomainError("windows are not nested");
    } catch (const std::exception& e) {
        r.fail({"calderon"}, e.what());
    }
    const auto& sig = c.signal;
    if (sig.name != "gaussian" && sig.name != "hermite" && sig.name != "table")
        r.fail({"signal", "name"}, "expected gaussian, hermite or table");
    if (!(sig.width > 0)) r.fail({"signal", "params", "width"}, "must be positive");
    if (sig.order < 0 || sig.order > 40) r.fail({"signal", "params", "order"}, "must be in [0, 40]");
    if (sig.name == "table") {
        try {
            (void)make_signal(c, space);
        } catch (const std::exception& e) {
            r.fail({"signal", "path"}, e.what());
        }
    }
    if (c.output_format != "csv" && c.output_format != "json") r.fail({"output", "format"}, "expected csv or json");
}

}  // namespace

CanonicalMatrix RunConfig::canonical() const { return {matrix[0], matrix[1], matrix[2], matrix[3]}; }
KernelContext RunConfig::context() const { return {Multiplicity(k), canonical()}; }
GridPtr RunConfig::space_grid() const { return make_space_grid(Multiplicity(k), x_max, n); }
GridPtr RunConfig::freq_grid() const {
    if (!lambda_max && !freq_n) return space_grid();
    return make_space_grid(Multiplicity(k), lambda_max.value_or(x_max), freq_n.value_or(n));
}
ScaleGrid RunConfig::scale_grid() const { return make_scale_grid(Multiplicity(k), alpha_min, alpha_max, m); }
WaveletSpec RunConfig::analysis_spec() const { return window_spec(window, base_dir); }
WaveletSpec RunConfig::synthesis_spec() const { return window_spec(synthesis_window, base_dir); }
std::vector<CalderonWindow> RunConfig::windows() const {
    std::vector<CalderonWindow> out;
    for (std::size_t i = 0; i < epsilon_list.size() && i < delta_list.size(); ++i)
        out.emplace_back(epsilon_list[i], delta_list[i]);
    return out;
}

RunConfig default_config() {
    RunConfig c;
    const std::string empty = "{}";
    check(c, Reader(empty, c.source));
    return c;
}

RunConfig parse_config(const std::string& text, const std::string& source, const std::string& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(source, line_at(text, e.byte > 0 ? e.byte - 1 : 0), std::string("invalid JSON: ") + e.what());
    }
    const Reader r(text, source);
    r.only_keys(j, {}, {"k", "matrix", "grid", "freq_grid", "scales", "wavelet", "sobolev", "tikhonov", "calderon",
                        "signal", "output", "seed"});
    RunConfig c;
    c.source = source;
    c.base_dir = base_dir;
    if (j.contains("k")) c.k = r.number(j["k"], {"k"});
    if (j.contains("matrix")) {
        const auto m = r.numbers(j["matrix"], {"matrix"});
        if (m.size() != 4) r.fail({"matrix"}, "expected [a, b, c, d]");
        std::copy(m.begin(), m.end(), c.matrix.begin());
    }
    if (j.contains("grid")) {
        const auto& g = j["grid"];
        r.only_keys(g, {"grid"}, {"x_max", "n"});
        if (g.contains("x_max")) c.x_max = r.number(g["x_max"], {"grid", "x_max"});
        if (g.contains("n")) c.n = static_cast<int>(r.integer(g["n"], {"grid", "n"}));
    }
    if (j.contains("freq_grid")) {
        const auto& g = j["freq_grid"];
        r.only_keys(g, {"freq_grid"}, {"lambda_max", "n"});
        if (g.contains("lambda_max")) c.lambda_max = r.number(g["lambda_max"], {"freq_grid", "lambda_max"});
        if (g.contains("n")) c.freq_n = static_cast<int>(r.integer(g["n"], {"freq_grid", "n"}));
    }
    if (j.contains("scales")) {
        const auto& s = j["scales"];
        r.only_keys(s, {"scales"}, {"alpha_min", "alpha_max", "m"});
        if (s.contains("alpha_min")) c.alpha_min = r.number(s["alpha_min"], {"scales", "alpha_min"});
        if (s.contains("alpha_max")) c.alpha_max = r.number(s["alpha_max"], {"scales", "alpha_max"});
        if (s.contains("m")) c.m = static_cast<int>(r.integer(s["m"], {"scales", "m"}));
    }
    if (j.contains("wavelet")) {
        const auto& w = j["wavelet"];
        r.only_keys(w, {"wavelet"}, {"window", "synthesis_window"});
        if (w.contains("window")) c.window = r.string(w["window"], {"wavelet", "window"});
        if (w.contains("synthesis_window"))
            c.synthesis_window = r.string(w["synthesis_window"], {"wavelet", "synthesis_window"});
    }
    if (j.contains("sobolev")) {
        const auto& s = j["sobolev"];
        r.only_keys(s, {"sobolev"}, {"s"});
        if (s.contains("s")) c.s = r.number(s["s"], {"sobolev", "s"});
    }
    if (j.contains("tikhonov")) {
        const auto& t = j["tikhonov"];
        r.only_keys(t, {"tikhonov"}, {"rho", "rho_list"});
        if (t.contains("rho") && t.contains("rho_list")) r.fail({"tikhonov"}, "give rho or rho_list, not both");
        if (t.contains("rho")) c.rho_list = {r.number(t["rho"], {"tikhonov", "rho"})};
        if (t.contains("rho_list")) c.rho_list = r.numbers(t["rho_list"], {"tikhonov", "rho_list"});
    }
    if (j.contains("calderon")) {
        const auto& t = j["calderon"];
        r.only_keys(t, {"calderon"}, {"epsilon_list", "delta_list"});
        if (t.contains("epsilon_list")) c.epsilon_list = r.numbers(t["epsilon_list"], {"calderon", "epsilon_list"});
        if (t.contains("delta_list")) c.delta_list = r.numbers(t["delta_list"], {"calderon", "delta_list"});
    }
    if (j.contains("signal")) {
        const auto& s = j["signal"];
        r.only_keys(s, {"signal"}, {"name", "params", "path"});
        if (s.contains("name")) c.signal.name = r.string(s["name"], {"signal", "name"});
        if (s.contains("path")) c.signal.path = r.string(s["path"], {"signal", "path"});
        if (s.contains("params")) {
            const auto& p = s["params"];
            r.only_keys(p, {"signal", "params"}, {"center", "width", "order"});
            if (p.contains("center")) c.signal.center = r.number(p["center"], {"signal", "params", "center"});
            if (p.contains("width")) c.signal.width = r.number(p["width"], {"signal", "params", "width"});
            if (p.contains("order"))
                c.signal.order = static_cast<int>(r.integer(p["order"], {"signal", "params", "order"}));
        }
        if (c.signal.name == "table" && c.signal.path.empty()) r.fail({"signal"}, "table signal needs a path");
    }
    if (j.contains("output")) {
        const auto& o = j["output"];
        r.only_keys(o, {"output"}, {"path", "format"});
        if (o.contains("path")) c.output_path = r.string(o["path"], {"output", "path"});
        if (o.contains("format")) c.output_format = r.string(o["format"], {"output", "format"});
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) r.fail({"seed"}, "expected a non-negative integer");
        c.seed = j["seed"].get<std::uint64_t>();
    }
    check(c, r);
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ConfigError(path, 0, "cannot read config file");
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_config(ss.str(), path, std::filesystem::path(path).parent_path().string());
}

SampledSignal make_signal(const RunConfig& cfg, const GridPtr& grid, std::vector<std::string>* warnings) {
    const auto& sc = cfg.signal;
    SampledSignal f(grid);
    if (sc.name == "gaussian" || sc.name == "hermite") {
        for (int j = 0; j < grid->n; ++j) {
            const double t = (grid->nodes[j] - sc.center) / sc.width;
            const double h = sc.name == "hermite" ? std::hermite(static_cast<unsigned>(sc.order), t) : 1.0;
            f.values[j] = h * std::exp(-t * t / 2);
        }
        return f;
    }
    if (sc.name != "table") throw DomainError("unknown signal '" + sc.name + "'");
    const auto t = read_csv(resolve(cfg.base_dir, sc.path));
    const auto x = t.column("x"), re = t.column("re"), im = t.column("im");
    if (x.size() < 4) throw DomainError("signal table needs at least 4 rows");
    for (std::size_t i = 1; i < x.size(); ++i)
        if (!(x[i] > x[i - 1])) throw DomainError("signal table x must be strictly increasing");
    cvec y(x.size());
    double peak = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] = cplx(re[i], im[i]);
        peak = std::max(peak, std::abs(y[i]));
    }
    if (warnings) {
        if (std::abs(y.front()) > 1e-6 * peak || std::abs(y.back()) > 1e-6 * peak)
            warnings->push_back("signal table does not decay at its ends; the transform sees a truncated signal");
        if (x.front() > -grid->x_max || x.back() < grid->x_max)
            warnings->push_back("signal table does not cover the grid; missing nodes are set to 0");
    }
    const CubicSpline sp(x, y);
    for (int j = 0; j < grid->n; ++j) f.values[j] = sp(grid->nodes[j]);
    return f;
}

}  // namespace lcd
