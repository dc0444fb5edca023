#include "lcdunkl/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lcdunkl/parallel.hpp"
#include "lcdunkl/validation.hpp"

namespace lcd {

namespace {

std::string json_number(double v) {
    if (std::isnan(v)) return "\"nan\"";
    if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
    return format_double(v);
}

std::vector<int> probe_nodes(const SpaceGrid& g, double half_width, int count) {
    std::vector<int> idx;
    for (int i = 0; i < count; ++i) {
        const double x = -half_width + 2 * half_width * i / (count - 1);
        const int j = std::clamp(g.center() + static_cast<int>(std::lround(x / g.delta)), 0, g.n - 1);
        if (idx.empty() || idx.back() != j) idx.push_back(j);
    }
    return idx;
}

void write_table(const CsvTable& t, const std::string& format, std::ostream& os) {
    if (format == "json")
        os << table_json(t);
    else
        write_csv(os, t);
}

std::string sidecar_path(const std::string& out) {
    const auto dot = out.find_last_of('.');
    const auto slash = out.find_last_of('/');
    const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
    return (has_ext ? out.substr(0, dot) : out) + ".sidecar.json";
}

}  // namespace

CommandOutput cmd_transform(const RunConfig& cfg) {
    const auto g = cfg.space_grid();
    const auto D = lcdt_forward(make_signal(cfg, g), cfg.context(), cfg.freq_grid());
    CommandOutput o{{{"lambda", "re", "im", "abs"}, {}}, ""};
    for (std::size_t j = 0; j < D.values.size(); ++j) {
        const cplx v = D.values[j];
        o.table.rows.push_back({D.grid->nodes[j], v.real(), v.imag(), std::abs(v)});
    }
    return o;
}

CommandOutput cmd_cwt(const RunConfig& cfg) {
    const auto g = cfg.space_grid();
    const auto ctx = cfg.context();
    const auto psi = make_wavelet(cfg.analysis_spec(), ctx, g);
    const auto G = cwt(make_signal(cfg, g), psi, cfg.scale_grid(), ctx);
    CommandOutput o{{{"alpha", "beta", "re", "im", "abs"}, {}}, ""};
    o.table.rows.reserve(static_cast<std::size_t>(G.m()) * G.n());
    for (int i = 0; i < G.m(); ++i)
        for (int j = 0; j < G.n(); ++j) {
            const cplx v = G.values[i][j];
            o.table.rows.push_back({G.scales.scales[i], g->nodes[j], v.real(), v.imag(), std::abs(v)});
        }
    return o;
}

CommandOutput cmd_calderon(const RunConfig& cfg) {
    const auto g = cfg.space_grid();
    const auto rows =
        convergence_sweep(make_signal(cfg, g), cfg.analysis_spec(), cfg.synthesis_spec(), cfg.windows(), cfg.context());
    CommandOutput o{{{"epsilon", "delta", "l2_error"}, {}}, ""};
    for (const auto& r : rows) o.table.rows.push_back({r.epsilon, r.delta, r.l2_error});
    return o;
}

CommandOutput cmd_extremal(const RunConfig& cfg) {
    const auto g = cfg.space_grid();
    const auto fg = cfg.freq_grid();
    const auto ctx = cfg.context();
    const auto f = make_signal(cfg, g);
    const auto psi = make_wavelet(cfg.analysis_spec(), ctx, g);
    const auto G = cwt(f, psi, cfg.scale_grid(), ctx);
    const double gnorm = std::sqrt(cwt_inner(G, G, BetaRule::Spectral).real());
    const double Cs = constant_Cs(cfg.s, ctx);
    const auto Dg = lcdt_forward(f, ctx, fg);
    const double dg2 = std::pow(weighted_norm(Dg.values, fg->mu_weights), 2);

    CommandOutput o{{{"y", "re", "im"}, {}}, ""};
    std::ostringstream js;
    js << "{\n  \"s\": " << json_number(cfg.s) << ",\n  \"C_s\": " << json_number(Cs)
       << ",\n  \"admissibility\": " << json_number(psi.C) << ",\n  \"cwt_data_norm\": " << json_number(gnorm)
       << ",\n  \"lcdt_data_norm\": " << json_number(std::sqrt(dg2)) << ",\n  \"runs\": [\n";
    for (std::size_t r = 0; r < cfg.rho_list.size(); ++r) {
        const double rho = cfg.rho_list[r];
        const SobolevParams p(cfg.s, rho);
        const auto fs = extremal_cwt(G, p, psi, ctx);
        const auto h = extremal_lcdt(Dg, p, ctx, g);
        double sup = 0, gap = 0;
        for (int j = 0; j < g->n; ++j) {
            sup = std::max(sup, std::abs(fs.values[j]));
            gap = std::max(gap, std::abs(fs.values[j] - f.values[j]));
        }
        const double hn = sobolev_norm(lcdt_forward(h, ctx, fg), cfg.s);
        js << "    {\"rho\": " << json_number(rho) << ", \"sup_f_star\": " << json_number(sup)
           << ", \"sup_bound\": " << json_number(Cs / std::sqrt(rho) * gnorm) << ", \"sup_gap\": " << json_number(gap)
           << ", \"h_energy\": " << json_number(rho * hn * hn) << ", \"h_energy_bound\": " << json_number(dg2 / 4)
           << "}" << (r + 1 < cfg.rho_list.size() ? "," : "") << "\n";
        if (r + 1 == cfg.rho_list.size())
            for (int j = 0; j < g->n; ++j) o.table.rows.push_back({g->nodes[j], fs.values[j].real(), fs.values[j].imag()});
    }
    js << "  ]\n}\n";
    o.sidecar_json = js.str();
    return o;
}

CommandOutput cmd_kernels(const RunConfig& cfg, bool force_large) {
    const auto g = cfg.space_grid();
    const auto ctx = cfg.context();
    const double C = admissibility(cfg.analysis_spec()).value;
    const SobolevParams p(cfg.s, cfg.rho_list.front());
    std::vector<double> xs, ys;
    for (int j : probe_nodes(*g, 4, 17)) ys.push_back(g->nodes[j]);
    if (force_large) {
        for (int j = 0; j < g->n; ++j)
            if (std::abs(g->nodes[j]) <= 4) xs.push_back(g->nodes[j]);
    } else {
        xs = ys;
    }
    const auto K = kernel_table(KernelKind::Ks, xs, ys, p, C, ctx);
    const auto R = kernel_table(KernelKind::Rrho, xs, ys, p, C, ctx);
    CommandOutput o{{{"x", "y", "ks_re", "ks_im", "r_re", "r_im"}, {}}, ""};
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < ys.size(); ++j)
            o.table.rows.push_back({xs[i], ys[j], K.values[i][j].real(), K.values[i][j].imag(), R.values[i][j].real(),
                                    R.values[i][j].imag()});
    return o;
}

std::string table_json(const CsvTable& t) {
    std::ostringstream os;
    os << "{\"header\": [";
    for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? ", " : "") << '"' << t.header[i] << '"';
    os << "],\n \"rows\": [\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        os << "  [";
        for (std::size_t i = 0; i < t.rows[r].size(); ++i) os << (i ? ", " : "") << json_number(t.rows[r][i]);
        os << "]" << (r + 1 < t.rows.size() ? "," : "") << "\n";
    }
    os << "]}\n";
    return os.str();
}

int run_cli(const CliOptions& opts, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
        cfg = opts.config_path.empty() ? default_config() : load_config(opts.config_path);
    } catch (const std::exception& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    }
    if (opts.workers > 0) set_workers(opts.workers);
    const std::string path = opts.out.empty() ? cfg.output_path : opts.out;

    auto emit = [&](const std::string& text) {
        if (path.empty()) {
            out << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + path + " for writing");
        f << text;
    };

    try {
        if (!cfg.signal.path.empty() || cfg.signal.name == "table") {
            std::vector<std::string> warnings;
            (void)make_signal(cfg, cfg.space_grid(), &warnings);
            for (const auto& w : warnings) err << "warning: " << w << "\n";
        }
        if (opts.command == "validate") {
            const auto checks = run_validation(cfg);
            emit(validation_report_json(checks));
            int failed = 0;
            for (const auto& c : checks)
                if (!c.pass) {
                    ++failed;
                    err << "FAIL " << c.name << ": measured " << json_number(c.measured) << ", bound "
                        << json_number(c.bound) << "\n";
                }
            err << checks.size() << " checks, " << failed << " failed\n";
            return failed ? 1 : 0;
        }
        CommandOutput o;
        if (opts.command == "transform")
            o = cmd_transform(cfg);
        else if (opts.command == "cwt")
            o = cmd_cwt(cfg);
        else if (opts.command == "calderon")
            o = cmd_calderon(cfg);
        else if (opts.command == "extremal")
            o = cmd_extremal(cfg);
        else if (opts.command == "kernels")
            o = cmd_kernels(cfg, opts.force_large);
        else {
            err << "unknown command: " << opts.command << "\n";
            return 2;
        }
        std::ostringstream os;
        write_table(o.table, cfg.output_format, os);
        emit(os.str());
        if (!o.sidecar_json.empty()) {
            if (path.empty()) {
                err << o.sidecar_json;
            } else {
                std::ofstream f(sidecar_path(path), std::ios::binary);
                if (!f) throw std::runtime_error("cannot open " + sidecar_path(path) + " for writing");
                f << o.sidecar_json;
            }
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace lcd
