// thetalift: command-line front end.
//
// Exit codes: 0 success, 1 validation failure (bad input data or config, a
// failed verify check), 2 usage error (bad flags or argument values),
// 3 numerical failure (a computation did not reach its accuracy target).
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thetalift/bessel.hpp"
#include "thetalift/bounds.hpp"
#include "thetalift/config.hpp"
#include "thetalift/error.hpp"
#include "thetalift/lattice.hpp"
#include "thetalift/lift.hpp"
#include "thetalift/maass.hpp"
#include "thetalift/parallel.hpp"
#include "thetalift/petersson.hpp"
#include "thetalift/verify.hpp"

using namespace thetalift;

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out + "\"";
}

// Minimal ordered JSON object writer; numbers go through format_double.
class JsonObject {
public:
    JsonObject& num(const std::string& k, double v) { return raw(k, format_double(v)); }
    JsonObject& integer(const std::string& k, long long v) { return raw(k, std::to_string(v)); }
    JsonObject& boolean(const std::string& k, bool v) { return raw(k, v ? "true" : "false"); }
    JsonObject& str(const std::string& k, const std::string& v) { return raw(k, quote(v)); }
    JsonObject& raw(const std::string& k, const std::string& v) {
        items_.emplace_back(k, v);
        return *this;
    }
    std::string dump() const {
        std::string out = "{";
        for (std::size_t i = 0; i < items_.size(); ++i) {
            if (i) out += ", ";
            out += quote(items_[i].first) + ": " + items_[i].second;
        }
        return out + "}";
    }

private:
    std::vector<std::pair<std::string, std::string>> items_;
};

std::string rational_text(const Rational& q) {
    return std::to_string(q.numerator()) + (q.denominator() == 1 ? "" : "/" + std::to_string(q.denominator()));
}

std::string data_dir() {
    if (const char* env = std::getenv("THETALIFT_DATA_DIR"); env && *env) return env;
    std::error_code ec;
    auto exe = std::filesystem::read_symlink("/proc/self/exe", ec);
    if (!ec) {
        for (auto local : {exe.parent_path() / "data", exe.parent_path().parent_path() / "data"})
            if (std::filesystem::exists(local / "forms")) return local.string();
    }
    return THETALIFT_DATA_DIR;
}

struct Common {
    std::optional<std::string> config_path;
    std::optional<std::string> format;
    std::optional<int> threads;
    std::optional<double> tol;

    void add(CLI::App* app) {
        app->add_option("--config", config_path, "JSON config file (default: $THETALIFT_CONFIG)");
        app->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
        app->add_option("--threads", threads, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
        app->add_option("--tol", tol, "lift truncation tolerance")->check(CLI::PositiveNumber);
    }

    Config load() const {
        Config cfg = Config::load(config_path);
        if (format) cfg.format = *format;
        if (threads) cfg.threads = *threads;
        if (tol) cfg.lift_tol = *tol;
        cfg.validate();
        return cfg;
    }
};

struct LatticeChoice {
    std::string name;
    std::string gram_file;

    void add(CLI::App* app, bool with_name_alias = false) {
        auto* opt = app->add_option(with_name_alias ? "--lattice,--name" : "--lattice", name,
                                    "built-in lattice: E8, E8xE8, D16plus");
        auto* g = app->add_option("--gram-file", gram_file, "lattice JSON {rank, gram}");
        opt->excludes(g);
    }

    Lattice get(const std::string& fallback = "") const {
        if (!gram_file.empty()) return Lattice::from_json_file(gram_file);
        if (!name.empty()) return Lattice::builtin(name);
        if (!fallback.empty()) return Lattice::builtin(fallback);
        throw UsageError("one of --lattice or --gram-file is required");
    }
};

MaassForm load_form(const std::string& path, const Config& cfg) {
    if (path.empty()) throw UsageError("--form is required");
    return MaassForm::from_json_file(path, cfg.form_options());
}

std::vector<double> grid(std::optional<double> y, std::optional<double> ymin, std::optional<double> ymax, int points) {
    if (y) {
        if (ymin || ymax) throw UsageError("--y excludes --ymin/--ymax");
        return {*y};
    }
    if (!ymin || !ymax) throw UsageError("give --y or both --ymin and --ymax");
    if (!(*ymax >= *ymin)) throw UsageError("--ymax must be >= --ymin");
    if (points < 1 || (points == 1 && *ymin != *ymax)) throw UsageError("--points must be >= 2 for a range");
    std::vector<double> out(points);
    for (int i = 0; i < points; ++i) out[i] = points == 1 ? *ymin : *ymin + (*ymax - *ymin) * i / (points - 1);
    return out;
}

std::vector<double> parse_vector(const std::string& text, int rank) {
    std::vector<double> out;
    if (!text.empty()) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                out.push_back(std::stod(item, &used));
                if (used != item.size()) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw UsageError("--x: cannot parse '" + item + "'");
            }
        }
    } else {
        out.assign(rank, 0.0);
    }
    if (static_cast<int>(out.size()) != rank)
        throw UsageError("--x needs " + std::to_string(rank) + " comma-separated coordinates");
    return out;
}

int emit_error(const char* kind, const std::string& message, int code) {
    std::cerr << JsonObject().str("error", kind).str("message", message).dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Theta lifts of level-1 Maass forms: lattices, Bessel functions, lifts, norms and sup-norm bounds"};
    app.require_subcommand(1);

    // lattice shells
    auto* lattice = app.add_subcommand("lattice", "lattice shells");
    lattice->require_subcommand(1);
    auto* shells = lattice->add_subcommand("shells", "shell sizes r(m) for 1 <= m <= max");
    Common shells_common;
    LatticeChoice shells_lat;
    long long shells_max = 0;
    bool shells_primitive = false;
    shells_common.add(shells);
    shells_lat.add(shells, true);
    shells->add_option("--max", shells_max, "largest norm")->required()->check(CLI::PositiveNumber);
    shells->add_flag("--primitive", shells_primitive, "count primitive vectors only");

    // bessel
    auto* bessel_cmd = app.add_subcommand("bessel", "scaled K-Bessel values e^{pi r/2} K_{ir}(y) with envelopes");
    Common bessel_common;
    double bessel_r = 0.0;
    std::optional<double> b_y, b_ymin, b_ymax;
    int b_points = 100;
    bessel_common.add(bessel_cmd);
    bessel_cmd->add_option("--r", bessel_r, "order r")->required()->check(CLI::PositiveNumber);
    bessel_cmd->add_option("--y", b_y, "single argument");
    bessel_cmd->add_option("--ymin", b_ymin);
    bessel_cmd->add_option("--ymax", b_ymax);
    bessel_cmd->add_option("--points", b_points, "grid points (uniform)");

    // lift eval
    auto* lift_cmd = app.add_subcommand("lift", "theta lift evaluation");
    lift_cmd->require_subcommand(1);
    auto* eval_cmd = lift_cmd->add_subcommand("eval", "evaluate F_f(n(x) a_y)");
    Common eval_common;
    LatticeChoice eval_lat;
    std::string eval_form, eval_x;
    double eval_y = 0.0;
    eval_common.add(eval_cmd);
    eval_lat.add(eval_cmd);
    eval_cmd->add_option("--form", eval_form, "Maass form JSON")->required();
    eval_cmd->add_option("--y", eval_y, "height y")->required();
    eval_cmd->add_option("--x", eval_x, "comma-separated x (default 0)");

    // norm
    auto* norm_cmd = app.add_subcommand("norm", "Petersson norm ratio ||F_f||^2 / ||f||^2");
    Common norm_common;
    int norm_rank = 8;
    std::string norm_form;
    long long norm_primes = 100;
    norm_common.add(norm_cmd);
    norm_cmd->add_option("--lattice-rank", norm_rank, "N (multiple of 8)")->check(CLI::PositiveNumber);
    norm_cmd->add_option("--form", norm_form, "Maass form JSON")->required();
    norm_cmd->add_option("--primes", norm_primes, "Euler product over p <= P")->check(CLI::PositiveNumber);

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "|F_f(0, y)| / ||F_f||_2 against the sup-norm envelopes");
    Common scan_common;
    LatticeChoice scan_lat;
    std::string scan_form;
    std::optional<double> s_y, s_ymin, s_ymax;
    int s_points = 400;
    long long scan_primes = 100;
    scan_common.add(scan_cmd);
    scan_lat.add(scan_cmd);
    scan_cmd->add_option("--form", scan_form, "Maass form JSON")->required();
    scan_cmd->add_option("--y", s_y);
    scan_cmd->add_option("--ymin", s_ymin);
    scan_cmd->add_option("--ymax", s_ymax);
    scan_cmd->add_option("--points", s_points);
    scan_cmd->add_option("--primes", scan_primes, "Euler product truncation for ||F_f||_2")->check(CLI::PositiveNumber);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite; exit 0 iff all checks pass");
    Common verify_common;
    std::string verify_form;
    verify_common.add(verify_cmd);
    verify_cmd->add_option("--form", verify_form, "Maass form JSON (default: shipped sample)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*shells) {
            Config cfg = shells_common.load();
            Lattice lat = shells_lat.get();
            ShellCounts counts = count_shells(lat, shells_max);
            const auto& col = shells_primitive ? counts.primitive : counts.total;
            if (cfg.format == "csv") {
                std::cout << "m,count\n";
                for (long long m = 1; m <= shells_max; ++m) std::cout << m << "," << col[m] << "\n";
            } else {
                JsonObject o;
                for (long long m = 1; m <= shells_max; ++m) o.integer(std::to_string(m), col[m]);
                std::cout << o.dump() << "\n";
            }
        } else if (*bessel_cmd) {
            Config cfg = bessel_common.load();
            auto ys = grid(b_y, b_ymin, b_ymax, b_points);
            for (double y : ys)
                if (!(y > 0.0)) throw UsageError("bessel: y must be positive");
            std::vector<double> k(ys.size()), env(ys.size());
            parallel_for(ys.size(), cfg.threads, [&](std::size_t i) {
                bessel::KValue kv = bessel::k_scaled_log(bessel_r, ys[i], cfg.quadrature);
                k[i] = kv.value();
                env[i] = bessel::envelope(bessel_r, ys[i], cfg.bessel_constants);
            });
            std::cout << "r,y,k_scaled,envelope,regime\n";
            for (std::size_t i = 0; i < ys.size(); ++i)
                std::cout << format_double(bessel_r) << "," << format_double(ys[i]) << "," << format_double(k[i]) << ","
                          << format_double(env[i]) << ","
                          << bessel::to_string(bessel::classify(bessel_r, ys[i], cfg.bessel_constants.transition_width))
                          << "\n";
        } else if (*eval_cmd) {
            Config cfg = eval_common.load();
            Lattice lat = eval_lat.get();
            MaassForm f = load_form(eval_form, cfg);
            auto x = parse_vector(eval_x, lat.rank());
            auto ev = lift::evaluate(lat, f, x, eval_y, cfg.eval_options());
            JsonObject o;
            o.num("value_re", ev.value.real())
                .num("value_im", ev.value.imag())
                .integer("truncation_M", ev.truncation_M)
                .num("tail_bound", ev.tail_bound)
                .num("scaled_re", ev.scaled_value.real())
                .num("scaled_im", ev.scaled_value.imag())
                .num("log_scale", ev.log_scale)
                .integer("vectors_summed", ev.vectors_summed)
                .boolean("certified", ev.certified);
            if (cfg.format == "csv") {
                std::cout << "value_re,value_im,truncation_M,tail_bound\n"
                          << format_double(ev.value.real()) << "," << format_double(ev.value.imag()) << ","
                          << ev.truncation_M << "," << format_double(ev.tail_bound) << "\n";
            } else {
                std::cout << o.dump() << "\n";
            }
        } else if (*norm_cmd) {
            Config cfg = norm_common.load();
            MaassForm f = load_form(norm_form, cfg);
            auto nf = petersson::norm_ratio(f, norm_rank, norm_primes);
            JsonObject o;
            o.integer("N", nf.N)
                .str("s0", rational_text(nf.s0))
                .num("arch_factor", nf.arch_factor)
                .num("arch_factor_dual", nf.arch_factor_dual)
                .num("adjoint_L", nf.adjoint.value)
                .num("adjoint_log_tail_bound", nf.adjoint.log_tail_bound)
                .num("adjoint_truncation_error", nf.adjoint.truncation_error)
                .integer("primes_used", nf.adjoint.primes_used)
                .integer("P", nf.adjoint.P)
                .num("zeta_half", nf.zeta_half)
                .num("zeta_N", nf.zeta_N)
                .num("ratio", nf.ratio)
                .num("log_ratio", nf.log_ratio)
                .num("ratio_dual", nf.ratio_dual)
                .num("ratio_relative_error", nf.ratio_relative_error);
            if (f.norm_sq()) o.num("lift_norm_sq", nf.ratio * *f.norm_sq());
            else o.raw("lift_norm_sq", "null");
            std::cout << o.dump() << "\n";
        } else if (*scan_cmd) {
            Config cfg = scan_common.load();
            Lattice lat = scan_lat.get();
            MaassForm f = load_form(scan_form, cfg);
            auto ys = grid(s_y, s_ymin, s_ymax, s_points);
            bounds::ScanOptions opts;
            opts.eval = cfg.eval_options();
            opts.bounds = cfg.bounds_config();
            opts.bessel_constants = cfg.bessel_constants;
            opts.primes = scan_primes;
            opts.threads = cfg.threads;
            auto rows = bounds::supnorm_scan(lat, f, ys.front(), ys.back(), static_cast<int>(ys.size()), opts);
            std::cout << "y,value,fourier_env,pretrace_env,regime\n";
            for (const auto& row : rows)
                std::cout << format_double(row.y) << "," << format_double(row.value) << "," << format_double(row.fourier_env)
                          << "," << format_double(row.pretrace_env) << "," << row.regime << "\n";
        } else if (*verify_cmd) {
            Config cfg = verify_common.load();
            std::string path = verify_form.empty() ? data_dir() + "/forms/sample_even_r27.json" : verify_form;
            MaassForm f = MaassForm::from_json_file(path, cfg.form_options());
            auto results = run_invariant_suite(cfg, f, cfg.threads);
            bool all = true;
            for (const auto& c : results) all = all && c.passed;
            if (cfg.format == "csv") {
                std::cout << "check,passed,detail\n";
                for (const auto& c : results) std::cout << c.name << "," << (c.passed ? "true" : "false") << "," << quote(c.detail) << "\n";
            } else {
                std::string list = "[";
                for (std::size_t i = 0; i < results.size(); ++i) {
                    if (i) list += ", ";
                    list += JsonObject().str("check", results[i].name).boolean("passed", results[i].passed)
                                .str("detail", results[i].detail).dump();
                }
                std::cout << JsonObject().boolean("passed", all).raw("checks", list + "]").dump() << "\n";
            }
            for (const auto& c : results)
                if (!c.passed) std::cerr << "FAIL " << c.name << ": " << c.detail << "\n";
            return all ? 0 : 1;
        }
    } catch (const UsageError& e) {
        return emit_error("usage", e.what(), 2);
    } catch (const DomainError& e) {
        return emit_error("domain", e.what(), 2);
    } catch (const ValidationError& e) {
        return emit_error("validation", e.what(), 1);
    } catch (const InsufficientDataError& e) {
        return emit_error("insufficient_data", e.what(), 1);
    } catch (const ConvergenceError& e) {
        return emit_error("convergence", e.what(), 3);
    } catch (const std::exception& e) {
        return emit_error("internal", e.what(), 3);
    }
    return 0;
}
