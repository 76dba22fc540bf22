#include "thetalift/config.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"


namespace thetalift {

namespace {

template <class T>
void read(const nlohmann::json& j, const char* key, T& out) {
    if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            long long v = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return Rational(v);
        }
        std::string num = text.substr(0, slash), den = text.substr(slash + 1);
        long long p = std::stoll(num, &used);
        if (used != num.size()) throw std::invalid_argument(text);
        long long q = std::stoll(den, &used);
        if (used != den.size() || q == 0) throw std::invalid_argument(text);
        return Rational(p, q);
    } catch (const std::logic_error&) {
        throw ValidationError("'" + text + "' is not a rational number of the form p/q");
    }
}

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    if (v == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

lift::EvalOptions Config::eval_options() const {
    lift::EvalOptions o;
    o.tol = lift_tol;
    o.y_min = y_min;
    o.vector_budget = shell_budget;
    return o;
}

bounds::BoundsConfig Config::bounds_config() const { return {epsilon0, bessel_constants.c6}; }

void Config::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError(std::string("config: ") + name + " must be positive");
    };
    positive(epsilon0, "epsilon0");
    positive(r_min, "r_min");
    positive(quadrature.rel_tol, "quadrature.rel_tol");
    positive(quadrature.max_rel_error, "quadrature.max_rel_error");
    positive(lift_tol, "lift.tol");
    positive(y_min, "lift.y_min");
    positive(coefficient_constant, "fitted.coefficient");
    positive(scan_constant, "fitted.scan");
    positive(witness_constant, "fitted.witness");
    positive(shell_divisor_constant, "fitted.shell_divisor");
    positive(transition_lower, "fitted.transition_lower");
    if (!(transition_upper > transition_lower)) throw ValidationError("config: fitted.transition_upper must exceed transition_lower");
    for (double c : {bessel_constants.c1, bessel_constants.c2, bessel_constants.c3, bessel_constants.c4,
                     bessel_constants.c5, bessel_constants.c6, bessel_constants.transition_width})
        positive(c, "bessel_constants");
    if (shell_budget < 1) throw ValidationError("config: lift.shell_budget must be positive");
    if (theta < Rational(0) || theta >= Rational(1, 4)) throw ValidationError("config: theta must lie in [0, 1/4)");
    if (format != "json" && format != "csv") throw ValidationError("config: format must be json or csv");
    if (threads < 0) throw ValidationError("config: threads must be >= 0");
}

Config Config::from_json_text(const std::string& text) {
    Config c;
    try {
        auto j = nlohmann::json::parse(text);
        if (!j.is_object()) throw ValidationError("config: top level must be an object");
        read(j, "epsilon0", c.epsilon0);
        if (j.contains("theta")) {
            const auto& t = j.at("theta");
            if (t.is_string()) c.theta = parse_rational(t.get<std::string>());
            else if (t.is_number_integer()) c.theta = Rational(t.get<long long>());
            else throw ValidationError("config: theta must be a string \"p/q\" or an integer");
        }
        read(j, "r_min", c.r_min);
        if (j.contains("bessel_constants")) {
            const auto& b = j.at("bessel_constants");
            read(b, "c1", c.bessel_constants.c1);
            read(b, "c2", c.bessel_constants.c2);
            read(b, "c3", c.bessel_constants.c3);
            read(b, "c4", c.bessel_constants.c4);
            read(b, "c5", c.bessel_constants.c5);
            read(b, "c6", c.bessel_constants.c6);
            read(b, "transition_width", c.bessel_constants.transition_width);
        }
        if (j.contains("quadrature")) {
            read(j.at("quadrature"), "rel_tol", c.quadrature.rel_tol);
            read(j.at("quadrature"), "max_rel_error", c.quadrature.max_rel_error);
        }
        if (j.contains("lift")) {
            read(j.at("lift"), "tol", c.lift_tol);
            read(j.at("lift"), "y_min", c.y_min);
            read(j.at("lift"), "shell_budget", c.shell_budget);
        }
        if (j.contains("fitted")) {
            const auto& f = j.at("fitted");
            read(f, "coefficient", c.coefficient_constant);
            read(f, "scan", c.scan_constant);
            read(f, "witness", c.witness_constant);
            read(f, "transition_lower", c.transition_lower);
            read(f, "transition_upper", c.transition_upper);
            read(f, "shell_divisor", c.shell_divisor_constant);
        }
        read(j, "format", c.format);
        read(j, "threads", c.threads);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("config: ") + e.what());
    }
    c.validate();
    return c;
}

Config Config::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

Config Config::load(const std::optional<std::string>& path) {
    if (path) return from_json_file(*path);
    if (const char* env = std::getenv("THETALIFT_CONFIG"); env && *env) return from_json_file(env);
    return Config{};
}

}  // namespace thetalift
