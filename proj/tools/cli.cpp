#include "cli.hpp"

#include "vgp/errors.hpp"
#include "vgp/oracle.hpp"
#include "vgp/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace vgp::cli {

namespace {

using nlohmann::ordered_json;

std::string num(double v)
{
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

ordered_json jnum(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

std::string fixed4(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

double to_double(const std::string& s, const std::string& what)
{
    double v = 0.0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size()) throw std::invalid_argument(what + ": not a number: " + s);
    return v;
}

const char* command_name(Command c)
{
    switch (c) {
    case Command::Pdf: return "pdf";
    case Command::Cdf: return "cdf";
    case Command::Quantile: return "quantile";
    case Command::Cf: return "cf";
    case Command::ProbNeg: return "prob-neg";
    case Command::Sample: return "sample";
    case Command::Table1: return "table1";
    case Command::Figures: return "figures";
    case Command::Verify: return "verify";
    }
    return "?";
}

ordered_json params_json(const ProductDist& d)
{
    ordered_json j;
    j["m"] = d.px.m;
    j["a1"] = d.px.alpha;
    j["b1"] = d.px.beta;
    j["n"] = d.py.m;
    j["a2"] = d.py.alpha;
    j["b2"] = d.py.beta;
    return j;
}

std::vector<double> points(const RunConfig& cfg)
{
    if (cfg.point) return {*cfg.point};
    std::vector<double> v;
    for (int i = 0; i < cfg.grid->n; ++i) v.push_back(cfg.grid->at(i));
    return v;
}

std::string diagnostics(const ProductDist& d, const char* var, double x)
{
    std::ostringstream o;
    o << var << "=" << num(x);
    if (std::string(var) == "z") {
        const double xi = x >= 0 ? d.xi1() : d.xi2();
        o << ", tail scale 2*sqrt(xi|z|)=" << num(2 * std::sqrt(xi * std::abs(x))) << " (switch "
          << num(d.policy.tail_switch) << ")";
        o << ", series scale 2*sqrt(a1 a2|z|)=" << num(2 * std::sqrt(d.px.alpha * d.py.alpha * std::abs(x)));
    }
    o << ", half-integer shapes: " << (d.half_integer() ? "yes" : "no") << ", symmetric: "
      << (d.symmetric() ? "yes" : "no");
    return o.str();
}

struct Row {
    double x;
    double value;
    double im;
    double abs_err;
    std::string regime;
};

struct Emitted {
    std::string text;
    int status = exit_ok;
};

Emitted emit_rows(const RunConfig& cfg, const char* var, bool complex, const std::vector<Row>& rows)
{
    Emitted e;
    if (cfg.format == Format::Csv) {
        std::string s = std::string(var) + (complex ? ",re,im" : ",value") + ",abs_err,regime\n";
        for (const Row& r : rows) {
            s += num(r.x) + "," + num(r.value) + ",";
            if (complex) s += num(r.im) + ",";
            s += num(r.abs_err) + "," + r.regime + "\n";
        }
        e.text = s;
    } else {
        ordered_json j;
        j["command"] = command_name(cfg.command);
        j["params"] = params_json(cfg.dist);
        ordered_json arr = ordered_json::array();
        for (const Row& r : rows) {
            ordered_json o;
            o[var] = jnum(r.x);
            if (complex)
                o["value"] = {{"re", jnum(r.value)}, {"im", jnum(r.im)}};
            else
                o["value"] = jnum(r.value);
            o["abs_err"] = jnum(r.abs_err);
            o["regime"] = r.regime;
            arr.push_back(o);
        }
        j["results"] = arr;
        e.text = j.dump(2) + "\n";
    }
    return e;
}

template <class F>
Emitted pointwise(const RunConfig& cfg, const char* var, bool complex, F eval)
{
    std::vector<Row> rows;
    for (double x : points(cfg)) rows.push_back(eval(x));
    return emit_rows(cfg, var, complex, rows);
}

Row real_row(double x, const RealResult& r) { return {x, r.value, 0.0, r.abs_err, std::string(to_string(r.regime))}; }

// thrown with the offending point so the caller can print regime diagnostics
struct PointFailure : std::runtime_error {
    PointFailure(const std::string& msg, const char* v, double x) : std::runtime_error(msg), var(v), at(x) {}
    const char* var;
    double at;
};

template <class F>
auto at_point(const char* var, double x, F f)
{
    try {
        return f();
    } catch (const NumericError& e) {
        throw PointFailure(e.what(), var, x);
    }
}

Emitted cmd_table1(const RunConfig& cfg)
{
    const double betas[] = {0.25, 0.5, 0.75};
    const std::pair<double, double> shapes[] = {{0, 0}, {0, 1.5}, {0, 3}, {1.5, 0}, {1.5, 1.5}, {1.5, 3}};
    auto label = [](const std::pair<double, double>& s) { return "m" + num(s.first) + "_n" + num(s.second); };

    Emitted e;
    ordered_json rows = ordered_json::array();
    std::string csv = "beta1,beta2";
    for (const auto& s : shapes) csv += "," + label(s);
    for (const auto& s : shapes) csv += ",full_" + label(s);
    csv += "\n";
    for (double b1 : betas)
        for (double b2 : betas) {
            std::vector<double> v;
            for (const auto& s : shapes) {
                ProductDist d = make_product(s.first, 1.0, b1, s.second, 1.0, b2);
                d.policy = cfg.dist.policy;
                v.push_back(product_prob_nonpositive(d));
            }
            csv += num(b1) + "," + num(b2);
            for (double x : v) csv += "," + fixed4(x);
            for (double x : v) csv += "," + num(x);
            csv += "\n";
            ordered_json r;
            r["beta1"] = b1;
            r["beta2"] = b2;
            for (std::size_t i = 0; i < v.size(); ++i)
                r[label(shapes[i])] = {{"rounded", fixed4(v[i])}, {"full", v[i]}};
            rows.push_back(r);
        }
    e.text = cfg.format == Format::Csv ? csv : ordered_json{{"command", "table1"}, {"rows", rows}}.dump(2) + "\n";
    return e;
}

struct Curve {
    std::string figure;
    double m, b1, n, b2;
};

std::vector<Curve> figure_curves()
{
    std::vector<Curve> c;
    for (double m : {-0.25, 2.0})
        for (double n : {-0.25, 0.5, 1.0, 2.0}) c.push_back({m < 0 ? "1a" : "1b", m, 0.0, n, 0.0});
    for (double b2 : {-0.75, -0.25, 0.0, 0.25, 0.75}) c.push_back({"2", 0.5, 0.5, 0.5, b2});
    return c;
}

Emitted cmd_figures(const RunConfig& cfg)
{
    const Grid g = cfg.grid.value_or(Grid{-4.0, 4.0, 160});
    Emitted e;
    std::string csv = "figure,m,b1,n,b2,z,pdf\n";
    ordered_json curves = ordered_json::array();
    for (const Curve& c : figure_curves()) {
        ProductDist d = make_product(c.m, 1.0, c.b1, c.n, 1.0, c.b2);
        d.policy = cfg.dist.policy;
        ordered_json zs = ordered_json::array(), fs = ordered_json::array();
        for (int i = 0; i < g.n; ++i) {
            const double z = g.at(i);
            const double f = at_point("z", z, [&] { return product_pdf(d, z).value; });
            csv += c.figure + "," + num(c.m) + "," + num(c.b1) + "," + num(c.n) + "," + num(c.b2) + "," + num(z) +
                   "," + num(f) + "\n";
            zs.push_back(jnum(z));
            fs.push_back(jnum(f));
        }
        curves.push_back({{"figure", c.figure}, {"m", c.m}, {"b1", c.b1}, {"n", c.n}, {"b2", c.b2}, {"z", zs},
                          {"pdf", fs}});
    }
    e.text = cfg.format == Format::Csv ? csv : ordered_json{{"command", "figures"}, {"curves", curves}}.dump(2) + "\n";
    return e;
}

Emitted cmd_sample(const RunConfig& cfg)
{
    const std::vector<double> s = mc_sample_product(cfg.dist, cfg.count, cfg.seed);
    Emitted e;
    if (cfg.format == Format::Csv) {
        e.text = "z\n";
        for (double x : s) e.text += num(x) + "\n";
    } else {
        ordered_json j;
        j["command"] = "sample";
        j["params"] = params_json(cfg.dist);
        j["seed"] = cfg.seed;
        j["samples"] = s;
        e.text = j.dump(2) + "\n";
    }
    return e;
}

Emitted cmd_verify(const RunConfig& cfg)
{
    const auto checks = run_invariant_suite(cfg.quick);
    Emitted e;
    bool ok = true;
    if (cfg.format == Format::Csv) {
        e.text = "check,passed,measured,limit,detail\n";
        for (const auto& c : checks) {
            std::string detail = c.detail;
            for (char& ch : detail)
                if (ch == ',' || ch == '\n') ch = ';';
            e.text += "\"" + c.name + "\"," + (c.passed ? "true" : "false") + "," + num(c.measured) + "," +
                      num(c.limit) + "," + detail + "\n";
        }
    } else {
        ordered_json arr = ordered_json::array();
        for (const auto& c : checks)
            arr.push_back({{"check", c.name}, {"passed", c.passed}, {"measured", jnum(c.measured)},
                           {"limit", jnum(c.limit)}, {"detail", c.detail}});
        e.text = ordered_json{{"command", "verify"}, {"checks", arr}}.dump(2) + "\n";
    }
    for (const auto& c : checks) ok = ok && c.passed;
    e.status = ok ? exit_ok : exit_numerical;
    return e;
}

Emitted dispatch(const RunConfig& cfg)
{
    const ProductDist& d = cfg.dist;
    switch (cfg.command) {
    case Command::Pdf:
        return pointwise(cfg, "z", false, [&](double z) {
            return at_point("z", z, [&] {
                if (z == 0.0)
                    throw SingularityError("density is unbounded at z = 0 for every parameter set; evaluate at z != 0");
                return real_row(z, product_pdf(d, z));
            });
        });
    case Command::Cdf:
        return pointwise(cfg, "z", false,
                         [&](double z) { return at_point("z", z, [&] { return real_row(z, product_cdf(d, z)); }); });
    case Command::Cf:
        return pointwise(cfg, "t", true, [&](double t) {
            return at_point("t", t, [&] {
                const ComplexResult r = product_cf(d, t);
                return Row{t, r.value.real(), r.value.imag(), r.abs_err, std::string(to_string(r.regime))};
            });
        });
    case Command::Quantile:
        return pointwise(cfg, "p", false, [&](double p) {
            return at_point("p", p, [&] {
                const double q = product_quantile(d, p, cfg.tol);
                // residual in p mapped back through the density
                const double resid = std::abs(product_cdf(d, q).value - p);
                const double f = q != 0.0 ? product_pdf(d, q).value : INFINITY;
                return Row{p, q, 0.0, std::max(resid / f, cfg.tol * std::max(1.0, std::abs(q))), "root-find"};
            });
        });
    case Command::ProbNeg: {
        Emitted e;
        const double v = product_prob_nonpositive(d);
        const double err = 8 * 2.220446049250313e-16;
        if (cfg.format == Format::Csv)
            e.text = "value,abs_err,regime\n" + num(v) + "," + num(err) + ",closed-form\n";
        else
            e.text = ordered_json{{"command", "prob-neg"}, {"params", params_json(d)},
                                  {"result", {{"value", v}, {"abs_err", err}, {"regime", "closed-form"}}}}
                         .dump(2) +
                     "\n";
        return e;
    }
    case Command::Sample: return cmd_sample(cfg);
    case Command::Table1: return cmd_table1(cfg);
    case Command::Figures: return cmd_figures(cfg);
    case Command::Verify: return cmd_verify(cfg);
    }
    return {};
}

bool needs_point(Command c)
{
    return c == Command::Pdf || c == Command::Cdf || c == Command::Cf || c == Command::Quantile;
}

}  // namespace

Grid parse_grid(const std::string& s)
{
    const auto a = s.find(':');
    const auto b = a == std::string::npos ? a : s.find(':', a + 1);
    if (b == std::string::npos) throw std::invalid_argument("--grid must be lo:hi:n, got " + s);
    Grid g;
    g.lo = to_double(s.substr(0, a), "--grid lo");
    g.hi = to_double(s.substr(a + 1, b - a - 1), "--grid hi");
    const double n = to_double(s.substr(b + 1), "--grid n");
    if (!std::isfinite(g.lo) || !std::isfinite(g.hi)) throw std::invalid_argument("--grid bounds must be finite");
    if (n < 1 || n != std::floor(n) || n > 1e7) throw std::invalid_argument("--grid n must be an integer in [1, 1e7]");
    if (g.hi < g.lo) throw std::invalid_argument("--grid requires lo <= hi");
    g.n = static_cast<int>(n);
    return g;
}

void apply_config_file(const std::string& path, ProductPolicy& policy)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        const double v = to_double(val, key);
        if (key == "series_tol")
            policy.series_tol = v;
        else if (key == "max_terms")
            policy.max_terms = static_cast<int>(v);
        else if (key == "origin_switch")
            policy.origin_switch = v;
        else if (key == "tail_switch")
            policy.tail_switch = v;
        else if (key == "series_scale_max")
            policy.series_scale_max = v;
        else if (key == "use_origin_asymptotics")
            policy.use_origin_asymptotics = v != 0.0;
        else if (key == "asymp_order")
            policy.asymp_order = static_cast<int>(v);
        else
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": unknown key " + key);
    }
    if (!(policy.series_tol > 0 && policy.series_tol < 1)) throw std::invalid_argument("series_tol must lie in (0, 1)");
    if (policy.max_terms < 1) throw std::invalid_argument("max_terms must be positive");
    if (policy.asymp_order < 0 || policy.asymp_order > 12) throw std::invalid_argument("asymp_order must lie in [0, 12]");
    if (!(policy.tail_switch > 0)) throw std::invalid_argument("tail_switch must be positive");
}

void validate(const RunConfig& cfg)
{
    try {
        cfg.dist.validate();
    } catch (const DomainError& e) {
        throw std::invalid_argument(std::string("invalid parameters: ") + e.what());
    }
    if (needs_point(cfg.command)) {
        if (cfg.point.has_value() == cfg.grid.has_value())
            throw std::invalid_argument(std::string(command_name(cfg.command)) +
                                        " needs exactly one of a point flag or --grid");
        if (cfg.point && !std::isfinite(*cfg.point)) throw std::invalid_argument("evaluation point must be finite");
    }
    if (cfg.command == Command::Quantile)
        for (double p : points(cfg))
            if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("--p must lie strictly between 0 and 1");
    if (!(cfg.tol > 0 && cfg.tol < 1)) throw std::invalid_argument("--tol must lie in (0, 1)");
    if (cfg.command == Command::Sample && cfg.count == 0) throw std::invalid_argument("--count must be positive");
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        validate(cfg);
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }
    Emitted e;
    try {
        e = dispatch(cfg);
    } catch (const PointFailure& f) {
        err << "numerical failure in " << command_name(cfg.command) << ": " << f.what() << "\n  at "
            << diagnostics(cfg.dist, f.var, f.at) << "\n";
        return exit_numerical;
    } catch (const NumericError& f) {
        err << "numerical failure in " << command_name(cfg.command) << ": " << f.what() << "\n";
        return exit_numerical;
    }
    if (cfg.out.empty()) {
        out << e.text;
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!(f << e.text)) {
            err << "usage error: cannot write " << cfg.out << "\n";
            return exit_usage;
        }
    }
    return e.status;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Variance-gamma product distribution: evaluation, tables and checks", "vgprod"};
    app.require_subcommand(1);

    RunConfig cfg;
    double m = 0.5, n = 0.5, a1 = 1.0, b1 = 0.0, a2 = 1.0, b2 = 0.0;
    std::optional<double> point;
    std::string grid, format = "csv", config;
    std::optional<double> tol;

    struct Sub {
        const char* name;
        Command cmd;
        const char* help;
        const char* point_flag;
    };
    const Sub subs[] = {
        {"pdf", Command::Pdf, "density at --z or over --grid", "--z"},
        {"cdf", Command::Cdf, "distribution function at --z or over --grid", "--z"},
        {"quantile", Command::Quantile, "quantile at --p or over a --grid of probabilities", "--p"},
        {"cf", Command::Cf, "characteristic function at --t or over --grid", "--t"},
        {"prob-neg", Command::ProbNeg, "P(Z <= 0)", nullptr},
        {"sample", Command::Sample, "Monte Carlo draws of Z", nullptr},
        {"table1", Command::Table1, "P(Z <= 0) table, alpha1 = alpha2 = 1", nullptr},
        {"figures", Command::Figures, "density grids for the shape and skewness figure sets", nullptr},
        {"verify", Command::Verify, "run the invariant suites", nullptr},
    };
    for (const Sub& s : subs) {
        CLI::App* sc = app.add_subcommand(s.name, s.help);
        sc->add_option("--m", m, "shape of X (> -1/2)");
        sc->add_option("--n", n, "shape of Y (> -1/2)");
        sc->add_option("--a1", a1, "alpha of X");
        sc->add_option("--b1", b1, "beta of X, |b1| < a1");
        sc->add_option("--a2", a2, "alpha of Y");
        sc->add_option("--b2", b2, "beta of Y, |b2| < a2");
        sc->add_option("--tol", tol, "series / root tolerance");
        sc->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sc->add_option("--out", cfg.out, "output file (default stdout)");
        sc->add_option("--config", config, "key = value file overriding precision settings");
        if (s.point_flag) sc->add_option(s.point_flag, point, "evaluation point");
        if (s.point_flag || s.cmd == Command::Figures) sc->add_option("--grid", grid, "lo:hi:n");
        if (s.cmd == Command::Sample) {
            sc->add_option("--seed", cfg.seed, "RNG seed");
            sc->add_option("--count", cfg.count, "number of draws");
        }
        if (s.cmd == Command::Verify) sc->add_flag("--quick", cfg.quick, "smaller grids");
        sc->callback([&cfg, cmd = s.cmd] { cfg.command = cmd; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        cfg.dist = make_product(m, a1, b1, n, a2, b2);
    } catch (const DomainError& e) {
        err << "usage error: invalid parameters: " << e.what() << "\n";
        return exit_usage;
    }
    try {
        if (!config.empty()) apply_config_file(config, cfg.dist.policy);
        if (tol) {
            cfg.tol = *tol;
            cfg.dist.policy.series_tol = *tol;
        }
        if (!grid.empty()) cfg.grid = parse_grid(grid);
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }
    cfg.point = point;
    cfg.format = format == "json" ? Format::Json : Format::Csv;
    return run(cfg, out, err);
}

}  // namespace vgp::cli
