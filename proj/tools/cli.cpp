#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fresnelkit/errors.hpp"
#include "fresnelkit/fracrod.hpp"
#include "fresnelkit/plates.hpp"
#include "fresnelkit/pseudo.hpp"
#include "fresnelkit/rod.hpp"
#include "fresnelkit/subord.hpp"
#include "fresnelkit/verify.hpp"
#include "json.hpp"

namespace fresnelkit::cli {

namespace {

using nlohmann::json;

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
    if (n < 1) throw DomainError("points must be >= 1");
    if (!(hi >= lo)) throw DomainError("xmax must not be below xmin");
    if (n == 1) return {lo};
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
    return g;
}

struct Spec {
    std::function<double(double)> f;
    double lo, hi;
    bool radial = false;  // default grid r_i = hi * i/(n+1)
    std::map<std::string, double> params;
};

Spec build(const std::string& name, const EvalParams& p) {
    const double t = p.t;
    if (!(t > 0) || !std::isfinite(t)) throw DomainError("--t must be positive");
    Spec s{{}, -10, 10, false, {}};
    if (name == "fresnel") {
        s.f = [t](double x) { return fresnel_kernel(x, t); };
    } else if (name == "fresnel-drift") {
        const DriftSpec d{p.mu_drift};
        s.f = [t, d](double x) { return fresnel_kernel_drift(x, t, d); };
        s.params = {{"mu_drift", p.mu_drift}};
    } else if (name == "halfline") {
        const double y = p.y.value_or(1.0);
        std::string kind = p.boundary;
        if (kind.empty()) kind = p.alpha ? "elastic" : "reflecting";
        BoundarySpec b;
        if (kind == "absorbing") b = BoundarySpec::absorbing(y);
        else if (kind == "reflecting") b = BoundarySpec::reflecting(y);
        else if (kind == "elastic") b = BoundarySpec::elastic(p.alpha.value_or(1.0), y);
        else throw DomainError("--boundary must be absorbing, reflecting or elastic");
        s.f = [t, b](double x) { return halfline_solution(x, t, b); };
        s.lo = 0;
        s.params = {{"y", y}, {"alpha", b.kind == Boundary::Elastic ? b.alpha : 0.0},
                    {"boundary", static_cast<double>(static_cast<int>(b.kind))}};
    } else if (name == "finite-rod") {
        const double L = p.L.value_or(1.0);
        const double y = p.y.value_or(0.5 * L);
        const auto b = BoundarySpec::finite_reflecting(y, L);
        s.f = [t, b](double x) { return finite_rod_solution(x, t, b, 50).value; };
        s.lo = 0;
        s.hi = L;
        s.params = {{"y", y}, {"L", L}, {"K", 50}};
    } else if (name == "frac-series") {
        const auto o = FracOrder::make(p.nu);
        s.f = [t, o](double x) { return u2nu_eval(x, t, o); };
        s.params = {{"nu", p.nu}};
    } else if (name == "frac-airy") {
        s.f = [t](double x) { return u_fourthirds_airy(x, t); };
    } else if (name == "bernstein") {
        // series (checked against the integral) inside its budget, the integral beyond
        s.f = [t](double x) {
            return std::abs(x) / std::pow(t, 0.25) <= 8 ? biquadratic_bernstein(x, t) : bernstein_integral(x, t);
        };
    } else if (name == "plate") {
        const double y = p.y.value_or(0.0);
        s.f = [t, y](double x) { return plate_kernel({x, y}, t); };
        s.params = {{"y", y}};
    } else if (name == "disk-heat" || name == "disk-vibration") {
        const auto disk = DiskSpec::make(p.R);
        const bool heat = name == "disk-heat";
        s.f = [t, disk, heat](double r) {
            return heat ? disk_heat_kernels(r, t, disk).q : disk_vibration_kernels(r, t, disk).q;
        };
        s.lo = 0;
        s.hi = p.R;
        s.radial = true;
        s.params = {{"R", p.R}};
    } else if (name == "npoint") {
        // last coordinate of an n-point path on t j/n, earlier coordinates fixed at y
        const int n = p.depth;
        if (n < 1) throw DomainError("--depth must be >= 1 for npoint");
        const double y = p.y.value_or(0.0);
        s.f = [t, n, y](double x) {
            std::vector<double> ts, xs;
            for (int j = 1; j <= n; ++j) {
                ts.push_back(t * j / n);
                xs.push_back(j == n ? x : y);
            }
            return npoint_density(PathGrid::make(ts, xs));
        };
        s.params = {{"n", static_cast<double>(n)}, {"y", y}};
    } else if (name == "double-cauchy") {
        s.f = [t](double x) { return double_cauchy_density(x, t); };
    } else if (name == "biquadratic") {
        s.f = [t](double x) { return biquadratic_from_subordination(x, t); };
    } else if (name == "iterated") {
        const auto d = IterationDepth::make(p.depth);
        if (d.n > 3) throw DomainError("--depth must be <= 3 for iterated");
        s.f = [t, d](double x) { return iterated_density(x, t, d); };
        s.params = {{"n", static_cast<double>(d.n)}};
    } else {
        throw UnknownName("unknown kernel: " + name);
    }
    return s;
}

json meta_json(const ProfileMeta& m) {
    return json{{"kernel", m.kernel}, {"params", m.params}, {"t", m.t}, {"generated", m.generated}};
}

int exit_for(const std::exception& e, std::ostream& err) {
    err << "fresnelkit: " << e.what() << "\n";
    if (dynamic_cast<const UnknownName*>(&e)) return 2;
    if (dynamic_cast<const DomainError*>(&e) || dynamic_cast<const UnsupportedOrder*>(&e) ||
        dynamic_cast<const DimensionGuard*>(&e) || dynamic_cast<const std::range_error*>(&e) ||
        dynamic_cast<const BudgetExceeded*>(&e))
        return 3;
    return 4;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

}  // namespace

const std::vector<std::string>& kernel_names() {
    static const std::vector<std::string> names{"fresnel",   "fresnel-drift", "halfline",       "finite-rod", "frac-series",
                                                "frac-airy", "bernstein",     "plate",          "disk-heat",  "disk-vibration",
                                                "npoint",    "double-cauchy", "biquadratic",    "iterated"};
    return names;
}

Profile evaluate(const std::string& kernel, const EvalParams& p) {
    const Spec s = build(kernel, p);
    Profile out;
    if (s.radial && !p.xmin && !p.xmax) {
        if (p.points < 1) throw DomainError("points must be >= 1");
        for (int i = 1; i <= p.points; ++i) out.grid.push_back(s.hi * i / (p.points + 1.0));
    } else {
        out.grid = linear_grid(p.xmin.value_or(s.lo), p.xmax.value_or(s.hi), p.points);
    }
    out.values.reserve(out.grid.size());
    for (double x : out.grid) {
        const double v = s.f(x);
        if (!std::isfinite(v)) throw DomainError("non-finite value at x = " + num(x));
        out.values.push_back(v);
    }
    out.meta = {kernel, s.params, p.t, utc_now()};
    return out;
}

std::string to_csv(const Profile& p) {
    std::string s = "x,value\n";
    for (std::size_t i = 0; i < p.grid.size(); ++i) s += num(p.grid[i]) + "," + num(p.values[i]) + "\n";
    return s;
}

std::string to_json(const Profile& p) {
    return json{{"meta", meta_json(p.meta)}, {"grid", p.grid}, {"values", p.values}}.dump() + "\n";
}

Profile profile_from_json(const std::string& text) {
    const json j = json::parse(text);
    Profile p;
    p.grid = j.at("grid").get<std::vector<double>>();
    p.values = j.at("values").get<std::vector<double>>();
    const auto& m = j.at("meta");
    p.meta.kernel = m.at("kernel").get<std::string>();
    p.meta.params = m.at("params").get<std::map<std::string, double>>();
    p.meta.t = m.at("t").get<double>();
    p.meta.generated = m.at("generated").get<std::string>();
    return p;
}

std::string reports_to_json(const std::vector<VerificationReport>& r) {
    json arr = json::array();
    for (const auto& x : r)
        arr.push_back({{"check_name", x.check_name},
                       {"measured", x.measured},
                       {"tolerance", x.tolerance},
                       {"passed", x.passed},
                       {"evaluations", x.evaluations},
                       {"notes", x.notes}});
    return arr.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<VerificationReport>& r) {
    std::string s = "check_name,measured,tolerance,passed,evaluations,notes\n";
    for (const auto& x : r) {
        std::string notes = x.notes;
        for (auto& c : notes)
            if (c == '"') c = '\'';
        s += x.check_name + "," + num(x.measured) + "," + num(x.tolerance) + "," + (x.passed ? "true" : "false") + "," +
             std::to_string(x.evaluations) + ",\"" + notes + "\"\n";
    }
    return s;
}

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids{"fig-rod-profiles", "fig-frac-43",       "fig-disk",
                                              "fig-biquadratic",  "fig-double-cauchy", "fig-frac-table"};
    return ids;
}

std::vector<std::pair<std::string, Profile>> figure_curves(const std::string& id) {
    std::vector<std::pair<std::string, Profile>> out;
    auto curve = [&](const std::string& name, const std::string& kernel, EvalParams p) {
        out.emplace_back(name, evaluate(kernel, p));
    };
    EvalParams p;
    if (id == "fig-rod-profiles") {
        p.xmin = -20;
        p.xmax = 20;
        p.points = 801;
        for (double t : {1.0, 20.0, 40.0, 60.0}) {
            p.t = t;
            curve("t" + num(t), "fresnel", p);
        }
    } else if (id == "fig-frac-43") {
        p.xmin = -10;
        p.xmax = 10;
        p.points = 401;
        curve("t1", "frac-airy", p);
    } else if (id == "fig-disk") {
        p.R = 1;
        p.points = 200;
        for (double t : {1.0, 50.0, 100.0}) {
            p.t = t;
            curve("t" + num(t), "disk-vibration", p);
        }
    } else if (id == "fig-biquadratic") {
        p.xmin = -8;
        p.xmax = 8;
        p.points = 321;
        for (double t : {1.0, 2.0, 4.0}) {
            p.t = t;
            curve("t" + num(t), "biquadratic", p);
        }
    } else if (id == "fig-double-cauchy") {
        p.xmin = -8;
        p.xmax = 8;
        p.points = 321;
        for (double t : {1.0, 2.0, 4.0}) {
            p.t = t;
            curve("t" + num(t), "double-cauchy", p);
        }
    } else if (id == "fig-frac-table") {
        p.xmin = -10;
        p.xmax = 10;
        p.points = 401;
        const std::pair<const char*, double> nus[] = {{"nu1_3", 1.0 / 3}, {"nu1_2", 0.5}, {"nu2_3", 2.0 / 3}, {"nu1", 1.0}};
        for (auto [name, nu] : nus) {
            p.nu = nu;
            curve(name, "frac-series", p);
        }
    } else {
        throw UnknownName("unknown figure: " + id);
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fresnel rod kernels: evaluation, verification and figure data"};
    app.name("fresnelkit");
    app.require_subcommand(1);

    std::string name, format = "csv", out_path;
    EvalParams p;
    double xmin = 0, xmax = 0, alpha = 0, y = 0, L = 0;

    auto* ev = app.add_subcommand("eval", "evaluate a kernel on a grid");
    ev->add_option("kernel", name, "kernel name")->required();
    ev->add_option("--t", p.t, "time");
    ev->add_option("--nu", p.nu, "fractional order nu");
    auto* o_alpha = ev->add_option("--alpha", alpha, "elastic constant");
    auto* o_y = ev->add_option("--y", y, "starting point / second coordinate");
    auto* o_L = ev->add_option("--L", L, "rod length");
    ev->add_option("--R", p.R, "disk radius");
    ev->add_option("--mu-drift", p.mu_drift, "drift");
    ev->add_option("--depth", p.depth, "iteration depth / number of points");
    auto* o_xmin = ev->add_option("--xmin", xmin);
    auto* o_xmax = ev->add_option("--xmax", xmax);
    ev->add_option("--points", p.points);
    ev->add_option("--boundary", p.boundary, "halfline boundary: absorbing, reflecting, elastic");
    ev->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    ev->add_option("--out", out_path, "output file");

    std::string suite;
    auto* ve = app.add_subcommand("verify", "run a verification suite");
    ve->add_option("suite", suite, "specfun, quad, rod, fracrod, plates, pseudo, subord or all")->required();
    ve->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    ve->add_option("--out", out_path, "output file");

    std::string fig;
    auto* fi = app.add_subcommand("figure", "write the CSV curves of a figure to the working directory");
    fi->add_option("figure-id", fig)->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "fresnelkit: " << e.what() << "\n";
        return 2;
    }

    try {
        if (ev->parsed()) {
            if (o_alpha->count()) p.alpha = alpha;
            if (o_y->count()) p.y = y;
            if (o_L->count()) p.L = L;
            if (o_xmin->count()) p.xmin = xmin;
            if (o_xmax->count()) p.xmax = xmax;
            const auto prof = evaluate(name, p);
            emit(format == "json" ? to_json(prof) : to_csv(prof), out_path, out);
            return 0;
        }
        if (ve->parsed()) {
            const auto reports = run_suite(suite);
            emit(format == "json" ? reports_to_json(reports) : reports_to_csv(reports), out_path, out);
            for (const auto& r : reports)
                if (!r.passed) return 1;
            return 0;
        }
        const auto curves = figure_curves(fig);
        for (const auto& [curve, prof] : curves) {
            const std::string file = fig + "_" + curve + ".csv";
            emit(to_csv(prof), file, out);
            out << file << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        return exit_for(e, err);
    }
}

}  // namespace fresnelkit::cli
