#include "sharp/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "sharp/constants.hpp"
#include "sharp/errors.hpp"
#include "sharp/optimizer.hpp"
#include "sharp/phase.hpp"
#include "sharp/verify.hpp"

namespace sharp::cli {

namespace {

using json = nlohmann::json;
using quad::QuadSpec;

enum class Format { json, csv, markdown };

struct Cell {
    enum class Kind { null, number, boolean, text };
    Kind kind = Kind::null;
    double number = 0.0;
    bool boolean = false;
    std::string text;

    static Cell num(double v) {
        Cell c;
        if (std::isfinite(v)) {
            c.kind = Kind::number;
            c.number = v == 0.0 ? 0.0 : v;
        }
        return c;
    }
    static Cell flag(bool b) {
        Cell c;
        c.kind = Kind::boolean;
        c.boolean = b;
        return c;
    }
    static Cell str(std::string s) {
        Cell c;
        c.kind = Kind::text;
        c.text = std::move(s);
        return c;
    }
    static Cell none() { return Cell{}; }
};

struct Column {
    std::string name;
    // printf format for markdown; CSV and JSON always carry full precision.
    const char* md_format;
};

struct Report {
    std::string command;
    json inputs = json::object();
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;
    double err_estimate = 0.0;
    bool converged = true;
};

constexpr const char* kM = "%.9f";
constexpr const char* kFactor = "%.5f";
constexpr const char* kErr = "%.2e";
constexpr const char* kGeneric = "%.9g";

std::string format_number(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

json cell_json(const Cell& c) {
    switch (c.kind) {
        case Cell::Kind::number: return c.number;
        case Cell::Kind::boolean: return c.boolean;
        case Cell::Kind::text: return c.text;
        case Cell::Kind::null: break;
    }
    return nullptr;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string cell_text(const Cell& c, const char* fmt, bool full_precision) {
    switch (c.kind) {
        case Cell::Kind::number: return format_number(full_precision ? "%.17g" : fmt, c.number);
        case Cell::Kind::boolean: return c.boolean ? "true" : "false";
        case Cell::Kind::text: return c.text;
        case Cell::Kind::null: break;
    }
    return full_precision ? "" : "-";
}

void render(const Report& r, Format format, std::ostream& os) {
    if (format == Format::json) {
        json doc;
        doc["command"] = r.command;
        doc["inputs"] = r.inputs;
        json results = json::array();
        for (const auto& row : r.rows) {
            json obj = json::object();
            for (std::size_t i = 0; i < r.columns.size(); ++i) obj[r.columns[i].name] = cell_json(row[i]);
            results.push_back(std::move(obj));
        }
        doc["results"] = std::move(results);
        doc["err_estimate"] = r.err_estimate;
        doc["converged"] = r.converged;
        os << doc.dump(2) << '\n';
        return;
    }
    if (format == Format::csv) {
        for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << r.columns[i].name;
        os << '\n';
        for (const auto& row : r.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                os << (i ? "," : "") << csv_escape(cell_text(row[i], r.columns[i].md_format, true));
            }
            os << '\n';
        }
        return;
    }
    os << "## " << r.command << "\n\n|";
    for (const auto& c : r.columns) os << ' ' << c.name << " |";
    os << "\n|";
    for (std::size_t i = 0; i < r.columns.size(); ++i) os << "---|";
    os << '\n';
    for (const auto& row : r.rows) {
        os << '|';
        for (std::size_t i = 0; i < row.size(); ++i) os << ' ' << cell_text(row[i], r.columns[i].md_format, false) << " |";
        os << '\n';
    }
    os << "\nerr_estimate: " << format_number(kErr, r.err_estimate) << ", converged: " << (r.converged ? "true" : "false")
       << '\n';
}

// Evaluates f on every input, spreading the work over `workers` threads.
// Results and the first exception (by input order) are deterministic.
template <class T, class F>
std::vector<T> parallel_map(const std::vector<double>& inputs, F f, unsigned workers) {
    std::vector<T> out(inputs.size());
    std::vector<std::exception_ptr> errors(inputs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < inputs.size(); i = next++) {
            try {
                out[i] = f(inputs[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const auto n = static_cast<unsigned>(std::min<std::size_t>(workers, inputs.size()));
    if (n <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < n; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

std::vector<double> parse_gamma_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
            throw std::invalid_argument("cannot parse gamma value '" + item + "' in --gamma-list");
        }
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("--gamma-list is empty");
    return out;
}

struct Options {
    std::optional<double> gamma;
    std::string gamma_list;
    std::optional<double> tol;
    std::string format;
    std::string out_path;
    int d = 0;
    double sigma = 0.0;
    double y = -1.0;
    double xmax = 5.0;
    int n = 100;
};

struct Context {
    Options opt;
    QuadSpec spec;
    Format format = Format::markdown;
    unsigned workers = 1;
    std::ostream* err = nullptr;
};

std::vector<double> gammas_or(const Options& opt, std::vector<double> fallback) {
    if (opt.gamma && !opt.gamma_list.empty()) throw std::invalid_argument("use either --gamma or --gamma-list");
    std::vector<double> list = opt.gamma ? std::vector<double>{*opt.gamma}
                                         : (opt.gamma_list.empty() ? fallback : parse_gamma_list(opt.gamma_list));
    for (double g : list) GammaParam::finite(g);
    return list;
}

json spec_json(const QuadSpec& spec) { return json{{"abs_tol", spec.abs_tol}, {"rel_tol", spec.rel_tol}}; }

Report cmd_mgamma(const Context& ctx) {
    const auto gammas = gammas_or(ctx.opt, {3, 4, 5, 6, 7, 8, 9});
    const auto reports = parallel_map<BoundsReport>(
        gammas, [&](double g) { return bounds_report(GammaParam::finite(g), ctx.spec); }, ctx.workers);
    Report r;
    r.command = "mgamma";
    r.inputs = {{"gamma_list", gammas}, {"quadrature", spec_json(ctx.spec)}};
    r.columns = {{"gamma", kGeneric}, {"M_gamma", kM}, {"err_estimate", kErr}, {"converged", nullptr}};
    for (const auto& b : reports) {
        r.rows.push_back({Cell::num(b.gamma), Cell::num(b.m_gamma), Cell::num(b.err_estimate), Cell::flag(b.converged)});
        r.err_estimate = std::max(r.err_estimate, b.err_estimate);
        r.converged = r.converged && b.converged;
    }
    return r;
}

enum class BoundMode { clr, lt, cdsigma };

Report cmd_bounds(const Context& ctx, BoundMode mode) {
    const PhysicalQuery q = PhysicalQuery::make(ctx.opt.d, ctx.opt.sigma);
    const GammaParam gamma = mode == BoundMode::clr ? q.clr_gamma() : q.lt_gamma();
    const BoundsReport b = bounds_report(gamma, ctx.spec);

    Report r;
    const char* name = mode == BoundMode::clr ? "clr_factor" : (mode == BoundMode::lt ? "lt_factor" : "C_d_sigma");
    r.command = mode == BoundMode::clr ? "clr" : (mode == BoundMode::lt ? "lt" : "cdsigma");
    r.inputs = {{"d", q.d}, {"sigma", q.sigma}, {"quadrature", spec_json(ctx.spec)}};
    const double value =
        mode == BoundMode::clr ? b.clr_factor : (mode == BoundMode::lt ? b.lt_factor : q.ratio() * b.m_gamma);
    const double err = b.err_estimate / b.m_gamma * value;
    r.columns = {{"d", kGeneric},
                 {"sigma", kGeneric},
                 {"gamma", kGeneric},
                 {name, mode == BoundMode::cdsigma ? kM : kFactor},
                 {"M_gamma", kM},
                 {"err_estimate", kErr},
                 {"converged", nullptr}};
    r.rows.push_back({Cell::num(q.d), Cell::num(q.sigma), Cell::num(b.gamma), Cell::num(value), Cell::num(b.m_gamma),
                      Cell::num(err), Cell::flag(b.converged)});
    r.err_estimate = err;
    r.converged = b.converged;
    return r;
}

Report cmd_asymptotic(const Context& ctx) {
    const auto a = clr_asymptotic(ctx.spec);
    const double e = std::exp(1.0);
    Report r;
    r.command = "asymptotic";
    r.inputs = {{"quadrature", spec_json(ctx.spec)}};
    r.columns = {{"clr_limit", "%.6f"}, {"lt_limit", kFactor}, {"err_estimate", kErr}, {"converged", nullptr}};
    r.rows.push_back({Cell::num(a.value), Cell::num(a.value / e), Cell::num(a.err_estimate), Cell::flag(a.converged)});
    r.err_estimate = a.err_estimate;
    r.converged = a.converged;
    return r;
}

Report cmd_verify(const Context& ctx, bool& all_pass) {
    const auto gammas = gammas_or(ctx.opt, {3, 5, 8});
    const auto reports = parallel_map<VerificationReport>(
        gammas, [&](double g) { return run_verification(GammaParam::finite(g), ctx.spec); }, ctx.workers);
    Report r;
    r.command = "verify";
    r.inputs = {{"gamma_list", gammas},
                {"quadrature", spec_json(ctx.spec)},
                {"el_tol", VerifyTolerances{}.el_tol},
                {"gap_tol", VerifyTolerances{}.gap_tol}};
    r.columns = {{"gamma", kGeneric},
                 {"M_gamma", kM},
                 {"el_residual_max", kErr},
                 {"el_residual_argmax", kGeneric},
                 {"duality_gap_rel", kErr},
                 {"lower_sandwich", kM},
                 {"upper_sandwich", kM},
                 {"low_gamma_value", kFactor},
                 {"warning", nullptr},
                 {"pass", nullptr},
                 {"failures", nullptr}};
    all_pass = true;
    for (const auto& v : reports) {
        std::string failures;
        for (const auto& f : v.failures) failures += (failures.empty() ? "" : ";") + f;
        r.rows.push_back({Cell::num(v.gamma), Cell::num(v.m_gamma), Cell::num(v.el_residual_max),
                          Cell::num(v.el_residual_argmax), Cell::num(v.duality_gap_rel), Cell::num(v.lower_sandwich),
                          Cell::num(v.upper_sandwich), v.has_low_gamma ? Cell::num(v.low_gamma_value) : Cell::none(),
                          v.conditioning_warning ? Cell::str("ConditioningWarning") : Cell::none(),
                          Cell::flag(v.pass), failures.empty() ? Cell::none() : Cell::str(failures)});
        r.err_estimate = std::max(r.err_estimate, v.err_estimate);
        r.converged = r.converged && v.converged;
        all_pass = all_pass && v.pass;

        if (v.conditioning_warning) {
            *ctx.err << "ConditioningWarning: gamma = " << v.gamma << " is at or below " << kConditioningGamma
                     << "; phase integrals are poorly conditioned here\n";
        }
        if (!v.pass) {
            *ctx.err << "verify: gamma = " << v.gamma << " failed [" << failures << "]: el_residual_max = "
                     << v.el_residual_max << " (x = " << v.el_residual_argmax
                     << "), duality_gap_rel = " << v.duality_gap_rel << ", sandwich " << v.lower_sandwich
                     << " <= " << v.m_gamma << " <= " << v.upper_sandwich << '\n';
        }
    }
    return r;
}

Report cmd_profile(const Context& ctx) {
    const double g = ctx.opt.gamma.value_or(3.0);
    if (!ctx.opt.gamma_list.empty()) throw std::invalid_argument("profile takes a single --gamma");
    const GammaParam gamma = GammaParam::finite(g);
    StripPoint::make(0.0, ctx.opt.y);
    if (!std::isfinite(ctx.opt.xmax) || !(ctx.opt.xmax > 0.0)) throw DomainError("--xmax must be > 0");
    if (ctx.opt.n < 1 || ctx.opt.n > 1000000) throw DomainError("--n must be in [1, 1e6]");

    Report r;
    r.command = "profile";
    r.inputs = {{"gamma", g}, {"y", ctx.opt.y}, {"xmax", ctx.opt.xmax}, {"n", ctx.opt.n},
                {"quadrature", spec_json(ctx.spec)}};
    r.columns = {{"x", kGeneric},        {"abs_h", kGeneric},    {"arg_h", kGeneric},
                 {"re_theta", kGeneric}, {"im_theta", kGeneric}, {"flag", nullptr}};
    const int n = ctx.opt.n;
    for (int i = 0; i <= n; ++i) {
        const double x = ctx.opt.xmax * static_cast<double>(2 * i - n) / n;
        const StripPoint z = StripPoint::make(x, ctx.opt.y);
        ComplexValue b;
        try {
            b = blaschke(gamma, ComplexValue{z.x, z.y});
        } catch (const PoleHit&) {
            r.rows.push_back({Cell::num(x), Cell::none(), Cell::none(), Cell::none(), Cell::none(), Cell::str("pole")});
            continue;
        }
        const PhaseValue t = theta(gamma, z, ctx.spec);
        const ComplexValue h = b * std::exp(ComplexValue{t.re, t.im});
        r.rows.push_back(
            {Cell::num(x), Cell::num(std::abs(h)), Cell::num(std::arg(h)), Cell::num(t.re), Cell::num(t.im), Cell::none()});
        r.err_estimate = std::max(r.err_estimate, t.err_estimate);
        r.converged = r.converged && t.converged;
    }
    return r;
}

Report cmd_table(const Context& ctx) {
    const std::vector<double> gammas{3, 4, 5, 6, 7, 8, 9};
    const auto reports = parallel_map<BoundsReport>(
        gammas, [&](double g) { return bounds_report(GammaParam::finite(g), ctx.spec); }, ctx.workers);
    const auto a = clr_asymptotic(ctx.spec);

    Report r;
    r.command = "table";
    r.inputs = {{"gamma_list", gammas}, {"quadrature", spec_json(ctx.spec)}};
    r.columns = {{"gamma", kGeneric},     {"M_gamma", kM},          {"clr_factor", kFactor},
                 {"lt_factor", kFactor},  {"err_estimate", kErr},   {"converged", nullptr}};
    for (const auto& b : reports) {
        r.rows.push_back({Cell::num(b.gamma), Cell::num(b.m_gamma), Cell::num(b.clr_factor), Cell::num(b.lt_factor),
                          Cell::num(b.err_estimate), Cell::flag(b.converged)});
        r.err_estimate = std::max(r.err_estimate, b.err_estimate);
        r.converged = r.converged && b.converged;
    }
    r.rows.push_back({Cell::str("inf"), Cell::none(), Cell::num(a.value), Cell::num(a.value / std::exp(1.0)),
                      Cell::num(a.err_estimate), Cell::flag(a.converged)});
    r.err_estimate = std::max(r.err_estimate, a.err_estimate);
    r.converged = r.converged && a.converged;
    return r;
}

void add_common(CLI::App* sub, Options& opt, bool gamma_flags) {
    if (gamma_flags) {
        sub->add_option("--gamma", opt.gamma, "Single gamma > 2");
        sub->add_option("--gamma-list", opt.gamma_list, "Comma-separated gamma values");
    }
    sub->add_option("--tol", opt.tol, "Absolute quadrature tolerance in [1e-14, 1e-4]; rel_tol = 100 * tol");
    sub->add_option("--format", opt.format, "json, csv or markdown")->check(CLI::IsMember({"json", "csv", "markdown"}));
    sub->add_option("--out", opt.out_path, "Write the report to this file");
}

void add_query(CLI::App* sub, Options& opt) {
    sub->add_option("--d", opt.d, "Dimension d >= 1")->required();
    sub->add_option("--sigma", opt.sigma, "Operator power sigma > 0")->required();
}

}  // namespace

unsigned thread_count(const char* env_value) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (env_value == nullptr || *env_value == '\0') return hw;
    char* end = nullptr;
    const long v = std::strtol(env_value, &end, 10);
    if (*end != '\0' || v < 0) {
        throw std::invalid_argument(std::string("SHARP_CONSTANTS_THREADS must be a non-negative integer (got '") +
                                    env_value + "')");
    }
    return v == 0 ? hw : static_cast<unsigned>(v);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool out_is_tty) {
    CLI::App app{"Sharp CLR and Lieb-Thirring constants from the three-lines variational problem",
                 "sharp-constants"};
    app.require_subcommand(1);
    Options opt;

    auto* mgamma = app.add_subcommand("mgamma", "M_gamma for each gamma");
    add_common(mgamma, opt, true);
    auto* clr = app.add_subcommand("clr", "CLR bound factor at gamma = d/sigma");
    add_common(clr, opt, false);
    add_query(clr, opt);
    auto* lt = app.add_subcommand("lt", "LT bound factor at gamma = 2 + d/sigma");
    add_common(lt, opt, false);
    add_query(lt, opt);
    auto* cdsigma = app.add_subcommand("cdsigma", "(d/sigma) M_{2 + d/sigma}");
    add_common(cdsigma, opt, false);
    add_query(cdsigma, opt);
    auto* asymptotic = app.add_subcommand("asymptotic", "CLR and LT factors in the limit d/sigma -> infinity");
    add_common(asymptotic, opt, false);
    auto* verify = app.add_subcommand("verify", "Euler-Lagrange, duality and sandwich checks");
    add_common(verify, opt, true);
    auto* profile = app.add_subcommand("profile", "Samples of h along the line Im z = y");
    add_common(profile, opt, false);
    profile->add_option("--gamma", opt.gamma, "Single gamma > 2 (default 3)");
    profile->add_option("--y", opt.y, "Imaginary part of the line, |y| <= 2 (default -1)");
    profile->add_option("--xmax", opt.xmax, "Half-width of the x range (default 5)");
    profile->add_option("--n", opt.n, "Number of intervals; n + 1 samples (default 100)");
    auto* table = app.add_subcommand("table", "M_gamma, CLR and LT factors for gamma = 3..9 and the limit");
    add_common(table, opt, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }

    try {
        Context ctx;
        ctx.opt = opt;
        ctx.err = &err;
        ctx.workers = thread_count(std::getenv("SHARP_CONSTANTS_THREADS"));
        if (opt.tol) {
            if (!(*opt.tol >= 1e-14 && *opt.tol <= 1e-4)) {
                throw std::invalid_argument("--tol must lie in [1e-14, 1e-4]");
            }
            ctx.spec.abs_tol = *opt.tol;
            ctx.spec.rel_tol = 100.0 * *opt.tol;
        }
        if (opt.format.empty()) {
            ctx.format = (out_is_tty && opt.out_path.empty()) ? Format::markdown : Format::json;
        } else {
            ctx.format = opt.format == "json" ? Format::json : (opt.format == "csv" ? Format::csv : Format::markdown);
        }

        Report report;
        bool all_pass = true;
        if (mgamma->parsed()) report = cmd_mgamma(ctx);
        else if (clr->parsed()) report = cmd_bounds(ctx, BoundMode::clr);
        else if (lt->parsed()) report = cmd_bounds(ctx, BoundMode::lt);
        else if (cdsigma->parsed()) report = cmd_bounds(ctx, BoundMode::cdsigma);
        else if (asymptotic->parsed()) report = cmd_asymptotic(ctx);
        else if (verify->parsed()) report = cmd_verify(ctx, all_pass);
        else if (profile->parsed()) report = cmd_profile(ctx);
        else report = cmd_table(ctx);

        if (opt.out_path.empty()) {
            render(report, ctx.format, out);
        } else {
            std::ofstream file(opt.out_path, std::ios::binary);
            if (!file) throw std::invalid_argument("cannot open --out path " + opt.out_path);
            render(report, ctx.format, file);
        }

        if (!all_pass) return kVerificationFailed;
        if (!report.converged) {
            err << report.command << ": quadrature did not converge (err_estimate " << report.err_estimate << ")\n";
            return kNotConverged;
        }
        return kOk;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNotConverged;
    }
}

}  // namespace sharp::cli
