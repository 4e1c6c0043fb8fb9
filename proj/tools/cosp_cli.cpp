// Command-line surface: price, sweep, cumulants and error-analysis with CSV
// output suitable for golden-file diffs.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cosp/char_fn.hpp"
#include "cosp/cos_classic.hpp"
#include "cosp/cos_improved.hpp"
#include "cosp/cumulants.hpp"
#include "cosp/errors.hpp"
#include "cosp/error_analysis.hpp"
#include "cosp/reference.hpp"

namespace {

using namespace cosp;

// every numeric goes out with 17 significant digits so doubles round-trip
std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

struct ModelOpts {
    std::string model = "heston";
    double sigma = 0.0;
    double kappa = 0.0, theta = 0.0, rho = 0.0, v0 = 0.0;
    double lambda = 0.0, kbar = 0.0, delta = 0.0;
    double kappa2 = 0.0, theta2 = 0.0, sigma2 = 0.0, rho2 = 0.0, v02 = 0.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--model", model, "black | heston | svj | double-heston")
            ->check(CLI::IsMember({"black", "heston", "svj", "double-heston"}));
        cmd->add_option("--sigma", sigma, "black volatility / heston vol-of-vol");
        cmd->add_option("--kappa", kappa, "mean-reversion speed");
        cmd->add_option("--theta", theta, "long-run variance");
        cmd->add_option("--rho", rho, "spot-variance correlation");
        cmd->add_option("--v0", v0, "initial variance");
        cmd->add_option("--lambda", lambda, "jump intensity (svj)");
        cmd->add_option("--kbar", kbar, "mean relative jump size (svj)");
        cmd->add_option("--delta", delta, "jump-size log-volatility (svj)");
        cmd->add_option("--kappa2", kappa2, "second-leg kappa (double-heston)");
        cmd->add_option("--theta2", theta2, "second-leg theta (double-heston)");
        cmd->add_option("--sigma2", sigma2, "second-leg vol-of-vol (double-heston)");
        cmd->add_option("--rho2", rho2, "second-leg correlation (double-heston)");
        cmd->add_option("--v02", v02, "second-leg initial variance (double-heston)");
    }

    ModelParams build() const {
        if (model == "black") return BlackParams{sigma};
        HestonParams h{kappa, theta, sigma, rho, v0};
        if (model == "heston") return h;
        if (model == "svj") return SvjParams{h, lambda, kbar, delta};
        return DoubleHestonParams{h, HestonParams{kappa2, theta2, sigma2, rho2, v02}};
    }
};

struct CommonOpts {
    double maturity = 1.0;
    double forward = 1.0;
    double discount = 1.0;
    double level = 12.0;
    bool use_c4 = false;
    int n = 256;
    double notional = 1.0;
    double tol = 1e-10;

    void attach(CLI::App* cmd) {
        cmd->add_option("--T", maturity, "maturity in years")->required();
        cmd->add_option("--F", forward, "forward price");
        cmd->add_option("--B", discount, "discount factor");
        cmd->add_option("--L", level, "truncation level");
        cmd->add_flag("--use-c4", use_c4, "widen the range by the fourth cumulant");
        cmd->add_option("--N", n, "series length");
        cmd->add_option("--notional", notional, "scale applied to printed prices");
        cmd->add_option("--tol", tol, "reference pricer absolute tolerance");
    }
};

OptionKind pick_kind(const std::string& kind, double strike, double forward) {
    if (kind == "put") return OptionKind::Put;
    if (kind == "call") return OptionKind::Call;
    return strike <= forward ? OptionKind::Put : OptionKind::Call;  // out-of-the-money side
}

std::vector<double> parse_strikes(const std::string& list, const std::string& range) {
    std::vector<double> out;
    if (!range.empty()) {
        double lo, hi, step;
        if (std::sscanf(range.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0.0)
            throw ValidationError("--strike-range wants lo:hi:step with step > 0");
        for (double k = lo; k <= hi + 1e-12 * step; k += step) out.push_back(k);
        return out;
    }
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    return out;
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw ValidationError("cannot open output file: " + path);
    return file;
}

int run(int argc, char** argv) {
    CLI::App app{"Fourier cosine-series pricing of European options"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value file mirroring the flags");
    app.allow_config_extras(true);

    // ---- price ----
    auto* price_cmd = app.add_subcommand("price", "price one option");
    ModelOpts pm;
    CommonOpts pc;
    double strike = 1.0;
    std::string kind_flag = "auto", method = "improved";
    pm.attach(price_cmd);
    pc.attach(price_cmd);
    price_cmd->add_option("--K", strike, "strike")->required();
    price_cmd->add_option("--kind", kind_flag, "put | call | auto (otm side)")
        ->check(CLI::IsMember({"put", "call", "auto"}));
    price_cmd->add_option("--method", method, "classic | improved | reference")
        ->check(CLI::IsMember({"classic", "improved", "reference"}));

    // ---- sweep ----
    auto* sweep_cmd = app.add_subcommand("sweep", "price a strike strip with all methods");
    ModelOpts sm;
    CommonOpts sc;
    std::string strikes_list, strikes_range, out_path;
    sm.attach(sweep_cmd);
    sc.attach(sweep_cmd);
    sweep_cmd->add_option("--strikes", strikes_list, "comma-separated strikes");
    sweep_cmd->add_option("--strike-range", strikes_range, "lo:hi:step");
    sweep_cmd->add_option("--out", out_path, "write CSV here instead of stdout");

    // ---- cumulants ----
    auto* cum_cmd = app.add_subcommand("cumulants", "cumulants and truncation ranges");
    ModelOpts cm;
    double cum_T = 1.0, cum_L = 12.0;
    cm.attach(cum_cmd);
    cum_cmd->add_option("--T", cum_T, "maturity in years")->required();
    cum_cmd->add_option("--L", cum_L, "truncation level");

    // ---- error-analysis ----
    auto* err_cmd = app.add_subcommand("error-analysis", "payoff-error profiles and decomposition");
    ModelOpts em;
    CommonOpts ec;
    std::string what = "payoff-profile", err_method = "classic", err_out;
    double err_K = 1.0;
    int err_M = 4096, grid_points = 501;
    int tail_start = 256, tail_stop = 4096;
    em.attach(err_cmd);
    ec.attach(err_cmd);
    err_cmd->add_option("--what", what, "payoff-profile | decomposition | tail")
        ->check(CLI::IsMember({"payoff-profile", "decomposition", "tail"}));
    err_cmd->add_option("--K", err_K, "strike")->required();
    err_cmd->add_option("--M", err_M, "expansion length for profiles");
    err_cmd->add_option("--grid-points", grid_points, "profile grid resolution");
    err_cmd->add_option("--method", err_method, "classic | improved (decomposition)")
        ->check(CLI::IsMember({"classic", "improved"}));
    err_cmd->add_option("--tail-start", tail_start, "first tail index");
    err_cmd->add_option("--tail-stop", tail_stop, "one past the last tail index");
    err_cmd->add_option("--out", err_out, "write CSV here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    if (price_cmd->parsed()) {
        ModelParams model = pm.build();
        validate(model);
        OptionKind kind = pick_kind(kind_flag, strike, pc.forward);
        TruncationRange range = truncation_range(cumulants_for(model, pc.maturity), pc.level,
                                                 pc.use_c4);
        OptionSpec spec{pc.forward, strike, pc.maturity, pc.discount, kind};
        PriceResult res;
        if (method == "classic") {
            res = price_classic(model, spec, pc.n, range);
        } else if (method == "improved") {
            CosEngine engine(model, pc.forward, pc.discount, pc.maturity, pc.n, range);
            res = engine.price(strike, kind);
        } else {
            res = price_reference(model, spec, pc.tol);
        }
        std::cout << "method=" << to_string(res.method) << " kind="
                  << (kind == OptionKind::Put ? "put" : "call") << " price="
                  << fmt(res.price * pc.notional) << " a=" << fmt(res.range.a)
                  << " b=" << fmt(res.range.b) << " N=" << res.n
                  << " fallback=" << to_string(res.fallback) << "\n";
        return 0;
    }

    if (sweep_cmd->parsed()) {
        ModelParams model = sm.build();
        validate(model);
        std::vector<double> strikes = parse_strikes(strikes_list, strikes_range);
        TruncationRange range = truncation_range(cumulants_for(model, sc.maturity), sc.level,
                                                 sc.use_c4);
        std::ofstream file;
        std::ostream& os = open_out(out_path, file);
        os << "strike,classic,improved,reference,err_classic,err_improved,"
              "fallback_classic,fallback_improved\n";
        if (!strikes.empty()) {
            CosEngine engine(model, sc.forward, sc.discount, sc.maturity, sc.n, range);
            auto classic = price_strip_classic(model, sc.forward, sc.discount, sc.maturity, sc.n,
                                               range, strikes);
            auto improved = engine.price_strip(strikes);
            for (size_t i = 0; i < strikes.size(); ++i) {
                OptionKind kind = pick_kind("auto", strikes[i], sc.forward);
                OptionSpec spec{sc.forward, strikes[i], sc.maturity, sc.discount, kind};
                double parity = kind == OptionKind::Call
                                    ? sc.discount * (sc.forward - strikes[i])
                                    : 0.0;
                double ref = price_reference(model, spec, sc.tol).price;
                double cl = classic[i].price + parity;
                double im = improved[i].price + parity;
                os << fmt(strikes[i]) << ',' << fmt(cl * sc.notional) << ','
                   << fmt(im * sc.notional) << ',' << fmt(ref * sc.notional) << ','
                   << fmt((cl - ref) * sc.notional) << ',' << fmt((im - ref) * sc.notional) << ','
                   << to_string(classic[i].fallback) << ',' << to_string(improved[i].fallback)
                   << '\n';
            }
        }
        return 0;
    }

    if (cum_cmd->parsed()) {
        ModelParams model = cm.build();
        validate(model);
        CumulantSet c = cumulants_for(model, cum_T);
        double n1 = cgf_derivative_numeric(model, cum_T, 1);
        double n2 = cgf_derivative_numeric(model, cum_T, 2);
        double n4 = cgf_derivative_numeric(model, cum_T, 4);
        std::cout << "model=" << model_name(model) << " T=" << fmt(cum_T) << "\n"
                  << "c1 analytic=" << fmt(c.c1) << " numeric=" << fmt(n1) << "\n"
                  << "c2 analytic=" << fmt(c.c2) << " numeric=" << fmt(n2) << "\n"
                  << "c4 analytic=" << fmt(c.c4) << " numeric=" << fmt(n4) << "\n";
        TruncationRange plain = truncation_range(c, cum_L, false);
        TruncationRange wide = truncation_range(c, cum_L, true);
        std::cout << "range L=" << fmt(cum_L) << " a=" << fmt(plain.a) << " b=" << fmt(plain.b)
                  << "\n"
                  << "range L=" << fmt(cum_L) << " c4-adjusted a=" << fmt(wide.a)
                  << " b=" << fmt(wide.b) << "\n";
        return 0;
    }

    // error-analysis
    ModelParams model = em.build();
    validate(model);
    TruncationRange range = truncation_range(cumulants_for(model, ec.maturity), ec.level,
                                             ec.use_c4);
    std::ofstream file;
    std::ostream& os = open_out(err_out, file);
    if (what == "payoff-profile") {
        std::vector<double> grid(grid_points);
        for (int i = 0; i < grid_points; ++i)
            grid[i] = range.a + range.width() * i / (grid_points - 1.0);
        auto rows = payoff_error_profile(err_K, ec.forward, range, err_M, grid);
        os << "x,payoff,classic_expansion,improved_expansion,err_classic,err_improved\n";
        for (const auto& r : rows) {
            os << fmt(r.x) << ',' << fmt(r.payoff) << ',' << fmt(r.classic_expansion) << ','
               << fmt(r.improved_expansion) << ',' << fmt(r.classic_error) << ','
               << fmt(r.improved_error) << '\n';
        }
    } else if (what == "decomposition") {
        OptionSpec spec{ec.forward, err_K, ec.maturity, ec.discount, OptionKind::Put};
        Method m = err_method == "classic" ? Method::Classic : Method::Improved;
        ErrorDecomposition d = total_error_decomposition(model, spec, m, ec.n, range, ec.tol);
        os << "strike,method,payoff_term,tail_term,observed_error,residual\n";
        os << fmt(err_K) << ',' << err_method << ',' << fmt(d.payoff_term) << ','
           << fmt(d.tail_term) << ',' << fmt(d.observed_error) << ','
           << fmt(d.payoff_term + d.tail_term + d.observed_error) << '\n';
    } else {
        PayoffExpansion e = make_payoff_expansion(Centering::ForwardRelative, err_K, ec.forward,
                                                  range, tail_stop);
        SeriesTail t = series_tail(model, ec.maturity, range, tail_start, tail_stop, e.coeffs);
        os << "n_start,n_stop,tail,remainder_bound\n";
        os << tail_start << ',' << tail_stop << ',' << fmt(t.value) << ','
           << fmt(t.remainder_bound) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cosp::NumericalOverflowError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const cosp::OracleConvergenceError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const cosp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
