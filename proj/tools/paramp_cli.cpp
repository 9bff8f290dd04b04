// Command-line front end: single-point evaluation, parameter sweeps, criteria
// reports, figure reproduction as CSV, transition-point solving, and
// closed-form-vs-oracle self checks.
//
// Exit codes: 0 success, 2 flag errors, 3 domain errors, 4 overflow or
// truncation, 5 root bracketing failure, 6 oracle delta above tolerance.

#include <charconv>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paramp/paramp.hpp"

namespace {

// 17 significant digits, locale independent, '.' decimal separator.
std::string fmt(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw paramp::DomainError("out", "cannot open '" + out_path + "' for writing");
    f << text;
}

const std::vector<std::string> kQuantities = {
    "g2",     "mean_n", "var_n",               "mandel_q", "var_x_min", "chi_criterion",
    "rc88_gap", "mean_x", "var_x", "uncertainty_product", "snr",      "snr_max"};

double eval_quantity(const std::string& q, const paramp::GaussianParams& p, double wt,
                     double lambda) {
    using namespace paramp;
    if (q == "g2") return g2(p, wt);
    if (q == "mean_n") return photon_stats(p, wt).mean_n;
    if (q == "var_n") return photon_stats(p, wt).var_n;
    if (q == "mandel_q") return photon_stats(p, wt).mandel_q;
    if (q == "var_x_min") return quadrature_variance_min(p, wt);
    if (q == "chi_criterion") return chi_criterion(p, wt).value;
    if (q == "rc88_gap") return rc88_gap(p, wt);
    if (q == "mean_x") return quadrature_mean(p, wt, lambda);
    if (q == "var_x") return quadrature_variance(p, wt, lambda).var_x;
    if (q == "uncertainty_product") return quadrature_variance(p, wt, lambda).uncertainty_product;
    if (q == "snr") return snr(p, wt, lambda);
    if (q == "snr_max") return snr_max(p, wt);
    throw paramp::DomainError("quantity", "unknown quantity '" + q + "'");
}

struct ParamFlags {
    double nbar = 0.1;
    double r = 0.1;
    double theta = 0.0;
    double alpha = 1.0;
    double phi = 0.0;
    double omega = 1.0;

    paramp::GaussianParams params() const {
        return paramp::validate(paramp::GaussianParams{nbar, r, theta, alpha, phi, omega});
    }
};

void add_param_flags(CLI::App* cmd, ParamFlags& pf) {
    cmd->add_option("--nbar", pf.nbar, "mean thermal photon number");
    cmd->add_option("--r", pf.r, "squeeze magnitude");
    cmd->add_option("--theta", pf.theta, "squeeze phase (radians)");
    cmd->add_option("--alpha", pf.alpha, "coherent amplitude magnitude");
    cmd->add_option("--phi", pf.phi, "coherent phase (radians)");
    cmd->add_option("--omega", pf.omega, "rate omega = r/t (scales --tau)");
}

std::string csv_row_header(const std::vector<std::string>& quantities) {
    std::string s = "omega_tau";
    for (const auto& q : quantities) s += "," + q;
    s += "\n";
    return s;
}

std::string csv_row(double wt, const paramp::GaussianParams& p,
                    const std::vector<std::string>& quantities, double lambda) {
    std::string s = fmt(wt);
    for (const auto& q : quantities) s += "," + fmt(eval_quantity(q, p, wt, lambda));
    s += "\n";
    return s;
}

// Fixed small-amplitude comparison grid for oracle-check; chosen so the
// default truncation dimension of 40 resolves every instance comfortably.
struct OracleCheckInstance {
    double nbar, r, theta, alpha, phi, wt;
};

std::vector<OracleCheckInstance> oracle_check_grid() {
    std::vector<OracleCheckInstance> grid;
    for (double nbar : {0.0, 0.1})
        for (double r : {0.05, 0.1})
            for (double alpha : {0.0, 0.5})
                for (auto [theta, phi] : {std::pair{0.0, 0.0}, std::pair{0.9, 0.4}})
                    for (double wt : {0.0, 0.2, 0.4})
                        grid.push_back({nbar, r, theta, alpha, phi, wt});
    return grid;
}

int run_oracle_check(int dim, const std::string& out_path) {
    using namespace paramp;
    constexpr double kTol = 1e-4;
    const double kLambda = 0.3;
    const ProbePoint probe_shape{0.3, 1.0, 0.0};

    double d_amp = 0.0, d_chi = 0.0, d_mx = 0.0, d_vx = 0.0, d_mn = 0.0, d_vn = 0.0,
           d_g2 = 0.0;
    for (const auto& inst : oracle_check_grid()) {
        const GaussianParams p =
            validate({inst.nbar, inst.r, inst.theta, inst.alpha, inst.phi, 1.0});
        OracleContext ctx(p, dim);
        ProbePoint probe = probe_shape;
        probe.tau_scaled = inst.wt;

        d_amp = std::max(d_amp,
                         std::abs(oracle_amplitude(ctx, inst.wt) - amplitude_A(p, inst.wt)));
        d_chi = std::max(d_chi, std::abs(oracle_char_fn(ctx, probe)
                                         - characteristic_function(p, probe)));
        const auto [mx, vx] = oracle_quadrature(ctx, inst.wt, kLambda);
        d_mx = std::max(d_mx, std::abs(mx - quadrature_mean(p, inst.wt, kLambda)));
        d_vx = std::max(d_vx,
                        std::abs(vx - quadrature_variance(p, inst.wt, kLambda).var_x));
        const auto [mn, vn] = oracle_photon_stats(ctx, inst.wt);
        const PhotonStats ps = photon_stats(p, inst.wt);
        d_mn = std::max(d_mn, std::abs(mn - ps.mean_n));
        d_vn = std::max(d_vn, std::abs(vn - ps.var_n));
        d_g2 = std::max(d_g2, std::abs(oracle_g2(ctx, inst.wt) - g2(p, inst.wt)));
    }

    std::string out = "quantity,max_delta,tolerance\n";
    bool ok = true;
    const std::pair<const char*, double> rows[] = {
        {"amplitude", d_amp}, {"char_fn", d_chi}, {"mean_x", d_mx}, {"var_x", d_vx},
        {"mean_n", d_mn},     {"var_n", d_vn},    {"g2", d_g2}};
    for (const auto& [name, delta] : rows) {
        out += std::string(name) + "," + fmt(delta) + "," + fmt(kTol) + "\n";
        if (!(delta <= kTol)) ok = false;
    }
    write_output(out, out_path);
    if (!ok) std::fprintf(stderr, "oracle-check: deltas exceed tolerance %g\n", kTol);
    return ok ? 0 : 6;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form statistics of displaced-squeezed thermal states under "
                 "degenerate parametric amplification, with brute-force cross-checks"};
    app.require_subcommand(1);

    // --- eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate quantities at one delay");
    ParamFlags eval_pf;
    add_param_flags(eval_cmd, eval_pf);
    double eval_wt = 0.0, eval_tau = 0.0, eval_lambda = 0.0;
    std::vector<std::string> eval_quantities;
    std::string eval_out;
    auto* eval_wt_opt =
        eval_cmd->add_option("--omega-tau", eval_wt, "dimensionless delay omega*tau");
    eval_cmd->add_option("--tau", eval_tau, "raw delay tau (multiplied by --omega)")
        ->excludes(eval_wt_opt);
    eval_cmd->add_option("--lambda", eval_lambda, "quadrature angle for mean_x/var_x/snr");
    eval_cmd->add_option("--quantity", eval_quantities, "quantity to print (repeatable)")
        ->check(CLI::IsMember(kQuantities));
    eval_cmd->add_option("--out", eval_out, "output file (default stdout)");

    // --- sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "sweep quantities over a delay range");
    ParamFlags sweep_pf;
    add_param_flags(sweep_cmd, sweep_pf);
    double sweep_min = 0.0, sweep_max = 10.0, sweep_lambda = 0.0;
    int sweep_steps = 201;
    std::vector<std::string> sweep_quantities;
    std::string sweep_out;
    sweep_cmd->add_option("--tau-min", sweep_min, "range start (omega*tau units)");
    sweep_cmd->add_option("--tau-max", sweep_max, "range end (omega*tau units)");
    sweep_cmd->add_option("--steps", sweep_steps, "number of sample points")
        ->check(CLI::Range(2, 10'000'000));
    sweep_cmd->add_option("--lambda", sweep_lambda, "quadrature angle for mean_x/var_x/snr");
    sweep_cmd->add_option("--quantity", sweep_quantities, "quantity column (repeatable)")
        ->check(CLI::IsMember(kQuantities));
    sweep_cmd->add_option("--out", sweep_out, "output file (default stdout)");

    // --- figure
    auto* fig_cmd = app.add_subcommand("figure", "reproduce one of the six figures as CSV");
    int fig_n = 1;
    fig_cmd->add_option("n", fig_n, "figure number")->required()->check(CLI::Range(1, 6));
    ParamFlags fig_pf;
    add_param_flags(fig_cmd, fig_pf);
    double fig_min = 0.0, fig_max = 10.0;
    int fig_steps = 1000;
    std::string fig_out;
    fig_cmd->add_option("--tau-min", fig_min, "range start (omega*tau units)");
    fig_cmd->add_option("--tau-max", fig_max, "range end (omega*tau units)");
    fig_cmd->add_option("--steps", fig_steps, "number of sample points")
        ->check(CLI::Range(2, 10'000'000));
    fig_cmd->add_option("--out", fig_out, "output file (default stdout)");

    // --- criteria
    auto* crit_cmd = app.add_subcommand("criteria", "full nonclassicality report at one delay");
    ParamFlags crit_pf;
    add_param_flags(crit_cmd, crit_pf);
    double crit_wt = 0.0, crit_tau = 0.0;
    int crit_lambda_grid = 64;
    std::string crit_out;
    auto* crit_wt_opt =
        crit_cmd->add_option("--omega-tau", crit_wt, "dimensionless delay omega*tau");
    crit_cmd->add_option("--tau", crit_tau, "raw delay tau (multiplied by --omega)")
        ->excludes(crit_wt_opt);
    crit_cmd->add_option("--lambda-grid", crit_lambda_grid, "quadrature cross-check grid size")
        ->check(CLI::Range(4, 1'000'000));
    crit_cmd->add_option("--out", crit_out, "output file (default stdout)");

    // --- critical-alpha
    auto* ca_cmd = app.add_subcommand("critical-alpha",
                                      "solve for the transition amplitude |alpha|_c");
    double ca_nbar = 0.1, ca_r = 0.1, ca_theta = 0.0, ca_phi = 0.0;
    std::string ca_out;
    ca_cmd->add_option("--nbar", ca_nbar, "mean thermal photon number");
    ca_cmd->add_option("--r", ca_r, "squeeze magnitude");
    ca_cmd->add_option("--theta", ca_theta, "squeeze phase (radians)");
    ca_cmd->add_option("--phi", ca_phi, "coherent phase (radians)");
    ca_cmd->add_option("--out", ca_out, "output file (default stdout)");

    // --- oracle-check
    auto* oc_cmd = app.add_subcommand("oracle-check",
                                      "compare closed forms against the truncated-basis oracle");
    int oc_dim = 40;
    std::string oc_out;
    oc_cmd->add_option("--dim", oc_dim, "truncation dimension")->check(CLI::Range(2, 4096));
    oc_cmd->add_option("--out", oc_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*eval_cmd) {
            if (eval_quantities.empty()) eval_quantities.push_back("g2");
            const paramp::GaussianParams p = eval_pf.params();
            const double wt =
                eval_wt_opt->count() ? eval_wt : eval_pf.omega * eval_tau;
            if (wt < 0.0) throw paramp::DomainError("omega-tau", "delay must be >= 0");
            write_output(csv_row_header(eval_quantities)
                             + csv_row(wt, p, eval_quantities, eval_lambda),
                         eval_out);
        } else if (*sweep_cmd) {
            if (sweep_quantities.empty()) sweep_quantities.push_back("g2");
            if (!(sweep_min >= 0.0))
                throw paramp::DomainError("tau-min", "range start must be >= 0");
            if (!(sweep_min < sweep_max))
                throw paramp::DomainError("tau-max", "need tau-min < tau-max");
            const paramp::GaussianParams p = sweep_pf.params();
            std::string out = csv_row_header(sweep_quantities);
            for (int i = 0; i < sweep_steps; ++i) {
                const double wt =
                    sweep_min + (sweep_max - sweep_min) * i / (sweep_steps - 1);
                out += csv_row(wt, p, sweep_quantities, sweep_lambda);
            }
            write_output(out, sweep_out);
        } else if (*fig_cmd) {
            struct FigurePreset { double alpha; const char* quantity; };
            static constexpr FigurePreset kFigures[6] = {
                {5.0, "g2"},       {5.0, "rc88_gap"},  {0.45, "g2"},
                {0.45, "rc88_gap"}, {5.0, "mandel_q"}, {0.45, "mandel_q"}};
            const FigurePreset& preset = kFigures[fig_n - 1];
            ParamFlags pf;  // figure defaults, then explicit flags override
            pf.alpha = preset.alpha;
            if (fig_cmd->count("--nbar")) pf.nbar = fig_pf.nbar;
            if (fig_cmd->count("--r")) pf.r = fig_pf.r;
            if (fig_cmd->count("--theta")) pf.theta = fig_pf.theta;
            if (fig_cmd->count("--alpha")) pf.alpha = fig_pf.alpha;
            if (fig_cmd->count("--phi")) pf.phi = fig_pf.phi;
            if (fig_cmd->count("--omega")) pf.omega = fig_pf.omega;
            const paramp::GaussianParams p = pf.params();
            if (!(fig_min >= 0.0) || !(fig_min < fig_max))
                throw paramp::DomainError("tau-min", "need 0 <= tau-min < tau-max");
            std::string out = "omega_tau,value\n";
            for (int i = 0; i < fig_steps; ++i) {
                const double wt = fig_min + (fig_max - fig_min) * i / (fig_steps - 1);
                out += fmt(wt) + "," + fmt(eval_quantity(preset.quantity, p, wt, 0.0)) + "\n";
            }
            write_output(out, fig_out);
        } else if (*crit_cmd) {
            const paramp::GaussianParams p = crit_pf.params();
            const double wt =
                crit_wt_opt->count() ? crit_wt : crit_pf.omega * crit_tau;
            if (wt < 0.0) throw paramp::DomainError("omega-tau", "delay must be >= 0");
            const paramp::CriteriaReport rep = paramp::full_report(p, wt, crit_lambda_grid);
            std::string out =
                "omega_tau,sub_poissonian,antibunched_at_tau,rc88_nonclassical_at_tau,"
                "quadrature_squeezed,chi_criterion_value,chi_nonclassical,"
                "mandel_nonclassical\n";
            out += fmt(wt) + "," + (rep.sub_poissonian ? "1" : "0") + ","
                   + (rep.antibunched_at_tau ? "1" : "0") + ","
                   + (rep.rc88_nonclassical_at_tau ? "1" : "0") + ","
                   + (rep.quadrature_squeezed ? "1" : "0") + ","
                   + fmt(rep.chi_criterion_value) + "," + (rep.chi_nonclassical ? "1" : "0")
                   + "," + (rep.mandel_nonclassical ? "1" : "0") + "\n";
            write_output(out, crit_out);
        } else if (*ca_cmd) {
            const paramp::RootResult res =
                paramp::critical_alpha(ca_nbar, ca_r, ca_theta, ca_phi);
            std::string out = "alpha_c,residual,iterations\n";
            out += fmt(res.location) + "," + fmt(res.residual) + ","
                   + std::to_string(res.iterations) + "\n";
            write_output(out, ca_out);
        } else if (*oc_cmd) {
            return run_oracle_check(oc_dim, oc_out);
        }
    } catch (const paramp::DomainError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 3;
    } catch (const paramp::OverflowError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 4;
    } catch (const paramp::TruncationError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 4;
    } catch (const paramp::NoSignChangeError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 5;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
