#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pptball/grid_oracle.hpp"
#include "pptball/pptball.hpp"
#include "pptball/report.hpp"

namespace {

using namespace pptball;

enum Exit : int { kOk = 0, kViolation = 1, kUsage = 2, kNoConvergence = 3 };

struct RunConfig {
    std::string command;
    std::string upb_name;
    std::uint64_t seed = 0;
    std::size_t trials = 1000;
    std::size_t grid = 50;
    std::string format = "json";
    std::string output;
    std::size_t restarts = 200;
    std::string bound_mode = "tight";
    std::optional<double> x;
    std::optional<double> radius;
};

Json echo(const RunConfig& cfg) {
    Json j;
    j["command"] = cfg.command;
    if (!cfg.upb_name.empty()) j["upb"] = cfg.upb_name;
    j["seed"] = cfg.seed;
    j["trials"] = cfg.trials;
    j["grid"] = cfg.grid;
    j["restarts"] = cfg.restarts;
    j["bound_mode"] = cfg.bound_mode;
    j["format"] = cfg.format;
    if (cfg.x) j["x"] = *cfg.x;
    if (cfg.radius) j["radius"] = *cfg.radius;
    return j;
}

Json envelope(const RunConfig& cfg) {
    Json j;
    j["tool"] = "pptball";
    j["version"] = kToolVersion;
    j["config"] = echo(cfg);
    return j;
}

void emit(const Json& j, const RunConfig& cfg) {
    const std::string text = cfg.format == "csv" ? to_csv(j) : j.dump(2) + "\n";
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + cfg.output);
    out << text;
}

UPBSet load_upb(const RunConfig& cfg) {
    auto upb = find_upb(cfg.upb_name);
    if (!upb) throw ValidationError("unknown UPB: " + cfg.upb_name);
    return *upb;
}

SeesawConfig seesaw_config(const RunConfig& cfg) {
    SeesawConfig s;
    s.restarts = cfg.restarts;
    s.seed = cfg.seed;
    return s;
}

BoundMode bound_mode(const RunConfig& cfg) { return cfg.bound_mode == "paper" ? BoundMode::PaperExact : BoundMode::Tight; }

int cmd_upb_list(const RunConfig& cfg) {
    Json j = envelope(cfg);
    j["upbs"] = Json::array();
    for (const auto& name : catalog_names()) {
        const auto upb = *find_upb(name);
        Json e;
        e["name"] = name;
        e["dims"] = upb.structure().local_dims();
        e["n"] = upb.size();
        e["total_dim"] = upb.structure().total_dim();
        j["upbs"].push_back(e);
    }
    emit(j, cfg);
    return kOk;
}

int cmd_lambda(const RunConfig& cfg) {
    const auto upb = load_upb(cfg);
    const auto scfg = seesaw_config(cfg);
    const auto lam = upb.structure().parties() == 2 ? compute_lambda(upb, scfg) : compute_lambda_multipartite(upb, scfg);
    const auto grid = grid_oracle_lambda(upb);
    const double agreement = std::abs(lam.lambda - grid.value);
    const double tolerance = upb.structure().parties() == 2 ? 1e-6 : 1e-5;

    Json j = envelope(cfg);
    j["upb"] = upb.name();
    j["parties"] = upb.structure().parties();
    const Json lam_json = to_json(lam);
    for (const auto& [k, v] : lam_json.items()) j[k] = v;
    j["grid_oracle_value"] = grid.value;
    j["grid_points"] = grid.grid_points;
    j["agreement"] = agreement;
    j["agreement_tolerance"] = tolerance;
    emit(j, cfg);
    return lam.converged && agreement <= tolerance ? kOk : kNoConvergence;
}

int cmd_profile(const RunConfig& cfg) {
    const auto a = analyze_upb(load_upb(cfg), seesaw_config(cfg));
    const auto profile = build_profile(a, cfg.grid, bound_mode(cfg));
    Json j = envelope(cfg);
    j["profile"] = to_json(profile);
    j["crossing"] = to_json(profile.x0);
    j["lambda_converged"] = a.lambda.converged;
    emit(j, cfg);
    return a.lambda.converged ? kOk : kNoConvergence;
}

int cmd_verify(const RunConfig& cfg) {
    const auto a = analyze_upb(load_upb(cfg), seesaw_config(cfg));
    const auto x_grid = interior_grid(a.x_star, 10);

    const auto ball = verify_ball(a, x_grid, 0.99, SamplerConfig{cfg.seed, cfg.trials, 1}, bound_mode(cfg));
    const auto mixing = verify_separable_mixing(a, 0.99, SamplerConfig{cfg.seed, cfg.trials, 2});

    std::vector<double> z_grid;
    for (int i = 0; i <= 20; ++i) z_grid.push_back(0.999 * i / 20.0);
    const auto sigma = minimizer_mixture(a.lambda.minimizers, a.omega.structure());
    Json directions = Json::array();
    bool directions_pass = true;
    for (double x : {0.5 * (a.x_star + 1.0), 1.0}) {
        const auto r = verify_maximal_robustness(a.family(), x, a.witness, sigma, z_grid);
        directions_pass = directions_pass && r.all_pass;
        directions.push_back(to_json(r));
    }

    const bool clean = ball.clean() && mixing.clean() && directions_pass;
    Json j = envelope(cfg);
    j["upb"] = a.upb.name();
    j["parties"] = a.upb.structure().parties();
    j["cuts_checked"] = all_bipartitions(a.upb.structure()).size();
    j["lambda"] = a.lambda.lambda;
    j["lambda_converged"] = a.lambda.converged;
    j["x_star"] = a.x_star;
    j["x_grid"] = x_grid;
    j["ball"] = to_json(ball);
    j["separable_mixing"] = to_json(mixing);
    j["maximal_direction"] = directions;
    j["violations"] = ball.ppt_violations + ball.witness_violations + mixing.ppt_violations +
                      mixing.witness_violations + (directions_pass ? 0 : 1);
    j["pass"] = clean;
    emit(j, cfg);
    if (!a.lambda.converged) return kNoConvergence;
    return clean ? kOk : kViolation;
}

int cmd_membership(const RunConfig& cfg) {
    const auto a = analyze_upb(load_upb(cfg), seesaw_config(cfg));
    const auto crossing = crossing_x0(a.upb.size(), a.upb.structure().total_dim(), a.lambda.lambda);
    const double x = cfg.x.value_or(crossing.root);
    if (!(x > a.x_star && x < 1.0)) throw ValidationError("membership: --x must lie in (x*, 1)");
    const double radius = cfg.radius.value_or(radius_y0(a.bounds, x, bound_mode(cfg)));
    if (!(radius >= 0.0 && radius <= 1.0)) throw ValidationError("membership: --radius must lie in [0, 1]");

    const auto est = ball_fraction_estimate(a.family().member(x), radius, SamplerConfig{cfg.seed, cfg.trials, 3});
    Json j = envelope(cfg);
    j["upb"] = a.upb.name();
    j["x"] = x;
    j["x_star"] = a.x_star;
    j["radius"] = radius;
    j["estimate"] = to_json(est);
    emit(j, cfg);
    return kOk;
}

int cmd_export(const RunConfig& cfg) {
    Json j = envelope(cfg);
    j["upb"] = to_json(load_upb(cfg));
    emit(j, cfg);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Robustness analysis of UPB bound entangled states"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    RunConfig cfg;
    const auto names = catalog_names();

    auto common = [&](CLI::App* sub, bool needs_upb) {
        if (needs_upb) sub->add_option("--upb", cfg.upb_name, "UPB name")->required()->check(CLI::IsMember(names));
        sub->add_option("--seed", cfg.seed, "master seed");
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output", cfg.output, "write the report here instead of stdout");
    };
    auto lambda_opts = [&](CLI::App* sub) {
        sub->add_option("--restarts", cfg.restarts, "see-saw restarts")->check(CLI::PositiveNumber);
    };
    auto mode_opt = [&](CLI::App* sub) {
        sub->add_option("--bound-mode", cfg.bound_mode, "witness bound")->check(CLI::IsMember({"tight", "paper"}));
    };

    auto* list = app.add_subcommand("upb-list", "list catalog UPBs");
    common(list, false);

    auto* lambda = app.add_subcommand("lambda", "minimum product-state overlap, see-saw and grid oracle");
    common(lambda, true);
    lambda_opts(lambda);

    auto* profile = app.add_subcommand("profile", "thresholds, branch crossing and radius samples");
    common(profile, true);
    lambda_opts(profile);
    mode_opt(profile);
    profile->add_option("--grid", cfg.grid, "radius samples over [x*, 1]")->check(CLI::Range(2, 100000));

    auto* verify = app.add_subcommand("verify", "Monte Carlo ball and separable-mixing checks");
    common(verify, true);
    lambda_opts(verify);
    mode_opt(verify);
    verify->add_option("--trials", cfg.trials, "trials per grid point")->check(CLI::PositiveNumber);

    auto* membership = app.add_subcommand("membership", "fraction of random states inside the ball");
    common(membership, true);
    lambda_opts(membership);
    mode_opt(membership);
    membership->add_option("--trials", cfg.trials, "samples")->check(CLI::PositiveNumber);
    membership->add_option("--x", cfg.x, "family parameter of the center (default: branch crossing)");
    membership->add_option("--radius", cfg.radius, "ball radius (default: y0 at x)");

    auto* exp = app.add_subcommand("export", "UPB vectors as JSON");
    common(exp, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    try {
        if (cfg.command == "upb-list") return cmd_upb_list(cfg);
        if (cfg.command == "lambda") return cmd_lambda(cfg);
        if (cfg.command == "profile") return cmd_profile(cfg);
        if (cfg.command == "verify") return cmd_verify(cfg);
        if (cfg.command == "membership") return cmd_membership(cfg);
        if (cfg.command == "export") return cmd_export(cfg);
    } catch (const pptball::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
