// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance <path-to-pptball-cli>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "pptball/grid_oracle.hpp"
#include "pptball/pptball.hpp"

using namespace pptball;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + std::string("FAILED ") + what;
        }
    }
    void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

struct Case {
    UpbAnalysis a;
    double grid_lambda;
    double seconds;
};

const char* kNames[] = {"tiles", "pyramid", "shifts"};

std::vector<Case> analyze_catalog() {
    std::vector<Case> cases;
    for (const char* name : kNames) {
        const auto t0 = Clock::now();
        auto a = analyze_upb(*find_upb(name));
        const double grid = grid_oracle_lambda(a.upb).value;
        cases.push_back(Case{std::move(a), grid, seconds_since(t0)});
    }
    return cases;
}

double tolerance_for(const UpbAnalysis& a) { return a.upb.structure().parties() == 2 ? 1e-6 : 1e-5; }

void c1_validity(Criterion& c, const std::vector<Case>& cases) {
    double total = 0.0;
    for (const auto& k : cases) {
        const auto& a = k.a;
        const auto n = static_cast<Eigen::Index>(a.upb.size());
        const double gram = max_abs(a.upb.gram() - Matrix::Identity(n, n));
        const double gap = std::abs(a.lambda.lambda - k.grid_lambda);
        c.require(gram <= 1e-10, a.upb.name() + " gram defect " + fmt(gram));
        c.require(a.lambda.lambda > 0.0, a.upb.name() + " lambda not positive");
        c.require(gap <= tolerance_for(a), a.upb.name() + " seesaw/grid gap " + fmt(gap));
        c.note(a.upb.name() + " lambda=" + fmt(a.lambda.lambda) + " gap=" + fmt(gap));
        total += k.seconds;
    }
    c.require(total <= 120.0, "runtime " + fmt(total) + " s");
    c.note("runtime " + fmt(total) + " s");
}

void c2_omega(Criterion& c, const std::vector<Case>& cases) {
    for (const auto& k : cases) {
        const auto& a = k.a;
        const auto n = a.upb.size();
        const auto d = a.upb.structure().total_dim();
        const auto eig = eig_hermitian(a.omega.op());
        const double flat = 1.0 / static_cast<double>(d - n);
        std::size_t rank = 0;
        double spread = 0.0;
        for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
            const double e = eig.eigenvalues(i);
            if (std::abs(e) <= 1e-10) continue;
            ++rank;
            spread = std::max(spread, std::abs(e - flat));
        }
        c.require(rank == d - n, a.upb.name() + " rank " + std::to_string(rank));
        c.require(spread <= 1e-10, a.upb.name() + " spectrum spread " + fmt(spread));

        const auto ppt = is_ppt_all_cuts(a.omega);
        c.require(ppt.min_eigenvalue >= -1e-9, a.upb.name() + " PT min eigenvalue " + fmt(ppt.min_eigenvalue));

        const double lam = a.lambda.lambda;
        const double expected = -lam / (static_cast<double>(n) - lam * static_cast<double>(d));
        const double err = std::abs(witness_value(a.witness, a.omega) - expected);
        c.require(err <= 1e-12, a.upb.name() + " Tr(W Omega) error " + fmt(err));
        c.note(a.upb.name() + " cuts=" + std::to_string(ppt.cuts.size()));
    }
}

void c3_witness(Criterion& c, const std::vector<Case>& cases) {
    constexpr std::size_t kSamples = 10000;
    for (const auto& k : cases) {
        const auto& a = k.a;
        const auto& w = a.witness;
        const auto n = static_cast<double>(a.upb.size());
        const auto d = static_cast<double>(a.upb.structure().total_dim());
        const double lam = a.lambda.lambda;

        const double tr_err = std::abs(w.op().trace() - 1.0);
        const double pos_err = std::abs(w.pos_part_trace() - n * (1.0 - lam) / (n - lam * d));
        c.require(tr_err <= 1e-12, a.upb.name() + " Tr W error " + fmt(tr_err));
        c.require(pos_err <= 1e-12, a.upb.name() + " Tr W+ error " + fmt(pos_err));

        std::size_t sandwich_fail = 0;
        double sep_min = 1.0;
        const auto& structure = a.omega.structure();
        for (std::size_t i = 0; i < kSamples; ++i) {
            const auto rho = sample_hs_density(structure, SamplerConfig{11, kSamples, 0}, i);
            const double v = witness_value(w, rho);
            if (v < -w.neg_part_trace() - 1e-12 || v > w.pos_part_trace() + 1e-12) ++sandwich_fail;
            const auto sep = sample_random_product_separable(structure, structure.total_dim(),
                                                             SamplerConfig{11, kSamples, 1}, i);
            sep_min = std::min(sep_min, witness_value(w, sep));
        }
        c.require(sandwich_fail == 0, a.upb.name() + " sandwich failures " + std::to_string(sandwich_fail));
        c.require(sep_min >= -1e-10, a.upb.name() + " separable minimum " + fmt(sep_min));
        c.note(a.upb.name() + " min separable value=" + fmt(sep_min));
    }
}

void c4_thresholds(Criterion& c, const std::vector<Case>& cases) {
    for (const auto& k : cases) {
        const auto& a = k.a;
        const auto n = static_cast<double>(a.upb.size());
        const auto dim = a.upb.structure().total_dim();
        const auto d = static_cast<double>(dim);
        const double lam = a.lambda.lambda;

        const double x_err = std::abs(entanglement_threshold(a.lambda_omega, dim) - (1.0 - lam * d / n));
        c.require(x_err <= 1e-12, a.upb.name() + " x* identity error " + fmt(x_err));
        c.require(a.lambda_omega <= 1.0 - 2.0 / d, a.upb.name() + " lambda_Omega above 1-2/D");

        const double direct =
            n * a.lambda_omega / (a.witness.pos_part_trace() + n * a.lambda_omega) - lam;
        const auto mt = separable_mixing_threshold(lam, a.lambda_omega, a.witness.pos_part_trace(), a.witness.p_count());
        c.require(std::abs(direct) <= 1e-12, a.upb.name() + " mixing identity error " + fmt(direct));
        c.require(mt.identity_residual <= 1e-12, a.upb.name() + " threshold residual " + fmt(mt.identity_residual));
        c.note(a.upb.name() + " x*=" + fmt(a.x_star));
    }
}

void c5_ball(Criterion& c, const std::vector<Case>& cases) {
    const auto t0 = Clock::now();
    for (const auto& k : cases) {
        const auto& a = k.a;
        if (a.upb.name() == "pyramid") continue;
        const auto grid = interior_grid(a.x_star, 10);
        const auto out = verify_ball(a, grid, 0.99, SamplerConfig{42, 1000, 1});
        c.require(out.trials == 10000, a.upb.name() + " trial count " + std::to_string(out.trials));
        c.require(out.clean(), a.upb.name() + " violations ppt=" + std::to_string(out.ppt_violations) +
                                   " witness=" + std::to_string(out.witness_violations));
        c.note(a.upb.name() + " cuts=" + std::to_string(all_bipartitions(a.upb.structure()).size()) +
               " worst margin=" + fmt(out.worst_margin));
    }
    const double secs = seconds_since(t0);
    c.require(secs <= 600.0, "runtime " + fmt(secs) + " s");
    c.note("runtime " + fmt(secs) + " s");
}

void c6_mixing(Criterion& c, const std::vector<Case>& cases) {
    std::vector<double> zs;
    for (int i = 0; i <= 20; ++i) zs.push_back(0.999 * i / 20.0);
    for (const auto& k : cases) {
        const auto& a = k.a;
        const auto out = verify_separable_mixing(a, 0.99, SamplerConfig{42, 1000, 2});
        c.require(out.trials == 1000, a.upb.name() + " trial count");
        c.require(out.clean(), a.upb.name() + " mixing violations ppt=" + std::to_string(out.ppt_violations) +
                                   " witness=" + std::to_string(out.witness_violations));

        const auto sigma = minimizer_mixture(a.lambda.minimizers, a.omega.structure());
        for (double x : {0.5 * (a.x_star + 1.0), 0.99, 1.0}) {
            if (x <= a.x_star) continue;
            const auto r = verify_maximal_robustness(a.family(), x, a.witness, sigma, zs);
            c.require(r.all_pass, a.upb.name() + " direction check at x=" + fmt(x));
        }
        c.note(a.upb.name() + " worst margin=" + fmt(out.worst_margin));
    }
}

void c7_crossing(Criterion& c, const std::vector<Case>& cases) {
    for (const auto& k : cases) {
        const auto& a = k.a;
        const auto r = crossing_x0(a.upb.size(), a.upb.structure().total_dim(), a.lambda.lambda);
        const auto b = WitnessBounds::from(a.witness, a.omega);
        const double purity = purity_branch(r.root, b.dim);
        const double witness = witness_branch(b, r.root, BoundMode::PaperExact);
        c.require(r.residual < 1e-12, a.upb.name() + " residual " + fmt(r.residual));
        c.require(std::abs(purity - witness) <= 1e-10, a.upb.name() + " branch gap " + fmt(std::abs(purity - witness)));
        c.require(r.root > a.x_star && r.root < 1.0, a.upb.name() + " root outside (x*,1)");
        c.require(std::isfinite(r.printed_formula), a.upb.name() + " printed formula not evaluated");
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s root=%.6f printed=%.6f", a.upb.name().c_str(), r.root, r.printed_formula);
        c.note(buf);
    }
}

void c8_mixture(Criterion& c, const std::vector<Case>& cases) {
    for (const auto& k : cases) {
        const auto& a = k.a;
        if (a.upb.name() == "pyramid") continue;
        const auto fam = a.family();
        const auto& structure = a.omega.structure();
        const auto d = static_cast<double>(structure.total_dim());
        const auto mixed = DensityMatrix::maximally_mixed(structure);
        double worst = 0.0;
        std::size_t inside = 0;
        for (std::uint64_t i = 0; i < 1000; ++i) {
            auto rng = substream(8, 0, i);
            std::uniform_real_distribution<double> u(0.0, 1.0);
            const double x = 1e-6 + (1.0 - 2e-6) * u(rng);
            const double bound = (1.0 - x) / (d - 1.0 - x);
            const double y = (i % 2 == 0 ? bound : 1.0) * u(rng);
            const auto sigma = sample_hs_density(structure, rng);
            const auto m = mixture_tau(fam, sigma, x, y);
            worst = std::max(worst, m.reconstruction_residual);
            if (!(y < bound)) continue;
            ++inside;
            const auto inner = mix(m.decomposition.t, sigma, mixed);
            const bool ball = in_gurvits_ball(inner);
            c.require(ball, a.upb.name() + " inner mixture outside purity ball at trial " + std::to_string(i));
            if (ball)
                c.require(is_ppt_all_cuts(inner).ppt, a.upb.name() + " inner mixture not PPT at trial " + std::to_string(i));
        }
        c.require(worst < 1e-12, a.upb.name() + " residual " + fmt(worst));
        c.note(a.upb.name() + " residual=" + fmt(worst) + " inside=" + std::to_string(inside));
    }
}

void c9_membership(Criterion& c, const std::vector<Case>& cases) {
    for (const auto& k : cases) {
        const auto& a = k.a;
        if (a.upb.name() == "pyramid") continue;
        const auto fam = a.family();
        const auto& structure = a.omega.structure();
        const double x = crossing_x0(a.upb.size(), structure.total_dim(), a.lambda.lambda).root;
        const auto center = fam.member(x);

        const double self = ball_membership(center, center);
        c.require(self <= 1e-10, a.upb.name() + " mu(center, center) " + fmt(self));

        double worst_pure = 0.0;
        double worst_excess = -1.0;
        for (std::uint64_t i = 0; i < 1000; ++i) {
            auto rng = substream(9, 0, i);
            const auto psi = random_unit_vector(static_cast<Eigen::Index>(structure.total_dim()), rng);
            if (i < 100)
                worst_pure = std::max(worst_pure, std::abs(ball_membership(DensityMatrix::pure(psi, structure), center) - 1.0));
            std::uniform_real_distribution<double> u(0.0, 1.0);
            const double y = u(rng);
            const auto sigma = sample_hs_density(structure, rng);
            const auto tau = mix(y, sigma, center);
            worst_excess = std::max(worst_excess, ball_membership(tau, center) - y);
        }
        c.require(worst_pure <= 1e-10, a.upb.name() + " pure deviation " + fmt(worst_pure));
        c.require(worst_excess <= 1e-10, a.upb.name() + " mixture excess " + fmt(worst_excess));
        c.note(a.upb.name() + " mu(center)=" + fmt(self) + " max(mu-y)=" + fmt(worst_excess));
    }
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void c10_determinism(Criterion& c, const std::string& cli) {
    if (cli.empty()) {
        c.require(false, "no CLI path given");
        return;
    }
    const auto dir = std::filesystem::temp_directory_path() / ("pptball-acceptance-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const std::vector<std::string> commands = {
        "lambda --upb tiles --seed 7 --restarts 50",
        "profile --upb tiles --grid 20 --seed 7 --restarts 50",
        "verify --upb tiles --trials 50 --seed 42 --restarts 50",
        "verify --upb shifts --trials 50 --seed 42 --restarts 50 --format csv",
        "membership --upb tiles --trials 200 --seed 5 --restarts 50 --format csv",
    };
    for (std::size_t i = 0; i < commands.size(); ++i) {
        std::string outputs[2];
        for (int run = 0; run < 2; ++run) {
            const auto path = dir / ("run" + std::to_string(i) + "_" + std::to_string(run));
            const std::string cmd = "\"" + cli + "\" " + commands[i] + " --output \"" + path.string() + "\"";
            const int status = std::system(cmd.c_str());
            c.require(status == 0, "'" + commands[i] + "' exit status " + std::to_string(status));
            outputs[run] = slurp(path);
        }
        c.require(!outputs[0].empty() && outputs[0] == outputs[1], "'" + commands[i] + "' reports differ");
    }
    std::filesystem::remove_all(dir);
    c.note(std::to_string(commands.size()) + " commands run twice");
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const auto t0 = Clock::now();
    const auto cases = analyze_catalog();

    std::vector<std::pair<Criterion, std::function<void(Criterion&)>>> suite;
    auto add = [&](int id, std::string title, std::function<void(Criterion&)> fn) {
        suite.push_back({Criterion{id, std::move(title)}, std::move(fn)});
    };
    add(1, "UPB validity and lambda cross-check", [&](Criterion& c) { c1_validity(c, cases); });
    add(2, "BE-UPB state contract", [&](Criterion& c) { c2_omega(c, cases); });
    add(3, "witness algebra", [&](Criterion& c) { c3_witness(c, cases); });
    add(4, "threshold identities", [&](Criterion& c) { c4_thresholds(c, cases); });
    add(5, "ball verification", [&](Criterion& c) { c5_ball(c, cases); });
    add(6, "separable mixing and maximal direction", [&](Criterion& c) { c6_mixing(c, cases); });
    add(7, "branch crossing", [&](Criterion& c) { c7_crossing(c, cases); });
    add(8, "mixture regrouping", [&](Criterion& c) { c8_mixture(c, cases); });
    add(9, "ball membership", [&](Criterion& c) { c9_membership(c, cases); });
    add(10, "CLI determinism", [&](Criterion& c) { c10_determinism(c, cli); });

    int failed = 0;
    for (auto& [c, fn] : suite) {
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.require(false, std::string("exception: ") + e.what());
        }
        if (!c.pass) ++failed;
        std::printf("[%s] %2d %s: %s\n", c.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), c.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed in %.1f s\n", static_cast<int>(suite.size()) - failed, suite.size(),
                seconds_since(t0));
    return failed == 0 ? 0 : 1;
}
