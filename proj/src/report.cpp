#include "pptball/report.hpp"

#include <cstdio>
#include <sstream>

#include "pptball/errors.hpp"

namespace pptball {

Json to_json(const Vector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back({v(i).real(), v(i).imag()});
    return out;
}

Json to_json(const ProductState& s) {
    Json out = Json::array();
    for (const auto& v : s.locals()) out.push_back(to_json(v));
    return out;
}

Json to_json(const UPBSet& upb) {
    Json members = Json::array();
    for (const auto& m : upb.members()) members.push_back(to_json(m));
    return Json{{"name", upb.name()}, {"dims", upb.structure().local_dims()}, {"n", upb.size()}, {"members", members}};
}

UPBSet upb_from_json(const Json& j) {
    try {
        HilbertStructure structure(j.at("dims").get<std::vector<std::size_t>>());
        std::vector<ProductState> members;
        for (const auto& m : j.at("members")) {
            std::vector<Vector> locals;
            for (const auto& local : m) {
                Vector v(static_cast<Eigen::Index>(local.size()));
                for (std::size_t i = 0; i < local.size(); ++i)
                    v(static_cast<Eigen::Index>(i)) = cplx(local[i].at(0).get<double>(), local[i].at(1).get<double>());
                locals.push_back(std::move(v));
            }
            members.emplace_back(std::move(locals));
        }
        return UPBSet(j.at("name").get<std::string>(), std::move(structure), std::move(members));
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("upb_from_json: ") + e.what());
    }
}

Json to_json(const LambdaResult& r) {
    Json minimizers = Json::array();
    for (const auto& m : r.minimizers) minimizers.push_back(to_json(m));
    return Json{
        {"lambda", r.lambda},
        {"restarts", r.restarts_used},
        {"iterations", r.iterations},
        {"converged", r.converged},
        {"minimizer_vectors", to_json(r.minimizer)},
        {"distinct_minimizers", minimizers},
    };
}

Json to_json(const CrossingReport& c) {
    return Json{
        {"root", c.root},
        {"residual", c.residual},
        {"purity_branch", c.purity_value},
        {"witness_branch", c.witness_value},
        {"printed_formula", c.printed_formula},
        {"bisection_steps", c.bisection_steps},
    };
}

Json to_json(const RobustnessProfile& p) {
    Json samples = Json::array();
    for (const auto& s : p.radius_samples) samples.push_back({{"x", s.x}, {"y0_tight", s.y0_tight}, {"y0_paper", s.y0_paper}});
    return Json{
        {"upb_name", p.upb_name},
        {"lambda", p.lambda},
        {"lambda_omega", p.lambda_omega},
        {"x_star", p.x_star},
        {"x0_root", p.x0.root},
        // Key name fixed by the report schema.
        {"x0_printed_eq32", p.x0.printed_formula},
        {"radius_samples", samples},
        {"mixing_threshold", p.mixing.threshold},
        {"bound_mode", to_string(p.bound_mode)},
    };
}

Json to_json(const SamplerConfig& c) {
    return Json{{"master_seed", c.master_seed}, {"trials", c.trials}, {"stream_id", c.stream_id}};
}

Json to_json(const VerificationOutcome& o) {
    return Json{
        {"check", o.check},
        {"config", to_json(o.config)},
        {"trials", o.trials},
        {"ppt_violations", o.ppt_violations},
        {"witness_violations", o.witness_violations},
        {"worst_margin", o.worst_margin},
        {"seeds_of_failures", o.seeds_of_failures},
    };
}

Json to_json(const MaximalRobustnessReport& r) {
    Json points = Json::array();
    for (const auto& p : r.points)
        points.push_back({{"z", p.z},
                          {"min_pt_eigenvalue", p.min_pt_eigenvalue},
                          {"witness_value", p.witness_value},
                          {"ppt", p.ppt},
                          {"witness_negative", p.witness_negative}});
    return Json{{"x", r.x}, {"all_pass", r.all_pass}, {"points", points}};
}

Json to_json(const FractionEstimate& f) {
    return Json{{"hits", f.hits}, {"trials", f.trials}, {"fraction", f.fraction}, {"ci_low", f.ci_low}, {"ci_high", f.ci_high}};
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), out);
    } else {
        out << csv_escape(path) << ',';
        if (j.is_number_float()) {
            out << format_double(j.get<double>());
        } else if (j.is_string()) {
            out << csv_escape(j.get<std::string>());
        } else {
            out << j.dump();
        }
        out << '\n';
    }
}

}  // namespace

std::string to_csv(const Json& j) {
    std::ostringstream out;
    out << "key,value\n";
    flatten(j, "", out);
    return out.str();
}

}  // namespace pptball
