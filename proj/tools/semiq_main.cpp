// semiq: construct, analyze and verify split-signature quaternionic curves.
//
// Exit codes: 0 success (verify: check passed), 1 verify: check failed,
// 2 invalid arguments or malformed input, 3 analysis degeneracy
// (DegenerateFrame / NullTangent / causal problems).

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>

#include "semiq/constructors.hpp"
#include "semiq/io.hpp"
#include "semiq/rectifying.hpp"

using namespace semiq;

namespace {

struct RunConfig {
    double verdict_tol = 1e-4;
    double frame_tol = 1e-6;
    double reparam_tol = 1e-8;
    int boundary_margin = 2;
    double step = 1e-3;
    int stride = 1;
    // target grid steps for the analysis (finer grids are decimated; chained
    // finite differences amplify roundoff by 1/h^4)
    double analysis_step3 = 4e-3;
    double analysis_step4 = 1e-2;
    unsigned long seed = 0;   // reserved for randomized diagnostics
};

void load_config_file(const std::string& path, RunConfig& cfg) {
    const json j = json::parse(read_file(path));
    if (j.contains("tolerances")) {
        const auto& t = j.at("tolerances");
        if (t.contains("verdict")) cfg.verdict_tol = t.at("verdict").get<double>();
        if (t.contains("frame")) cfg.frame_tol = t.at("frame").get<double>();
        if (t.contains("reparam")) cfg.reparam_tol = t.at("reparam").get<double>();
    }
    if (j.contains("boundary_margin")) cfg.boundary_margin = j.at("boundary_margin").get<int>();
    if (j.contains("analysis_step3")) cfg.analysis_step3 = j.at("analysis_step3").get<double>();
    if (j.contains("analysis_step4")) cfg.analysis_step4 = j.at("analysis_step4").get<double>();
    if (j.contains("step")) cfg.step = j.at("step").get<double>();
    if (j.contains("stride")) cfg.stride = j.at("stride").get<int>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<unsigned long>();
}

void validate_config(const RunConfig& cfg) {
    if (!(cfg.verdict_tol > 0) || !(cfg.frame_tol > 0) || !(cfg.reparam_tol > 0))
        throw Error("config: tolerances must be positive");
    if (cfg.boundary_margin < 2) throw Error("config: boundary margin must be >= 2");
    if (!(cfg.step > 0)) throw Error("config: step must be positive");
}

std::pair<double, double> parse_range(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos)
        throw Error("range: expected lo:hi, got '" + s + "'");
    const double lo = std::stod(s.substr(0, colon));
    const double hi = std::stod(s.substr(colon + 1));
    if (!(hi > lo)) throw Error("range: hi must exceed lo");
    return {lo, hi};
}

Quat parse_position(const std::string& s) {
    Quat q;
    std::stringstream ss(s);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',') && i < 4) q[i++] = std::stod(item);
    return q;
}

ScalingCase case_of(const std::string& family) {
    if (family == "thm34-i") return ScalingCase::Cos;
    if (family == "thm34-ii") return ScalingCase::Sinh;
    if (family == "thm34-iii") return ScalingCase::Cosh;
    throw Error("unknown construction family '" + family + "'");
}

// ----------------------------- construct -----------------------------

struct ConstructArgs {
    std::string family, base = "latitude:b=1", profile, range_str, output = "curve.json";
    std::string start = "auto";
    double a = 1.0;
    std::size_t samples = 4001;   // the position-vector checks resolve as O(1/n^2)
    double step = 1e-3;
    int stride = 1;
    int reparam_samples = 0;      // 0 = preserve the sample count
    bool do_reparam = false;
    bool renormalize = false;
    bool integrate3 = false, integrate4 = false;
};

int cmd_construct(const ConstructArgs& args) {
    const auto [lo, hi] = parse_range(args.range_str);
    CurveSamples curve;

    if (args.integrate3) {
        const Profile3 prof = parse_profile3(args.profile);
        const Frame3 frame{};
        Quat p0{};
        if (args.start == "rectifying")
            p0 = rectifying_start_3d(prof, frame, lo);
        else if (args.start != "auto" && args.start != "origin")
            p0 = parse_position(args.start);
        curve = integrate_frenet3(prof, frame, p0, lo, hi,
                                  IntegrateOptions{args.step, args.stride, args.renormalize,
                                                   1e-10});
    } else if (args.integrate4) {
        const Profile4 prof = parse_profile4(args.profile, lo, hi);
        const Frame4 frame = Frame4::standard_for(prof.eps);
        Quat p0{};
        const bool rectifying_family = prof.description.rfind("thm43", 0) == 0;
        if (args.start == "rectifying" || (args.start == "auto" && rectifying_family))
            p0 = rectifying_start_4d(prof, frame, lo);
        else if (args.start != "auto" && args.start != "origin")
            p0 = parse_position(args.start);
        curve = integrate_frenet4(prof, frame, p0, lo, hi,
                                  IntegrateOptions{args.step, args.stride, args.renormalize,
                                                   1e-10});
    } else {
        if (args.family.empty())
            throw Error("construct: need --family (or --integrate3/4 with --profile)");
        const SphereCurveFamily base = parse_family(args.base);
        curve = construct_scaled_sphere_curve(case_of(args.family), base, args.a, lo, hi,
                                              args.samples);
    }

    if (args.do_reparam)
        curve = reparam_pseudo_arclength(curve, ReparamOptions{1e-8, args.reparam_samples});
    write_file(args.output, curve_to_json(curve).dump(2) + "\n");
    return 0;
}

// ----------------------------- analyze / verify -----------------------------

struct AnalysisOutput {
    json report;
    std::string plot_csv, frames_csv;
};

AnalysisOutput analyze_curve(CurveSamples curve, const RunConfig& cfg) {
    if (curve.param_kind == ParamKind::Raw)
        curve = reparam_pseudo_arclength(curve, ReparamOptions{cfg.reparam_tol, 0});
    curve = analysis_grid(curve, curve.sig.ambient == Ambient::R13 ? cfg.analysis_step3
                                                                   : cfg.analysis_step4);

    AnalysisOutput out;
    if (curve.sig.ambient == Ambient::R13) {
        Frenet3Options fo;
        fo.frame_tol = cfg.frame_tol;
        fo.extra_margin = cfg.boundary_margin;
        const auto frame = frenet3_apparatus(curve, fo);
        const auto rep = analyze_rectifying_3d(curve, frame, cfg.verdict_tol);
        out.report = report3_to_json(rep);
        out.plot_csv = plot3_csv(curve, frame);
        out.frames_csv = frenet3_csv(frame);
    } else {
        Frenet4Options fo;
        fo.frame_tol = cfg.frame_tol;
        fo.extra_margin = cfg.boundary_margin;
        const auto frame = frenet4_apparatus(curve, fo);
        const auto rep = analyze_rectifying_4d(curve, frame, cfg.verdict_tol);
        out.report = report4_to_json(rep);
        out.plot_csv = plot4_csv(curve, frame, rep.c_estimate);
        out.frames_csv = frenet4_csv(frame);
    }
    out.report["tolerances"] = {{"verdict", cfg.verdict_tol},
                                {"frame", cfg.frame_tol},
                                {"reparam", cfg.reparam_tol}};
    out.report["boundary_margin"] = cfg.boundary_margin;
    return out;
}

int run_analyze_one(const std::string& input, const std::string& report_path,
                    const std::string& plot_path, const std::string& frames_path,
                    const RunConfig& cfg) {
    const CurveSamples curve = curve_from_json(json::parse(read_file(input)));
    const AnalysisOutput out = analyze_curve(curve, cfg);
    if (!report_path.empty())
        write_file(report_path, out.report.dump(2) + "\n");
    else
        std::cout << out.report.dump(2) << "\n";
    if (!plot_path.empty()) write_file(plot_path, out.plot_csv);
    if (!frames_path.empty()) write_file(frames_path, out.frames_csv);
    return 0;
}

bool check_passed(const json& report, const std::string& theorem) {
    static const std::map<std::string, std::pair<std::string, std::string>> ids{
        {"3.2i", {"R13", "thm32_i"}},   {"3.2ii", {"R13", "thm32_ii"}},
        {"3.2iii", {"R13", "thm32_iii"}}, {"3.2iv", {"R13", "thm32_iv"}},
        {"3.3", {"R13", "thm33"}},      {"4.2", {"R24", "thm42"}},
        {"4.4i", {"R24", "thm44_i"}},   {"4.4ii", {"R24", "thm44_ii"}},
        {"4.4iii", {"R24", "thm44_iii"}}, {"4.4iv", {"R24", "thm44_iv"}}};
    const auto it = ids.find(theorem);
    if (it == ids.end()) throw Error("unknown theorem id '" + theorem + "'");
    if (report.at("space").get<std::string>() != it->second.first)
        throw Error("theorem " + theorem + " does not apply to a " +
                    report.at("space").get<std::string>() + " curve");
    return report.at("checks").at(it->second.second).at("pass").get<bool>();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"split-signature quaternionic curve toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (flags override it)");
    app.add_option("--tol", cfg.verdict_tol, "verdict tolerance");
    app.add_option("--frame-tol", cfg.frame_tol, "frame orthonormality tolerance");
    app.add_option("--reparam-tol", cfg.reparam_tol, "null-tangent tolerance");
    app.add_option("--margin", cfg.boundary_margin, "extra boundary margin (samples)");
    double analysis_step = 0;
    app.add_option("--analysis-step", analysis_step,
                   "target grid step for the analysis (0 = per-space defaults)");
    app.add_option("--step", cfg.step, "default integrator step");
    app.add_option("--seed", cfg.seed, "seed for randomized diagnostics (reserved)");

    // construct
    auto* construct = app.add_subcommand("construct", "generate a curve file");
    ConstructArgs ca;
    construct->add_option("--family", ca.family, "thm34-i | thm34-ii | thm34-iii");
    construct->add_option("--base", ca.base, "base family, e.g. latitude:b=1");
    construct->add_option("--a", ca.a, "scaling constant a > 0");
    construct->add_option("--range", ca.range_str, "parameter range lo:hi")->required();
    construct->add_option("--samples", ca.samples, "sample count");
    construct->add_flag("--reparam", ca.do_reparam, "reparametrize to pseudo arc length");
    construct->add_option("--reparam-samples", ca.reparam_samples,
                          "output sample count for --reparam (0 = preserve)");
    construct->add_flag("--integrate3", ca.integrate3, "integrate a 3D curvature profile");
    construct->add_flag("--integrate4", ca.integrate4, "integrate a 4D curvature profile");
    construct->add_option("--profile", ca.profile,
                          "curvature profile, e.g. thm43-1:c=0,c1=-0.5");
    construct->add_option("--step", ca.step, "integrator step");
    construct->add_option("--stride", ca.stride, "output every m-th integrator sample");
    construct->add_option("--start", ca.start,
                          "origin | rectifying | x,y,z[,w] (default: auto)");
    construct->add_flag("--renormalize", ca.renormalize,
                        "re-orthonormalize the frame each integrator step");
    construct->add_option("-o,--output", ca.output, "output curve file");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "run the full analysis on a curve file");
    std::string an_input, an_report, an_plot, an_frames, an_batch;
    analyze->add_option("curve", an_input, "curve JSON file");
    analyze->add_option("-o,--report", an_report, "report JSON output");
    analyze->add_option("--plot", an_plot, "plot CSV output");
    analyze->add_option("--frames", an_frames, "frame CSV output");
    analyze->add_option("--batch", an_batch, "analyze every .json curve in a directory");

    // verify
    auto* verify = app.add_subcommand("verify", "exit 0/1 for a named check");
    std::string ve_input, ve_theorem;
    verify->add_option("curve", ve_input, "curve JSON file")->required();
    verify->add_option("--theorem", ve_theorem,
                       "3.2i|3.2ii|3.2iii|3.2iv|3.3|4.2|4.4i|4.4ii|4.4iii|4.4iv")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) {
            // file values as the base, explicit flags override
            RunConfig merged;
            load_config_file(config_path, merged);
            if (app.count("--tol")) merged.verdict_tol = cfg.verdict_tol;
            if (app.count("--frame-tol")) merged.frame_tol = cfg.frame_tol;
            if (app.count("--reparam-tol")) merged.reparam_tol = cfg.reparam_tol;
            if (app.count("--margin")) merged.boundary_margin = cfg.boundary_margin;
            if (app.count("--seed")) merged.seed = cfg.seed;
            cfg = merged;
        }
        if (analysis_step > 0) {
            cfg.analysis_step3 = analysis_step;
            cfg.analysis_step4 = analysis_step;
        }
        validate_config(cfg);

        if (construct->parsed()) {
            if (!construct->count("--step")) ca.step = cfg.step;  // global/config default
            return cmd_construct(ca);
        }

        if (analyze->parsed()) {
            if (!an_batch.empty()) {
                namespace fs = std::filesystem;
                std::vector<fs::path> inputs;
                for (const auto& entry : fs::directory_iterator(an_batch)) {
                    const std::string name = entry.path().filename().string();
                    if (entry.path().extension() != ".json") continue;
                    if (name.size() > 12 && name.ends_with(".report.json")) continue;
                    inputs.push_back(entry.path());
                }
                std::sort(inputs.begin(), inputs.end());
                for (const auto& path : inputs) {
                    const std::string stem = path.stem().string();
                    const fs::path dir = path.parent_path();
                    run_analyze_one(path.string(), (dir / (stem + ".report.json")).string(),
                                    (dir / (stem + ".plot.csv")).string(), "", cfg);
                }
                return 0;
            }
            if (an_input.empty()) throw Error("analyze: missing curve file");
            return run_analyze_one(an_input, an_report, an_plot, an_frames, cfg);
        }

        if (verify->parsed()) {
            const CurveSamples curve = curve_from_json(json::parse(read_file(ve_input)));
            const AnalysisOutput out = analyze_curve(curve, cfg);
            return check_passed(out.report, ve_theorem) ? 0 : 1;
        }
    } catch (const DegenerateFrame& e) {
        std::cerr << "error: DegenerateFrame: " << e.what() << "\n";
        return 3;
    } catch (const NullTangent& e) {
        std::cerr << "error: NullTangent: " << e.what() << "\n";
        return 3;
    } catch (const CausalFlip& e) {
        std::cerr << "error: CausalFlip: " << e.what() << "\n";
        return 3;
    } catch (const NullRemainder& e) {
        std::cerr << "error: NullRemainder: " << e.what() << "\n";
        return 3;
    } catch (const NotUnitSpeed& e) {
        std::cerr << "error: NotUnitSpeed: " << e.what() << "\n";
        return 3;
    } catch (const PoleInRange& e) {
        std::cerr << "error: PoleInRange: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
