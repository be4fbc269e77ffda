#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "innerfn/criteria.hpp"
#include "innerfn/levelset.hpp"
#include "innerfn/norms.hpp"
#include "innerfn/specfile.hpp"

using namespace innerfn;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct SpecSource {
    std::string file;
    std::string example;
};

void add_spec_options(CLI::App* cmd, SpecSource& src) {
    auto* a = cmd->add_option("--spec", src.file, "spec file describing the inner function");
    auto* b = cmd->add_option("--example", src.example, "builtin example name");
    a->excludes(b);
    b->excludes(a);
}

InnerFunctionSpec resolve_spec(const SpecSource& src) {
    if (!src.file.empty()) return load_spec_file(src.file);
    if (!src.example.empty()) return builtin_example(src.example);
    throw std::invalid_argument("one of --spec or --example is required");
}

void emit_report(const Report& rep, const std::string& out) {
    std::fputs(rep.text().c_str(), stdout);
    if (!out.empty()) rep.write_file(out);
}

void add_criterion(Report& rep, const std::string& prefix, const CriterionResult& r) {
    rep.add(prefix + ".statistic", r.statistic);
    rep.add(prefix + ".verdict", to_string(r.verdict));
    for (const auto& kv : r.metadata) rep.add(prefix + "." + kv.first, kv.second);
}

template <typename Fn>
void guarded(Report& rep, const std::string& prefix, Fn&& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        rep.add(prefix + ".error", std::string(e.what()));
    }
}

int run_eval(const SpecSource& src, const std::vector<std::string>& zs, int deriv) {
    InnerFunctionSpec spec = resolve_spec(src);
    for (const std::string& s : zs) {
        Complex z = parse_complex_literal(s);
        Complex v;
        if (deriv == 0) {
            v = eval_inner_value(spec, z);
        } else {
            Jet2 jet = eval_inner(spec, z);
            v = deriv == 1 ? jet.df : jet.d2f;
        }
        std::printf("%.17g %.17g\n", v.real(), v.imag());
    }
    return 0;
}

int run_levelset(const SpecSource& src, double eps, int res, const std::string& out,
                 const std::string& mode, const std::string& report_path) {
    InnerFunctionSpec spec = resolve_spec(src);
    LevelSetGrid grid = sample_grid(spec, eps, res);
    label_components(grid);

    if (!out.empty()) {
        PgmMode m = mode == "labels" ? PgmMode::Labels : PgmMode::Occupancy;
        std::ofstream f(out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write '" + out + "'");
        f << render_pgm(grid, m);
    }

    Report rep;
    rep.add("resolution", grid.resolution);
    rep.add("eps", grid.eps);
    rep.add("truncation_ok", grid.truncation_ok ? 1 : 0);
    rep.add("components", grid.component_count);
    emit_report(rep, report_path);
    return grid.truncation_ok ? 0 : 3;
}

std::vector<Complex> ladder_points(double center) {
    std::vector<Complex> out;
    for (int k = 0; k <= 6; ++k) {
        double off = kPi * std::exp2(-k);
        out.push_back(std::polar(1.0, center + off));
        out.push_back(std::polar(1.0, center - off));
    }
    return out;
}

int run_certify(const SpecSource& src, std::string checks_csv, double eps, int res, int samples,
                double exclusion, const std::string& out) {
    InnerFunctionSpec spec = resolve_spec(src);
    CriteriaConfig cfg;
    Report rep;
    int code = 0;

    std::vector<std::string> checks;
    {
        std::string item;
        std::istringstream in(checks_csv);
        while (std::getline(in, item, ',')) checks.push_back(item);
    }
    auto enabled = [&checks](const char* name) {
        for (const std::string& c : checks)
            if (c == name || c == "all") return true;
        return false;
    };

    SpectrumEstimate sp = spectrum(spec, cfg);
    if (enabled("spectrum")) {
        rep.add("spectrum.count", static_cast<int>(sp.points.size()));
        for (size_t i = 0; i < sp.points.size(); ++i) {
            std::string pre = "spectrum.point" + std::to_string(i);
            rep.add(pre + ".angle", sp.points[i].angle);
            rep.add(pre + ".atom", sp.points[i].atom ? 1 : 0);
            rep.add(pre + ".accumulation", sp.points[i].accumulation ? 1 : 0);
        }
    }

    for (size_t i = 0; i < spec.blaschke.size(); ++i) {
        const ZeroFamily& f = spec.blaschke[i];
        std::string pre = "blaschke" + std::to_string(i) + ".";
        double anchor = f.accumulation_angle().value_or(sp.points.empty() ? 0.0 : sp.points[0].angle);
        if (enabled("tail_ratio"))
            guarded(rep, pre + "tail_ratio",
                    [&] { add_criterion(rep, pre + "tail_ratio", tail_ratio(f.zeros(), cfg)); });
        if (enabled("step_ratio"))
            guarded(rep, pre + "step_ratio",
                    [&] { add_criterion(rep, pre + "step_ratio", step_ratio(f.zeros(), cfg)); });
        if (enabled("thin"))
            guarded(rep, pre + "thin",
                    [&] { add_criterion(rep, pre + "thin", thin_test(f.zeros(), cfg)); });
        if (enabled("separation"))
            guarded(rep, pre + "separation",
                    [&] { rep.add(pre + "separation", uniform_separation(f.zeros())); });
        if (enabled("frostman"))
            guarded(rep, pre + "frostman", [&] {
                add_criterion(rep, pre + "frostman",
                              frostman_sum(f, std::polar(1.0, anchor), cfg));
            });
        if (enabled("sum_condition"))
            guarded(rep, pre + "sum_condition", [&] {
                add_criterion(rep, pre + "sum_condition",
                              sum_condition(f, ladder_points(anchor), cfg));
            });
    }

    for (size_t i = 0; i < spec.singular.size(); ++i) {
        const AtomFamily& f = spec.singular[i];
        std::string pre = "singular" + std::to_string(i) + ".";
        if (enabled("atom_gap"))
            guarded(rep, pre + "atom_gap",
                    [&] { add_criterion(rep, pre + "atom_gap", atom_gap_ratio(f, cfg)); });
        if (enabled("atom_sum"))
            guarded(rep, pre + "atom_sum", [&] {
                add_criterion(rep, pre + "atom_sum",
                              atom_sum_condition(f, points_between_atoms(f, 64), cfg, true));
            });
    }

    if (enabled("second_derivative_ratio"))
        guarded(rep, "second_derivative_ratio", [&] {
            add_criterion(rep, "second_derivative_ratio",
                          second_derivative_ratio(spec, samples, exclusion, cfg));
        });
    if (enabled("schwarz_pick"))
        guarded(rep, "schwarz_pick", [&] {
            std::vector<Complex> pts;
            for (double r : {0.3, 0.6, 0.9, 0.99})
                for (int k = 0; k < 16; ++k)
                    pts.push_back(std::polar(r, 2.0 * kPi * k / 16 + 0.05));
            add_criterion(rep, "schwarz_pick.first", schwarz_pick_ratio(spec, 1, pts, cfg));
            add_criterion(rep, "schwarz_pick.second", schwarz_pick_ratio(spec, 2, pts, cfg));
        });
    if (enabled("one_component"))
        guarded(rep, "one_component", [&] {
            std::vector<int> ladder{res / 2, res};
            OneComponentResult oc = one_component_test(spec, eps, ladder);
            const char* verdict = oc.verdict == Connectivity::Connected      ? "connected"
                                  : oc.verdict == Connectivity::Disconnected ? "disconnected"
                                                                             : "unstable";
            rep.add("one_component.verdict", std::string(verdict));
            for (size_t i = 0; i < ladder.size(); ++i) {
                rep.add("one_component.components_" + std::to_string(ladder[i]),
                        oc.component_counts[i]);
                rep.add("one_component.truncation_ok_" + std::to_string(ladder[i]),
                        oc.truncation_ok[i] ? 1 : 0);
                if (!oc.truncation_ok[i]) code = 3;
            }
        });

    emit_report(rep, out);
    return code;
}

int run_norms(const SpecSource& src, double p, double alpha, bool alpha_set, int deriv,
              const std::string& out) {
    InnerFunctionSpec spec = resolve_spec(src);
    NormsConfig cfg;
    if (!alpha_set) alpha = p - 1.0;

    Report rep;
    GrowthProfile hardy = hardy_classification(spec, deriv, p, cfg);
    rep.add("hardy.classification", std::string(to_string(hardy.classification)));
    rep.add("hardy.value", hardy.value);
    rep.add("hardy.ceiling_j", hardy.ceiling_j);
    rep.add("hardy.step_ratio", hardy.step_ratio);
    rep.add("hardy.quadrature_converged", hardy.quadrature_converged ? 1 : 0);

    GrowthProfile berg = bergman_norm(spec, deriv, p, alpha, cfg);
    rep.add("bergman.classification", std::string(to_string(berg.classification)));
    rep.add("bergman.value", berg.value);
    rep.add("bergman.ceiling_j", berg.ceiling_j);
    rep.add("bergman.step_ratio", berg.step_ratio);
    rep.add("bergman.quadrature_converged", berg.quadrature_converged ? 1 : 0);

    EquivalenceReport eq = equivalence_report(spec, p, {}, cfg);
    rep.add("equivalence.hardy_first", std::string(to_string(eq.hardy_first)));
    rep.add("equivalence.bergman_first", std::string(to_string(eq.bergman_first)));
    rep.add("equivalence.bergman_second", std::string(to_string(eq.bergman_second)));
    rep.add("equivalence.agree", eq.agree ? 1 : 0);

    emit_report(rep, out);
    return hardy.ceiling_j < cfg.min_ceiling_j ? 3 : 0;
}

int run_examples(const std::string& name, const std::string& out) {
    if (name.empty()) {
        for (const std::string& n : builtin_example_names()) std::printf("%s\n", n.c_str());
        return 0;
    }
    std::string text = write_spec(builtin_example(name));
    if (out.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write '" + out + "'");
        f << text;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"inner function evaluation and one-component certification"};
    app.require_subcommand(1);

    SpecSource src;

    auto* eval = app.add_subcommand("eval", "evaluate the function or a derivative");
    add_spec_options(eval, src);
    std::vector<std::string> zs;
    int deriv = 0;
    eval->add_option("--z", zs, "evaluation point, e.g. 0.5+0.25i (repeatable)")->required();
    eval->add_option("--deriv", deriv, "derivative order 0, 1 or 2")
        ->check(CLI::Range(0, 2));

    auto* level = app.add_subcommand("levelset", "sample the sublevel set |f| < eps");
    add_spec_options(level, src);
    double eps = 0.5;
    int res = 256;
    std::string out, mode = "occupancy", report_path;
    level->add_option("--eps", eps, "level threshold in (0,1)")->required();
    level->add_option("--res", res, "grid resolution");
    level->add_option("--out", out, "write a plain PGM image here");
    level->add_option("--mode", mode, "occupancy or labels")
        ->check(CLI::IsMember({"occupancy", "labels"}));
    level->add_option("--report", report_path, "write the report here as well");

    auto* certify = app.add_subcommand("certify", "run connectivity and boundary criteria");
    add_spec_options(certify, src);
    std::string checks = "spectrum,tail_ratio,thin,second_derivative_ratio,one_component";
    double ceps = 0.5, exclusion = 1e-3;
    int cres = 256, samples = 4096;
    std::string cert_out;
    certify->add_option("--checks", checks, "comma list, or 'all'");
    certify->add_option("--eps", ceps, "level threshold for one_component");
    certify->add_option("--res", cres, "finest grid resolution for one_component");
    certify->add_option("--samples", samples, "boundary samples for ratio criteria");
    certify->add_option("--exclusion", exclusion, "angular exclusion around the spectrum");
    certify->add_option("--out", cert_out, "write the report here as well");

    auto* norms = app.add_subcommand("norms", "radial means and area integrability");
    add_spec_options(norms, src);
    double p = 0.5, alpha = 0.0;
    int ndigit = 1;
    std::string norms_out;
    norms->add_option("--p", p, "integrability exponent");
    auto* alpha_opt = norms->add_option("--alpha", alpha, "area weight exponent (> -1)");
    norms->add_option("--deriv", ndigit, "derivative order")->check(CLI::Range(0, 2));
    norms->add_option("--out", norms_out, "write the report here as well");

    auto* examples = app.add_subcommand("examples", "list or print builtin specs");
    std::string ex_name, ex_out;
    examples->add_option("--name", ex_name, "example to print (omit to list)");
    examples->add_option("--out", ex_out, "write the spec text here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(eval)) return run_eval(src, zs, deriv);
        if (app.got_subcommand(level)) return run_levelset(src, eps, res, out, mode, report_path);
        if (app.got_subcommand(certify))
            return run_certify(src, checks, ceps, cres, samples, exclusion, cert_out);
        if (app.got_subcommand(norms))
            return run_norms(src, p, alpha, alpha_opt->count() > 0, ndigit, norms_out);
        if (app.got_subcommand(examples)) return run_examples(ex_name, ex_out);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
