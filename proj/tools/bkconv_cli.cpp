// bkconv command-line front end: eval / verify / audit.
#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bkconv/admissibility.hpp"
#include "bkconv/besselgen.hpp"
#include "bkconv/operator.hpp"
#include "bkconv/report.hpp"
#include "bkconv/series.hpp"
#include "bkconv/subordination.hpp"

namespace {

using namespace bkconv;

struct RunConfig {
    int N = 48;
    std::vector<double> grid_radii = {0.5, 0.9, 0.99, 0.999};
    int grid_angles = 1024;
    double identity_tol = 1e-11;
    double implication_tol = 1e-9;
    double denominator_guard = 1e-6;
    unsigned seed = 1;
    ReportFormat format = ReportFormat::Table;
    std::string out;
    double M = 1.0;
    Complex p = 0.5, b = 1.0, c = 1.0;
    bool kappa_given = false;
    Complex kappa = 0.0;

    BesselParams params() const {
        if (kappa_given) return BesselParams::from_kappa(kappa, c);
        return BesselParams(p, b, c);
    }
    DiskGrid grid() const { return DiskGrid(grid_radii, grid_angles); }
};

Complex parse_complex(const std::string& s) {
    double re = 0.0, im = 0.0;
    if (std::sscanf(s.c_str(), "%lf,%lf", &re, &im) >= 1) return Complex(re, im);
    throw DomainError("cannot parse complex number: " + s);
}

ReportFormat parse_format(const std::string& s) {
    if (s == "table") return ReportFormat::Table;
    if (s == "json-lines") return ReportFormat::JsonLines;
    if (s == "csv") return ReportFormat::Csv;
    throw DomainError("unknown format: " + s);
}

void load_config(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open config file: " + path);
    nlohmann::json j;
    in >> j;
    if (j.contains("N")) cfg.N = j["N"].get<int>();
    if (j.contains("grid")) {
        const auto& g = j["grid"];
        if (g.contains("radii")) cfg.grid_radii = g["radii"].get<std::vector<double>>();
        if (g.contains("angles")) cfg.grid_angles = g["angles"].get<int>();
    }
    if (j.contains("tolerances")) {
        const auto& t = j["tolerances"];
        if (t.contains("identity")) cfg.identity_tol = t["identity"].get<double>();
        if (t.contains("implication")) cfg.implication_tol = t["implication"].get<double>();
        if (t.contains("guard")) cfg.denominator_guard = t["guard"].get<double>();
    }
    if (j.contains("seed")) cfg.seed = j["seed"].get<unsigned>();
    if (j.contains("format")) cfg.format = parse_format(j["format"].get<std::string>());
    if (j.contains("M")) cfg.M = j["M"].get<double>();
    if (j.contains("params")) {
        const auto& p = j["params"];
        auto get = [&](const char* key, Complex& dst) {
            if (!p.contains(key)) return;
            if (p[key].is_string())
                dst = parse_complex(p[key].get<std::string>());
            else
                dst = Complex(p[key].get<double>(), 0.0);
        };
        get("p", cfg.p);
        get("b", cfg.b);
        get("c", cfg.c);
        if (p.contains("kappa")) {
            cfg.kappa_given = true;
            Complex k = 0.0;
            get("kappa", k);
            cfg.kappa = k;
        }
    }
    if (cfg.identity_tol <= 0.0 || cfg.implication_tol <= 0.0 || cfg.denominator_guard <= 0.0)
        throw DomainError("config: all tolerances must be positive");
}

unsigned thread_cap() {
    unsigned cap = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("BESSEL_SUBORD_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) cap = std::min<unsigned>(cap, unsigned(v));
    }
    return cap;
}

// Runs jobs[0..n) on a capped pool; results land at their job index, so the
// emitted order is independent of scheduling.
template <class Job>
void run_pool(std::vector<Job>& jobs) {
    unsigned n_threads = std::min<std::size_t>(thread_cap(), jobs.size());
    if (n_threads <= 1) {
        for (auto& j : jobs) j();
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
                jobs[i]();
        });
    for (auto& t : pool) t.join();
}

std::string timestamp_line() {
    std::time_t now = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return std::string("# generated ") + buf;
}

std::ostream& open_sink(const RunConfig& cfg, std::ofstream& file) {
    if (cfg.out.empty()) return std::cout;
    file.open(cfg.out);
    if (!file) throw DomainError("cannot open output file: " + cfg.out);
    return file;
}

TruncatedSeries seeded_random_class_a(std::mt19937& rng, int order, double amp) {
    std::uniform_real_distribution<double> u(-amp, amp);
    std::vector<Complex> c(std::size_t(order) + 1);
    for (auto& a : c) a = Complex(u(rng), u(rng));
    c[0] = 0.0;
    c[1] = 1.0;
    return TruncatedSeries(std::move(c));
}

std::vector<TruncatedSeries> sweep_inputs(unsigned seed, int order) {
    std::vector<TruncatedSeries> fs;
    fs.push_back(TruncatedSeries::identity_convolver(order));
    std::vector<Complex> half(std::size_t(order) + 1, 0.0);
    half[1] = 1.0;
    half[2] = 0.5;
    fs.push_back(TruncatedSeries(std::move(half)));
    std::mt19937 rng(seed);
    for (int i = 0; i < 5; ++i) fs.push_back(seeded_random_class_a(rng, order, 0.3));
    return fs;
}

bool case_from_name(const std::string& name, CaseId& out) {
    for (CaseId id : {CaseId::C2_4, CaseId::C2_5, CaseId::C2_8, CaseId::C2_11, CaseId::C2_12,
                      CaseId::chain_2_111, CaseId::chain_4_10, CaseId::trig_chain_sin,
                      CaseId::trig_chain_sinh}) {
        if (name == case_name(id)) {
            out = id;
            return true;
        }
    }
    return false;
}

int cmd_eval(const RunConfig& cfg, const std::vector<std::string>& z_args) {
    BesselParams bp = cfg.params();
    TruncatedSeries phi = phi_series(bp, cfg.N);
    std::ofstream file;
    std::ostream& os = open_sink(cfg, file);
    os << timestamp_line() << '\n';
    os << "phi with p=" << format_complex(bp.p) << " b=" << format_complex(bp.b)
       << " c=" << format_complex(bp.c) << " (kappa=" << format_complex(bp.kappa()) << ")\n";

    // closed form matching this (kappa, c), if any
    bool have_cf = false;
    ClosedForm cf{};
    for (ClosedForm k : {ClosedForm::sin_half, ClosedForm::cos_negh, ClosedForm::sin_3h,
                         ClosedForm::sinh_half, ClosedForm::cosh_negh, ClosedForm::sinh_3h}) {
        if (std::abs(closed_form_kappa(k) - bp.kappa()) < 1e-12 &&
            std::abs(closed_form_c(k) - bp.c) < 1e-12) {
            have_cf = true;
            cf = k;
        }
    }

    for (const std::string& zs : z_args) {
        Complex z = parse_complex(zs);
        Complex via_series = evaluate(phi, z);
        os << "z=" << format_complex(z) << "  phi=" << format_complex(via_series);
        if (have_cf) {
            Complex via_cf = closed_form_eval(cf, z);
            double scale = std::max({std::abs(via_series), std::abs(via_cf), 1.0});
            bool match = std::abs(via_series - via_cf) / scale < 1e-10;
            os << "  closed_form=" << format_complex(via_cf)
               << (match ? "  [matching]" : "  [MISMATCH]");
        }
        os << '\n';
    }
    return 0;
}

struct VerifyJobResult {
    ReportRecord record;
    std::exception_ptr error;
};

int cmd_verify(const RunConfig& cfg, const std::vector<std::string>& case_names,
               const std::string& sweep) {
    if (case_names.empty()) {
        std::cerr << "verify: no cases requested (use --case)\n";
        return 2;
    }
    DiskGrid grid = cfg.grid();

    struct JobSpec {
        CaseId id;
        BesselParams params;
        TruncatedSeries f;
    };
    std::vector<JobSpec> specs;
    std::vector<ReportRecord> residual_rows;

    for (const std::string& name : case_names) {
        if (name == "ode_residual") {
            for (double pv : {0.5, 1.0, 2.0})
                for (double bv : {1.0, 2.0})
                    for (double cv : {1.0, -1.0}) {
                        BesselParams bp(pv, bv, cv);
                        double res = ode_residual(bp, 30);
                        ReportRecord r;
                        r.case_name = "ode_residual";
                        r.params = format_params(bp);
                        r.premise_sup = res;
                        r.conclusion_sup = res;
                        r.bound = cfg.identity_tol;
                        r.margin = cfg.identity_tol - res;
                        r.worst_z = 0.0;
                        r.pass = res < cfg.identity_tol;
                        residual_rows.push_back(std::move(r));
                    }
            continue;
        }
        CaseId id;
        if (!case_from_name(name, id)) {
            std::cerr << "verify: unknown case '" << name << "'\n";
            return 2;
        }
        bool trig = (id == CaseId::trig_chain_sin || id == CaseId::trig_chain_sinh);
        if (trig) {
            BesselParams bp =
                BesselParams::from_kappa(0.5, id == CaseId::trig_chain_sin ? 1.0 : -1.0);
            specs.push_back({id, bp, TruncatedSeries::identity_convolver(cfg.N)});
            continue;
        }
        if (sweep == "default") {
            auto inputs = sweep_inputs(cfg.seed, cfg.N);
            for (Complex kap : {Complex(2.5, 0.0), Complex(4.0, 0.0), Complex(1.5, 0.5)})
                for (Complex cc : {Complex(1.0, 0.0), Complex(-1.0, 0.0), Complex(0.5, 0.5)})
                    for (const auto& f : inputs)
                        specs.push_back({id, BesselParams::from_kappa(kap, cc), f});
        } else if (sweep.empty()) {
            specs.push_back({id, cfg.params(), TruncatedSeries::identity_convolver(cfg.N)});
        } else {
            std::cerr << "verify: unknown sweep '" << sweep << "'\n";
            return 2;
        }
    }

    std::vector<VerifyJobResult> results(specs.size());
    std::vector<std::function<void()>> jobs;
    jobs.reserve(specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i)
        jobs.emplace_back([&, i] {
            try {
                VerifyCase vc{specs[i].id, specs[i].params, cfg.M, specs[i].f, grid};
                results[i].record = make_record(verify_implication(vc),
                                                format_params(specs[i].params));
            } catch (...) {
                results[i].error = std::current_exception();
            }
        });
    run_pool(jobs);

    for (const auto& r : results)
        if (r.error) {
            try {
                std::rethrow_exception(r.error);
            } catch (const std::exception& e) {
                std::cerr << "verify: " << e.what() << '\n';
            }
            return 2;
        }

    std::ofstream file;
    std::ostream& os = open_sink(cfg, file);
    os << timestamp_line() << '\n';
    if (cfg.format == ReportFormat::Csv) os << kCsvHeader << '\n';
    if (cfg.format == ReportFormat::Table) write_table_header(os);
    bool all_pass = true;
    for (const auto& r : results) {
        write_record(os, r.record, cfg.format);
        all_pass = all_pass && r.record.pass;
    }
    for (const auto& r : residual_rows) {
        write_record(os, r, cfg.format);
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

int cmd_audit(const RunConfig& cfg, const std::string& phi_name, const std::string& cls_name) {
    Functional3 phi;
    if (phi_name == "v")
        phi = Functional3::v();
    else if (phi_name == "v-u")
        phi = Functional3::v_minus_u();
    else if (phi_name == "v-1")
        phi = Functional3::v_minus_1();
    else {
        std::cerr << "audit: unknown functional '" << phi_name << "'\n";
        return 2;
    }
    AdmissibilityClass cls;
    if (cls_name == "H")
        cls = AdmissibilityClass::H;
    else if (cls_name == "H1")
        cls = AdmissibilityClass::H1;
    else if (cls_name == "H2")
        cls = AdmissibilityClass::H2;
    else {
        std::cerr << "audit: unknown class '" << cls_name << "'\n";
        return 2;
    }

    Complex kappa = cfg.kappa_given ? cfg.kappa : cfg.params().kappa();
    double M = cfg.M;
    double ak = std::abs(kappa);

    // target region for each (class, functional) pairing
    RegionSpec region = RegionSpec::disk(0.0, M);
    if (cls == AdmissibilityClass::H && phi_name == "v-u")
        region = RegionSpec::disk(0.0, M / ak);
    else if (cls == AdmissibilityClass::H1 && phi_name == "v-u")
        region = RegionSpec::disk(0.0, M * M / (std::abs(kappa - 1.0) * (1.0 + M)));
    else if (cls == AdmissibilityClass::H2 && phi_name == "v-u")
        region = RegionSpec::disk(0.0, M / ak);
    else if (cls == AdmissibilityClass::H2 && phi_name == "v-1")
        region = RegionSpec::disk(0.0, M);

    AuditReport rep = audit(phi, region, cls, M, kappa);

    std::ofstream file;
    std::ostream& os = open_sink(cfg, file);
    os << timestamp_line() << '\n';
    double mk = rep.overall_min_k();
    if (cfg.format == ReportFormat::JsonLines) {
        nlohmann::json j;
        j["functional"] = rep.functional_name;
        j["class"] = cls_name;
        j["M"] = M;
        j["kappa"] = format_complex(kappa);
        j["points_checked"] = rep.points_checked;
        j["points_skipped"] = rep.points_skipped;
        j["violations"] = rep.violations.size();
        if (std::isnan(mk))
            j["min_k"] = nullptr;
        else
            j["min_k"] = mk;
        os << j.dump() << '\n';
    } else {
        os << "functional=" << rep.functional_name << " class=" << cls_name << " M=" << M
           << " kappa=" << format_complex(kappa) << '\n';
        os << "points_checked=" << rep.points_checked
           << " points_skipped=" << rep.points_skipped
           << " violations=" << rep.violations.size() << '\n';
        if (std::isnan(mk))
            os << "min_k=none\n";
        else
            os << "min_k=" << mk << '\n';
        if (cfg.format == ReportFormat::Csv && !rep.violations.empty())
            write_audit_violations_csv(os, rep);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Bessel convolution operator: evaluation and verification"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path, p_s, b_s, c_s, kappa_s, format_s, sweep, phi_name = "v",
                             cls_name = "H";
    std::vector<std::string> z_args, case_names;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file");
        sub->add_option("--p", p_s, "order parameter p (re or re,im)");
        sub->add_option("--b", b_s, "parameter b (re or re,im)");
        sub->add_option("--c", c_s, "parameter c (re or re,im)");
        sub->add_option("--kappa", kappa_s, "kappa = p + (b+1)/2 directly (re or re,im)");
        sub->add_option("--M", cfg.M, "disk radius M");
        sub->add_option("--N", cfg.N, "truncation order");
        sub->add_option("--grid-radii", cfg.grid_radii, "grid radii in (0, 0.999]");
        sub->add_option("--grid-angles", cfg.grid_angles, "angular samples per radius");
        sub->add_option("--seed", cfg.seed, "seed for the random input family");
        sub->add_option("--format", format_s, "table | json-lines | csv");
        sub->add_option("--out", cfg.out, "output file (default stdout)");
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate phi at given points");
    add_common(eval);
    eval->add_option("--z", z_args, "evaluation points (re or re,im)")->required();

    CLI::App* verify = app.add_subcommand("verify", "run implication/residual checks");
    add_common(verify);
    verify->add_option("--case", case_names, "case names, or ode_residual");
    verify->add_option("--sweep", sweep, "sweep name (default)");

    CLI::App* auditc = app.add_subcommand("audit", "sample an admissibility boundary set");
    add_common(auditc);
    auditc->add_option("--phi", phi_name, "functional: v | v-u | v-1");
    auditc->add_option("--class", cls_name, "boundary class: H | H1 | H2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) load_config(config_path, cfg);
        // flags override config
        if (!p_s.empty()) cfg.p = parse_complex(p_s);
        if (!b_s.empty()) cfg.b = parse_complex(b_s);
        if (!c_s.empty()) cfg.c = parse_complex(c_s);
        if (!kappa_s.empty()) {
            cfg.kappa_given = true;
            cfg.kappa = parse_complex(kappa_s);
        }
        if (!format_s.empty()) cfg.format = parse_format(format_s);
        if (cfg.identity_tol <= 0.0 || cfg.implication_tol <= 0.0 ||
            cfg.denominator_guard <= 0.0 || cfg.M <= 0.0)
            throw DomainError("tolerances and M must be positive");

        if (eval->parsed()) return cmd_eval(cfg, z_args);
        if (verify->parsed()) return cmd_verify(cfg, case_names, sweep);
        if (auditc->parsed()) return cmd_audit(cfg, phi_name, cls_name);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
