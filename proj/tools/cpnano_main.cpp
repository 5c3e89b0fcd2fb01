// cpnano command line: point evaluation, figure-curve export, threshold
// searches, summary-table regeneration, and oracle verification.
//
// Exit codes: 0 success or informative result, 1 usage error, 2 numerical
// failure (verification above tolerance, non-finite result, unreachable
// truncation).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cpnano/analysis.hpp"
#include "cpnano/figures.hpp"
#include "cpnano/format.hpp"
#include "cpnano/oracle.hpp"
#include "cpnano/pair.hpp"
#include "cpnano/plate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

class NumericalFailure : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Minimal single-line JSON writer; numbers go through format_double so the
// output is locale-independent and round-trip exact.
class JsonWriter {
  public:
    JsonWriter& field(const std::string& key, double v) {
        if (!std::isfinite(v)) {
            throw NumericalFailure("non-finite result for field '" + key + "'");
        }
        return raw(key, cpnano::format_double(v));
    }
    JsonWriter& field(const std::string& key, const std::string& v) {
        return raw(key, "\"" + v + "\"");
    }
    JsonWriter& field(const std::string& key, bool v) {
        return raw(key, v ? "true" : "false");
    }
    JsonWriter& field(const std::string& key, long v) {
        return raw(key, std::to_string(v));
    }
    JsonWriter& raw(const std::string& key, const std::string& v) {
        if (!first_) out_ += ",";
        first_ = false;
        out_ += "\"" + key + "\":" + v;
        return *this;
    }
    std::string str() const { return "{" + out_ + "}"; }

  private:
    std::string out_;
    bool first_ = true;
};

struct ParticleFlags {
    double alpha_perp = 0.0;
    double alpha_z = 0.0;
    double beta_perp = 0.0;
    double beta_z = 0.0;

    cpnano::Polarizability to_polarizability() const {
        return {alpha_perp, alpha_z, beta_perp, beta_z};
    }
};

void add_particle_flags(CLI::App* cmd, ParticleFlags& p,
                        const std::string& suffix) {
    cmd->add_option("--alpha-perp" + suffix, p.alpha_perp,
                    "transverse electric polarizability" + suffix);
    cmd->add_option("--alpha-z" + suffix, p.alpha_z,
                    "axial electric polarizability" + suffix);
    cmd->add_option("--beta-perp" + suffix, p.beta_perp,
                    "transverse magnetic polarizability" + suffix);
    cmd->add_option("--beta-z" + suffix, p.beta_z,
                    "axial magnetic polarizability" + suffix);
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output file: " + path);
    os << text;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// ---------------------------------------------------------------- eval ----

struct EvalArgs {
    std::string system;
    ParticleFlags p, p1, p2;
    double Z = 1.0;
    double T = -1.0;
    double y = -1.0;
    double particle_scale = 0.0;
    std::string format = "json";
    std::string out;
};

int run_eval(const EvalArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    if (a.T < 0.0 && a.y < 0.0) {
        throw CLI::ValidationError("eval", "one of --T or --y is required");
    }
    const cpnano::ThermalGeometry geom =
        a.y >= 0.0 ? cpnano::ThermalGeometry::from_y(a.Z, a.y, a.particle_scale)
                   : cpnano::ThermalGeometry(a.Z, a.T, a.particle_scale);

    JsonWriter w;
    w.field("command", std::string("eval")).field("system", a.system);
    double F = 0.0;
    double S = 0.0;
    if (a.system == "plate") {
        const auto p = a.p.to_polarizability();
        F = cpnano::plate_free_energy(p, geom);
        S = cpnano::plate_entropy(p, geom);
        w.field("alpha_perp", p.alpha_perp)
            .field("alpha_z", p.alpha_z)
            .field("beta_perp", p.beta_perp)
            .field("beta_z", p.beta_z);
    } else {
        const cpnano::ParticlePair pair{a.p1.to_polarizability(),
                                        a.p2.to_polarizability(), geom};
        F = cpnano::pair_free_energy(pair);
        S = cpnano::pair_entropy(pair);
        w.field("alpha_perp_1", pair.p1.alpha_perp)
            .field("alpha_z_1", pair.p1.alpha_z)
            .field("beta_perp_1", pair.p1.beta_perp)
            .field("beta_z_1", pair.p1.beta_z)
            .field("alpha_perp_2", pair.p2.alpha_perp)
            .field("alpha_z_2", pair.p2.alpha_z)
            .field("beta_perp_2", pair.p2.beta_perp)
            .field("beta_z_2", pair.p2.beta_z);
    }
    w.field("Z", geom.Z).field("T", geom.T).field("y", geom.y());
    w.field("F", F).field("S", S);
    if (a.system == "plate") {
        const auto p = a.p.to_polarizability();
        if (p.has_gamma_alpha()) {
            const double g = p.gamma_alpha();
            w.field("gamma_alpha", g)
                .field("s", cpnano::s_plate(g, geom.y()))
                .field("s_TE", cpnano::s_plate_te(g, geom.y()))
                .field("s_TM", cpnano::s_plate_tm(g, geom.y()));
        }
        if (p.has_gamma_beta()) w.field("gamma_beta", p.gamma_beta());
    }
    w.field("dipole_regime_ok", geom.dipole_regime_ok());
    w.field("wall_time_s", elapsed_s(t0));
    write_output(w.str(), a.out);
    return kExitOk;
}

// -------------------------------------------------------------- figure ----

struct FigureArgs {
    std::string id;
    std::string out;
    std::string format = "csv";
};

int run_figure(const FigureArgs& a) {
    const auto data = cpnano::figures::generate_figure(a.id);
    const std::string ext = a.format == "json" ? ".json" : ".csv";
    const std::string path = a.out.empty() ? a.id + ext : a.out;
    if (a.format == "json") {
        std::ostringstream os;
        os << "{\"id\":\"" << data.id << "\",\"columns\":[";
        for (std::size_t i = 0; i < data.columns.size(); ++i) {
            if (i) os << ',';
            os << '"' << data.columns[i] << '"';
        }
        os << "],\"rows\":[";
        for (std::size_t r = 0; r < data.rows.size(); ++r) {
            if (r) os << ',';
            os << '[';
            for (std::size_t i = 0; i < data.rows[r].size(); ++i) {
                if (i) os << ',';
                os << cpnano::format_double(data.rows[r][i]);
            }
            os << ']';
        }
        os << "]}";
        write_output(os.str(), path);
    } else {
        write_output(cpnano::figures::to_csv(data), path);
    }
    return kExitOk;
}

// ------------------------------------------------------------ critical ----

struct CriticalArgs {
    std::string system;
    std::string sector = "total";
    std::string sweep;
    ParticleFlags p1, p2;
    std::vector<double> gamma_range;
    std::vector<double> y_range{cpnano::analysis::kDefaultYLo,
                                cpnano::analysis::kDefaultYHi};
    double tol = 1e-5;
    std::string out;
};

int run_critical(const CriticalArgs& a) {
    using cpnano::analysis::SystemConfig;
    const auto t0 = std::chrono::steady_clock::now();
    SystemConfig config;
    if (a.system == "plate") {
        config.kind = SystemConfig::Kind::plate;
        config.sweep = SystemConfig::Sweep::plate_gamma;
        if (a.sector == "te") config.sector = SystemConfig::PlateSector::te;
        else if (a.sector == "tm") config.sector = SystemConfig::PlateSector::tm;
        else config.sector = SystemConfig::PlateSector::total;
    } else {
        config.kind = SystemConfig::Kind::pair;
        config.p1 = a.p1.to_polarizability();
        config.p2 = a.p2.to_polarizability();
        if (a.sweep == "alpha-both") config.sweep = SystemConfig::Sweep::alpha_both;
        else if (a.sweep == "beta-both") config.sweep = SystemConfig::Sweep::beta_both;
        else if (a.sweep == "alpha-1") config.sweep = SystemConfig::Sweep::alpha_1;
        else if (a.sweep == "alpha-2") config.sweep = SystemConfig::Sweep::alpha_2;
        else if (a.sweep == "beta-1") config.sweep = SystemConfig::Sweep::beta_1;
        else if (a.sweep == "beta-2") config.sweep = SystemConfig::Sweep::beta_2;
        else throw CLI::ValidationError("critical", "--sweep is required for pair systems");
    }

    const auto result = cpnano::analysis::critical_anisotropy(
        config, a.gamma_range[0], a.gamma_range[1], a.tol, a.y_range[0],
        a.y_range[1]);

    JsonWriter w;
    w.field("command", std::string("critical"))
        .field("system", a.system)
        .field("sweep", a.sweep.empty() ? std::string("gamma") : a.sweep)
        .field("gamma_lo", a.gamma_range[0])
        .field("gamma_hi", a.gamma_range[1])
        .field("tol", a.tol);
    if (result) {
        w.field("status", std::string("ok"))
            .field("gamma_star", result->value)
            .field("bracket_lo", result->bracket_lo)
            .field("bracket_hi", result->bracket_hi)
            .field("objective_at_value", result->objective_at_value)
            .field("iterations", static_cast<long>(result->iterations));
    } else {
        w.field("status", std::string("none-in-range"));
    }
    w.field("wall_time_s", elapsed_s(t0));
    write_output(w.str(), a.out);
    return kExitOk;
}

// --------------------------------------------------------------- table ----

int run_table(const std::string& out_path) {
    const auto rows = cpnano::analysis::classify_table();

    std::printf("%-16s %-52s %-28s %s\n", "system", "published",
                "computed", "match");
    bool all_match = true;
    std::ostringstream json;
    json << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        std::string computed;
        if (r.thresholds.empty()) {
            computed = r.always ? "S<0 always" : "no negative region";
        } else {
            for (const auto& t : r.thresholds) {
                if (!computed.empty()) computed += ", ";
                char buf[64];
                std::snprintf(buf, sizeof(buf), "%s*=%.4f", t.parameter.c_str(),
                              t.computed);
                computed += buf;
            }
        }
        std::printf("%-16s %-52s %-28s %s\n", r.label.c_str(),
                    r.published.c_str(), computed.c_str(),
                    r.match ? "yes" : "NO");
        all_match = all_match && r.match;

        if (i) json << ",";
        json << "{\"label\":\"" << r.label << "\",\"published\":\""
             << r.published << "\",\"match\":" << (r.match ? "true" : "false");
        if (r.thresholds.empty()) {
            json << ",\"always\":" << (r.always ? "true" : "false");
        } else {
            json << ",\"thresholds\":[";
            for (std::size_t k = 0; k < r.thresholds.size(); ++k) {
                const auto& t = r.thresholds[k];
                if (k) json << ",";
                json << "{\"parameter\":\"" << t.parameter
                     << "\",\"computed\":" << cpnano::format_double(t.computed)
                     << ",\"published\":" << cpnano::format_double(t.published)
                     << ",\"tolerance\":" << cpnano::format_double(t.tolerance)
                     << "}";
            }
            json << "]";
        }
        json << "}";
    }
    json << "]";
    if (!out_path.empty()) write_output(json.str(), out_path);
    if (!all_match) {
        throw NumericalFailure("table row(s) failed to match published values");
    }
    return kExitOk;
}

// -------------------------------------------------------------- verify ----

struct VerifyArgs {
    double tol = 1e-9;
    std::vector<double> gammas{0.0, 0.5, 1.0, 2.0};
    std::vector<double> ys{0.2, 1.0, 5.0, 20.0};
    std::string out;
};

int run_verify(const VerifyArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    const double sum_tol = std::fmin(1e-13, a.tol * 1e-2);
    double max_dev = 0.0;
    std::string worst;
    long points = 0;

    for (const double ga : a.gammas) {
        for (const double gb : a.gammas) {
            for (const double y : a.ys) {
                // plate: both polarizability sectors active
                {
                    const cpnano::Polarizability p{ga, 1.0, 0.6 * gb, 0.6};
                    const auto geom = cpnano::ThermalGeometry::from_y(1.0, y);
                    const double closed = cpnano::plate_free_energy(p, geom);
                    const double oracle =
                        cpnano::oracle::plate_free_energy_oracle(p, geom,
                                                                 sum_tol);
                    const double dev = std::fabs(closed - oracle) /
                                       std::fmax(std::fabs(closed), 1e-300);
                    ++points;
                    if (dev > max_dev) {
                        max_dev = dev;
                        worst = "plate ga=" + std::to_string(ga) +
                                " gb=" + std::to_string(gb) +
                                " y=" + std::to_string(y);
                    }
                }
                // pair: EE + MM + EM cross sectors active
                {
                    const cpnano::Polarizability p1{ga, 1.0, -0.5 * gb, -0.5};
                    const cpnano::Polarizability p2{0.7 * ga, 0.7, 0.4 * gb, 0.4};
                    const cpnano::ParticlePair pair{
                        p1, p2, cpnano::ThermalGeometry::from_y(1.0, y)};
                    const double closed = cpnano::pair_free_energy(pair);
                    const double oracle =
                        cpnano::oracle::pair_free_energy_oracle(pair, sum_tol);
                    const double dev = std::fabs(closed - oracle) /
                                       std::fmax(std::fabs(closed), 1e-300);
                    ++points;
                    if (dev > max_dev) {
                        max_dev = dev;
                        worst = "pair ga=" + std::to_string(ga) +
                                " gb=" + std::to_string(gb) +
                                " y=" + std::to_string(y);
                    }
                }
            }
        }
    }

    const bool te_zero =
        cpnano::oracle::te_mode_zero_check(cpnano::ThermalGeometry(1.0, 0.1));
    const bool pass = max_dev <= a.tol && te_zero;
    JsonWriter w;
    w.field("command", std::string("verify"))
        .field("points", points)
        .field("max_relative_deviation", max_dev)
        .field("worst_case", worst)
        .field("tol", a.tol)
        .field("te_mode_zero", te_zero)
        .field("pass", pass)
        .field("wall_time_s", elapsed_s(t0));
    write_output(w.str(), a.out);
    if (!pass) {
        throw NumericalFailure("oracle deviation above tolerance");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Casimir-Polder free energies and entropies of anisotropic "
        "nanoparticles (plate and two-particle systems)"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file mirroring the flags");

    EvalArgs eval_args;
    auto* eval = app.add_subcommand(
        "eval", "evaluate F, S and scaled entropies at one point");
    eval->configurable();
    eval->add_option("--system", eval_args.system, "plate or pair")
        ->required()
        ->check(CLI::IsMember({"plate", "pair"}));
    add_particle_flags(eval, eval_args.p, "");
    add_particle_flags(eval, eval_args.p1, "-1");
    add_particle_flags(eval, eval_args.p2, "-2");
    eval->add_option("--Z", eval_args.Z, "separation (natural units)");
    eval->add_option("--T", eval_args.T, "temperature (natural units)");
    eval->add_option("--y", eval_args.y, "reduced temperature y = 4 pi Z T");
    eval->add_option("--particle-scale", eval_args.particle_scale,
                     "advisory particle size for the dipole-regime marker");
    eval->add_option("--format", eval_args.format)
        ->check(CLI::IsMember({"json"}));
    eval->add_option("--out", eval_args.out, "output path (default stdout)");

    FigureArgs figure_args;
    auto* figure = app.add_subcommand(
        "figure", "write the curve data of one figure preset as CSV");
    figure->configurable();
    figure->add_option("id", figure_args.id, "preset id, fig1..fig12")
        ->required();
    figure->add_option("--out", figure_args.out,
                       "output path (default <id>.csv, '-' for stdout)");
    figure->add_option("--format", figure_args.format)
        ->check(CLI::IsMember({"csv", "json"}));

    CriticalArgs critical_args;
    auto* critical = app.add_subcommand(
        "critical", "locate a critical anisotropy by nested bisection");
    critical->configurable();
    critical->add_option("--system", critical_args.system)
        ->required()
        ->check(CLI::IsMember({"plate", "pair"}));
    critical->add_option("--sector", critical_args.sector,
                         "plate entropy sector")
        ->check(CLI::IsMember({"total", "te", "tm"}));
    critical->add_option("--sweep", critical_args.sweep,
                         "swept anisotropy for pair systems")
        ->check(CLI::IsMember({"alpha-both", "beta-both", "alpha-1", "alpha-2",
                               "beta-1", "beta-2"}));
    add_particle_flags(critical, critical_args.p1, "-1");
    add_particle_flags(critical, critical_args.p2, "-2");
    critical->add_option("--gamma-range", critical_args.gamma_range)
        ->expected(2)
        ->required();
    critical->add_option("--y-range", critical_args.y_range)->expected(2);
    critical->add_option("--tol", critical_args.tol, "bisection tolerance");
    critical->add_option("--out", critical_args.out);

    std::string table_out;
    auto* table = app.add_subcommand(
        "table", "regenerate the negative-entropy summary table");
    table->configurable();
    table->add_option("--out", table_out, "also write the rows as JSON");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand(
        "verify", "compare closed forms against Matsubara-sum oracles");
    verify->configurable();
    verify->add_option("--tol", verify_args.tol, "maximum relative deviation");
    verify->add_option("--gammas", verify_args.gammas, "anisotropy grid");
    verify->add_option("--ys", verify_args.ys, "reduced-temperature grid");
    verify->add_option("--out", verify_args.out);

    try {
        app.parse(argc, argv);
        if (eval->parsed()) return run_eval(eval_args);
        if (figure->parsed()) return run_figure(figure_args);
        if (critical->parsed()) return run_critical(critical_args);
        if (table->parsed()) return run_table(table_out);
        if (verify->parsed()) return run_verify(verify_args);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const NumericalFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
