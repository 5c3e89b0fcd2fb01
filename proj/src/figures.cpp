#include "cpnano/figures.hpp"

#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cpnano/format.hpp"
#include "cpnano/pair.hpp"
#include "cpnano/plate.hpp"

namespace cpnano::figures {

namespace {

std::string gtag(double g) {
    std::ostringstream os;
    os << g;
    return os.str();
}

Curve plate_total(double g) {
    return {"s_g" + gtag(g), [g](double y) { return s_plate(g, y); }};
}
Curve plate_tm(double g) {
    return {"sH_g" + gtag(g), [g](double y) { return s_plate_tm(g, y); }};
}
Curve plate_te(double g) {
    return {"sE_g" + gtag(g), [g](double y) { return s_plate_te(g, y); }};
}

// Pair curves plot Z^6 S / (alpha_z^1)^2; all presets use alpha_z = 1.
Curve pair_curve(std::string label, Polarizability p1, Polarizability p2) {
    return {std::move(label),
            [p1, p2](double y) { return pair_scaled_entropy(p1, p2, y); }};
}

std::vector<FigurePreset> build_presets() {
    std::vector<FigurePreset> all;

    {
        FigurePreset f;
        f.id = "fig1";
        f.description =
            "Scaled entropy s(gamma, y) of an electrically polarizable "
            "nanoparticle above a conducting plate, gamma = 0, 1/2, 1, 2";
        f.zt_max = 1.0;
        for (double g : {0.0, 0.5, 1.0, 2.0}) f.curves.push_back(plate_total(g));
        all.push_back(std::move(f));
    }
    {
        FigurePreset f;
        f.id = "fig2";
        f.description =
            "Total, TM and TE plate entropies for gamma = 0, 1/2, 1, 2";
        f.zt_max = 1.0;
        for (double g : {0.0, 0.5, 1.0, 2.0}) {
            f.curves.push_back(plate_total(g));
            f.curves.push_back(plate_tm(g));
            f.curves.push_back(plate_te(g));
        }
        all.push_back(std::move(f));
    }
    {
        FigurePreset f;
        f.id = "fig3";
        f.description =
            "TM entropy turning negative for large anisotropy: gamma = 1, 10";
        f.zt_max = 1.0;
        for (double g : {1.0, 10.0}) {
            f.curves.push_back(plate_total(g));
            f.curves.push_back(plate_te(g));
            f.curves.push_back(plate_tm(g));
        }
        all.push_back(std::move(f));
    }
    {
        FigurePreset f;
        f.id = "fig4";
        f.description =
            "Pair EE entropy s^EE(gamma, y) for gamma = gamma_1 gamma_2 = 0, 1, 2";
        f.zt_max = 0.8;
        for (double g : {0.0, 1.0, 2.0}) {
            f.curves.push_back(
                {"sEE_g" + gtag(g), [g](double y) { return s_pair_ee(g, y); }});
        }
        all.push_back(std::move(f));
    }
    {
        FigurePreset f;
        f.id = "fig5";
        f.description =
            "Identical isotropic nanoparticles, ratio r = beta/alpha = "
            "1, 0, -1/8, -1/2, -2";
        f.zt_max = 0.8;
        for (double r : {1.0, 0.0, -0.125, -0.5, -2.0}) {
            Polarizability p{1.0, 1.0, r, r};
            f.curves.push_back(pair_curve("s_r" + gtag(r), p, p));
        }
        all.push_back(std::move(f));
    }
    {
        FigurePreset f;
        f.id = "fig6";
        f.description =
            "Identical particles, alpha_z = beta_z, gamma_beta = 1, electric "
            "anisotropy gamma_alpha = 0, 1, 2, 4";
        f.zt_max = 0.8;
        for (double g : {0.0, 1.0, 2.0, 4.0}) {
            Polarizability p{g, 1.0, 1.0, 1.0};
            f.curves.push_back(pair_curve("s_ga" + gtag(g), p, p));
        }
        all.push_back(std::move(f));
    }
    {
        FigurePreset f;
        f.id = "fig7";
        f.description =
            "Identical particles with equal electric and magnetic "
            "polarizabilities and equal anisotropies gamma = 0, 1, 2, 4";
        f.zt_max = 0.8;
        for (double g : {0.0, 1.0, 2.0, 4.0}) {
            Polarizability p{g, 1.0, g, 1.0};
            f.curves.push_back(pair_curve("s_g" + gtag(g), p, p));
        }
        all.push_back(std::move(f));
    }
    {
        FigurePreset f;
        f.id = "fig8";
        f.description =
            "Two conducting spheres (beta_z = -alpha_z/2), electrically "
            "isotropic, magnetic anisotropy gamma_beta = 0, 1, 2";
        f.zt_max = 0.8;
        for (double g : {0.0, 1.0, 2.0}) {
            Polarizability p{1.0, 1.0, -0.5 * g, -0.5};
            f.curves.push_back(pair_curve("s_gb" + gtag(g), p, p));
        }
        all.push_back(std::move(f));
    }
    {
        FigurePreset f;
        f.id = "fig9";
        f.description =
            "Two conducting spheres, magnetically isotropic, electric "
            "anisotropy gamma_alpha = 0, 1, 2";
        f.zt_max = 0.8;
        for (double g : {0.0, 1.0, 2.0}) {
            Polarizability p{g, 1.0, -0.5, -0.5};
            f.curves.push_back(pair_curve("s_ga" + gtag(g), p, p));
        }
        all.push_back(std::move(f));
    }
    {
        FigurePreset f;
        f.id = "fig10";
        f.description =
            "Two conducting spheres near the critical electric anisotropy: "
            "gamma_alpha = 0.6, 0.743, 0.8, 1";
        f.zt_max = 0.8;
        for (double g : {0.6, 0.743, 0.8, 1.0}) {
            Polarizability p{g, 1.0, -0.5, -0.5};
            f.curves.push_back(pair_curve("s_ga" + gtag(g), p, p));
        }
        all.push_back(std::move(f));
    }
    {
        FigurePreset f;
        f.id = "fig11";
        f.description =
            "Conducting sphere vs Drude sphere (same alpha, beta_2 = 0), "
            "common electric anisotropy gamma_alpha = 0.8, 0.91, 0.95, 1, 1.1";
        f.zt_max = 0.8;
        for (double g : {0.8, 0.91, 0.95, 1.0, 1.1}) {
            Polarizability pc{g, 1.0, -0.5, -0.5};
            Polarizability drude{g, 1.0, 0.0, 0.0};
            f.curves.push_back(pair_curve("s_ga" + gtag(g), pc, drude));
        }
        all.push_back(std::move(f));
    }
    {
        FigurePreset f;
        f.id = "fig12";
        f.description =
            "Conducting sphere vs Drude sphere, electrically isotropic, "
            "magnetic anisotropy gamma_beta1 = 0.5, 0.66, 0.8, 1, 1.1";
        f.zt_max = 0.8;
        for (double g : {0.5, 0.66, 0.8, 1.0, 1.1}) {
            Polarizability pc{1.0, 1.0, -0.5 * g, -0.5};
            Polarizability drude{1.0, 1.0, 0.0, 0.0};
            f.curves.push_back(pair_curve("s_gb1_" + gtag(g), pc, drude));
        }
        all.push_back(std::move(f));
    }
    return all;
}

const std::vector<FigurePreset>& presets() {
    static const std::vector<FigurePreset> all = build_presets();
    return all;
}

}  // namespace

std::vector<std::string> figure_ids() {
    std::vector<std::string> ids;
    for (const auto& p : presets()) ids.push_back(p.id);
    return ids;
}

const FigurePreset& figure_preset(const std::string& id) {
    for (const auto& p : presets()) {
        if (p.id == id) return p;
    }
    throw std::invalid_argument("unknown figure id: " + id);
}

FigureData generate_figure(const std::string& id) {
    const FigurePreset& preset = figure_preset(id);
    FigureData data;
    data.id = id;
    data.columns.push_back("ZT");
    for (const auto& c : preset.curves) data.columns.push_back(c.label);
    data.rows.reserve(static_cast<std::size_t>(preset.rows));
    for (int i = 0; i < preset.rows; ++i) {
        const double zt = preset.zt_max * i / (preset.rows - 1);
        const double y = 4.0 * std::numbers::pi * zt;
        std::vector<double> row;
        row.reserve(preset.curves.size() + 1);
        row.push_back(zt);
        for (const auto& c : preset.curves) row.push_back(c.fn(y));
        data.rows.push_back(std::move(row));
    }
    return data;
}

void write_csv(const FigureData& data, std::ostream& os) {
    for (std::size_t i = 0; i < data.columns.size(); ++i) {
        if (i) os << ',';
        os << data.columns[i];
    }
    os << '\n';
    for (const auto& row : data.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << format_double(row[i]);
        }
        os << '\n';
    }
}

std::string to_csv(const FigureData& data) {
    std::ostringstream os;
    write_csv(data, os);
    return os.str();
}

}  // namespace cpnano::figures
