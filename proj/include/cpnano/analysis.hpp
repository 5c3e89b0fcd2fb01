#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cpnano/types.hpp"

namespace cpnano::analysis {

/// Result of a bracketed search: an entropy zero crossing in y or a critical
/// anisotropy gamma*.
struct CriticalResult {
    enum class Kind { zero_crossing_y, critical_gamma };
    Kind kind = Kind::zero_crossing_y;
    double value = 0.0;               ///< located root
    double bracket_lo = 0.0;          ///< final bracket
    double bracket_hi = 0.0;
    double objective_at_value = 0.0;  ///< residual of the objective at value
    int iterations = 0;
};

struct MinResult {
    double y_min = 0.0;
    double value = 0.0;
};

/// Default y search window.  Below the lower edge the y^3/y^5 expansions
/// classify the sign analytically; above the upper edge every entropy has
/// reached its asymptote to machine precision.
inline constexpr double kDefaultYLo = 0.05;
inline constexpr double kDefaultYHi = 50.0;
inline constexpr int kDefaultGrid = 400;

/// Scan a geometric y-grid, bracket every sign change, and refine each root
/// by bisection to |bracket| <= tol.  Roots are returned in ascending order;
/// no sign change yields an empty list.  Non-finite curve values raise
/// std::runtime_error.
std::vector<CriticalResult> zero_crossings(
    const std::function<double(double)>& curve, double y_lo, double y_hi,
    double tol, int grid_points = kDefaultGrid);

/// Grid scan plus golden-section refinement of the best bracket; returns the
/// global-on-grid minimizer and value.
MinResult min_entropy(const std::function<double(double)>& curve, double y_lo,
                      double y_hi, int grid_points = kDefaultGrid);

/// One system whose entropy-vs-y curve depends on a single swept anisotropy.
struct SystemConfig {
    enum class Kind { plate, pair };
    /// Which plate entropy the curve refers to (plate systems only).
    enum class PlateSector { total, te, tm };
    /// The single swept parameter of a critical-gamma search.
    enum class Sweep {
        plate_gamma,      ///< gamma of the scalar plate functions
        alpha_both,       ///< gamma_alpha of both particles
        beta_both,        ///< gamma_beta of both particles
        alpha_1,          ///< gamma_alpha of particle 1
        alpha_2,
        beta_1,
        beta_2,
    };

    Kind kind = Kind::pair;
    PlateSector sector = PlateSector::total;
    Sweep sweep = Sweep::alpha_both;
    Polarizability p1{};  ///< template particles; the swept perp component
    Polarizability p2{};  ///< is overwritten as gamma * z
    std::string label;
};

/// Scaled entropy curve of `config` with the swept anisotropy set to gamma:
/// s(gamma, y) for plate sectors, Z^6 S(y) for pairs.
std::function<double(double)> scaled_entropy_curve(const SystemConfig& config,
                                                   double gamma);

/// Nested bisection for the critical anisotropy: the objective
/// m(gamma) = min_y S(gamma, .) changes sign at gamma*.  Returns nullopt when
/// m has the same sign at both ends of gamma_range ("no critical point in
/// range").
std::optional<CriticalResult> critical_anisotropy(
    const SystemConfig& config, double gamma_lo, double gamma_hi, double tol,
    double y_lo = kDefaultYLo, double y_hi = kDefaultYHi,
    int grid_points = kDefaultGrid);

/// Negative-entropy verdict for one curve: min_y below -eps with
/// eps = 1e-14 * (positive maximum of the curve), so numerical noise at a
/// grazing threshold never counts as negativity.
bool negative_entropy_exists(const std::function<double(double)>& curve,
                             double y_lo = kDefaultYLo,
                             double y_hi = kDefaultYHi,
                             int grid_points = kDefaultGrid);

/// One regenerated row of the negative-entropy summary table.
struct TableThreshold {
    std::string parameter;  ///< swept anisotropy, e.g. "gamma_alpha"
    double computed = 0.0;
    double published = 0.0;
    double tolerance = 0.01;
};

struct TableRow {
    std::string label;           ///< e.g. "PC/PC"
    std::string published;       ///< published verdict text
    bool always = false;         ///< computed: negative for every sampled config
    std::vector<TableThreshold> thresholds;
    bool match = false;          ///< computed reproduces the published verdict
};

/// The seven standard rows: E/E, E/M, PC/PC, PC/D, E/TE plate, E/TM plate,
/// E/PC-or-D plate.
std::vector<SystemConfig> table_configs();

/// Regenerate the table from the given rows (dispatched by row label):
/// run each row's sweep (or always-scan) and compare with the published
/// verdicts.  An unrecognized row label raises std::invalid_argument.
std::vector<TableRow> classify_table(const std::vector<SystemConfig>& rows);

/// Convenience: classify_table(table_configs()).
std::vector<TableRow> classify_table();

}  // namespace cpnano::analysis
