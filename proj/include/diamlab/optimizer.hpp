#pragma once

#include "diamlab/geometry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace diamlab {

/// Polygonal search point: K, the upper chain and L (and optionally a lower
/// chain below KL). Both chains are kept sorted by increasing x.
struct Candidate {
    std::vector<Point> upper;  ///< strictly above the x-axis
    std::vector<Point> lower;  ///< strictly below the x-axis

    /// Counter-clockwise vertices: K, lower..., L, upper (reversed).
    std::vector<Point> polygon() const;
    Figure figure(const Tolerance& tol = {}) const;
};

/// Exterior fraction of a candidate against the reference circle.
double candidate_mu(const Candidate& c);

/// Nearest point of the lens (within distance 1 of both K and L).
Point project_to_lens(Point p);

enum class RejectReason { none, empty, diameter };

struct RepairResult {
    std::optional<Candidate> candidate;  ///< empty when irreparable
    RejectReason reason = RejectReason::none;
    std::size_t dropped_upper = 0;      ///< total upper points removed
    std::size_t below_axis_upper = 0;   ///< of which: left the upper half-plane
    std::size_t dropped_lower = 0;
    std::size_t projected = 0;          ///< points moved onto the lens
};

/// Projects every point onto the lens, drops points on the wrong side of
/// KL, keeps only the strictly convex chains, and rejects candidates with no
/// upper point left or an upper/lower pair farther apart than 1.
RepairResult repair(Candidate raw, const Tolerance& tol = {});

struct OptConfig {
    std::size_t n_points = 16;
    std::size_t iterations = 10'000;
    std::uint64_t seed = 42;
    double step_initial = 0.05;
    /// Step size falls geometrically from step_initial to step_initial * step_decay.
    double step_decay = 1e-3;
    std::size_t restarts = 1;
    bool allow_lower = false;

    void validate() const;
};

/// Steps lost to constraints. `convexity` counts steps whose repair dropped
/// upper points (the chain is then refilled, and the step may still be
/// accepted); the others count rejected steps.
struct RejectionCounts {
    std::uint64_t below_axis = 0;
    std::uint64_t convexity = 0;
    std::uint64_t diameter = 0;
    std::uint64_t empty = 0;

    std::uint64_t total() const { return below_axis + convexity + diameter + empty; }
};

struct OptTrace {
    double best_mu = 0.0;
    Candidate best_candidate;
    Figure best_figure;
    std::size_t best_restart = 0;
    std::vector<std::pair<std::size_t, double>> history;  ///< accepted (iteration, mu) of the best restart
    RejectionCounts rejections;                           ///< summed over restarts
};

/// Seeded hill climbing over polygonal candidates with restarts. Each step
/// moves one point, repairs, tops the upper chain back up to n_points by
/// splitting its longest edge, and is kept only if mu strictly increases.
/// Restart i draws from Rng(seed + i); the best restart wins, ties to the
/// lowest index.
/// Throws std::logic_error if the result exceeds the mixed-triangle bound.
OptTrace optimize_mu(const OptConfig& cfg, const Tolerance& tol = {});

// ---------------------------------------------------------------------------
// Perturbation audit
// ---------------------------------------------------------------------------

struct BulgeCheck {
    std::size_t edge = 0;
    double epsilon = 0.0;
    Point moved;
    double dist_k = 0.0;
    double dist_l = 0.0;
    bool violates = false;
};

struct StripCheck {
    std::string kind;  ///< "rectangle" or "cap"
    double height = 0.0;
    double mu_before = 0.0;
    double mu_after = 0.0;
    double diameter_after = 0.0;
    bool exact = true;  ///< false when mu_after is a Monte Carlo estimate
    bool mu_decreased = false;
    bool violates_diameter = false;

    bool degrades() const { return mu_decreased || violates_diameter; }
};

struct PerturbationReport {
    std::vector<BulgeCheck> bulges;
    std::vector<StripCheck> strips;
    bool bulge_flagged = false;  ///< every outward bulge breaks a unit-distance constraint
    bool strip_flagged = false;  ///< every strip below KL lowers mu or breaks the diameter
};

/// Moves side midpoints outward and appends thin regions below KL.
/// Requires a figure with K and L on its boundary and diameter 1.
PerturbationReport perturbation_audit(const Figure& f, const Tolerance& tol = {});

}  // namespace diamlab
