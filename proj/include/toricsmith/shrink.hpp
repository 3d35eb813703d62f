#pragma once

// Shrinking procedure: every non-frozen facet moves inward at unit speed;
// facets whose hyperplanes contain the whole shrunken polytope are frozen.

#include <cstddef>
#include <utility>
#include <vector>

#include "toricsmith/polytope.hpp"

namespace toricsmith {

/// Component of a surviving normal orthogonal to the frozen normals,
/// written as q * w with w primitive. `lattice` is false when q is not an
/// integer or the component vanishes.
struct ProjectedNormal {
    std::size_t index = 0;
    RatVector vector;
    Rational q;
    IntVector w;
    bool lattice = false;
};

struct ShrinkStage {
    std::size_t index = 0;  // j, 1-based
    Rational time;
    std::vector<std::size_t> frozen;  // D_j, 0-based constraint indices
    std::size_t drop = 0;             // k_j
    std::vector<RatVector> directions;  // basis of the direction space of the slice at t_j
    RatVector base_point;
    std::vector<ProjectedNormal> projected_normals;  // empty for the last stage
};

enum class EventKind { BecomesRedundant, BecomesRelevant };

struct RedundancyEvent {
    Rational time;
    std::size_t index = 0;
    EventKind kind = EventKind::BecomesRedundant;
    bool operator==(const RedundancyEvent&) const = default;
};

struct ShrinkTrace {
    std::vector<ShrinkStage> stages;  // M + 1 entries
    RatVector endpoint;
    std::vector<RedundancyEvent> events;

    std::size_t m() const noexcept { return stages.empty() ? 0 : stages.size() - 1; }
    const Rational& final_time() const { return stages.back().time; }
    std::vector<Rational> times() const;
    /// Indices frozen at any stage, sorted.
    std::vector<std::size_t> all_frozen() const;
    /// Dimension predicted for the slice at time t (0 <= t <= final time).
    std::size_t predicted_dimension(std::size_t n, const Rational& t) const;
};

enum class TraceDetail { Full, StagesOnly };

/// Stages by iterated exact LP. Throws NotFullDimensional, Unbounded.
ShrinkTrace shrink_trace(const LabeledPolytope& p, TraceDetail detail = TraceDetail::Full);

/// Delta^t: rows frozen at t_s <= t become equalities at lambda_i - t_s,
/// the others are lambda_i - t. Throws TimeOutOfRange.
LabeledPolytope slice(const LabeledPolytope& p, const ShrinkTrace& trace, const Rational& t);
LabeledPolytope slice(const LabeledPolytope& p, const Rational& t);

/// Translate so that the shrink endpoint is the origin; returns the endpoint.
std::pair<LabeledPolytope, RatVector> center(const LabeledPolytope& p);
bool is_centered(const LabeledPolytope& p, const ShrinkTrace& trace);

std::vector<RedundancyEvent> event_timeline(const LabeledPolytope& p, const ShrinkTrace& trace);
std::vector<RedundancyEvent> event_timeline(const LabeledPolytope& p);

/// Largest s with a point at slack >= s on every row still moving at time t
/// (rows frozen strictly before t stay equalities). Equals t_j - t on stage j.
Rational max_slack(const LabeledPolytope& p, const ShrinkTrace& trace, const Rational& t);

}  // namespace toricsmith
