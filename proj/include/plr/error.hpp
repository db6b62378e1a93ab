#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plr {

// Every failure mode of the library is a typed error.  The CLI maps these
// onto its exit-code contract, so codes are part of the public surface.
enum class Errc {
    none = 0,
    // construction / input
    parse_error,
    non_monotone_breakpoints,
    zero_slope_piece,
    range_violation,
    domain_violation,
    degenerate_interval,
    // budgets / resources
    piece_budget_exceeded,
    candidate_budget_exceeded,
    resource_exhausted,
    // cycles
    not_invariant,
    not_disjoint,
    not_nested,
    ragged_nesting,
    no_splitting_found,
    ambiguous_splitting,
    // orbits
    orbit_through_corner,
    multiple_corners_in_interval,
    iterate_hits_corner,
    point_outside_cycle,
    // certificates
    corner_on_boundary,
    corner_on_splitting_point,
    hypothesis_not_met,
    construction_failed,
    precondition,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::none: return "none";
        case Errc::parse_error: return "ParseError";
        case Errc::non_monotone_breakpoints: return "NonMonotoneBreakpoints";
        case Errc::zero_slope_piece: return "ZeroSlopePiece";
        case Errc::range_violation: return "RangeViolation";
        case Errc::domain_violation: return "DomainViolation";
        case Errc::degenerate_interval: return "DegenerateInterval";
        case Errc::piece_budget_exceeded: return "PieceBudgetExceeded";
        case Errc::candidate_budget_exceeded: return "CandidateBudgetExceeded";
        case Errc::resource_exhausted: return "ResourceExhausted";
        case Errc::not_invariant: return "NotInvariant";
        case Errc::not_disjoint: return "NotDisjoint";
        case Errc::not_nested: return "NotNested";
        case Errc::ragged_nesting: return "RaggedNesting";
        case Errc::no_splitting_found: return "NoSplittingFound";
        case Errc::ambiguous_splitting: return "AmbiguousSplitting";
        case Errc::orbit_through_corner: return "OrbitThroughCorner";
        case Errc::multiple_corners_in_interval: return "MultipleCornersInInterval";
        case Errc::iterate_hits_corner: return "IterateHitsCorner";
        case Errc::point_outside_cycle: return "PointOutsideCycle";
        case Errc::corner_on_boundary: return "CornerOnBoundary";
        case Errc::corner_on_splitting_point: return "CornerOnSplittingPoint";
        case Errc::hypothesis_not_met: return "HypothesisNotMet";
        case Errc::construction_failed: return "ConstructionFailed";
        case Errc::precondition: return "Precondition";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace plr
