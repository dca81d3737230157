#ifndef TORUS_ERRORS_HPP
#define TORUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace torus {

struct InvalidPolygon : std::runtime_error {
    explicit InvalidPolygon(const std::string& msg) : std::runtime_error("invalid polygon: " + msg) {}
};

struct InvalidRegion : std::runtime_error {
    explicit InvalidRegion(const std::string& msg) : std::runtime_error("invalid region: " + msg) {}
};

struct DomainError : std::domain_error {
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

struct ImproperColoring : std::runtime_error {
    explicit ImproperColoring(const std::string& msg) : std::runtime_error("improper coloring: " + msg) {}
};

struct IncompleteModel : std::runtime_error {
    explicit IncompleteModel(const std::string& msg) : std::runtime_error("incomplete model: " + msg) {}
};

struct StateError : std::logic_error {
    explicit StateError(const std::string& msg) : std::logic_error(msg) {}
};

struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& msg) : std::runtime_error(msg) {}
};

struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& msg) : std::runtime_error("solver: " + msg) {}
};

struct DegenerateSpec : std::runtime_error {
    explicit DegenerateSpec(const std::string& msg) : std::runtime_error("degenerate spec: " + msg) {}
};

struct InconsistentSpec : std::runtime_error {
    explicit InconsistentSpec(const std::string& msg) : std::runtime_error("inconsistent spec: " + msg) {}
};

struct DegenerateHexagon : std::runtime_error {
    explicit DegenerateHexagon(const std::string& msg) : std::runtime_error("degenerate hexagon: " + msg) {}
};

struct CellTooLarge : std::runtime_error {
    explicit CellTooLarge(const std::string& msg) : std::runtime_error("voronoi cell too large: " + msg) {}
};

struct LiftViolation : std::runtime_error {
    explicit LiftViolation(const std::string& msg) : std::runtime_error("lift violation: " + msg) {}
};

struct StuckStep : std::runtime_error {
    explicit StuckStep(const std::string& msg) : std::runtime_error("descent stuck: " + msg) {}
};

struct AllRestartsFailed : std::runtime_error {
    explicit AllRestartsFailed(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace torus

#endif
