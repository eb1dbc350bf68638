#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "trilie/rational.hpp"

namespace trilie {

struct TrilieError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : TrilieError {
    using TrilieError::TrilieError;
};

struct DimensionMismatch : TrilieError {
    using TrilieError::TrilieError;
};

/// Carries the first failing basis 5-tuple (1-based) and the residual vector
/// of the fundamental identity.
struct FundamentalIdentityViolation : TrilieError {
    FundamentalIdentityViolation(std::string msg, std::array<int, 5> t, Vec r)
        : TrilieError(std::move(msg)), tuple(t), residual(std::move(r)) {}
    std::array<int, 5> tuple;
    Vec residual;
};

/// Axiom index is 1 or 2; tuple is the failing basis 4-tuple (1-based).
struct RepresentationAxiomViolation : TrilieError {
    RepresentationAxiomViolation(std::string msg, int ax, std::array<int, 4> t)
        : TrilieError(std::move(msg)), axiom(ax), tuple(t) {}
    int axiom;
    std::array<int, 4> tuple;
};

/// Witness is a basis triple of the subspace (1-based positions in its basis)
/// whose bracket leaves the span; residual is given in quotient coordinates.
struct NotASubalgebra : TrilieError {
    NotASubalgebra(std::string msg, std::array<int, 3> w, Vec r)
        : TrilieError(std::move(msg)), witness(w), residual(std::move(r)) {}
    std::array<int, 3> witness;
    Vec residual;
};

struct NotAMorphism : TrilieError {
    using TrilieError::TrilieError;
};

struct DegreeOverflowGuard : TrilieError {
    DegreeOverflowGuard(std::string msg, int deg, int max_deg)
        : TrilieError(std::move(msg)), degree(deg), max_degree(max_deg) {}
    int degree;
    int max_degree;
};

struct BaseNotMorphism : TrilieError {
    using TrilieError::TrilieError;
};

struct NotFirstOrderDeformation : TrilieError {
    NotFirstOrderDeformation(std::string msg, std::array<int, 3> t)
        : TrilieError(std::move(msg)), triple(t) {}
    std::array<int, 3> triple;
};

struct SchemaError : TrilieError {
    SchemaError(std::string msg, std::string loc) : TrilieError(std::move(msg)), location(std::move(loc)) {}
    std::string location;
};

}  // namespace trilie
