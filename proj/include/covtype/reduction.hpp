#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covtype/complex.hpp"
#include "covtype/surface.hpp"

namespace covtype {

/// Replayable record of a sequence of moves with Betti numbers after each.
struct ReductionTrace {
    std::vector<MoveRecord> moves;
    FVector initial;
    FVector final;
    /// betti[0] belongs to the starting complex, betti[i + 1] to the complex after moves[i].
    std::vector<std::vector<std::size_t>> betti;
    std::optional<bool> final_property_a;

    /// Appends other's moves (other must start where this trace ends).
    void append(const ReductionTrace& other);
};

/// Re-applies every move starting from `initial`.
SimplicialComplex replay(const SimplicialComplex& initial, const ReductionTrace& trace);

/// Returns a description of the first per-step Betti violation, or nullopt:
/// collapses and contractions keep all Betti numbers, each excision keeps
/// b0 and b1 and lowers b2 by exactly one.
std::optional<std::string> trace_violation(const ReductionTrace& trace);

struct ReductionResult {
    SimplicialComplex complex;
    ReductionTrace trace;
};

/// Elementary collapses, smallest free face first, until none is left.
ReductionResult collapse_all(const SimplicialComplex& k);

struct EliminationOptions {
    /// When false, property A is not checked and maximal edges lying on a
    /// cycle are left in place rather than reported.
    bool require_property_a = true;
};

/// Contracts maximal edges (smallest first), collapsing after each contraction.
/// A maximal edge whose endpoints stay connected without it raises PropertyAViolation.
ReductionResult eliminate_maximal_edges(const SimplicialComplex& l, EliminationOptions options = {});

/// Starting from the 2-skeleton, removes 2-simplices carrying 2-cycles that
/// bound in k until H_2 is one-dimensional. The trace starts at skeleton(k, 2).
ReductionResult excise_to_surface_homology(const SimplicialComplex& k);

struct BoundCertificate {
    std::string surface;
    long chi = 0;
    /// (alpha0, alpha1, alpha2) of the final complex.
    std::size_t alpha0 = 0;
    std::size_t alpha1 = 0;
    std::size_t alpha2 = 0;
    std::size_t input_vertices = 0;
    bool no_free_faces_bound = false;  // 3 alpha2 >= 2 alpha1
    bool edge_bound = false;           // alpha1 <= alpha0 (alpha0 - 1) / 2
    bool euler_bound = false;          // 6 chi >= 6 alpha0 - alpha0 (alpha0 - 1)
    long rho = 0;

    bool holds() const noexcept;
};

/// Recomputes the three counting inequalities from the stored counts.
BoundCertificate make_certificate(const SurfaceClass& s, const SimplicialComplex& final_complex,
                                  std::size_t input_vertices);

struct CertifiedReduction {
    SimplicialComplex complex;
    ReductionTrace trace;
    BoundCertificate certificate;
};

/// Excision, then collapse, then elimination of maximal edges. Errors from a
/// stage are rethrown as StageError tagged "excision", "collapse",
/// "contraction" or "certificate".
CertifiedReduction certify_lower_bound(const SimplicialComplex& k, const SurfaceClass& s);

}  // namespace covtype
