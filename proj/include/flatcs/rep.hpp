#pragma once

#include <utility>
#include <vector>

#include "flatcs/groups.hpp"

namespace flatcs {

/// One closed surface carrying part of the bundle data: its genus and the
/// central cover element labeling the bundle class.
struct SurfaceData {
    int genus = 0;
    CoverElement delta;
};

/// Handle description of a compression body: the incoming surfaces and the
/// free (circle) rank. The outgoing surface has genus sum(genera) + free_rank.
struct CompressionBodySignature {
    GroupId group;
    std::vector<int> surface_genera;
    int free_rank = 0;
    std::vector<CoverElement> deltas;  // one per surface

    int plus_genus() const;
    void validate() const;  // shapes + central deltas
};

/// Generator pair for one handle of a surface.
using HandlePair = std::pair<CoverElement, CoverElement>;

/// A point of the representation variety, in universal-cover coordinates.
struct RepPoint {
    GroupId group;
    std::vector<std::vector<HandlePair>> surface_tuples;
    std::vector<CoverElement> free_images;
};

/// Max over surfaces of || log( prod [A,B] * delta^{-1} ) || in the
/// inner-product norm; infinity sentinel when the defect element sits on the
/// log branch cut.
double commutator_defect(const RepPoint& point, const CompressionBodySignature& data);

/// Smooth everywhere-defined surrogate used by the solver away from the chart.
double commutator_defect_frobenius(const RepPoint& point, const CompressionBodySignature& data);

/// Solves prod_j [A_j, B_j] = delta per surface by Riemannian descent from a
/// seeded random start, with a Gauss-Newton polish. Throws FeasibilityError
/// for empty varieties (genus 0 with delta != e, or a nonzero abelian
/// obstruction) and SolverError on non-convergence.
RepPoint solve_commutator(const CompressionBodySignature& data, uint64_t seed, int max_iters = 4000);

/// Re-projects a single point onto the variety starting from `init`.
/// Returns the defect reached.
double project_to_variety(RepPoint& init, const CompressionBodySignature& data, int max_iters = 4000);

/// Discrete path from p0 to p1 with `steps`+1 entries: geodesic interpolation
/// of the generators, re-projected at every interior step. Intermediate
/// defects <= path tolerance or ContinuationError.
std::vector<RepPoint> connect(const RepPoint& p0, const RepPoint& p1,
                              const CompressionBodySignature& data, int steps);

/// Forgets the free images and splits the point per incoming surface.
std::vector<RepPoint> restrict_minus(const RepPoint& point, const CompressionBodySignature& data);

/// The induced tuple on the outgoing surface: surface handles in wedge order
/// followed by one handle (f_k, e) per free loop; delta is the product of the
/// surface deltas.
struct PlusRestriction {
    RepPoint point;                    // single surface of genus plus_genus()
    CompressionBodySignature signature;
};
PlusRestriction restrict_plus(const RepPoint& point, const CompressionBodySignature& data);

/// Conjugates every generator by g.
RepPoint conjugate(const RepPoint& point, const CoverElement& g);

struct AlignResult {
    CoverElement g;
    double residual;
};

/// Best conjugator between two points: minimizes sum ||g^{-1} X g - X'||_F^2
/// over the group (closed-form vector alignment seeding a descent polish).
/// Always returns the best g found and the residual reached.
AlignResult align(const RepPoint& p0, const RepPoint& p1);

} // namespace flatcs
