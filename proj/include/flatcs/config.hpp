#pragma once

namespace flatcs {

/// Global tolerance configuration. All modules read the defaults below;
/// callers that need different settings pass explicit values at call sites.
struct Tolerances {
    double tau_unitary = 1e-12;   // unitarity / membership checks
    double eps_log = 1e-8;        // branch margin for the principal logarithm
    double rep_defect = 1e-8;     // commutator solver target
    double path_defect = 1e-6;    // intermediate defect along continuations
    double flat_infty = 1e-6;     // ||F||_inf gate for "flat" preconditions
    double jump_tol_n32 = 0.05;   // jump-to-lattice tolerance at N = 32
    double jump_tol_n64 = 0.01;   // tightened tolerance at N = 64
    double ledger_tol = 0.02;     // gluing-ledger identity tolerance
};

inline const Tolerances& tol() {
    static const Tolerances t{};
    return t;
}

} // namespace flatcs
