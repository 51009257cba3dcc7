#pragma once

// The Adams operation engine: psi^n and the dual operation on model
// classes, Anderson-dual homotopy groups through Hom/Ext^1, and the
// verification suites for the main scaling theorem, the dual-operation
// formulas, the composition law, Serre duality and the self-duality
// conjecture.
//
// psi^n multiplies a free class by n^weight; the verification suites
// compare that against the degree-based ceiling formula n^ceil(k/2).
// The dual operation is implemented by explicit per-model exponent rules
// (never as lambda/psi), so the conjecture checks below stay meaningful.

#include <optional>

#include "tmfops/report.hpp"
#include "tmfops/spectra.hpp"

namespace tmfops {

// ceil(k/2) for any integer k
long ceil_half(long k);

// The effect of an operation on one basis class.  Free classes scale by an
// exact scalar; torsion classes by its residue mod the order.
struct ClassAction {
    bool torsion = false;
    mpz_class order = 0;
    LocalizedScalar scalar;

    static ClassAction free_scaling(LocalizedScalar s);
    static ClassAction torsion_scaling(LocalizedScalar s, mpz_class order);

    ClassAction then(const ClassAction& next) const; // composition
    bool same_action(const ClassAction& o) const;    // exact or mod-order equality
    std::string to_string() const;                   // "625", "1/8", "1 (mod 2)"
};

ClassAction psi(const SpectrumModel& model, long n, const BasisClass& x);
ClassAction psi_dual(const SpectrumModel& model, long n, const BasisClass& x);

// psi^n on a graded element: n^weight elementwise (TMF / TMF2 models).
GradedElement psi(const SpectrumModel& model, long n, const GradedElement& x);
// dual operation on a graded element: n^(dualizing_weight - weight).
GradedElement psi_dual(const SpectrumModel& model, long n, const GradedElement& x);

// pi_k I_A X = ses_assemble(Ext^1(pi_{-k-1} X, A), Hom(pi_{-k} X, A)).
FinAbGroup anderson_dual_group(const SpectrumModel& model, const InvertedSet& A, long k);

// For each k in [lo, hi]: pi_k I_A X isomorphic to pi_{k-d} X, d the witness shift.
OperationReport verify_self_duality(const SpectrumModel& model, const InvertedSet& A, long lo,
                                    long hi);

// psi^m o psi^n = psi^mn, psi^1 = id on every class; psi^-1 = id on every
// even-weight class and psi^-1 o psi^-1 = psi^1 on all of them.
OperationReport verify_composition(const SpectrumModel& model, long m, long n, long lo, long hi);

// Scaling theorem on the TMF model: free classes follow n^ceil(k/2),
// ledger classes are fixed.  Default base is Z[1/6n].
OperationReport verify_theorem_b(long n, long lo, long hi,
                                 std::optional<InvertedSet> base = std::nullopt);

// Dual-operation formulas on the TMF model: the dual of Delta^k scales by
// n^(-10-12k) for k in {1,3,8,24}; every free class in the window follows
// n^(-10-ceil(k/2)); the exceptional congruence classes are SKIPPED.
OperationReport verify_dual_operation(long n, long lo, long hi,
                                      std::optional<InvertedSet> base = std::nullopt);

// Rank symmetry, permutation pairing matrices, pairing equivariance
// <psi f, psi g> = n^(-w1-w2) <f, g> and adjointness
// <psi f, g> = <f, psi_dual g> for all complementary pairs |k| <= bound.
OperationReport verify_serre_duality(const SpectrumModel& model, long n, long bound);

// First asserts psi^n(D) = lambda(n) D (WitnessNotScaled otherwise), then
// psi_dual o psi = psi o psi_dual = lambda(n) id on every class in window.
OperationReport verify_conjecture(const SpectrumModel& model, long n, long lo, long hi);

// The eleven (m, l_m) self-duality witnesses with lambda = n^(-(l_m-1)/2).
OperationReport verify_witness_table(long n);

// SES functoriality at degree k: the dual operation acts on the
// Hom-quotient by the psi-scalar of pi_{-k-d} and on the Ext-sub by the
// Ext^1-induced action of pi_{-k-1-d}.  NotInvertible scalars are reported.
OperationReport diagram_check(const SpectrumModel& model, long n, long k);

// Matrix-oracle sweep: koszul_cohomology agrees with the combinatorial
// bases for all |weight| <= bound.
OperationReport verify_koszul_oracle(const WPSConfig& cfg, long bound);

} // namespace tmfops
