#pragma once

#include "hochschild.hpp"

namespace dgc {

/* Kraines sequences: terms a_1, a_2, ... with a_1 of odd degree and
   d a_k = sum_{j=1}^{k-1} a_j a_{k-j}, their integral lifts with defects,
   the delta^{-1} word families a(n) and yhat(n), cup-one b-sequences, and
   the correction sequence Xbar_n. */

struct CheckResult {
    bool pass = true;
    int first_failing_index = 0;  // 1-based term index when !pass
    std::string message;
};

// Exact verification of the defining recursion, degree bookkeeping included.
CheckResult check_kraines(const DGAlgebra& a, const std::vector<Elem>& terms);

// Does padding with zeros extend the sequence to an infinite one?
bool infinite_by_pattern(const DGAlgebra& a, const std::vector<Elem>& terms);

struct ExtendResult {
    bool extended = false;
    Elem new_term;             // deterministic echelon solution when extended
    Elem obstruction;          // canonical representative of cls(sum a_i a_{N+1-i})
    bool obstruction_nonzero = false;
};

ExtendResult extend_kraines(const DGAlgebra& a, const std::vector<Elem>& terms);

/* Integral lift hat a_n with red_p(hat a_n) = a_n and defects
   zeta_n = d hat a_n - sum hat a_i hat a_{n-i} in ker red_p. */
struct IntegralLift {
    long p = 0;
    std::vector<Elem> terms;
    std::vector<Elem> defects;
    std::vector<int> valuations;  // p-adic valuation of each defect, -1 when zero
};

IntegralLift lift_kraines(const DGAlgebra& a_modp, const std::vector<Elem>& terms);

/* Restart data for obstruction lifting through integral torsion: zeta making the
   integral obstruction sum a cocycle, the bounding hat a_{N+1} with its valuation,
   and the new mod-p start. */
struct RestartResult {
    Elem zeta_next;   // over Z, in ker red_p
    Elem shat;        // sum hat a_i hat a_{N+1-i} + zeta_next (a cocycle)
    Elem ahat_next;   // d ahat_next = p^eps * shat
    int eps = 1;
    Elem a_next;      // red_p(ahat_next)
};

RestartResult restart_from_obstruction(const DGAlgebra& a_modp, const std::vector<Elem>& terms,
                                       const IntegralLift& lift);

/* a(n) = sum_l a_{n,l} inside a bar complex.  Two delta^{-1} readings are
   implemented; the builder selects the first (in the order below) for which
   every delta a(n) vanishes exactly and records all survivors. */
enum class AFamilyVariant { composition_sum, literal_iteration };

struct AFamily {
    AFamilyVariant variant = AFamilyVariant::composition_sum;
    std::vector<std::string> surviving_variants;
    std::vector<Elem> a;          // a(1).. a(nMax) in the bar complex
    std::vector<bool> nonzero;    // rank-test verdicts on cls a(n)
    std::vector<bool> coproduct_ok;  // reduced-coproduct identity per n
};

AFamily build_a_family(const BarComplex& bar, const std::vector<Elem>& terms, int n_max);

/* Cup-one lifting sequence bhat_{i+1} = hat a_i u1 bhat_1 with defect
   bookkeeping: d bhat_{n+1} = sum (hat a_i bhat - (+/-) bhat hat a) + p^eps zhat. */
struct BSequence {
    long p = 0;
    std::vector<Elem> terms;    // bhat_1 ..
    std::vector<Elem> defects;  // zhat_n (n >= 2), in ker red_p, scaled by p^-eps
    int eps = 1;
    Elem ahat_prime;
    bool even_case = true;  // parity of deg bhat_1
};

BSequence cup_one_b_sequence(const DGAlgebra& a_integral, const IntegralLift& lift,
                             const Elem& bhat1, int eps, const Elem& ahat_prime, int n_max);

/* Mixed word family yhat(n) in the integral bar with its extracted xhat(n),
   exact valuations, mod-p images and rank verdicts. */
struct YFamily {
    std::string variant;  // surviving mixed delta^{-1} sign reading
    std::vector<std::string> surviving_variants;
    std::vector<Elem> yhat;        // integral bar elements
    std::vector<Elem> xhat;        // delta yhat / p^eps_n
    std::vector<int> eps;          // exact valuations (>= 1); -1 when delta yhat = 0
    std::vector<Elem> y_modp, x_modp;
    std::vector<bool> y_nonzero, x_nonzero;
    std::vector<bool> coproduct_ok;
};

// force_variant, when nonempty, restricts the sign-variant search to one
// reading (CLI --variant override); the builder still verifies the vanishing of
// the defect-free differential for it.
YFamily build_y_family(const BarComplex& bar_z, const BarComplex& bar_modp,
                       const IntegralLift& lift, const BSequence& bseq, int n_max,
                       const std::string& force_variant = "");

/* Correction sequence over Z/p^{eps_N}:
   Xbar_1 = 0, Xbar_{n+1} = sum_i abar_i u1 (zbar_{n+1-i} - Xbar_{n+1-i}),
   with the differential identity checked per index and the resulting
   Bockstein obstruction certified zero. */
struct CorrectionSequence {
    int eps_n = 1;
    RingTag ring;
    std::vector<Elem> xbar;          // Xbar_1..Xbar_nMax over Z/p^{eps_N}
    std::vector<bool> identity_ok;   // d Xbar_n == sum(abar_i zbar_{n-i} - zbar_i abar_{n-i})
    bool bockstein_zero = false;
    std::string failure;             // index and sides on first failure, empty otherwise
};

CorrectionSequence correction_sequence(const DGAlgebra& a_integral, const IntegralLift& lift,
                                       int n_max);

/* Cycle verification in the Hochschild complex: 1 (x) x(r) and
   1 (x) y(s) are D-cycles; for commutative sources z_{r,s} built by shuffle
   are D-cycles with psi(z_{r,s}) = x(r) * y(s). */
struct ZCycleReport {
    std::vector<bool> x_cycle, y_cycle;          // per r / per s
    std::vector<std::vector<bool>> z_cycle;      // [r][s]
    std::vector<std::vector<bool>> psi_matches;  // psi(z_{r,s}) == shuffle
    bool all_pass = true;
    std::string first_failure;
};

ZCycleReport verify_z_cycles(const HochschildComplex& hh, const std::vector<Elem>& x_family,
                             const std::vector<Elem>& y_family);

}  // namespace dgc
