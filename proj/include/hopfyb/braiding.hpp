// Yang-Baxter operators from matched pairs: construction of r, the braiding
// operator axioms, the braid equation, both inverse formulas, the antipode
// identities for r, the four-way involutivity report, and action recovery.
#ifndef HOPFYB_BRAIDING_HPP
#define HOPFYB_BRAIDING_HPP

#include "hopfyb/matched_pair.hpp"
#include "hopfyb/transmutation.hpp"

namespace hopfyb {

struct verification_error : std::runtime_error {
    AxiomReport report;
    explicit verification_error(AxiomReport r)
        : std::runtime_error("verification failed: " + r.subject), report(std::move(r)) {}
};

struct inverse_check_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BraidingOperator {
    std::shared_ptr<const HopfAlgebra> hopf;
    std::string source;  // pair that produced it
    Matrix matrix;       // n^2 x n^2

    const HopfAlgebra& algebra() const { return *hopf; }
};

// r(x (x) y) = (x1 -> y1) (x) (x2 <- y2); verifies the pair first unless told
// not to, and throws verification_error on failure
BraidingOperator build_r(const ActionPair& pair, bool verify_pair = true);

// Def-style conditions: m r = m, the two multiplication exchange laws, the
// two unit laws, and the coalgebra-morphism conditions
AxiomReport verify_braiding_axioms(const BraidingOperator& r);

// (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r), materialized exactly
Check check_braid_equation(const BraidingOperator& r);

// r^{-1}(x (x) y) = (y1 <- (S(y2) -> S(x1))) (x) ((S(y3) <- S(x2)) -> x3),
// verified two-sided against r before returning
Matrix r_inverse_formula(const ActionPair& pair);

// r^{-1} = (S^{-1} (x) S^{-1}) tau r (S (x) S) tau
Matrix r_inverse_via_antipode(const BraidingOperator& r);

// the three antipode identities for r, plus the symmetry-swapped variant of
// the first one
AxiomReport ybo_identities(const ActionPair& pair, const BraidingOperator& r);

struct InvolutivityReport {
    bool r_squared;            // r^2 = id
    bool counit_identities;    // (x1->y1)->(x2<-y2) = eps(y)x and its twin
    bool antipode_identity;    // x<-y = S(x1->y)->x2
    bool braided_commutative;  // m_bullet c = m_bullet
    long elapsed_ms = 0;
    bool involutive() const { return r_squared; }
};

// all four conditions evaluated independently; they are equivalent, so any
// disagreement raises internal_inconsistency_error
InvolutivityReport involutivity_report(const ActionPair& pair, const BraidingOperator& r);

// recovers the actions as (id (x) eps) r and (eps (x) id) r; when verify is
// set the matrix is first checked to be a braiding operator
ActionPair extract_actions_from_r(const Matrix& r, const HopfAlgebra& h, bool verify = true);

// S(x<-y) = S(y)->S(x) and S(x->y) = S(y)<-S(x); requires r involutive
AxiomReport involutive_antipode_identities(const ActionPair& pair);

}  // namespace hopfyb

#endif
