// Coquasitriangular forms: convolution inverse, the three compatibility
// axioms, cotriangularity, the induced matched pair, and the bundled
// one-parameter form on a_c2c2.
#ifndef HOPFYB_CQT_HPP
#define HOPFYB_CQT_HPP

#include "hopfyb/matched_pair.hpp"

namespace hopfyb {

struct not_convolution_invertible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CqtForm {
    std::shared_ptr<const HopfAlgebra> hopf;
    std::string name;
    Matrix form;          // n x n, entry (i,j) = R(e_i (x) e_j)
    Matrix inverse_form;  // convolution inverse, always recomputed

    const HopfAlgebra& algebra() const { return *hopf; }
};

// solves the linear system (R' * R)(e_i (x) e_j) = eps_i eps_j in the
// convolution algebra; verifies the two-sided law before returning
Matrix convolution_inverse_form(const HopfAlgebra& h, const Matrix& r);

CqtForm make_cqt_form(const HopfAlgebra& h, const Matrix& form, const std::string& name);

// the three coquasitriangularity axioms plus the two-sided inverse law
AxiomReport verify_cqt(const CqtForm& f);

// R^{-1} equals R^op entrywise
bool is_cotriangular(const CqtForm& f);

// a -> b = R^{-1}(a1 (x) b1) b2 R(a2 (x) b3),
// a <- b = R^{-1}(a1 (x) b1) a2 R(a3 (x) b2); verified as a matched pair
ActionPair induce_pair_from_cqt(const CqtForm& f);

// r(a (x) b) = R^{-1}(a1 (x) b1) b2 (x) a2 R(a3 (x) b3)
Matrix cqt_braiding_matrix(const CqtForm& f);

// the bundled cotriangular family on a_c2c2
CqtForm r_alpha_form(const Scalar& alpha = Scalar::parameter());

// The second family on a_c2c2 is not induced by any member of the bundled
// form family: at the group-like slot (h, h) the induced action and the
// family-2 action differ by a nonzero parameter-free vector, so no value of
// the parameter can reconcile them.
Check family2_obstruction();

}  // namespace hopfyb

#endif
