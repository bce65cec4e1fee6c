// Module-coalgebra actions and matched pairs of actions on a Hopf algebra:
// the compatibility axioms, the derived right action, antipode identities,
// and the bundled catalog of pairs.
#ifndef HOPFYB_MATCHED_PAIR_HPP
#define HOPFYB_MATCHED_PAIR_HPP

#include <memory>

#include "hopfyb/hopf.hpp"

namespace hopfyb {

struct not_a_group_algebra_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ActionSide { left, right };

struct ActionPair {
    std::shared_ptr<const HopfAlgebra> hopf;
    std::string name;
    Tensor3 left;   // left(i,j,k):  e_i -> acts on e_j, coefficient of e_k
    Tensor3 right;  // right(i,j,k): e_i acted on by e_j

    const HopfAlgebra& algebra() const { return *hopf; }
};

// module law, unit law, and the coalgebra-morphism conditions for one action
AxiomReport verify_module_coalgebra_action(const HopfAlgebra& h, const Tensor3& action,
                                           ActionSide side);

// prerequisites re-verified, then MP1..MP5 and the factorization MP*
AxiomReport verify_matched_pair(const ActionPair& pair);

// x <- y := S(x_1 -> y_1) x_2 y_2
Tensor3 derive_right_action(const HopfAlgebra& h, const Tensor3& left);

// S(x->y) = (x<-y_1)->S(y_2), S(x<-y) = S(x_1)<-(x_2->y), and the two
// counit-collapsed variants
AxiomReport check_antipode_identities(const ActionPair& pair);

// x -> y = x y x^-1, x <- y = eps(y) x on a group algebra
ActionPair conjugation_pair(const HopfAlgebra& g);

// x -> y = eps(x) y, x <- y = eps(y) x
ActionPair trivial_pair(const HopfAlgebra& h);

// The two families of matched pairs on a_c2c2, parameterized by alpha.
// Tables are expanded from the generator data through the module and
// compatibility axioms, not transcribed entry by entry.
ActionPair a22_family_pair(int family, const Scalar& alpha = Scalar::parameter());

// catalog lookup: family1, family2 (on a_c2c2), conjugation, trivial
ActionPair catalog_pair(const std::string& name, const HopfAlgebra& h,
                        const Scalar& alpha = Scalar::parameter());
bool is_catalog_pair_name(const std::string& name);

// substitute a := value in every structure constant
HopfAlgebra instantiate(const HopfAlgebra& h, const Scalar& value);
ActionPair instantiate(const ActionPair& p, const Scalar& value);
Tensor3 instantiate(const Tensor3& t, const Scalar& value);
Matrix instantiate(const Matrix& m, const Scalar& value);

}  // namespace hopfyb

#endif
