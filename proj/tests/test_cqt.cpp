#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfyb/braiding.hpp"
#include "hopfyb/cqt.hpp"

using namespace hopfyb;

namespace {

CqtForm counit_form(const HopfAlgebra& h) {
    Matrix f(h.dim, h.dim);
    for (int i = 0; i < h.dim; ++i)
        for (int j = 0; j < h.dim; ++j) f.at(i, j) = h.counit[i] * h.counit[j];
    return make_cqt_form(h, f, "eps_eps");
}

}  // namespace

TEST_CASE("bundled form values") {
    CqtForm f = r_alpha_form();
    Scalar a = Scalar::parameter();
    CHECK(f.form.at(1, 1) == Scalar(-1));  // R(g,g) = -1
    CHECK(f.form.at(4, 4) == a);           // R(x,x) = alpha
    CHECK(f.form.at(1, 4).is_zero());      // R(g,x) = 0
    CHECK(f.form.at(0, 0).is_one());
    CHECK(f.form.at(3, 3).is_one());  // R(gh,gh) = (-1)^4
    CHECK(f.form.at(6, 6) == a);      // R(hx,hx): exponent (0+1)(0+1+1) is even
    CHECK(f.form.at(5, 4) == -a);     // R(gx,x): exponent (1+0)(0+0+1) is odd
}

TEST_CASE("convolution inverse") {
    HopfAlgebra k4 = klein_four_algebra();
    CqtForm eps = counit_form(k4);
    CHECK(eps.inverse_form == eps.form);  // the convolution unit is self-inverse
    CHECK(is_cotriangular(eps));

    CqtForm f = r_alpha_form();
    CHECK(f.inverse_form == f.form.transpose());
    CHECK(is_cotriangular(f));

    // rank-deficient forms are rejected
    CHECK_THROWS_AS(convolution_inverse_form(k4, Matrix(4, 4)),
                    not_convolution_invertible_error);
}

TEST_CASE("cqt axioms") {
    CHECK(verify_cqt(r_alpha_form()).all_passed());
    CHECK(verify_cqt(counit_form(klein_four_algebra())).all_passed());
    // on a noncommutative algebra the counit form forces ab = ba and fails
    AxiomReport rep = verify_cqt(counit_form(symmetric_group_algebra_s3()));
    CHECK(!rep.all_passed());
    for (const auto& c : rep.checks)
        if (c.name == "commutation-up-to-form") CHECK(!c.passed);
}

TEST_CASE("the bundled form induces exactly the first family") {
    CqtForm f = r_alpha_form();
    ActionPair induced = induce_pair_from_cqt(f);
    ActionPair fam1 = a22_family_pair(1);
    CHECK(induced.left == fam1.left);
    CHECK(induced.right == fam1.right);
}

TEST_CASE("counit form induces the trivial actions on a commutative algebra") {
    HopfAlgebra k4 = klein_four_algebra();
    ActionPair induced = induce_pair_from_cqt(counit_form(k4));
    ActionPair triv = trivial_pair(k4);
    CHECK(induced.left == triv.left);
    CHECK(induced.right == triv.right);
}

TEST_CASE("the operator from the induced pair equals the direct formula") {
    CqtForm f = r_alpha_form();
    ActionPair induced = induce_pair_from_cqt(f);
    CHECK(build_r(induced, false).matrix == cqt_braiding_matrix(f));
    // and instantiated at a couple of parameter values
    for (const char* v : {"0", "2", "-1/2"}) {
        CqtForm fv = r_alpha_form(parse_scalar(v));
        ActionPair pv = induce_pair_from_cqt(fv);
        CHECK(build_r(pv, false).matrix == cqt_braiding_matrix(fv));
    }
}

TEST_CASE("cotriangularity gives involutive operators") {
    CqtForm f = r_alpha_form();
    ActionPair induced = induce_pair_from_cqt(f);
    BraidingOperator r = build_r(induced, false);
    CHECK(involutivity_report(induced, r).involutive());
}

TEST_CASE("family 2 is not induced by the bundled family") {
    CHECK(family2_obstruction().passed);
    // the obstruction lives at the group-like slot (h, h): the induced
    // action fixes h while family 2 sends it to gh, independently of a
    CqtForm f = r_alpha_form();
    ActionPair induced = induce_pair_from_cqt(f);
    CHECK(induced.left.at(2, 2, 2).is_one());
    ActionPair fam2 = a22_family_pair(2);
    CHECK(fam2.left.at(2, 2, 3).is_one());
}
