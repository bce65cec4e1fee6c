// Hopf algebras by structure constants: axiom verification, group-likes,
// skew-primitives, and the built-in catalog.
#ifndef HOPFYB_HOPF_HPP
#define HOPFYB_HOPF_HPP

#include <string>
#include <vector>

#include "hopfyb/linalg.hpp"
#include "hopfyb/report.hpp"
#include "hopfyb/sweedler.hpp"

namespace hopfyb {

struct not_a_group_error : std::runtime_error {
    std::string property;
    explicit not_a_group_error(std::string prop)
        : std::runtime_error("multiplication table is not a group: " + prop),
          property(std::move(prop)) {}
};

struct not_group_like_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HopfAlgebra {
    std::string name;
    int dim = 0;
    std::vector<std::string> basis_names;
    Tensor3 mult;     // (e_i, e_j) -> sum_k mult(i,j,k) e_k
    Vec unit;         // coordinates of 1
    Matrix comult;    // n^2 x n, column i = Delta(e_i) flattened
    Vec counit;       // covector
    Matrix antipode;  // n x n, column j = S(e_j)

    Vec product(const Vec& x, const Vec& y) const;
    Vec apply_antipode(const Vec& x) const;
    Scalar counit_of(const Vec& x) const;
    bool is_group_like(const Vec& v) const;

    // throws dimension_error when component shapes disagree
    void check_shapes() const;
};

AxiomReport verify_hopf(const HopfAlgebra& h);

// k[G] from a group multiplication table: mult_table[i][j] = index of g_i g_j
HopfAlgebra group_algebra(const std::vector<std::vector<int>>& mult_table,
                          const std::vector<std::string>& names, const std::string& name);

HopfAlgebra a_c2c2();
HopfAlgebra sweedler_h4();
HopfAlgebra cyclic_group_algebra_c2();
HopfAlgebra klein_four_algebra();
HopfAlgebra symmetric_group_algebra_s3();

// catalog lookup by CLI name: a_c2c2, h4, c2, c2c2, s3
HopfAlgebra catalog_hopf(const std::string& name);
bool is_catalog_hopf_name(const std::string& name);

// all group-like elements expressible over the basis (exact, support search)
std::vector<Vec> grouplikes(const HopfAlgebra& h);

// basis of { v : Delta(v) = v (x) g + h (x) v }; g, h must be group-like
std::vector<Vec> skew_primitives(const HopfAlgebra& h, const Vec& g, const Vec& hh);

}  // namespace hopfyb

#endif
