// Sparse elements of H^(tensor k) and the structural operations needed to
// transcribe Sweedler-notation identities: apply a comultiplication or
// coaction to one leg, contract two legs through a bilinear map, apply a
// linear map or counit to a leg, swap legs.
//
// Identity checks expand both sides on every basis multi-index and compare
// exactly; witnesses report the first difference in row-major order.
#ifndef HOPFYB_SWEEDLER_HPP
#define HOPFYB_SWEEDLER_HPP

#include <functional>
#include <map>
#include <vector>

#include "hopfyb/linalg.hpp"
#include "hopfyb/report.hpp"

namespace hopfyb {

class TensorVec {
  public:
    TensorVec(int dim, int legs) : dim_(dim), legs_(legs) {}
    static TensorVec basis(int dim, std::vector<int> idx);

    int dim() const { return dim_; }
    int legs() const { return legs_; }

    void add_term(const std::vector<int>& idx, const Scalar& c);
    TensorVec& operator+=(const TensorVec& o);
    TensorVec operator-(const TensorVec& o) const;
    TensorVec scaled(const Scalar& c) const;
    bool is_zero() const;
    bool operator==(const TensorVec& o) const;

    // comult: n^2 x n matrix, column i = Delta(e_i); splits `leg` in two
    TensorVec expand(const Matrix& comult, int leg) const;
    // bilinear: contracts legs (leg, leg+1) into one through a Tensor3
    TensorVec contract(const Tensor3& bilinear, int leg) const;
    // applies an n x n matrix to one leg
    TensorVec map_leg(const Matrix& m, int leg) const;
    // applies an n^2 x n^2 operator to the two legs (leg, leg+1)
    TensorVec map_pair(const Matrix& op, int leg) const;
    // contracts one leg with a covector (counit), dropping it
    TensorVec contract_covector(const Vec& covector, int leg) const;
    // contracts legs (leg, leg+1) with a bilinear form given as an n x n matrix
    TensorVec contract_form(const Matrix& form, int leg) const;
    TensorVec swap_legs(int a, int b) const;
    // rearranges legs: new leg d is old leg src_of_dst[d]
    TensorVec reorder(const std::vector<int>& src_of_dst) const;

    const std::map<std::vector<int>, Scalar>& terms() const { return t_; }

  private:
    int dim_, legs_;
    std::map<std::vector<int>, Scalar> t_;
};

// Expands lhs and rhs on every basis multi-index of dim^in_legs inputs (row
// major) and reports the first disagreement.
using SideFn = std::function<TensorVec(const std::vector<int>&)>;
Check compare_maps(const std::string& name, int dim, int in_legs, const SideFn& lhs,
                   const SideFn& rhs);

Check compare_matrices(const std::string& name, const Matrix& lhs, const Matrix& rhs);

}  // namespace hopfyb

#endif
