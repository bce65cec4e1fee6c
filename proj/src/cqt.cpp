#include "hopfyb/cqt.hpp"

#include <chrono>

#include "hopfyb/braiding.hpp"

namespace hopfyb {

namespace {

TensorVec basis(int n, const std::vector<int>& idx) { return TensorVec::basis(n, idx); }

}  // namespace

Matrix convolution_inverse_form(const HopfAlgebra& h, const Matrix& r) {
    const int n = h.dim;
    if (r.rows() != n || r.cols() != n) throw dimension_error("form must be n x n");
    // unknowns R'[p][q] flattened; equation per pair (i,j):
    //   sum Delta_i[p,q] Delta_j[s,t] R'[p][s] R[q][t] = eps_i eps_j
    Matrix sys(n * n, n * n);
    Vec rhs(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    const Scalar& di = h.comult.at(p * n + q, i);
                    if (di.is_zero()) continue;
                    for (int s = 0; s < n; ++s)
                        for (int t = 0; t < n; ++t) {
                            const Scalar& dj = h.comult.at(s * n + t, j);
                            if (dj.is_zero() || r.at(q, t).is_zero()) continue;
                            sys.at(i * n + j, p * n + s) += di * dj * r.at(q, t);
                        }
                }
            rhs[i * n + j] = h.counit[i] * h.counit[j];
        }
    auto x = solve_linear(sys, rhs);
    if (!x) throw not_convolution_invertible_error("form has no left convolution inverse");
    Matrix inv(n, n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) inv.at(p, q) = (*x)[p * n + q];

    // two-sided law
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar right_side;
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    const Scalar& di = h.comult.at(p * n + q, i);
                    if (di.is_zero()) continue;
                    for (int s = 0; s < n; ++s)
                        for (int t = 0; t < n; ++t) {
                            const Scalar& dj = h.comult.at(s * n + t, j);
                            if (dj.is_zero()) continue;
                            right_side += di * dj * r.at(p, s) * inv.at(q, t);
                        }
                }
            if (right_side != h.counit[i] * h.counit[j])
                throw not_convolution_invertible_error(
                    "left convolution inverse is not a right inverse");
        }
    return inv;
}

CqtForm make_cqt_form(const HopfAlgebra& h, const Matrix& form, const std::string& name) {
    CqtForm f;
    f.hopf = std::make_shared<HopfAlgebra>(h);
    f.name = name;
    f.form = form;
    f.inverse_form = convolution_inverse_form(h, form);
    return f;
}

AxiomReport verify_cqt(const CqtForm& f) {
    const HopfAlgebra& h = f.algebra();
    const int n = h.dim;
    auto t0 = std::chrono::steady_clock::now();
    AxiomReport rep;
    rep.subject = "coquasitriangular form " + f.name + " on " + h.name;

    rep.add(compare_maps(
        "inverse-law-left", n, 2,
        [&](const std::vector<int>& i) {
            return basis(n, i)
                .expand(h.comult, 0)
                .expand(h.comult, 2)
                .swap_legs(1, 2)  // a1 b1 a2 b2
                .contract_form(f.inverse_form, 0)
                .contract_form(f.form, 0);
        },
        [&](const std::vector<int>& i) {
            return basis(n, i).contract_covector(h.counit, 0).contract_covector(h.counit, 0);
        }));
    rep.add(compare_maps(
        "inverse-law-right", n, 2,
        [&](const std::vector<int>& i) {
            return basis(n, i)
                .expand(h.comult, 0)
                .expand(h.comult, 2)
                .swap_legs(1, 2)
                .contract_form(f.form, 0)
                .contract_form(f.inverse_form, 0);
        },
        [&](const std::vector<int>& i) {
            return basis(n, i).contract_covector(h.counit, 0).contract_covector(h.counit, 0);
        }));

    // R(a1 (x) b1) a2 b2 = b1 a1 R(a2 (x) b2)
    rep.add(compare_maps(
        "commutation-up-to-form", n, 2,
        [&](const std::vector<int>& i) {
            return basis(n, i)
                .expand(h.comult, 0)
                .expand(h.comult, 2)
                .swap_legs(1, 2)
                .contract_form(f.form, 0)
                .contract(h.mult, 0);
        },
        [&](const std::vector<int>& i) {
            return basis(n, i)
                .expand(h.comult, 0)
                .expand(h.comult, 2)
                .swap_legs(1, 2)
                .contract_form(f.form, 2)
                .swap_legs(0, 1)
                .contract(h.mult, 0);
        }));

    // R(a (x) bc) = R(a1 (x) c) R(a2 (x) b)
    rep.add(compare_maps(
        "splitting-second-argument", n, 3,
        [&](const std::vector<int>& i) {
            return basis(n, i).contract(h.mult, 1).contract_form(f.form, 0);
        },
        [&](const std::vector<int>& i) {
            return basis(n, i)
                .expand(h.comult, 0)       // a1 a2 b c
                .reorder({0, 3, 1, 2})     // a1 c a2 b
                .contract_form(f.form, 0)
                .contract_form(f.form, 0);
        }));

    // R(ab (x) c) = R(a (x) c1) R(b (x) c2)
    rep.add(compare_maps(
        "splitting-first-argument", n, 3,
        [&](const std::vector<int>& i) {
            return basis(n, i).contract(h.mult, 0).contract_form(f.form, 0);
        },
        [&](const std::vector<int>& i) {
            return basis(n, i)
                .expand(h.comult, 2)   // a b c1 c2
                .swap_legs(1, 2)       // a c1 b c2
                .contract_form(f.form, 0)
                .contract_form(f.form, 0);
        }));

    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

bool is_cotriangular(const CqtForm& f) { return f.inverse_form == f.form.transpose(); }

ActionPair induce_pair_from_cqt(const CqtForm& f) {
    const HopfAlgebra& h = f.algebra();
    const int n = h.dim;
    ActionPair p;
    p.hopf = f.hopf;
    p.name = "cqt:" + f.name;
    p.left = Tensor3(n);
    p.right = Tensor3(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // a -> b = R^{-1}(a1 (x) b1) b2 R(a2 (x) b3)
            TensorVec l = basis(n, {i, j})
                              .expand(h.comult, 0)   // a1 a2 b
                              .expand(h.comult, 2)
                              .expand(h.comult, 2)   // a1 a2 b1 b2 b3
                              .reorder({0, 2, 3, 1, 4})  // a1 b1 b2 a2 b3
                              .contract_form(f.inverse_form, 0)  // b2 a2 b3
                              .contract_form(f.form, 1);         // b2
            for (const auto& [idx, c] : l.terms()) p.left.at(i, j, idx[0]) = c;
            // a <- b = R^{-1}(a1 (x) b1) a2 R(a3 (x) b2)
            TensorVec r = basis(n, {i, j})
                              .expand(h.comult, 0)
                              .expand(h.comult, 0)   // a1 a2 a3 b
                              .expand(h.comult, 3)   // a1 a2 a3 b1 b2
                              .reorder({0, 3, 1, 2, 4})  // a1 b1 a2 a3 b2
                              .contract_form(f.inverse_form, 0)  // a2 a3 b2
                              .contract_form(f.form, 1);         // a2
            for (const auto& [idx, c] : r.terms()) p.right.at(i, j, idx[0]) = c;
        }
    AxiomReport rep = verify_matched_pair(p);
    if (!rep.all_passed()) throw verification_error(std::move(rep));
    return p;
}

Matrix cqt_braiding_matrix(const CqtForm& f) {
    const HopfAlgebra& h = f.algebra();
    const int n = h.dim;
    Matrix r(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // r(a (x) b) = R^{-1}(a1 (x) b1) b2 (x) a2 R(a3 (x) b3)
            TensorVec v = basis(n, {i, j})
                              .expand(h.comult, 0)
                              .expand(h.comult, 0)   // a1 a2 a3 b
                              .expand(h.comult, 3)
                              .expand(h.comult, 3)   // a1 a2 a3 b1 b2 b3
                              .reorder({0, 3, 4, 1, 2, 5})  // a1 b1 b2 a2 a3 b3
                              .contract_form(f.inverse_form, 0)  // b2 a2 a3 b3
                              .contract_form(f.form, 2);         // b2 a2
            for (const auto& [idx, c] : v.terms()) r.at(idx[0] * n + idx[1], i * n + j) = c;
        }
    return r;
}

CqtForm r_alpha_form(const Scalar& alpha) {
    HopfAlgebra h = a_c2c2();
    Matrix form(8, 8);
    for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v) {
            int i = u & 1, j = (u >> 1) & 1, k = (u >> 2) & 1;
            int l = v & 1, m = (v >> 1) & 1, nn = (v >> 2) & 1;
            Scalar val;
            if (k == 0 && nn == 0) val += Scalar(((i + j) * (l + m)) % 2 ? -1 : 1);
            if (k == 1 && nn == 1)
                val += alpha * Scalar(((i + j) * (l + m + 1)) % 2 ? -1 : 1);
            form.at(u, v) = val;
        }
    return make_cqt_form(h, form, "r_alpha");
}

Check family2_obstruction() {
    Check c{"family2-not-induced-by-r_alpha", true, std::nullopt};
    CqtForm f = r_alpha_form();
    ActionPair induced = induce_pair_from_cqt(f);
    ActionPair fam2 = a22_family_pair(2);
    const int hh = 2;  // index of the group-like h
    bool some_difference = false;
    for (int k = 0; k < 8; ++k) {
        Scalar diff = induced.left.at(hh, hh, k) - fam2.left.at(hh, hh, k);
        if (diff.is_zero()) continue;
        some_difference = true;
        if (!diff.is_constant()) {
            // a parameter-dependent difference could vanish for a special
            // value; that would defeat the obstruction
            c.passed = false;
            c.witness = Witness{{hh, hh, k}, induced.left.at(hh, hh, k).str(),
                                fam2.left.at(hh, hh, k).str()};
            return c;
        }
    }
    if (!some_difference) {
        c.passed = false;
        c.witness = Witness{{hh, hh}, "induced action equals family 2 at (h,h)", ""};
    }
    return c;
}

}  // namespace hopfyb
