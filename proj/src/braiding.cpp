#include "hopfyb/braiding.hpp"

#include <chrono>

namespace hopfyb {

namespace {

TensorVec basis(int n, const std::vector<int>& idx) { return TensorVec::basis(n, idx); }

long ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
}

Matrix unit_as_matrix(const HopfAlgebra& h) {
    Matrix u(h.dim, 1);
    for (int i = 0; i < h.dim; ++i) u.at(i, 0) = h.unit[i];
    return u;
}

Matrix counit_as_matrix(const HopfAlgebra& h) {
    Matrix e(1, h.dim);
    for (int i = 0; i < h.dim; ++i) e.at(0, i) = h.counit[i];
    return e;
}

}  // namespace

BraidingOperator build_r(const ActionPair& pair, bool verify_pair) {
    if (verify_pair) {
        AxiomReport pre = verify_matched_pair(pair);
        if (!pre.all_passed()) throw verification_error(std::move(pre));
    }
    const HopfAlgebra& h = pair.algebra();
    const int n = h.dim;
    BraidingOperator r{pair.hopf, pair.name, Matrix(n * n, n * n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            TensorVec v = basis(n, {i, j})
                              .expand(h.comult, 0)
                              .expand(h.comult, 2)
                              .swap_legs(1, 2)          // x1 y1 x2 y2
                              .contract(pair.left, 0)   // (x1->y1) x2 y2
                              .contract(pair.right, 1);
            for (const auto& [idx, c] : v.terms())
                r.matrix.at(idx[0] * n + idx[1], i * n + j) = c;
        }
    return r;
}

AxiomReport verify_braiding_axioms(const BraidingOperator& r) {
    const HopfAlgebra& h = r.algebra();
    const int n = h.dim;
    auto t0 = std::chrono::steady_clock::now();
    AxiomReport rep;
    rep.subject = "braiding operator from " + r.source + " on " + h.name;

    Matrix m = h.mult.as_matrix();          // n x n^2
    Matrix id = Matrix::identity(n);
    Matrix u = unit_as_matrix(h);
    Matrix eps = counit_as_matrix(h);

    rep.add(compare_matrices("(a) m r = m", m * r.matrix, m));
    rep.add(compare_matrices("(b) r (m x id) = (id x m)(r x id)(id x r)",
                             r.matrix * kron(m, id),
                             kron(id, m) * kron(r.matrix, id) * kron(id, r.matrix)));
    rep.add(compare_matrices("(c) r (id x m) = (m x id)(id x r)(r x id)",
                             r.matrix * kron(id, m),
                             kron(m, id) * kron(id, r.matrix) * kron(r.matrix, id)));
    rep.add(compare_matrices("(d) r (u x id) = id x u", r.matrix * kron(u, id), kron(id, u)));
    rep.add(compare_matrices("(e) r (id x u) = u x id", r.matrix * kron(id, u), kron(u, id)));

    // coalgebra morphism: Delta_{HxH} r = (r x r) Delta_{HxH}
    rep.add(compare_maps(
        "comult-morphism", n, 2,
        [&](const std::vector<int>& i) {
            return basis(n, i)
                .map_pair(r.matrix, 0)
                .expand(h.comult, 0)
                .expand(h.comult, 2)
                .swap_legs(1, 2);
        },
        [&](const std::vector<int>& i) {
            return basis(n, i)
                .expand(h.comult, 0)
                .expand(h.comult, 2)
                .swap_legs(1, 2)
                .map_pair(r.matrix, 0)
                .map_pair(r.matrix, 2);
        }));
    rep.add(compare_matrices("counit-morphism", kron(eps, eps) * r.matrix, kron(eps, eps)));

    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Check check_braid_equation(const BraidingOperator& r) {
    const int n = r.algebra().dim;
    Check c{"braid-equation", true, std::nullopt};
    if (auto defect = braid_equation_defect(r.matrix, n)) {
        int row = defect->row, col = defect->col;
        c.passed = false;
        c.witness = Witness{{col / (n * n), (col / n) % n, col % n,
                             row / (n * n), (row / n) % n, row % n},
                            defect->lhs.str(), defect->rhs.str()};
    }
    return c;
}

Matrix r_inverse_formula(const ActionPair& pair) {
    const HopfAlgebra& h = pair.algebra();
    const int n = h.dim;
    const Tensor3& L = pair.left;
    const Tensor3& R = pair.right;
    Matrix t(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            TensorVec v = basis(n, {i, j})
                              .expand(h.comult, 0)
                              .expand(h.comult, 0)  // x1 x2 x3 y
                              .expand(h.comult, 3)
                              .expand(h.comult, 3)  // x1 x2 x3 y1 y2 y3
                              .map_leg(h.antipode, 0)
                              .map_leg(h.antipode, 1)
                              .map_leg(h.antipode, 4)
                              .map_leg(h.antipode, 5)
                              // to: y1 S(y2) S(x1) S(y3) S(x2) x3
                              .reorder({3, 4, 0, 5, 1, 2})
                              .contract(L, 1)   // y1 (S(y2)->S(x1)) S(y3) S(x2) x3
                              .contract(R, 0)   // A S(y3) S(x2) x3
                              .contract(R, 1)   // A (S(y3)<-S(x2)) x3
                              .contract(L, 1);  // A B
            for (const auto& [idx, c] : v.terms()) t.at(idx[0] * n + idx[1], i * n + j) = c;
        }
    BraidingOperator r = build_r(pair, false);
    Matrix id = Matrix::identity(n * n);
    if (t * r.matrix != id || r.matrix * t != id)
        throw inverse_check_error("inverse formula does not invert r for pair " + pair.name);
    return t;
}

Matrix r_inverse_via_antipode(const BraidingOperator& r) {
    const HopfAlgebra& h = r.algebra();
    Matrix s_inv = mat_inverse(h.antipode);  // throws singular_matrix_error
    Matrix tau = flip_matrix(h.dim);
    return kron(s_inv, s_inv) * tau * r.matrix * kron(h.antipode, h.antipode) * tau;
}

AxiomReport ybo_identities(const ActionPair& pair, const BraidingOperator& r) {
    const HopfAlgebra& h = pair.algebra();
    const int n = h.dim;
    const Tensor3& L = pair.left;
    const Tensor3& R = pair.right;
    auto t0 = std::chrono::steady_clock::now();
    AxiomReport rep;
    rep.subject = "Yang-Baxter antipode identities for " + pair.name + " on " + h.name;

    // r(S(x2<-y2) (x) S(x1->y1)) = S(y) (x) S(x)
    rep.add(compare_maps(
        "r(S(x2<-y2) x S(x1->y1)) = S(y) x S(x)", n, 2,
        [&](const std::vector<int>& i) {
            return basis(n, i)
                .expand(h.comult, 0)
                .expand(h.comult, 2)
                .swap_legs(1, 2)   // x1 y1 x2 y2
                .contract(L, 0)    // (x1->y1) x2 y2
                .contract(R, 1)    // (x1->y1) (x2<-y2)
                .map_leg(h.antipode, 0)
                .map_leg(h.antipode, 1)
                .swap_legs(0, 1)
                .map_pair(r.matrix, 0);
        },
        [&](const std::vector<int>& i) {
            return basis(n, i).swap_legs(0, 1).map_leg(h.antipode, 0).map_leg(h.antipode, 1);
        }));

    // swapped variant via MP5: r(S(x1<-y1) (x) S(x2->y2)) = S(y) (x) S(x)
    rep.add(compare_maps(
        "r(S(x1<-y1) x S(x2->y2)) = S(y) x S(x)", n, 2,
        [&](const std::vector<int>& i) {
            return basis(n, i)
                .expand(h.comult, 0)
                .expand(h.comult, 2)
                .swap_legs(1, 2)
                .contract(R, 0)
                .contract(L, 1)
                .map_leg(h.antipode, 0)
                .map_leg(h.antipode, 1)
                .map_pair(r.matrix, 0);
        },
        [&](const std::vector<int>& i) {
            return basis(n, i).swap_legs(0, 1).map_leg(h.antipode, 0).map_leg(h.antipode, 1);
        }));

    // r(S(x1) (x) (x2->y)) = y1 (x) S(x<-y2)
    rep.add(compare_maps(
        "r(S(x1) x (x2->y)) = y1 x S(x<-y2)", n, 2,
        [&](const std::vector<int>& i) {
            return basis(n, i)
                .expand(h.comult, 0)  // x1 x2 y
                .contract(L, 1)       // x1 (x2->y)
                .map_leg(h.antipode, 0)
                .map_pair(r.matrix, 0);
        },
        [&](const std::vector<int>& i) {
            return basis(n, i)
                .expand(h.comult, 1)   // x y1 y2
                .reorder({1, 0, 2})    // y1 x y2
                .contract(R, 1)        // y1 (x<-y2)
                .map_leg(h.antipode, 1);
        }));

    // r((x<-y1) (x) S(y2)) = S(x1->y) (x) x2
    rep.add(compare_maps(
        "r((x<-y1) x S(y2)) = S(x1->y) x x2", n, 2,
        [&](const std::vector<int>& i) {
            return basis(n, i)
                .expand(h.comult, 1)  // x y1 y2
                .contract(R, 0)       // (x<-y1) y2
                .map_leg(h.antipode, 1)
                .map_pair(r.matrix, 0);
        },
        [&](const std::vector<int>& i) {
            return basis(n, i)
                .expand(h.comult, 0)  // x1 x2 y
                .swap_legs(1, 2)      // x1 y x2
                .contract(L, 0)       // (x1->y) x2
                .map_leg(h.antipode, 0);
        }));

    rep.elapsed_ms = ms_since(t0);
    return rep;
}

InvolutivityReport involutivity_report(const ActionPair& pair, const BraidingOperator& r) {
    const HopfAlgebra& h = pair.algebra();
    const int n = h.dim;
    const Tensor3& L = pair.left;
    const Tensor3& R = pair.right;
    auto t0 = std::chrono::steady_clock::now();
    InvolutivityReport rep{};

    rep.r_squared = (r.matrix * r.matrix == Matrix::identity(n * n));

    Check in2a = compare_maps(
        "in2-left", n, 2,
        [&](const std::vector<int>& i) {
            return basis(n, i)
                .expand(h.comult, 0)
                .expand(h.comult, 2)
                .swap_legs(1, 2)
                .contract(L, 0)
                .contract(R, 1)
                .contract(L, 0);
        },
        [&](const std::vector<int>& i) { return basis(n, i).contract_covector(h.counit, 1); });
    Check in2b = compare_maps(
        "in2-right", n, 2,
        [&](const std::vector<int>& i) {
            return basis(n, i)
                .expand(h.comult, 0)
                .expand(h.comult, 2)
                .swap_legs(1, 2)
                .contract(L, 0)
                .contract(R, 1)
                .contract(R, 0);
        },
        [&](const std::vector<int>& i) { return basis(n, i).contract_covector(h.counit, 0); });
    rep.counit_identities = in2a.passed && in2b.passed;

    Check in3 = compare_maps(
        "in3", n, 2,
        [&](const std::vector<int>& i) { return basis(n, i).contract(R, 0); },
        [&](const std::vector<int>& i) {
            return basis(n, i)
                .expand(h.comult, 0)  // x1 x2 y
                .swap_legs(1, 2)      // x1 y x2
                .contract(L, 0)       // (x1->y) x2
                .map_leg(h.antipode, 0)
                .contract(L, 0);
        });
    rep.antipode_identity = in3.passed;

    TransmutationData t = build_transmutation(pair);
    rep.braided_commutative = braided_commutativity(t).passed;

    if (rep.r_squared != rep.counit_identities || rep.r_squared != rep.antipode_identity ||
        rep.r_squared != rep.braided_commutative)
        throw internal_inconsistency_error(
            "involutivity conditions disagree; the four criteria are provably equivalent");

    rep.elapsed_ms = ms_since(t0);
    return rep;
}

ActionPair extract_actions_from_r(const Matrix& r, const HopfAlgebra& h, bool verify) {
    const int n = h.dim;
    if (r.rows() != n * n || r.cols() != n * n)
        throw dimension_error("operator matrix is not n^2 x n^2");
    if (verify) {
        BraidingOperator candidate{std::make_shared<HopfAlgebra>(h), "input", r};
        AxiomReport rep = verify_braiding_axioms(candidate);
        if (!rep.all_passed()) throw verification_error(std::move(rep));
    }
    ActionPair p;
    p.hopf = std::make_shared<HopfAlgebra>(h);
    p.name = "extracted";
    p.left = Tensor3(n);
    p.right = Tensor3(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int pp = 0; pp < n; ++pp)
                for (int q = 0; q < n; ++q) {
                    const Scalar& c = r.at(pp * n + q, i * n + j);
                    if (c.is_zero()) continue;
                    p.left.at(i, j, pp) += c * h.counit[q];
                    p.right.at(i, j, q) += c * h.counit[pp];
                }
    return p;
}

AxiomReport involutive_antipode_identities(const ActionPair& pair) {
    const HopfAlgebra& h = pair.algebra();
    const int n = h.dim;
    BraidingOperator r = build_r(pair, false);
    if (r.matrix * r.matrix != Matrix::identity(n * n))
        throw precondition_error("these identities require an involutive operator; " + pair.name +
                                 " is not");
    auto t0 = std::chrono::steady_clock::now();
    AxiomReport rep;
    rep.subject = "involutive antipode identities for " + pair.name;
    rep.add(compare_maps(
        "S(x<-y) = S(y)->S(x)", n, 2,
        [&](const std::vector<int>& i) {
            return basis(n, i).contract(pair.right, 0).map_leg(h.antipode, 0);
        },
        [&](const std::vector<int>& i) {
            return basis(n, i)
                .swap_legs(0, 1)
                .map_leg(h.antipode, 0)
                .map_leg(h.antipode, 1)
                .contract(pair.left, 0);
        }));
    rep.add(compare_maps(
        "S(x->y) = S(y)<-S(x)", n, 2,
        [&](const std::vector<int>& i) {
            return basis(n, i).contract(pair.left, 0).map_leg(h.antipode, 0);
        },
        [&](const std::vector<int>& i) {
            return basis(n, i)
                .swap_legs(0, 1)
                .map_leg(h.antipode, 0)
                .map_leg(h.antipode, 1)
                .contract(pair.right, 0);
        }));
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

}  // namespace hopfyb
