// Acceptance suite: runs every criterion end to end at its stated tolerance
// (all comparisons exact, time budgets enforced) and prints one line each.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "hopfyb/braiding.hpp"
#include "hopfyb/cqt.hpp"
#include "hopfyb/json_io.hpp"

using namespace hopfyb;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

long run_ms(const std::function<bool(std::string&)>& body, int number, const std::string& title) {
    auto t0 = Clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    std::cout << (ok ? "PASS" : "FAIL") << "  " << number << "  " << title << "  [" << ms
              << " ms]";
    if (!ok && !detail.empty()) std::cout << "  -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
    return ms;
}

bool within(long ms, long budget, std::string& detail) {
    if (ms <= budget) return true;
    detail = "exceeded time budget: " + std::to_string(ms) + " ms > " + std::to_string(budget) +
             " ms";
    return false;
}

Vec basis_vec(int n, int i) {
    Vec v(n);
    v[i] = Scalar(1);
    return v;
}

std::vector<ActionPair> corpus() {
    std::vector<ActionPair> c;
    c.push_back(a22_family_pair(1));
    c.push_back(a22_family_pair(2));
    c.push_back(conjugation_pair(symmetric_group_algebra_s3()));
    c.push_back(conjugation_pair(cyclic_group_algebra_c2()));
    c.push_back(trivial_pair(klein_four_algebra()));
    return c;
}

bool is_s3_conjugation(const ActionPair& p) {
    return p.name == "conjugation" && p.algebra().name == "s3";
}

}  // namespace

int main() {
    // 1. catalog integrity
    run_ms(
        [&](std::string& detail) {
            for (const char* name : {"c2", "c2c2", "s3", "h4", "a_c2c2"}) {
                auto t0 = Clock::now();
                AxiomReport rep = verify_hopf(catalog_hopf(name));
                long ms =
                    std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
                        .count();
                if (!rep.all_passed()) {
                    detail = std::string(name) + " failed an axiom";
                    return false;
                }
                if (!within(ms, 5000, detail)) return false;
            }
            return true;
        },
        1, "catalog integrity: every axiom passes for c2, c2c2, s3, h4, a_c2c2");

    // 2. skew-primitive classification
    run_ms(
        [&](std::string& detail) {
            HopfAlgebra a = a_c2c2();
            auto t0 = Clock::now();
            const int one = 0, g = 1, h = 2, gh = 3, x = 4, gx = 5, hx = 6, ghx = 7;
            auto diff = [&](int p, int q) {
                Vec v(8);
                v[p] = Scalar(1);
                v[q] = Scalar(-1);
                return v;
            };
            struct Row {
                int g, h;
                std::vector<Vec> span;
            };
            std::vector<Row> table = {
                {one, h, {diff(one, h)}},
                {h, one, {diff(one, h)}},
                {one, gh, {diff(one, gh)}},
                {gh, one, {diff(one, gh)}},
                {g, h, {diff(g, h)}},
                {h, g, {diff(g, h)}},
                {g, gh, {diff(g, gh)}},
                {gh, g, {diff(g, gh)}},
                {one, g, {diff(one, g), basis_vec(8, x)}},
                {g, one, {diff(one, g), basis_vec(8, gx)}},
                {h, gh, {diff(h, gh), basis_vec(8, hx)}},
                {gh, h, {diff(h, gh), basis_vec(8, ghx)}},
            };
            for (const auto& row : table) {
                auto got = skew_primitives(a, basis_vec(8, row.g), basis_vec(8, row.h));
                if (!same_span(got, row.span, 8)) {
                    detail = "span mismatch at P_{" + a.basis_names[row.g] + "," +
                             a.basis_names[row.h] + "}";
                    return false;
                }
            }
            for (int d : {one, g, h, gh})
                if (!skew_primitives(a, basis_vec(8, d), basis_vec(8, d)).empty()) {
                    detail = "diagonal space P_{" + a.basis_names[d] + "," + a.basis_names[d] +
                             "} is not zero";
                    return false;
                }
            long ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
            return within(ms, 5000, detail);
        },
        2, "skew-primitive table of a_c2c2 reproduced with exact span equality");

    // 3. both families: matched-pair axioms and the derived right action
    run_ms(
        [&](std::string& detail) {
            for (int fam : {1, 2}) {
                auto t0 = Clock::now();
                ActionPair p = a22_family_pair(fam);
                AxiomReport rep = verify_matched_pair(p);
                if (!rep.all_passed()) {
                    detail = "family " + std::to_string(fam) + " fails a matched-pair axiom";
                    return false;
                }
                if (derive_right_action(p.algebra(), p.left) != p.right) {
                    detail = "derived right action disagrees with the catalog for family " +
                             std::to_string(fam);
                    return false;
                }
                long ms =
                    std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
                        .count();
                if (!within(ms, 30000, detail)) return false;
            }
            return true;
        },
        3, "families 1 and 2 verify symbolically; right actions re-derived");

    // 4. braiding axioms and braid equation, exact and sampled
    run_ms(
        [&](std::string& detail) {
            std::vector<ActionPair> cases;
            cases.push_back(a22_family_pair(1));
            cases.push_back(a22_family_pair(2));
            cases.push_back(conjugation_pair(symmetric_group_algebra_s3()));
            cases.push_back(trivial_pair(klein_four_algebra()));
            for (const auto& p : cases) {
                auto t0 = Clock::now();
                BraidingOperator r = build_r(p, false);
                AxiomReport rep = verify_braiding_axioms(r);
                Check braid = check_braid_equation(r);
                if (!rep.all_passed() || !braid.passed) {
                    detail = p.name + " on " + p.algebra().name + " fails";
                    return false;
                }
                long ms =
                    std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
                        .count();
                if (!within(ms, 120000, detail)) return false;
            }
            // sampled mode on the symbolic families
            auto t0 = Clock::now();
            for (int fam : {1, 2}) {
                ActionPair p = a22_family_pair(fam);
                for (long v : {0L, 1L, -1L, 2L, -2L}) {
                    ActionPair pv = instantiate(p, Scalar(v));
                    BraidingOperator rv = build_r(pv, false);
                    if (!verify_braiding_axioms(rv).all_passed() ||
                        !check_braid_equation(rv).passed) {
                        detail = "sampled check fails at a = " + std::to_string(v);
                        return false;
                    }
                }
            }
            long fast_ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
            return within(fast_ms, 10000, detail);
        },
        4, "braiding axioms + braid equation (512x512 exact, plus sampled mode)");

    // 5. involutivity split
    run_ms(
        [&](std::string& detail) {
            for (const auto& p : corpus()) {
                BraidingOperator r = build_r(p, false);
                InvolutivityReport rep = involutivity_report(p, r);  // throws on disagreement
                bool expect = !is_s3_conjugation(p);
                if (rep.involutive() != expect) {
                    detail = p.name + " on " + p.algebra().name + ": unexpected verdict";
                    return false;
                }
            }
            return true;
        },
        5, "involutivity: families all-true, s3 conjugation all-false, flips all-true");

    // 6. inverse formulas
    run_ms(
        [&](std::string& detail) {
            for (const auto& p : corpus()) {
                const int nn = p.algebra().dim * p.algebra().dim;
                BraidingOperator r = build_r(p, false);
                Matrix t = r_inverse_formula(p);
                if (t * r.matrix != Matrix::identity(nn) || r.matrix * t != Matrix::identity(nn)) {
                    detail = "two-sided inverse fails for " + p.name;
                    return false;
                }
                if (r_inverse_via_antipode(r) != t) {
                    detail = "antipode route disagrees for " + p.name;
                    return false;
                }
            }
            return true;
        },
        6, "inverse formulas: convolution route and antipode route agree, two-sided");

    // 7. Yang-Baxter antipode identities, plus the involutive-only pair
    run_ms(
        [&](std::string& detail) {
            for (const auto& p : corpus()) {
                BraidingOperator r = build_r(p, false);
                if (!ybo_identities(p, r).all_passed()) {
                    detail = "antipode identity fails for " + p.name;
                    return false;
                }
                if (!is_s3_conjugation(p) && !involutive_antipode_identities(p).all_passed()) {
                    detail = "involutive antipode identities fail for " + p.name;
                    return false;
                }
            }
            return true;
        },
        7, "r-antipode identities on all pairs; involutive-only identities where applicable");

    // 8. transmutation
    run_ms(
        [&](std::string& detail) {
            for (const auto& p : corpus()) {
                TransmutationData t = build_transmutation(p);
                if (!verify_yd_module(p.algebra(), p.left, t.ad_l_coaction).all_passed()) {
                    detail = "yd module fails for " + p.name;
                    return false;
                }
                if (!verify_braided_hopf(p, t).all_passed()) {
                    detail = "braided Hopf structure fails for " + p.name;
                    return false;
                }
                if (!check_hopf_brace_compat(p, t).passed) {
                    detail = "brace compatibility fails for " + p.name;
                    return false;
                }
                Check comm = braided_commutativity(t);
                if (is_s3_conjugation(p)) {
                    if (comm.passed || !comm.witness) {
                        detail = "s3 conjugation should fail braided commutativity with witness";
                        return false;
                    }
                } else if (!comm.passed) {
                    detail = "braided commutativity fails for involutive pair " + p.name;
                    return false;
                }
            }
            return true;
        },
        8, "transmutation: YD module, braided Hopf laws, brace compatibility");

    // 9. adjoint actions
    run_ms(
        [&](std::string& detail) {
            for (const auto& p : corpus()) {
                TransmutationData t = build_transmutation(p);
                AdjointActions adj = adjoint_actions(p, t);  // closed==compositional inside
                if (is_s3_conjugation(p)) {
                    if (adj.left_trivial || adj.right_trivial) {
                        detail = "s3 adjoints unexpectedly trivial";
                        return false;
                    }
                } else if (p.name == "family1" || p.name == "family2") {
                    if (!adj.left_trivial || !adj.right_trivial) {
                        detail = p.name + " adjoints should be trivial";
                        return false;
                    }
                }
            }
            return true;
        },
        9, "adjoint actions: closed forms match compositions; trivial iff braided commutative");

    // 10. double cross product, bosonization, and the isomorphism
    run_ms(
        [&](std::string& detail) {
            auto t0 = Clock::now();
            for (int fam : {1, 2}) {
                ActionPair p = a22_family_pair(fam);
                TransmutationData t = build_transmutation(p);
                HopfAlgebra d = double_cross_product(p);
                HopfAlgebra b = bosonization(p, t);
                if (d.dim != 64 || b.dim != 64) {
                    detail = "product dimension is not 64";
                    return false;
                }
                if (!verify_hopf(d).all_passed() || !verify_hopf(b).all_passed()) {
                    detail = "a 64-dimensional product fails the Hopf axioms (family " +
                             std::to_string(fam) + ")";
                    return false;
                }
                phi_isomorphism(p, t);  // throws when any intertwiner check fails
            }
            long ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
            return within(ms, 120000, detail);
        },
        10, "64-dimensional double cross product and bosonization are isomorphic Hopf algebras");

    // 11. coquasitriangular structure
    run_ms(
        [&](std::string& detail) {
            CqtForm f = r_alpha_form();
            if (!verify_cqt(f).all_passed()) {
                detail = "bundled form fails a cqt axiom";
                return false;
            }
            if (!is_cotriangular(f)) {
                detail = "bundled form is not cotriangular";
                return false;
            }
            ActionPair induced = induce_pair_from_cqt(f);
            ActionPair fam1 = a22_family_pair(1);
            if (induced.left != fam1.left || induced.right != fam1.right) {
                detail = "induced pair differs from family 1";
                return false;
            }
            if (build_r(induced, false).matrix != cqt_braiding_matrix(f)) {
                detail = "braiding from the induced pair differs from the direct formula";
                return false;
            }
            if (!family2_obstruction().passed) {
                detail = "family-2 obstruction check failed";
                return false;
            }
            return true;
        },
        11, "cotriangular form verifies, induces family 1, and cannot induce family 2");

    // 12. brute-force group oracle
    run_ms(
        [&](std::string& detail) {
            for (const char* name : {"c2", "c2c2", "s3"}) {
                HopfAlgebra g = catalog_hopf(name);
                const int n = g.dim;
                BraidingOperator r = build_r(conjugation_pair(g), false);
                for (int x = 0; x < n; ++x) {
                    Vec gx = basis_vec(n, x);
                    Vec ginv = g.apply_antipode(gx);
                    for (int y = 0; y < n; ++y) {
                        Vec conj = g.product(g.product(gx, basis_vec(n, y)), ginv);
                        int cx = -1;
                        for (int k = 0; k < n; ++k)
                            if (conj[k].is_one()) cx = k;
                        for (int row = 0; row < n * n; ++row) {
                            Scalar expect = (row == cx * n + x) ? Scalar(1) : Scalar();
                            if (r.matrix.at(row, x * n + y) != expect) {
                                detail = std::string("mismatch on ") + name;
                                return false;
                            }
                        }
                    }
                }
            }
            return true;
        },
        12, "conjugation operators equal the set-theoretic permutation matrices");

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
