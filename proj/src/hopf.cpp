#include "hopfyb/hopf.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>

namespace hopfyb {

Vec HopfAlgebra::product(const Vec& x, const Vec& y) const {
    Vec r(dim);
    for (int i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (int k = 0; k < dim; ++k) {
                const Scalar& m = mult.at(i, j, k);
                if (!m.is_zero()) r[k] += c * m;
            }
        }
    }
    return r;
}

Vec HopfAlgebra::apply_antipode(const Vec& x) const { return antipode.apply(x); }

Scalar HopfAlgebra::counit_of(const Vec& x) const { return dot(counit, x); }

bool HopfAlgebra::is_group_like(const Vec& v) const {
    if (counit_of(v) != Scalar(1)) return false;
    Vec dv = comult.apply(v);
    for (int p = 0; p < dim; ++p)
        for (int q = 0; q < dim; ++q)
            if (dv[p * dim + q] != v[p] * v[q]) return false;
    return true;
}

void HopfAlgebra::check_shapes() const {
    if (dim <= 0) throw dimension_error("dimension must be positive");
    if (static_cast<int>(basis_names.size()) != dim) throw dimension_error("basis names size");
    if (mult.dim() != dim) throw dimension_error("mult tensor dimension");
    if (static_cast<int>(unit.size()) != dim) throw dimension_error("unit vector size");
    if (comult.rows() != dim * dim || comult.cols() != dim) throw dimension_error("comult shape");
    if (static_cast<int>(counit.size()) != dim) throw dimension_error("counit size");
    if (antipode.rows() != dim || antipode.cols() != dim) throw dimension_error("antipode shape");
}

namespace {

TensorVec unit_tensor(const HopfAlgebra& h, const TensorVec& v, bool unit_first) {
    // tensors the unit onto v as a new first/last leg
    TensorVec r(h.dim, v.legs() + 1);
    for (const auto& [idx, c] : v.terms()) {
        for (int p = 0; p < h.dim; ++p) {
            if (h.unit[p].is_zero()) continue;
            std::vector<int> out;
            if (unit_first) {
                out.push_back(p);
                out.insert(out.end(), idx.begin(), idx.end());
            } else {
                out = idx;
                out.push_back(p);
            }
            r.add_term(out, c * h.unit[p]);
        }
    }
    return r;
}

}  // namespace

AxiomReport verify_hopf(const HopfAlgebra& h) {
    h.check_shapes();
    auto t0 = std::chrono::steady_clock::now();
    AxiomReport rep;
    rep.subject = "hopf axioms: " + h.name;
    const int n = h.dim;

    auto basis = [n](const std::vector<int>& idx) { return TensorVec::basis(n, idx); };

    rep.add(compare_maps(
        "associativity", n, 3,
        [&](const std::vector<int>& i) { return basis(i).contract(h.mult, 0).contract(h.mult, 0); },
        [&](const std::vector<int>& i) { return basis(i).contract(h.mult, 1).contract(h.mult, 0); }));

    rep.add(compare_maps(
        "unit-left", n, 1,
        [&](const std::vector<int>& i) { return unit_tensor(h, basis(i), true).contract(h.mult, 0); },
        [&](const std::vector<int>& i) { return basis(i); }));
    rep.add(compare_maps(
        "unit-right", n, 1,
        [&](const std::vector<int>& i) { return unit_tensor(h, basis(i), false).contract(h.mult, 0); },
        [&](const std::vector<int>& i) { return basis(i); }));

    rep.add(compare_maps(
        "coassociativity", n, 1,
        [&](const std::vector<int>& i) { return basis(i).expand(h.comult, 0).expand(h.comult, 0); },
        [&](const std::vector<int>& i) { return basis(i).expand(h.comult, 0).expand(h.comult, 1); }));

    rep.add(compare_maps(
        "counit-left", n, 1,
        [&](const std::vector<int>& i) {
            return basis(i).expand(h.comult, 0).contract_covector(h.counit, 0);
        },
        [&](const std::vector<int>& i) { return basis(i); }));
    rep.add(compare_maps(
        "counit-right", n, 1,
        [&](const std::vector<int>& i) {
            return basis(i).expand(h.comult, 0).contract_covector(h.counit, 1);
        },
        [&](const std::vector<int>& i) { return basis(i); }));

    rep.add(compare_maps(
        "bialgebra-comult-mult", n, 2,
        [&](const std::vector<int>& i) { return basis(i).contract(h.mult, 0).expand(h.comult, 0); },
        [&](const std::vector<int>& i) {
            return basis(i)
                .expand(h.comult, 0)
                .expand(h.comult, 2)
                .swap_legs(1, 2)
                .contract(h.mult, 2)
                .contract(h.mult, 0);
        }));

    rep.add(compare_maps(
        "bialgebra-counit-mult", n, 2,
        [&](const std::vector<int>& i) {
            return basis(i).contract(h.mult, 0).contract_covector(h.counit, 0);
        },
        [&](const std::vector<int>& i) {
            return basis(i).contract_covector(h.counit, 0).contract_covector(h.counit, 0);
        }));

    rep.add(compare_maps(
        "bialgebra-comult-unit", n, 0,
        [&](const std::vector<int>&) {
            TensorVec u(n, 0);
            u.add_term({}, Scalar(1));
            return unit_tensor(h, u, true).expand(h.comult, 0);
        },
        [&](const std::vector<int>&) {
            TensorVec u(n, 0);
            u.add_term({}, Scalar(1));
            return unit_tensor(h, unit_tensor(h, u, true), false);
        }));

    rep.add(compare_maps(
        "bialgebra-counit-unit", n, 0,
        [&](const std::vector<int>&) {
            TensorVec u(n, 0);
            u.add_term({}, Scalar(1));
            return unit_tensor(h, u, true).contract_covector(h.counit, 0);
        },
        [&](const std::vector<int>&) {
            TensorVec u(n, 0);
            u.add_term({}, Scalar(1));
            return u;
        }));

    auto unit_counit = [&](const std::vector<int>& i) {
        TensorVec r(n, 1);
        for (int p = 0; p < n; ++p) {
            Scalar c = h.unit[p] * h.counit[i[0]];
            if (!c.is_zero()) r.add_term({p}, c);
        }
        return r;
    };
    rep.add(compare_maps(
        "antipode-left", n, 1,
        [&](const std::vector<int>& i) {
            return basis(i).expand(h.comult, 0).map_leg(h.antipode, 0).contract(h.mult, 0);
        },
        unit_counit));
    rep.add(compare_maps(
        "antipode-right", n, 1,
        [&](const std::vector<int>& i) {
            return basis(i).expand(h.comult, 0).map_leg(h.antipode, 1).contract(h.mult, 0);
        },
        unit_counit));

    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

// ---------------------------------------------------------------------------
// group algebras

HopfAlgebra group_algebra(const std::vector<std::vector<int>>& t,
                          const std::vector<std::string>& names, const std::string& name) {
    const int n = static_cast<int>(t.size());
    if (n == 0) throw not_a_group_error("empty table");
    for (const auto& row : t) {
        if (static_cast<int>(row.size()) != n) throw not_a_group_error("table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw not_a_group_error("entry out of range");
    }
    int e = -1;
    for (int i = 0; i < n; ++i) {
        bool ident = true;
        for (int j = 0; j < n; ++j) ident = ident && t[i][j] == j && t[j][i] == j;
        if (ident) {
            e = i;
            break;
        }
    }
    if (e < 0) throw not_a_group_error("no identity element");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (t[t[i][j]][k] != t[i][t[j][k]]) throw not_a_group_error("associativity fails");
    std::vector<int> inv(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (t[i][j] == e && t[j][i] == e) inv[i] = j;
        if (inv[i] < 0) throw not_a_group_error("missing inverse");
    }

    HopfAlgebra h;
    h.name = name;
    h.dim = n;
    h.basis_names = names;
    h.mult = Tensor3(n);
    h.unit = Vec(n);
    h.comult = Matrix(n * n, n);
    h.counit = Vec(n);
    h.antipode = Matrix(n, n);
    h.unit[e] = Scalar(1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) h.mult.at(i, j, t[i][j]) = Scalar(1);
        h.comult.at(i * n + i, i) = Scalar(1);
        h.counit[i] = Scalar(1);
        h.antipode.at(inv[i], i) = Scalar(1);
    }
    h.check_shapes();
    return h;
}

HopfAlgebra cyclic_group_algebra_c2() {
    return group_algebra({{0, 1}, {1, 0}}, {"e", "t"}, "c2");
}

HopfAlgebra klein_four_algebra() {
    return group_algebra({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}},
                         {"e", "u", "v", "uv"}, "c2c2");
}

HopfAlgebra symmetric_group_algebra_s3() {
    // permutations of {0,1,2}; composition (s t)(i) = s(t(i))
    const std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    const std::vector<std::string> names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
    auto find = [&](const std::array<int, 3>& p) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return static_cast<int>(i);
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::array<int, 3> c{};
            for (int v = 0; v < 3; ++v) c[v] = perms[i][perms[j][v]];
            t[i][j] = find(c);
        }
    return group_algebra(t, names, "s3");
}

// ---------------------------------------------------------------------------
// pointed catalog entries presented by generators g_1..g_m (group-like,
// order 2, commuting) and one skew-primitive x with x^2 = 0, g_i x = -x g_i,
// Delta(x) = x (x) 1 + g_1 (x) x, S(x) = x g_1.
//
// Structure constants come from deterministic normal ordering: group letters
// sort left of x (each move across x flips the sign), squares reduce.

namespace {

struct NormalForm {
    int sign;   // 0 when the word collapses to zero
    int index;  // basis index: group mask + (1 << m) * x_count
};

NormalForm normal_order(std::vector<int> w, int m) {
    const int x_letter = m;
    int sign = 1;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t p = 0; p + 1 < w.size(); ++p) {
            if (w[p] > w[p + 1]) {
                if (w[p] == x_letter || w[p + 1] == x_letter) sign = -sign;
                std::swap(w[p], w[p + 1]);
                moved = true;
            }
        }
    }
    int mask = 0, xcount = 0;
    for (std::size_t p = 0; p < w.size();) {
        if (p + 1 < w.size() && w[p] == w[p + 1]) {
            if (w[p] == x_letter) return {0, 0};  // x^2 = 0
            p += 2;                               // g^2 = 1
            continue;
        }
        if (w[p] == x_letter)
            ++xcount;
        else
            mask |= 1 << w[p];
        ++p;
    }
    if (xcount > 1) return {0, 0};
    return {sign, mask + (1 << m) * xcount};
}

std::vector<int> basis_word(int index, int m) {
    std::vector<int> w;
    for (int b = 0; b < m; ++b)
        if (index & (1 << b)) w.push_back(b);
    if (index & (1 << m)) w.push_back(m);
    return w;
}

HopfAlgebra pointed_catalog_entry(int m, const std::vector<std::string>& gen_names,
                                  const std::string& name) {
    const int n = 1 << (m + 1);
    HopfAlgebra h;
    h.name = name;
    h.dim = n;
    h.mult = Tensor3(n);
    h.unit = Vec(n);
    h.comult = Matrix(n * n, n);
    h.counit = Vec(n);
    h.antipode = Matrix(n, n);
    h.unit[0] = Scalar(1);

    for (int i = 0; i < n; ++i) {
        std::string nm;
        for (int b = 0; b < m; ++b)
            if (i & (1 << b)) nm += gen_names[b];
        if (i & (1 << m)) nm += "x";
        h.basis_names.push_back(nm.empty() ? "1" : nm);
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> w = basis_word(i, m);
            std::vector<int> wj = basis_word(j, m);
            w.insert(w.end(), wj.begin(), wj.end());
            NormalForm nf = normal_order(std::move(w), m);
            if (nf.sign != 0) h.mult.at(i, j, nf.index) = Scalar(nf.sign);
        }

    // Delta and epsilon are algebra maps; S is an anti-algebra map
    std::vector<std::map<std::pair<int, int>, Scalar>> delta_gen(m + 1);
    std::vector<Vec> s_gen(m + 1, Vec(n));
    for (int b = 0; b < m; ++b) {
        int gi = 1 << b;
        delta_gen[b][{gi, gi}] = Scalar(1);
        s_gen[b][gi] = Scalar(1);
    }
    delta_gen[m][{1 << m, 0}] = Scalar(1);  // x (x) 1
    delta_gen[m][{1, 1 << m}] = Scalar(1);  // g (x) x
    {
        NormalForm nf = normal_order({m, 0}, m);  // S(x) = x g
        s_gen[m][nf.index] = Scalar(nf.sign);
    }

    for (int i = 0; i < n; ++i) {
        std::vector<int> w = basis_word(i, m);
        // comultiplication: product of generator coproducts in H (x) H
        std::map<std::pair<int, int>, Scalar> acc;
        acc[{0, 0}] = Scalar(1);
        for (int letter : w) {
            std::map<std::pair<int, int>, Scalar> next;
            for (const auto& [pq, c] : acc)
                for (const auto& [rs, d] : delta_gen[letter]) {
                    for (int k1 = 0; k1 < n; ++k1) {
                        const Scalar& m1 = h.mult.at(pq.first, rs.first, k1);
                        if (m1.is_zero()) continue;
                        for (int k2 = 0; k2 < n; ++k2) {
                            const Scalar& m2 = h.mult.at(pq.second, rs.second, k2);
                            if (m2.is_zero()) continue;
                            Scalar& slot = next[{k1, k2}];
                            slot += c * d * m1 * m2;
                        }
                    }
                }
            acc = std::move(next);
        }
        for (const auto& [pq, c] : acc)
            if (!c.is_zero()) h.comult.at(pq.first * n + pq.second, i) = c;

        h.counit[i] = (i & (1 << m)) ? Scalar(0) : Scalar(1);

        // antipode: reverse the word through generator images
        Vec s(n);
        s[0] = Scalar(1);
        for (int letter : w) s = h.product(s_gen[letter], s);
        for (int k = 0; k < n; ++k) h.antipode.at(k, i) = s[k];
    }
    h.check_shapes();
    return h;
}

}  // namespace

HopfAlgebra a_c2c2() { return pointed_catalog_entry(2, {"g", "h"}, "a_c2c2"); }

HopfAlgebra sweedler_h4() { return pointed_catalog_entry(1, {"g"}, "h4"); }

HopfAlgebra catalog_hopf(const std::string& name) {
    if (name == "a_c2c2") return a_c2c2();
    if (name == "h4") return sweedler_h4();
    if (name == "c2") return cyclic_group_algebra_c2();
    if (name == "c2c2") return klein_four_algebra();
    if (name == "s3") return symmetric_group_algebra_s3();
    throw std::invalid_argument("unknown catalog algebra: " + name);
}

bool is_catalog_hopf_name(const std::string& name) {
    return name == "a_c2c2" || name == "h4" || name == "c2" || name == "c2c2" || name == "s3";
}

// ---------------------------------------------------------------------------
// group-like elements: exact search over supports. For each candidate
// support the off-support entries of Delta(v) = v (x) v are linear in v;
// quadratic equations are folded in once a side of the product is pinned
// down by the linear part. Supports whose system stays nonlinear and
// underdetermined are rejected loudly rather than guessed at.

std::vector<Vec> grouplikes(const HopfAlgebra& h) {
    const int n = h.dim;
    if (n > 16) throw std::invalid_argument("group-like search is limited to dimension 16");
    std::vector<Vec> found;
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        std::vector<int> sup;
        for (int i = 0; i < n; ++i)
            if (mask & (1ul << i)) sup.push_back(i);
        const int s = static_cast<int>(sup.size());

        // quick reject: v_a v_b must vanish although both factors are nonzero
        bool reject = false;
        for (int a = 0; a < s && !reject; ++a)
            for (int b = 0; b < s && !reject; ++b) {
                bool all_zero = true;
                for (int i : sup)
                    if (!h.comult.at(sup[a] * n + sup[b], i).is_zero()) all_zero = false;
                if (all_zero) reject = true;
            }
        if (reject) continue;

        // linear block: off-support entries of Delta(v) vanish; counit is 1
        std::vector<Vec> rows;
        Vec rhs;
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                if ((mask & (1ul << p)) && (mask & (1ul << q))) continue;
                Vec row(s);
                bool nz = false;
                for (int a = 0; a < s; ++a) {
                    row[a] = h.comult.at(p * n + q, sup[a]);
                    nz = nz || !row[a].is_zero();
                }
                if (nz) {
                    rows.push_back(std::move(row));
                    rhs.push_back(Scalar(0));
                }
            }
        {
            Vec row(s);
            for (int a = 0; a < s; ++a) row[a] = h.counit[sup[a]];
            rows.push_back(std::move(row));
            rhs.push_back(Scalar(1));
        }

        bool consistent = true;
        Vec point;
        std::vector<Vec> dirs;
        for (int round = 0; round <= s; ++round) {
            Matrix a(static_cast<int>(rows.size()), s);
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (int c = 0; c < s; ++c) a.at(static_cast<int>(r), c) = rows[r][c];
            auto x = solve_linear(a, rhs, &dirs);
            if (!x) {
                consistent = false;
                break;
            }
            point = *x;
            if (dirs.empty()) break;

            auto pinned = [&dirs](int coord) {
                for (const auto& d : dirs)
                    if (!d[coord].is_zero()) return false;
                return true;
            };
            std::size_t before = rows.size();
            for (int aa = 0; aa < s; ++aa)
                for (int bb = 0; bb < s; ++bb) {
                    bool a_pin = pinned(aa), b_pin = pinned(bb);
                    if (!a_pin && !b_pin) continue;  // still quadratic
                    // v_a v_b = sum_c Delta[sup_a, sup_b][sup_c] v_c with one
                    // factor substituted by its pinned value
                    Vec row(s);
                    if (a_pin)
                        row[bb] += point[aa];
                    else
                        row[aa] += point[bb];
                    for (int c = 0; c < s; ++c)
                        row[c] -= h.comult.at(sup[aa] * n + sup[bb], sup[c]);
                    bool nz = false;
                    for (const auto& e : row) nz = nz || !e.is_zero();
                    if (nz) {
                        rows.push_back(std::move(row));
                        rhs.push_back(Scalar(0));
                    }
                }
            if (rows.size() == before) break;  // no progress possible
        }
        if (!consistent) continue;
        if (!dirs.empty())
            throw std::runtime_error("group-like search: nonlinear system left undecided");

        Vec v(n);
        bool on_support = true;
        for (int a = 0; a < s; ++a) {
            if (point[a].is_zero()) on_support = false;
            v[sup[a]] = point[a];
        }
        if (on_support && h.is_group_like(v)) found.push_back(std::move(v));
    }
    return found;
}

std::vector<Vec> skew_primitives(const HopfAlgebra& h, const Vec& g, const Vec& hh) {
    if (!h.is_group_like(g) || !h.is_group_like(hh))
        throw not_group_like_error("skew_primitives requires group-like arguments");
    const int n = h.dim;
    // column i: Delta(e_i) - e_i (x) g - h (x) e_i, flattened
    Matrix constraint(n * n, n);
    for (int i = 0; i < n; ++i) {
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) constraint.at(p * n + q, i) = h.comult.at(p * n + q, i);
        for (int q = 0; q < n; ++q) constraint.at(i * n + q, i) -= g[q];
        for (int p = 0; p < n; ++p) constraint.at(p * n + i, i) -= hh[p];
    }
    return nullspace(constraint);
}

}  // namespace hopfyb
