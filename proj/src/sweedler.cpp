#include "hopfyb/sweedler.hpp"

namespace hopfyb {

TensorVec TensorVec::basis(int dim, std::vector<int> idx) {
    TensorVec v(dim, static_cast<int>(idx.size()));
    v.t_.emplace(std::move(idx), Scalar(1));
    return v;
}

void TensorVec::add_term(const std::vector<int>& idx, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

TensorVec& TensorVec::operator+=(const TensorVec& o) {
    for (const auto& [idx, c] : o.t_) add_term(idx, c);
    return *this;
}

TensorVec TensorVec::operator-(const TensorVec& o) const {
    TensorVec r = *this;
    for (const auto& [idx, c] : o.t_) r.add_term(idx, -c);
    return r;
}

TensorVec TensorVec::scaled(const Scalar& c) const {
    TensorVec r(dim_, legs_);
    if (c.is_zero()) return r;
    for (const auto& [idx, v] : t_) r.t_.emplace(idx, v * c);
    return r;
}

bool TensorVec::is_zero() const { return t_.empty(); }

bool TensorVec::operator==(const TensorVec& o) const {
    return legs_ == o.legs_ && t_ == o.t_;
}

TensorVec TensorVec::expand(const Matrix& comult, int leg) const {
    const int n = dim_;
    TensorVec r(dim_, legs_ + 1);
    for (const auto& [idx, c] : t_) {
        int i = idx[leg];
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                const Scalar& d = comult.at(p * n + q, i);
                if (d.is_zero()) continue;
                std::vector<int> out(idx.begin(), idx.begin() + leg);
                out.push_back(p);
                out.push_back(q);
                out.insert(out.end(), idx.begin() + leg + 1, idx.end());
                r.add_term(out, c * d);
            }
    }
    return r;
}

TensorVec TensorVec::contract(const Tensor3& bilinear, int leg) const {
    const int n = dim_;
    TensorVec r(dim_, legs_ - 1);
    for (const auto& [idx, c] : t_) {
        int i = idx[leg], j = idx[leg + 1];
        for (int k = 0; k < n; ++k) {
            const Scalar& d = bilinear.at(i, j, k);
            if (d.is_zero()) continue;
            std::vector<int> out(idx.begin(), idx.begin() + leg);
            out.push_back(k);
            out.insert(out.end(), idx.begin() + leg + 2, idx.end());
            r.add_term(out, c * d);
        }
    }
    return r;
}

TensorVec TensorVec::map_leg(const Matrix& m, int leg) const {
    const int n = dim_;
    TensorVec r(dim_, legs_);
    for (const auto& [idx, c] : t_) {
        int j = idx[leg];
        for (int i = 0; i < n; ++i) {
            const Scalar& d = m.at(i, j);
            if (d.is_zero()) continue;
            std::vector<int> out = idx;
            out[leg] = i;
            r.add_term(out, c * d);
        }
    }
    return r;
}

TensorVec TensorVec::map_pair(const Matrix& op, int leg) const {
    const int n = dim_;
    TensorVec r(dim_, legs_);
    for (const auto& [idx, c] : t_) {
        int col = idx[leg] * n + idx[leg + 1];
        for (int row = 0; row < n * n; ++row) {
            const Scalar& d = op.at(row, col);
            if (d.is_zero()) continue;
            std::vector<int> out = idx;
            out[leg] = row / n;
            out[leg + 1] = row % n;
            r.add_term(out, c * d);
        }
    }
    return r;
}

TensorVec TensorVec::contract_covector(const Vec& covector, int leg) const {
    TensorVec r(dim_, legs_ - 1);
    for (const auto& [idx, c] : t_) {
        const Scalar& d = covector[idx[leg]];
        if (d.is_zero()) continue;
        std::vector<int> out(idx.begin(), idx.begin() + leg);
        out.insert(out.end(), idx.begin() + leg + 1, idx.end());
        r.add_term(out, c * d);
    }
    return r;
}

TensorVec TensorVec::contract_form(const Matrix& form, int leg) const {
    TensorVec r(dim_, legs_ - 2);
    for (const auto& [idx, c] : t_) {
        const Scalar& d = form.at(idx[leg], idx[leg + 1]);
        if (d.is_zero()) continue;
        std::vector<int> out(idx.begin(), idx.begin() + leg);
        out.insert(out.end(), idx.begin() + leg + 2, idx.end());
        r.add_term(out, c * d);
    }
    return r;
}

TensorVec TensorVec::swap_legs(int a, int b) const {
    TensorVec r(dim_, legs_);
    for (const auto& [idx, c] : t_) {
        std::vector<int> out = idx;
        std::swap(out[a], out[b]);
        r.add_term(out, c);
    }
    return r;
}

TensorVec TensorVec::reorder(const std::vector<int>& src_of_dst) const {
    TensorVec r(dim_, static_cast<int>(src_of_dst.size()));
    for (const auto& [idx, c] : t_) {
        std::vector<int> out(src_of_dst.size());
        for (std::size_t d = 0; d < src_of_dst.size(); ++d) out[d] = idx[src_of_dst[d]];
        r.add_term(out, c);
    }
    return r;
}

namespace {

bool next_index(std::vector<int>& idx, int dim) {
    for (int pos = static_cast<int>(idx.size()) - 1; pos >= 0; --pos) {
        if (++idx[pos] < dim) return true;
        idx[pos] = 0;
    }
    return false;
}

}  // namespace

Check compare_maps(const std::string& name, int dim, int in_legs, const SideFn& lhs,
                   const SideFn& rhs) {
    Check result{name, true, std::nullopt};
    std::vector<int> idx(in_legs, 0);
    do {
        TensorVec l = lhs(idx);
        TensorVec r = rhs(idx);
        if (l == r) continue;
        // locate the first differing output term
        TensorVec d = l - r;
        const auto& [out_idx, unused] = *d.terms().begin();
        (void)unused;
        Scalar lv, rv;
        if (auto it = l.terms().find(out_idx); it != l.terms().end()) lv = it->second;
        if (auto it = r.terms().find(out_idx); it != r.terms().end()) rv = it->second;
        Witness w;
        w.index = idx;
        w.index.insert(w.index.end(), out_idx.begin(), out_idx.end());
        w.lhs = lv.str();
        w.rhs = rv.str();
        result.passed = false;
        result.witness = std::move(w);
        return result;
    } while (next_index(idx, dim));
    return result;
}

Check compare_matrices(const std::string& name, const Matrix& lhs, const Matrix& rhs) {
    Check result{name, true, std::nullopt};
    auto diff = Matrix::first_difference(lhs, rhs);
    if (diff) {
        result.passed = false;
        result.witness = Witness{{diff->first, diff->second},
                                 lhs.at(diff->first, diff->second).str(),
                                 rhs.at(diff->first, diff->second).str()};
    }
    return result;
}

}  // namespace hopfyb
