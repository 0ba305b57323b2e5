#include "linalg.hpp"

#include <algorithm>

#include "error.hpp"

namespace sw {

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

Mat Mat::col_vector(const std::vector<Rat>& v) {
    Mat m(v.size(), 1);
    for (size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (c_ != o.r_) fail(Code::internal, "matrix product shape mismatch");
    Mat out(r_, o.c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t k = 0; k < c_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (size_t j = 0; j < o.c_; ++j) {
                if (o.at(k, j) == 0) continue;
                out.at(i, j) += x * o.at(k, j);
            }
        }
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) fail(Code::internal, "matrix sum shape mismatch");
    Mat out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) fail(Code::internal, "matrix diff shape mismatch");
    Mat out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
    return out;
}

Mat Mat::operator*(const Rat& s) const {
    Mat out = *this;
    for (auto& x : out.a_) x *= s;
    return out;
}

Mat Mat::transpose() const {
    Mat out(c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

std::vector<Rat> Mat::col(size_t j) const {
    std::vector<Rat> v(r_);
    for (size_t i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
}

void Mat::set_col(size_t j, const std::vector<Rat>& v) {
    if (v.size() != r_) fail(Code::internal, "set_col size mismatch");
    for (size_t i = 0; i < r_; ++i) at(i, j) = v[i];
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
    if (a.cols() == 0) return b;
    if (b.cols() == 0) return a;
    if (a.rows() != b.rows()) fail(Code::internal, "hstack row mismatch");
    Mat out(a.rows(), a.cols() + b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

Mat Mat::take_cols(const std::vector<size_t>& idx) const {
    Mat out(r_, idx.size());
    for (size_t j = 0; j < idx.size(); ++j)
        for (size_t i = 0; i < r_; ++i) out.at(i, j) = at(i, idx[j]);
    return out;
}

// Row echelon with pivot tracking. Returns reduced matrix; pivots[k] is the
// column of the k-th pivot.
static Mat row_reduce(Mat m, std::vector<size_t>& pivots) {
    pivots.clear();
    size_t rows = m.rows(), cols = m.cols();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m.at(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (size_t j = 0; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = Rat(1) / m.at(r, c);
        for (size_t j = 0; j < cols; ++j) m.at(r, j) *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i != r && m.at(i, c) != 0) {
                Rat f = m.at(i, c);
                for (size_t j = 0; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return m;
}

size_t Mat::rank() const {
    std::vector<size_t> piv;
    row_reduce(*this, piv);
    return piv.size();
}

Mat Mat::kernel() const {
    std::vector<size_t> piv;
    Mat red = row_reduce(*this, piv);
    std::vector<bool> is_piv(c_, false);
    for (size_t p : piv) is_piv[p] = true;
    std::vector<size_t> free;
    for (size_t j = 0; j < c_; ++j)
        if (!is_piv[j]) free.push_back(j);
    Mat out(c_, free.size());
    for (size_t k = 0; k < free.size(); ++k) {
        out.at(free[k], k) = Rat(1);
        for (size_t r = 0; r < piv.size(); ++r) out.at(piv[r], k) = -red.at(r, free[k]);
    }
    return out;
}

Mat Mat::column_basis() const {
    std::vector<size_t> piv;
    row_reduce(*this, piv);
    return take_cols(piv);
}

std::optional<Mat> Mat::solve(const Mat& rhs) const {
    if (rhs.rows() != r_) fail(Code::internal, "solve shape mismatch");
    Mat aug = hstack(*this, rhs);
    std::vector<size_t> piv;
    Mat red = row_reduce(aug, piv);
    // Any pivot landing in the rhs block means inconsistency.
    for (size_t p : piv)
        if (p >= c_) return std::nullopt;
    Mat x(c_, rhs.cols());
    for (size_t r = 0; r < piv.size(); ++r)
        for (size_t j = 0; j < rhs.cols(); ++j) x.at(piv[r], j) = red.at(r, c_ + j);
    return x;
}

std::optional<Mat> Mat::inverse() const {
    if (r_ != c_) fail(Code::internal, "inverse needs a square matrix");
    auto x = solve(identity(r_));
    if (!x) return std::nullopt;
    if ((*this) * (*x) == identity(r_)) return x;
    return std::nullopt;
}

Mat Mat::intersect(const Mat& u, const Mat& v) {
    if (u.cols() == 0 || v.cols() == 0) return Mat(u.rows(), 0);
    Mat uv = hstack(u, v);
    Mat ker = uv.kernel();  // (a; b) with u a + v b = 0
    Mat a(u.cols(), ker.cols());
    for (size_t i = 0; i < u.cols(); ++i)
        for (size_t j = 0; j < ker.cols(); ++j) a.at(i, j) = ker.at(i, j);
    return (u * a).column_basis();
}

Mat Mat::sum(const Mat& u, const Mat& v) { return hstack(u, v).column_basis(); }

bool Mat::contains(const Mat& u, const Mat& w) {
    if (w.cols() == 0) return true;
    return hstack(u, w).rank() == u.rank();
}

bool Mat::same_space(const Mat& u, const Mat& v) {
    return u.rank() == v.rank() && contains(u, v);
}

SubspaceReducer::SubspaceReducer(const Mat& z) {
    n_ = z.rows();
    Mat zt = z.transpose();
    std::vector<size_t> piv;
    Mat red = row_reduce(zt, piv);
    pivots_ = piv;
    for (size_t r = 0; r < piv.size(); ++r) {
        std::vector<Rat> row(n_);
        for (size_t j = 0; j < n_; ++j) row[j] = red.at(r, j);
        rows_.push_back(std::move(row));
    }
    std::vector<bool> is_piv(n_, false);
    for (size_t p : pivots_) is_piv[p] = true;
    for (size_t j = 0; j < n_; ++j)
        if (!is_piv[j]) free_.push_back(j);
}

std::vector<Rat> SubspaceReducer::reduce(std::vector<Rat> v) const {
    if (v.size() != n_) fail(Code::internal, "reduce size mismatch");
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Rat& c = v[pivots_[r]];
        if (c == 0) continue;
        Rat f = c;  // pivot entries are 1
        for (size_t j = 0; j < n_; ++j) v[j] -= f * rows_[r][j];
    }
    return v;
}

bool SubspaceReducer::in_subspace(const std::vector<Rat>& v) const {
    auto r = reduce(v);
    for (const auto& x : r)
        if (x != 0) return false;
    return true;
}

std::vector<Rat> SubspaceReducer::quotient_coords(const std::vector<Rat>& v) const {
    auto r = reduce(v);
    std::vector<Rat> q(free_.size());
    for (size_t k = 0; k < free_.size(); ++k) q[k] = r[free_[k]];
    return q;
}

}  // namespace sw
