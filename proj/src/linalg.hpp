#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace sw {

// Dense exact rational matrix. Subspaces are represented by matrices whose
// columns span them.
class Mat {
  public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, Rat(0)) {}
    static Mat identity(size_t n);
    static Mat col_vector(const std::vector<Rat>& v);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    Rat& at(size_t i, size_t j) { return a_[i * c_ + j]; }
    const Rat& at(size_t i, size_t j) const { return a_[i * c_ + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Rat& s) const;
    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    Mat transpose() const;
    bool is_zero() const;

    std::vector<Rat> col(size_t j) const;
    void set_col(size_t j, const std::vector<Rat>& v);
    static Mat hstack(const Mat& a, const Mat& b);
    Mat take_cols(const std::vector<size_t>& idx) const;

    size_t rank() const;
    Mat kernel() const;             // columns span the null space
    Mat column_basis() const;       // reduced spanning set of the image
    std::optional<Mat> solve(const Mat& rhs) const;  // this * X = rhs (any solution)
    std::optional<Mat> inverse() const;

    // Subspace operations (inputs/outputs are column spans in K^rows).
    static Mat intersect(const Mat& u, const Mat& v);
    static Mat sum(const Mat& u, const Mat& v);
    static bool contains(const Mat& u, const Mat& w);  // span u >= span w
    static bool same_space(const Mat& u, const Mat& v);

  private:
    size_t r_ = 0, c_ = 0;
    std::vector<Rat> a_;
};

// Works modulo a fixed subspace of K^n: membership tests and coordinates in
// a complement basis (quotient coordinates).
class SubspaceReducer {
  public:
    SubspaceReducer() = default;
    explicit SubspaceReducer(const Mat& z);  // z: columns span the subspace

    size_t ambient() const { return n_; }
    size_t subspace_dim() const { return rows_.size(); }
    size_t quotient_dim() const { return n_ - rows_.size(); }

    std::vector<Rat> reduce(std::vector<Rat> v) const;  // eliminate pivots
    bool in_subspace(const std::vector<Rat>& v) const;
    std::vector<Rat> quotient_coords(const std::vector<Rat>& v) const;
    const std::vector<size_t>& free_coords() const { return free_; }

  private:
    size_t n_ = 0;
    std::vector<std::vector<Rat>> rows_;  // rref rows of the subspace
    std::vector<size_t> pivots_;
    std::vector<size_t> free_;
};

}  // namespace sw
