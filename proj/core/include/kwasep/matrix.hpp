#pragma once

#include <vector>

#include "kwasep/errors.hpp"
#include "kwasep/scalar.hpp"

namespace kwasep {

// Dense matrix over an arbitrary scalar (Rational, BigFloat, Jet<...>).
// Everything at desk scale is dense 2^N x 2^N; no sparsity games.
template <class S>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, S fill = S(0))
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

    static Mat identity(int n, S one = S(1), S zero = S(0)) {
        Mat m(n, n, zero);
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    S& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const S& operator()(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        check_shape(a, b);
        Mat r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        check_shape(a, b);
        Mat r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw ArgumentError("Mat multiply: shape mismatch");
        Mat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (scalar_is_zero(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    Mat scaled(const S& c) const {
        Mat r = *this;
        for (auto& v : r.data_) v *= c;
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<S> apply(const std::vector<S>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw ArgumentError("Mat apply: size mismatch");
        std::vector<S> r(static_cast<std::size_t>(rows_), S(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!scalar_is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    std::vector<S> apply_left(const std::vector<S>& v) const {
        if (static_cast<int>(v.size()) != rows_)
            throw ArgumentError("Mat apply_left: size mismatch");
        std::vector<S> r(static_cast<std::size_t>(cols_), S(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!scalar_is_zero((*this)(i, j))) r[j] += v[i] * (*this)(i, j);
        return r;
    }

    friend Mat kron(const Mat& a, const Mat& b) {
        Mat r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) {
                if (scalar_is_zero(a(i, j))) continue;
                for (int k = 0; k < b.rows_; ++k)
                    for (int l = 0; l < b.cols_; ++l)
                        r(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
            }
        return r;
    }

    S max_abs() const {
        S best(0);
        for (const auto& v : data_) {
            S a = abs_val(v);
            if (best < a) best = a;
        }
        return best;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!scalar_is_zero(v)) return false;
        return true;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    static void check_shape(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw ArgumentError("Mat shape mismatch");
    }

    int rows_, cols_;
    std::vector<S> data_;
};

// Embed a 2^k x 2^k operator acting on sites (site, ..., site+k-1) into the
// full N-site space by identity padding.  Site indices are 1-based, site 1
// is the most significant bit of the configuration index.
template <class S>
Mat<S> embed_sites(const Mat<S>& op, int site, int arity, int N) {
    if (site < 1 || site + arity - 1 > N) throw ArgumentError("embed_sites: range");
    Mat<S> left = Mat<S>::identity(1 << (site - 1));
    Mat<S> right = Mat<S>::identity(1 << (N - site - arity + 1));
    return kron(kron(left, op), right);
}

// Characteristic polynomial by the Faddeev--LeVerrier recursion; exact over
// rationals.  Returns [1, c1, ..., cn] with
// det(lambda I - A) = lambda^n + c1 lambda^{n-1} + ... + cn.
template <class S>
std::vector<S> char_poly(const Mat<S>& a) {
    if (a.rows() != a.cols()) throw ArgumentError("char_poly: square matrix required");
    const int n = a.rows();
    std::vector<S> coeffs;
    coeffs.reserve(n + 1);
    coeffs.push_back(S(1));
    Mat<S> m = a;
    for (int k = 1; k <= n; ++k) {
        S tr(0);
        for (int i = 0; i < n; ++i) tr += m(i, i);
        S ck = -(tr / S(k));
        coeffs.push_back(ck);
        if (k == n) break;
        for (int i = 0; i < n; ++i) m(i, i) += ck;
        m = a * m;
    }
    return coeffs;
}

} // namespace kwasep
