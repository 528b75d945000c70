#pragma once

#include <cstddef>
#include <ostream>
#include <sstream>

#include "common.hpp"

namespace wreathcoh {

/* Dense rectangular matrix over the integers, row-major.  Degenerate shapes
 * (0 rows or 0 columns) are legal and act as zero maps. */
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0)
                return false;
        return true;
    }

    Mat operator*(const Mat& o) const {
        require(cols_ == o.rows_, "Mat multiply: shape mismatch");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& x = at(i, k);
                if (x == 0)
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) += x * o.at(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        require(rows_ == o.rows_ && cols_ == o.cols_, "Mat add: shape mismatch");
        Mat r(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = a_[k] + o.a_[k];
        return r;
    }

    Mat operator-(const Mat& o) const {
        require(rows_ == o.rows_ && cols_ == o.cols_, "Mat sub: shape mismatch");
        Mat r(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = a_[k] - o.a_[k];
        return r;
    }

    Mat operator*(const Int& c) const {
        Mat r(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k)
            r.a_[k] = a_[k] * c;
        return r;
    }

    Vec mul(const Vec& v) const {
        require(v.size() == cols_, "Mat·vec: length mismatch");
        Vec r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (at(i, j) != 0)
                    r[i] += at(i, j) * v[j];
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r.at(j, i) = at(i, j);
        return r;
    }

    Vec col(std::size_t j) const {
        Vec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = at(i, j);
        return v;
    }

    void set_col(std::size_t j, const Vec& v) {
        require(v.size() == rows_, "set_col: length mismatch");
        for (std::size_t i = 0; i < rows_; ++i)
            at(i, j) = v[i];
    }

    /* columns of a, then columns of b */
    static Mat hcat(const Mat& a, const Mat& b) {
        require(a.rows() == b.rows(), "hcat: row mismatch");
        Mat r(a.rows(), a.cols() + b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j)
                r.at(i, j) = a.at(i, j);
            for (std::size_t j = 0; j < b.cols(); ++j)
                r.at(i, a.cols() + j) = b.at(i, j);
        }
        return r;
    }

    static Mat vcat(const Mat& a, const Mat& b) {
        require(a.cols() == b.cols(), "vcat: col mismatch");
        Mat r(a.rows() + b.rows(), a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) {
            for (std::size_t i = 0; i < a.rows(); ++i)
                r.at(i, j) = a.at(i, j);
            for (std::size_t i = 0; i < b.rows(); ++i)
                r.at(a.rows() + i, j) = b.at(i, j);
        }
        return r;
    }

    static Mat from_cols(std::size_t rows, const std::vector<Vec>& cols) {
        Mat r(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            require(cols[j].size() == rows, "from_cols: length mismatch");
            for (std::size_t i = 0; i < rows; ++i)
                r.at(i, j) = cols[j][i];
        }
        return r;
    }

    static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols) {
        Mat r(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            require(rows[i].size() == cols, "from_rows: length mismatch");
            for (std::size_t j = 0; j < cols; ++j)
                r.at(i, j) = rows[i][j];
        }
        return r;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap(at(a, j), at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap(at(i, a), at(i, b));
    }
    /* row[a] += c * row[b] */
    void add_row(std::size_t a, std::size_t b, const Int& c) {
        for (std::size_t j = 0; j < cols_; ++j)
            at(a, j) += c * at(b, j);
    }
    /* col[a] += c * col[b] */
    void add_col(std::size_t a, std::size_t b, const Int& c) {
        for (std::size_t i = 0; i < rows_; ++i)
            at(i, a) += c * at(i, b);
    }
    void scale_row(std::size_t a, const Int& c) {
        for (std::size_t j = 0; j < cols_; ++j)
            at(a, j) *= c;
    }
    void scale_col(std::size_t a, const Int& c) {
        for (std::size_t i = 0; i < rows_; ++i)
            at(i, a) *= c;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? "; " : "");
            for (std::size_t j = 0; j < cols_; ++j)
                os << (j ? " " : "") << at(i, j);
        }
        os << "]";
        return os.str();
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> a_;
};

inline std::ostream& operator<<(std::ostream& os, const Mat& m) { return os << m.str(); }

/* Exact determinant by fraction-free (Bareiss) elimination.  Used by tests to
 * certify unimodularity of transforms independently of how they were built. */
inline Int det(const Mat& m) {
    require(m.rows() == m.cols(), "det: square matrix required");
    std::size_t n = m.rows();
    if (n == 0)
        return 1;
    Mat a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a.at(piv, k) == 0)
                ++piv;
            if (piv == n)
                return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = t / prev;  // exact by Sylvester's identity
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

}  // namespace wreathcoh
