#pragma once

#include "homdef/rational.hpp"

#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homdef {

/// Commutative-ring element: what the dense containers need.
template <typename K>
concept Scalar = requires(const K& a, const K& b) {
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
};

/// Field element: additionally supports exact division and integer literals.
/// Elimination-based algorithms (rref, kernels, solves) require this.
template <typename K>
concept FieldScalar = Scalar<K> && std::constructible_from<K, int> && requires(const K& a, const K& b) {
    { a / b } -> std::convertible_to<K>;
};

template <Scalar K = Rational>
class Vec {
  public:
    Vec() = default;
    explicit Vec(int dim, const K& fill = K{}) : entries_(static_cast<std::size_t>(check_dim(dim)), fill) {}
    explicit Vec(std::vector<K> entries) : entries_(std::move(entries)) {}

    static Vec unit(int dim, int i) requires FieldScalar<K> {
        Vec v(dim, K(0));
        v[i] = K(1);
        return v;
    }

    int dim() const { return static_cast<int>(entries_.size()); }
    const K& operator[](int i) const { return entries_.at(static_cast<std::size_t>(i)); }
    K& operator[](int i) { return entries_.at(static_cast<std::size_t>(i)); }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero())
                return false;
        return true;
    }

    Vec& operator+=(const Vec& o) {
        require_same_dim(o);
        for (int i = 0; i < dim(); ++i)
            entries_[static_cast<std::size_t>(i)] =
                entries_[static_cast<std::size_t>(i)] + o.entries_[static_cast<std::size_t>(i)];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        require_same_dim(o);
        for (int i = 0; i < dim(); ++i)
            entries_[static_cast<std::size_t>(i)] =
                entries_[static_cast<std::size_t>(i)] - o.entries_[static_cast<std::size_t>(i)];
        return *this;
    }
    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    Vec operator-() const {
        Vec out = *this;
        for (auto& e : out.entries_)
            e = -e;
        return out;
    }
    friend Vec operator*(const K& c, Vec v) {
        for (auto& e : v.entries_)
            e = c * e;
        return v;
    }

    friend bool operator==(const Vec& a, const Vec& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

    std::string str() const {
        std::string out = "(";
        for (int i = 0; i < dim(); ++i) {
            if (i)
                out += ", ";
            out += entries_[static_cast<std::size_t>(i)].str();
        }
        return out + ")";
    }

  private:
    static int check_dim(int d) {
        if (d < 0)
            throw std::invalid_argument("Vec: negative dimension");
        return d;
    }
    void require_same_dim(const Vec& o) const {
        if (dim() != o.dim())
            throw std::invalid_argument("Vec: dimension mismatch");
    }

    std::vector<K> entries_;
};

/// Dense row-major matrix. Vectors are columns: apply(v)_i = sum_j m(i,j) v_j.
template <Scalar K = Rational>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, const K& fill = K{})
        : rows_(check_dim(rows)), cols_(check_dim(cols)),
          entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

    static Mat identity(int n) requires FieldScalar<K> {
        Mat m(n, n, K(0));
        for (int i = 0; i < n; ++i)
            m(i, i) = K(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const K& operator()(int i, int j) const { return entries_.at(index(i, j)); }
    K& operator()(int i, int j) { return entries_.at(index(i, j)); }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero())
                return false;
        return true;
    }

    Vec<K> apply(const Vec<K>& v) const {
        if (v.dim() != cols_)
            throw std::invalid_argument("Mat: apply dimension mismatch");
        Vec<K> out(rows_);
        for (int i = 0; i < rows_; ++i) {
            K acc{};
            bool first = true;
            for (int j = 0; j < cols_; ++j) {
                K term = (*this)(i, j) * v[j];
                if (first) {
                    acc = std::move(term);
                    first = false;
                } else {
                    acc = acc + term;
                }
            }
            if (!first)
                out[i] = std::move(acc);
        }
        return out;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("Mat: product dimension mismatch");
        Mat out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) {
                K acc{};
                bool first = true;
                for (int l = 0; l < a.cols_; ++l) {
                    K term = a(i, l) * b(l, j);
                    if (first) {
                        acc = std::move(term);
                        first = false;
                    } else {
                        acc = acc + term;
                    }
                }
                if (!first)
                    out(i, j) = std::move(acc);
            }
        return out;
    }

    Mat& operator+=(const Mat& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k)
            entries_[k] = entries_[k] + o.entries_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k)
            entries_[k] = entries_[k] - o.entries_[k];
        return *this;
    }
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    Mat operator-() const {
        Mat out = *this;
        for (auto& e : out.entries_)
            e = -e;
        return out;
    }
    friend Mat operator*(const K& c, Mat m) {
        for (auto& e : m.entries_)
            e = c * e;
        return m;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    std::string str() const {
        std::string out = "[";
        for (int i = 0; i < rows_; ++i) {
            if (i)
                out += "; ";
            for (int j = 0; j < cols_; ++j) {
                if (j)
                    out += ", ";
                out += (*this)(i, j).str();
            }
        }
        return out + "]";
    }

  private:
    static int check_dim(int d) {
        if (d < 0)
            throw std::invalid_argument("Mat: negative dimension");
        return d;
    }
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("Mat: index out of range");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
    }
    void require_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Mat: shape mismatch");
    }

    int rows_, cols_;
    std::vector<K> entries_;
};

/// Reduced row echelon form (Gauss-Jordan with exact division) and rank.
template <FieldScalar K>
std::pair<Mat<K>, int> rref(Mat<K> m) {
    int pivot_row = 0;
    for (int col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        int sel = -1;
        for (int r = pivot_row; r < m.rows(); ++r)
            if (!m(r, col).is_zero()) {
                sel = r;
                break;
            }
        if (sel < 0)
            continue;
        if (sel != pivot_row)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m(sel, j), m(pivot_row, j));
        K inv = K(1) / m(pivot_row, col);
        for (int j = 0; j < m.cols(); ++j)
            m(pivot_row, j) = m(pivot_row, j) * inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == pivot_row || m(r, col).is_zero())
                continue;
            K factor = m(r, col);
            for (int j = 0; j < m.cols(); ++j)
                m(r, j) = m(r, j) - factor * m(pivot_row, j);
        }
        ++pivot_row;
    }
    return {std::move(m), pivot_row};
}

/// Canonical nullspace basis from the RREF free-variable construction:
/// one vector per free column j, with 1 at j and -R(r, j) at the pivot
/// column of row r. Deterministic, ordered by free column index.
template <FieldScalar K>
std::vector<Vec<K>> kernel_basis(const Mat<K>& m) {
    auto [r, rank] = rref(m);
    std::vector<int> pivot_col_of_row(static_cast<std::size_t>(rank), -1);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    {
        int row = 0;
        for (int col = 0; col < m.cols() && row < rank; ++col) {
            if (!r(row, col).is_zero()) {
                pivot_col_of_row[static_cast<std::size_t>(row)] = col;
                is_pivot[static_cast<std::size_t>(col)] = true;
                ++row;
            }
        }
    }
    std::vector<Vec<K>> basis;
    for (int j = 0; j < m.cols(); ++j) {
        if (is_pivot[static_cast<std::size_t>(j)])
            continue;
        Vec<K> v(m.cols(), K(0));
        v[j] = K(1);
        for (int row = 0; row < rank; ++row)
            v[pivot_col_of_row[static_cast<std::size_t>(row)]] = -r(row, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <FieldScalar K>
struct AffineSolution {
    Vec<K> particular;
    std::vector<Vec<K>> kernel;
};

/// Solves a x = b exactly. Returns the canonical particular solution (free
/// variables set to zero) together with a kernel basis, or nothing when the
/// system is inconsistent.
template <FieldScalar K>
std::optional<AffineSolution<K>> solve_affine(const Mat<K>& a, const Vec<K>& b) {
    if (a.rows() != b.dim())
        throw std::invalid_argument("solve_affine: row/rhs dimension mismatch");
    Mat<K> aug(a.rows(), a.cols() + 1, K(0));
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto [r, rank] = rref(std::move(aug));
    AffineSolution<K> sol{Vec<K>(a.cols(), K(0)), kernel_basis(a)};
    int row = 0;
    for (int col = 0; col <= a.cols() && row < rank; ++col) {
        if (r(row, col).is_zero())
            continue;
        if (col == a.cols())
            return std::nullopt; // pivot in the augmented column: inconsistent
        sol.particular[col] = r(row, a.cols());
        ++row;
    }
    return sol;
}

} // namespace homdef
