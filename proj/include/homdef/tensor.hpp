#pragma once

#include "homdef/linalg.hpp"
#include "homdef/rational.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace homdef {

/// Linear endomorphism of an n-dimensional based space, stored as a square
/// matrix in the column convention: matrix()(i, j) is the coefficient of
/// e_i in the image of e_j.
template <Scalar K = Rational>
class LinearMapT {
  public:
    LinearMapT() : dim_(0) {}
    explicit LinearMapT(Mat<K> m) : dim_(m.rows()), m_(std::move(m)) {
        if (m_.rows() != m_.cols())
            throw std::invalid_argument("LinearMap: matrix must be square");
    }
    explicit LinearMapT(int dim, const K& fill = K{}) : dim_(dim), m_(dim, dim, fill) {}

    static LinearMapT identity(int dim) requires FieldScalar<K> {
        return LinearMapT(Mat<K>::identity(dim));
    }
    static LinearMapT zero(int dim) requires FieldScalar<K> {
        return LinearMapT(Mat<K>(dim, dim, K(0)));
    }

    int dim() const { return dim_; }
    const Mat<K>& matrix() const { return m_; }
    const K& entry(int i, int j) const { return m_(i, j); }
    K& entry(int i, int j) { return m_(i, j); }

    Vec<K> apply(const Vec<K>& v) const { return m_.apply(v); }
    Vec<K> apply_basis(int j) const {
        Vec<K> out(dim_);
        for (int i = 0; i < dim_; ++i)
            out[i] = m_(i, j);
        return out;
    }

    /// this after other: (this . other)(v) = this(other(v)).
    LinearMapT compose(const LinearMapT& other) const {
        return LinearMapT(m_ * other.m_);
    }
    LinearMapT commutator(const LinearMapT& other) const {
        return LinearMapT(m_ * other.m_ - other.m_ * m_);
    }

    bool is_zero() const { return m_.is_zero(); }
    bool commutes_with(const LinearMapT& other) const { return (m_ * other.m_) == (other.m_ * m_); }

    friend LinearMapT operator+(const LinearMapT& a, const LinearMapT& b) {
        return LinearMapT(a.m_ + b.m_);
    }
    friend LinearMapT operator-(const LinearMapT& a, const LinearMapT& b) {
        return LinearMapT(a.m_ - b.m_);
    }
    LinearMapT operator-() const { return LinearMapT(-m_); }
    friend LinearMapT operator*(const K& c, const LinearMapT& f) { return LinearMapT(c * f.m_); }

    friend bool operator==(const LinearMapT& a, const LinearMapT& b) { return a.m_ == b.m_; }
    friend bool operator!=(const LinearMapT& a, const LinearMapT& b) { return !(a == b); }

    std::string str() const { return m_.str(); }

  private:
    int dim_;
    Mat<K> m_;
};

/// Bilinear map V x V -> V by structure constants: map(e_i, e_j) has
/// coefficient c(i, j, k) on e_k.
template <Scalar K = Rational>
class BilinearMapT {
  public:
    BilinearMapT() : dim_(0) {}
    explicit BilinearMapT(int dim, const K& fill = K{})
        : dim_(check_dim(dim)),
          c_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
             fill) {}

    int dim() const { return dim_; }

    const K& c(int i, int j, int k) const { return c_.at(index(i, j, k)); }
    K& c(int i, int j, int k) { return c_.at(index(i, j, k)); }

    Vec<K> apply_basis(int i, int j) const {
        Vec<K> out(dim_);
        for (int k = 0; k < dim_; ++k)
            out[k] = c(i, j, k);
        return out;
    }

    Vec<K> apply(const Vec<K>& x, const Vec<K>& y) const {
        if (x.dim() != dim_ || y.dim() != dim_)
            throw std::invalid_argument("BilinearMap: apply dimension mismatch");
        Vec<K> out(dim_);
        for (int k = 0; k < dim_; ++k) {
            K acc{};
            bool first = true;
            for (int i = 0; i < dim_; ++i)
                for (int j = 0; j < dim_; ++j) {
                    K term = x[i] * y[j] * c(i, j, k);
                    if (first) {
                        acc = std::move(term);
                        first = false;
                    } else {
                        acc = acc + term;
                    }
                }
            if (!first)
                out[k] = std::move(acc);
        }
        return out;
    }

    bool is_zero() const {
        for (const auto& e : c_)
            if (!e.is_zero())
                return false;
        return true;
    }

    bool is_alternating() const {
        for (int i = 0; i < dim_; ++i)
            for (int j = i; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k) {
                    if (i == j) {
                        if (!c(i, i, k).is_zero())
                            return false;
                    } else if (!(c(i, j, k) + c(j, i, k)).is_zero()) {
                        return false;
                    }
                }
        return true;
    }

    bool is_commutative() const {
        for (int i = 0; i < dim_; ++i)
            for (int j = i + 1; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k)
                    if (!(c(i, j, k) == c(j, i, k)))
                        return false;
        return true;
    }

    /// (x, y) -> map(x, y) - map(y, x).
    BilinearMapT antisymmetrize() const {
        BilinearMapT out(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k)
                    out.c(i, j, k) = c(i, j, k) - c(j, i, k);
        return out;
    }

    friend BilinearMapT operator+(const BilinearMapT& a, const BilinearMapT& b) {
        a.require_same_dim(b);
        BilinearMapT out = a;
        for (std::size_t t = 0; t < out.c_.size(); ++t)
            out.c_[t] = out.c_[t] + b.c_[t];
        return out;
    }
    friend BilinearMapT operator-(const BilinearMapT& a, const BilinearMapT& b) {
        a.require_same_dim(b);
        BilinearMapT out = a;
        for (std::size_t t = 0; t < out.c_.size(); ++t)
            out.c_[t] = out.c_[t] - b.c_[t];
        return out;
    }
    BilinearMapT operator-() const {
        BilinearMapT out = *this;
        for (auto& e : out.c_)
            e = -e;
        return out;
    }
    friend BilinearMapT operator*(const K& s, const BilinearMapT& m) {
        BilinearMapT out = m;
        for (auto& e : out.c_)
            e = s * e;
        return out;
    }

    friend bool operator==(const BilinearMapT& a, const BilinearMapT& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }
    friend bool operator!=(const BilinearMapT& a, const BilinearMapT& b) { return !(a == b); }

  private:
    static int check_dim(int d) {
        if (d < 0)
            throw std::invalid_argument("BilinearMap: negative dimension");
        return d;
    }
    std::size_t index(int i, int j, int k) const {
        if (i < 0 || i >= dim_ || j < 0 || j >= dim_ || k < 0 || k >= dim_)
            throw std::out_of_range("BilinearMap: index out of range");
        return (static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                static_cast<std::size_t>(j)) *
                   static_cast<std::size_t>(dim_) +
               static_cast<std::size_t>(k);
    }
    void require_same_dim(const BilinearMapT& o) const {
        if (dim_ != o.dim_)
            throw std::invalid_argument("BilinearMap: dimension mismatch");
    }

    int dim_;
    std::vector<K> c_;
};

/// Trilinear map V^3 -> V by values on basis triples: t(i, j, k, l) is the
/// coefficient of e_l in T(e_i, e_j, e_k). Residuals of the checked
/// identities live here.
template <Scalar K = Rational>
class TrilinearT {
  public:
    TrilinearT() : dim_(0) {}
    explicit TrilinearT(int dim, const K& fill = K{})
        : dim_(dim), c_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim) *
                            static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
                        fill) {}

    int dim() const { return dim_; }

    const K& c(int i, int j, int k, int l) const { return c_.at(index(i, j, k, l)); }
    K& c(int i, int j, int k, int l) { return c_.at(index(i, j, k, l)); }

    Vec<K> value(int i, int j, int k) const {
        Vec<K> out(dim_);
        for (int l = 0; l < dim_; ++l)
            out[l] = c(i, j, k, l);
        return out;
    }
    void set_value(int i, int j, int k, const Vec<K>& v) {
        for (int l = 0; l < dim_; ++l)
            c(i, j, k, l) = v[l];
    }
    void add_value(int i, int j, int k, const Vec<K>& v) {
        for (int l = 0; l < dim_; ++l)
            c(i, j, k, l) = c(i, j, k, l) + v[l];
    }

    bool is_zero() const {
        for (const auto& e : c_)
            if (!e.is_zero())
                return false;
        return true;
    }

    /// Lexicographically first basis triple with a nonzero value, if any.
    std::optional<std::array<int, 3>> first_nonzero_triple() const {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k)
                    if (!value(i, j, k).is_zero())
                        return std::array<int, 3>{i, j, k};
        return std::nullopt;
    }

    friend TrilinearT operator+(const TrilinearT& a, const TrilinearT& b) {
        a.require_same_dim(b);
        TrilinearT out = a;
        for (std::size_t t = 0; t < out.c_.size(); ++t)
            out.c_[t] = out.c_[t] + b.c_[t];
        return out;
    }
    friend TrilinearT operator-(const TrilinearT& a, const TrilinearT& b) {
        a.require_same_dim(b);
        TrilinearT out = a;
        for (std::size_t t = 0; t < out.c_.size(); ++t)
            out.c_[t] = out.c_[t] - b.c_[t];
        return out;
    }
    friend TrilinearT operator*(const K& s, const TrilinearT& m) {
        TrilinearT out = m;
        for (auto& e : out.c_)
            e = s * e;
        return out;
    }

    friend bool operator==(const TrilinearT& a, const TrilinearT& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }
    friend bool operator!=(const TrilinearT& a, const TrilinearT& b) { return !(a == b); }

  private:
    std::size_t index(int i, int j, int k, int l) const {
        if (i < 0 || i >= dim_ || j < 0 || j >= dim_ || k < 0 || k >= dim_ || l < 0 || l >= dim_)
            throw std::out_of_range("Trilinear: index out of range");
        return ((static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                 static_cast<std::size_t>(j)) *
                    static_cast<std::size_t>(dim_) +
                static_cast<std::size_t>(k)) *
                   static_cast<std::size_t>(dim_) +
               static_cast<std::size_t>(l);
    }
    void require_same_dim(const TrilinearT& o) const {
        if (dim_ != o.dim_)
            throw std::invalid_argument("Trilinear: dimension mismatch");
    }

    int dim_;
    std::vector<K> c_;
};

using LinearMap = LinearMapT<Rational>;
using BilinearMap = BilinearMapT<Rational>;
using Trilinear = TrilinearT<Rational>;

namespace detail {
template <Scalar K>
void require_same_dim3(int a, int b, int c) {
    if (a != b || b != c)
        throw std::invalid_argument("dimension mismatch between maps");
}
} // namespace detail

/// The twisted associator of a pair of products:
/// (outer, inner) -> outer(alpha(x), inner(y, z)) - outer(inner(x, y), alpha(z)).
template <Scalar K>
TrilinearT<K> alpha_associator(const BilinearMapT<K>& outer, const BilinearMapT<K>& inner,
                               const LinearMapT<K>& alpha) {
    detail::require_same_dim3<K>(outer.dim(), inner.dim(), alpha.dim());
    const int n = outer.dim();
    TrilinearT<K> out(n);
    for (int i = 0; i < n; ++i) {
        Vec<K> ax = alpha.apply_basis(i);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec<K> left = outer.apply(ax, inner.apply_basis(j, k));
                Vec<K> right = outer.apply(inner.apply_basis(i, j), alpha.apply_basis(k));
                out.set_value(i, j, k, left - right);
            }
    }
    return out;
}

/// Cyclic twisted Jacobiator of a pair of brackets:
/// sum over cyclic permutations of (x, y, z) of outer(alpha(x), inner(y, z)).
template <Scalar K>
TrilinearT<K> cyclic_twisted_jacobiator(const BilinearMapT<K>& outer, const LinearMapT<K>& alpha,
                                        const BilinearMapT<K>& inner) {
    detail::require_same_dim3<K>(outer.dim(), inner.dim(), alpha.dim());
    const int n = outer.dim();
    TrilinearT<K> out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec<K> acc = outer.apply(alpha.apply_basis(i), inner.apply_basis(j, k));
                acc += outer.apply(alpha.apply_basis(j), inner.apply_basis(k, i));
                acc += outer.apply(alpha.apply_basis(k), inner.apply_basis(i, j));
                out.set_value(i, j, k, acc);
            }
    return out;
}

} // namespace homdef
