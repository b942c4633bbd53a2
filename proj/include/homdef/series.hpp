#pragma once

#include "homdef/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homdef {

/// Truncated formal power series in one variable t with Rational coefficients.
/// A series of order N stores exactly N+1 coefficients and all arithmetic is
/// performed modulo t^(N+1). Mixing orders is an error, never a silent
/// coercion: the truncation order is a global parameter of a computation.
class TruncSeries {
  public:
    TruncSeries() : coeffs_(1) {}
    explicit TruncSeries(int order) : coeffs_(check_order(order) + 1) {}
    TruncSeries(int order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) != check_order(order) + 1)
            throw std::invalid_argument("TruncSeries: coefficient count must be order+1");
    }

    static TruncSeries constant(const Rational& c, int order) {
        TruncSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// The series t (truncates to 0 when order = 0).
    static TruncSeries variable(int order) {
        TruncSeries s(order);
        if (order >= 1)
            s.coeffs_[1] = Rational(1);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    void set_coeff(int k, Rational c) { coeffs_.at(static_cast<std::size_t>(k)) = std::move(c); }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero())
                return false;
        return true;
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        require_same_order(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        require_same_order(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            coeffs_[k] -= o.coeffs_[k];
        return *this;
    }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

    TruncSeries operator-() const {
        TruncSeries out(order());
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            out.coeffs_[k] = -coeffs_[k];
        return out;
    }

    /// Cauchy product truncated at the common order.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.require_same_order(b);
        TruncSeries out(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a.coeffs_[static_cast<std::size_t>(i)].is_zero())
                continue;
            for (int j = 0; i + j <= a.order(); ++j)
                out.coeffs_[static_cast<std::size_t>(i + j)] +=
                    a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
        }
        return out;
    }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    friend TruncSeries operator*(const Rational& c, const TruncSeries& s) {
        TruncSeries out(s.order());
        for (int k = 0; k <= s.order(); ++k)
            out.coeffs_[static_cast<std::size_t>(k)] = c * s.coeffs_[static_cast<std::size_t>(k)];
        return out;
    }
    friend TruncSeries operator*(const TruncSeries& s, const Rational& c) { return c * s; }

    /// Multiplicative inverse modulo t^(N+1); requires a nonzero constant term.
    /// Coefficients satisfy b_0 = 1/a_0 and b_s = -(1/a_0) sum_{i=1..s} a_i b_{s-i}.
    TruncSeries inverse() const {
        if (coeffs_[0].is_zero())
            throw std::domain_error("TruncSeries: inverse requires nonzero constant term");
        TruncSeries out(order());
        Rational c0_inv = coeffs_[0].inverse();
        out.coeffs_[0] = c0_inv;
        for (int s = 1; s <= order(); ++s) {
            Rational acc(0);
            for (int i = 1; i <= s; ++i)
                acc += coeffs_[static_cast<std::size_t>(i)] * out.coeffs_[static_cast<std::size_t>(s - i)];
            out.coeffs_[static_cast<std::size_t>(s)] = -(c0_inv * acc);
        }
        return out;
    }

    /// s^e for integer e of either sign (e < 0 requires an invertible series).
    TruncSeries pow(long long e) const {
        if (e < 0)
            return inverse().pow(-e);
        TruncSeries acc = constant(Rational(1), order());
        TruncSeries base = *this;
        while (e > 0) {
            if (e & 1)
                acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    std::string str() const {
        std::string out;
        for (int k = 0; k <= order(); ++k) {
            if (coeffs_[static_cast<std::size_t>(k)].is_zero())
                continue;
            if (!out.empty())
                out += " + ";
            out += coeffs_[static_cast<std::size_t>(k)].str();
            if (k >= 1)
                out += "*t";
            if (k >= 2)
                out += "^" + std::to_string(k);
        }
        return out.empty() ? "0" : out;
    }

    friend std::ostream& operator<<(std::ostream& os, const TruncSeries& s) { return os << s.str(); }

  private:
    static int check_order(int order) {
        if (order < 0)
            throw std::invalid_argument("TruncSeries: negative order");
        return order;
    }
    void require_same_order(const TruncSeries& o) const {
        if (coeffs_.size() != o.coeffs_.size())
            throw std::invalid_argument("TruncSeries: order mismatch (" +
                                        std::to_string(order()) + " vs " + std::to_string(o.order()) + ")");
    }

    std::vector<Rational> coeffs_;
};

inline TruncSeries zero_like(const TruncSeries& s) { return TruncSeries(s.order()); }
inline TruncSeries one_like(const TruncSeries& s) {
    return TruncSeries::constant(Rational(1), s.order());
}

} // namespace homdef
