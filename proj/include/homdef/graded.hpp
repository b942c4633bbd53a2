#pragma once

#include "homdef/linalg.hpp"
#include "homdef/rational.hpp"
#include "homdef/series.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace homdef {

/// Finitely supported element of an integer-graded space with basis {x_n}
/// plus an optional central generator c. Zero coefficients are never stored,
/// so equality is structural. The grading makes every identity checked here
/// a scalar identity per index tuple; no truncation of the basis is needed.
template <Scalar K = Rational>
class GradedElement {
  public:
    GradedElement() = default;

    static GradedElement term(long long n, K coeff) {
        GradedElement e;
        e.add_term(n, std::move(coeff));
        return e;
    }
    static GradedElement central_term(K coeff) {
        GradedElement e;
        e.add_central(std::move(coeff));
        return e;
    }

    void add_term(long long n, const K& coeff) {
        if (coeff.is_zero())
            return;
        auto it = terms_.find(n);
        if (it == terms_.end()) {
            terms_.emplace(n, coeff);
        } else {
            it->second = it->second + coeff;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
    void add_central(const K& coeff) {
        if (coeff.is_zero())
            return;
        if (!central_) {
            central_ = coeff;
        } else {
            *central_ = *central_ + coeff;
            if (central_->is_zero())
                central_.reset();
        }
    }

    const std::map<long long, K>& terms() const { return terms_; }
    const std::optional<K>& central() const { return central_; }

    /// Coefficient of x_n (zero form when absent); callers provide the zero
    /// since K may carry runtime shape (series order).
    K coeff(long long n, const K& zero = K{}) const {
        auto it = terms_.find(n);
        return it == terms_.end() ? zero : it->second;
    }

    bool is_zero() const { return terms_.empty() && !central_; }

    GradedElement& operator+=(const GradedElement& o) {
        for (const auto& [n, c] : o.terms_)
            add_term(n, c);
        if (o.central_)
            add_central(*o.central_);
        return *this;
    }
    friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
    friend GradedElement operator*(const K& s, const GradedElement& e) {
        GradedElement out;
        for (const auto& [n, c] : e.terms_)
            out.add_term(n, s * c);
        if (e.central_)
            out.add_central(s * *e.central_);
        return out;
    }
    GradedElement operator-() const {
        GradedElement out;
        for (const auto& [n, c] : terms_)
            out.add_term(n, -c);
        if (central_)
            out.add_central(-*central_);
        return out;
    }
    friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a += -b; }

    friend bool operator==(const GradedElement& a, const GradedElement& b) {
        return a.terms_ == b.terms_ && a.central_ == b.central_;
    }
    friend bool operator!=(const GradedElement& a, const GradedElement& b) { return !(a == b); }

    std::string str() const {
        if (is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [n, c] : terms_) {
            if (!first)
                os << " + ";
            os << "(" << c.str() << ")x_" << n;
            first = false;
        }
        if (central_) {
            if (!first)
                os << " + ";
            os << "(" << central_->str() << ")c";
        }
        return os.str();
    }

  private:
    std::map<long long, K> terms_;
    std::optional<K> central_;
};

/// q^n for integer n of either sign.
template <Scalar K>
K q_power(const K& q, long long n) {
    return q.pow(n);
}

/// The q-integer {n}_q = (q^n - 1)/(q - 1), computed by the pole-free sum
/// formula: {n}_q = sum_{j=0..n-1} q^j for n >= 0 and {n}_q = -q^n {-n}_q
/// for n < 0 (q invertible). Agrees with the continuous extension {n}_1 = n.
template <Scalar K>
K q_integer(long long n, const K& q) {
    if (n < 0)
        return -(q_power(q, n) * q_integer(-n, q));
    K acc = zero_like(q);
    K p = one_like(q);
    for (long long j = 0; j < n; ++j) {
        acc = acc + p;
        p = p * q;
    }
    return acc;
}

/// q-deformed Witt bracket on generators: [x_n, x_m] = ({n}_q - {m}_q) x_{n+m}.
template <Scalar K>
GradedElement<K> qwitt_bracket(long long n, long long m, const K& q) {
    return GradedElement<K>::term(n + m, q_integer(n, q) - q_integer(m, q));
}

/// Twist scalar: alpha(x_n) = (q^n + 1) x_n.
template <Scalar K>
K qwitt_alpha(long long n, const K& q) {
    return q_power(q, n) + one_like(q);
}

/// Linear extension of the q-Witt bracket in its second argument; central
/// components of the argument are annihilated.
template <Scalar K>
GradedElement<K> qwitt_bracket_elem(long long n, const GradedElement<K>& e, const K& q) {
    GradedElement<K> out;
    for (const auto& [m, c] : e.terms())
        out += c * qwitt_bracket(n, m, q);
    return out;
}

/// Residual of the sigma-deformed Jacobi identity
///   (q^n+1)[x_n,[x_l,x_m]] + (q^l+1)[x_l,[x_m,x_n]] + (q^m+1)[x_m,[x_n,x_l]];
/// identically zero, so any nonzero value signals an implementation fault.
template <Scalar K>
GradedElement<K> sigma_jacobi_residual(long long n, long long l, long long m, const K& q) {
    GradedElement<K> acc;
    acc += qwitt_alpha(n, q) * qwitt_bracket_elem(n, qwitt_bracket(l, m, q), q);
    acc += qwitt_alpha(l, q) * qwitt_bracket_elem(l, qwitt_bracket(m, n, q), q);
    acc += qwitt_alpha(m, q) * qwitt_bracket_elem(m, qwitt_bracket(n, l, q), q);
    return acc;
}

/// {n}_{1+t} as a truncated series: sum_k (sum_{j=k..n-1} C(j,k)) t^k.
inline TruncSeries expand_q_integer(long long n, int order) {
    if (n < 0)
        throw std::invalid_argument("expand_q_integer: index must be non-negative");
    TruncSeries out(order);
    for (int k = 0; k <= order; ++k) {
        Rational acc(0);
        for (long long j = k; j <= n - 1; ++j)
            acc += binomial(j, k);
        out.set_coeff(k, acc);
    }
    return out;
}

/// (1+t)^n as a truncated series: sum_k C(n,k) t^k.
inline TruncSeries expand_q_power(long long n, int order) {
    if (n < 0)
        throw std::invalid_argument("expand_q_power: index must be non-negative");
    TruncSeries out(order);
    for (int k = 0; k <= order; ++k)
        out.set_coeff(k, binomial(n, k));
    return out;
}

/// Order-k term of the Witt deformation bracket:
/// [x_n, x_m]_k = (sum_{j=k..n-1} C(j,k) - sum_{j=k..m-1} C(j,k)) x_{n+m};
/// empty sums are zero.
inline GradedElement<Rational> witt_bracket_order(long long n, long long m, int k) {
    if (n < 0 || m < 0)
        throw std::invalid_argument("witt_bracket_order: indices must be non-negative");
    if (k < 0)
        throw std::invalid_argument("witt_bracket_order: negative order");
    Rational acc(0);
    for (long long j = k; j <= n - 1; ++j)
        acc += binomial(j, k);
    for (long long j = k; j <= m - 1; ++j)
        acc -= binomial(j, k);
    return GradedElement<Rational>::term(n + m, acc);
}

/// Order-k twist scalar: alpha_0(x_n) = 2 x_n and alpha_k(x_n) = C(n,k) x_n
/// for k > 0.
inline Rational witt_alpha_order(long long n, int k) {
    if (n < 0)
        throw std::invalid_argument("witt_alpha_order: index must be non-negative");
    if (k < 0)
        throw std::invalid_argument("witt_alpha_order: negative order");
    return k == 0 ? Rational(2) : binomial(n, k);
}

namespace detail {
/// Scalar of [x_a, x_b]_k on x_{a+b}.
inline Rational witt_bracket_coeff(long long a, long long b, int k) {
    Rational acc(0);
    for (long long j = k; j <= a - 1; ++j)
        acc += binomial(j, k);
    for (long long j = k; j <= b - 1; ++j)
        acc -= binomial(j, k);
    return acc;
}
} // namespace detail

/// Degree-s residual of the Hom-Lie deformation equation specialized to the
/// Witt family: sum over i+j+k = s of the cyclic sum of
/// [alpha_j(x), [y,z]_k]_i, returned as the coefficient of x_{n+l+m}
/// (grading confines the whole expression to that single line). Must vanish
/// for all inputs.
inline Rational witt_deformation_residual(long long n, long long l, long long m, int s) {
    if (n < 0 || l < 0 || m < 0)
        throw std::invalid_argument("witt_deformation_residual: indices must be non-negative");
    if (s < 0)
        throw std::invalid_argument("witt_deformation_residual: negative order");
    Rational acc(0);
    const long long idx[3][3] = {{n, l, m}, {l, m, n}, {m, n, l}};
    for (int i = 0; i <= s; ++i)
        for (int j = 0; i + j <= s; ++j) {
            int k = s - i - j;
            for (const auto& t : idx) {
                long long a = t[0], b = t[1], c = t[2];
                // alpha_j(x_a) weight, inner [x_b, x_c]_k, outer [x_a, x_{b+c}]_i
                acc += witt_alpha_order(a, j) * detail::witt_bracket_coeff(b, c, k) *
                       detail::witt_bracket_coeff(a, b + c, i);
            }
        }
    return acc;
}

/// q-deformed Virasoro bracket:
/// [x_n, x_m] = ({n}_q - {m}_q) x_{n+m}
///            + delta_{n+m,0} (q^{-n} / (6(1+q^n))) {n-1}_q {n}_q {n+1}_q c.
/// The central generator satisfies [x, c] = [c, x] = 0.
inline GradedElement<Rational> virasoro_bracket(long long n, long long m, const Rational& q) {
    if (q.is_zero())
        throw std::domain_error("virasoro_bracket: q must be nonzero");
    GradedElement<Rational> out =
        GradedElement<Rational>::term(n + m, q_integer(n, q) - q_integer(m, q));
    if (n + m == 0) {
        Rational pole = Rational(1) + q.pow(n);
        if (pole.is_zero())
            throw std::domain_error("virasoro_bracket: pole 1 + q^n = 0 at n = " +
                                    std::to_string(n));
        Rational central = q.pow(-n) / (Rational(6) * pole) * q_integer(n - 1, q) *
                           q_integer(n, q) * q_integer(n + 1, q);
        out.add_central(central);
    }
    return out;
}

/// Linear extension of the Virasoro bracket in its second argument; central
/// components are annihilated ([x_n, c] = 0).
inline GradedElement<Rational> virasoro_bracket_elem(long long n, const GradedElement<Rational>& e,
                                                     const Rational& q) {
    GradedElement<Rational> out;
    for (const auto& [m, c] : e.terms())
        out += c * virasoro_bracket(n, m, q);
    return out;
}

/// Hom-Jacobi residual of the Virasoro bracket with alpha(x_n) = (q^n+1) x_n
/// and alpha(c) = 2c (the q^0+1 pattern; the twist on the center keeps c
/// central and makes the check well-posed). Both graded and central parts
/// must vanish.
inline GradedElement<Rational> virasoro_hom_jacobi_residual(long long n, long long l, long long m,
                                                            const Rational& q) {
    GradedElement<Rational> acc;
    acc += qwitt_alpha(n, q) * virasoro_bracket_elem(n, virasoro_bracket(l, m, q), q);
    acc += qwitt_alpha(l, q) * virasoro_bracket_elem(l, virasoro_bracket(m, n, q), q);
    acc += qwitt_alpha(m, q) * virasoro_bracket_elem(m, virasoro_bracket(n, l, q), q);
    return acc;
}

/// The two cyclic sums of the non-cocycle computation for the first-order
/// Witt pair ([.,.]_1, alpha_1) over alpha_0 = 2 id. Returns the coefficient
/// of x_{p+r+w} in
///   combined: cyclic{ [a0(x),[y,z]_0]_1 + [a1(x),[y,z]_0]_0 + [a0(x),[y,z]_1]_0 }
///   partial:  cyclic{ [a0(x),[y,z]_0]_1 + [a0(x),[y,z]_1]_0 }.
/// The combined sum (the full order-1 deformation residual) is identically
/// zero while the partial sum is generically nonzero: the pair fails the
/// cocycle condition relative to the alpha_0 = 2 id base.
inline std::pair<Rational, Rational> witt_noncocycle_remark(long long p, long long r, long long w) {
    if (p < 0 || r < 0 || w < 0)
        throw std::invalid_argument("witt_noncocycle_remark: indices must be non-negative");
    Rational combined(0), partial(0);
    const long long idx[3][3] = {{p, r, w}, {r, w, p}, {w, p, r}};
    for (const auto& t : idx) {
        long long a = t[0], b = t[1], c = t[2];
        Rational inner0 = detail::witt_bracket_coeff(b, c, 0);
        Rational inner1 = detail::witt_bracket_coeff(b, c, 1);
        Rational t_00_1 = Rational(2) * inner0 * detail::witt_bracket_coeff(a, b + c, 1);
        Rational t_10_0 = witt_alpha_order(a, 1) * inner0 * detail::witt_bracket_coeff(a, b + c, 0);
        Rational t_01_0 = Rational(2) * inner1 * detail::witt_bracket_coeff(a, b + c, 0);
        combined += t_00_1 + t_10_0 + t_01_0;
        partial += t_00_1 + t_01_0;
    }
    return {combined, partial};
}

} // namespace homdef
