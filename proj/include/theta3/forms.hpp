#ifndef THETA3_FORMS_HPP
#define THETA3_FORMS_HPP

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace theta3
{

using Rational = mpq_class;

template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational>
{
    static constexpr bool exact = true;
    static double magnitude(const Rational &x) { return std::abs(x.get_d()); }
};

template <>
struct ScalarTraits<std::complex<double>>
{
    static constexpr bool exact = false;
    static double magnitude(const std::complex<double> &x) { return std::abs(x); }
};

template <typename S>
constexpr bool is_exact_v = ScalarTraits<S>::exact;

// Number of monomials of degree d in three variables.
constexpr std::size_t monomial_count(int degree)
{
    return static_cast<std::size_t>((degree + 1) * (degree + 2) / 2);
}

// Position of X^i Y^j Z^(d-i-j) in the order X^d, X^(d-1)Y, X^(d-1)Z, X^(d-2)Y^2, ...
// (descending in the X exponent, then in the Y exponent).
constexpr std::size_t monomial_index(int degree, int i, int j)
{
    std::size_t offset = 0;
    for (int k = degree; k > i; --k) {
        offset += static_cast<std::size_t>(degree - k + 1);
    }
    return offset + static_cast<std::size_t>(degree - i - j);
}

// aX + bY + cZ.
template <typename S>
class LinearForm
{
public:
    LinearForm() : c_{S(0), S(0), S(0)} {}
    LinearForm(S a, S b, S c) : c_{std::move(a), std::move(b), std::move(c)} {}

    static LinearForm X() { return {S(1), S(0), S(0)}; }
    static LinearForm Y() { return {S(0), S(1), S(0)}; }
    static LinearForm Z() { return {S(0), S(0), S(1)}; }

    const S &operator[](std::size_t i) const { return c_[i]; }
    S &operator[](std::size_t i) { return c_[i]; }
    const std::array<S, 3> &coefficients() const { return c_; }

    bool is_zero() const { return c_[0] == S(0) && c_[1] == S(0) && c_[2] == S(0); }

    S operator()(const std::array<S, 3> &p) const { return c_[0] * p[0] + c_[1] * p[1] + c_[2] * p[2]; }

    friend LinearForm operator+(const LinearForm &a, const LinearForm &b)
    {
        return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
    }
    friend LinearForm operator-(const LinearForm &a, const LinearForm &b)
    {
        return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
    }
    friend LinearForm operator-(const LinearForm &a) { return {-a[0], -a[1], -a[2]}; }
    friend LinearForm operator*(const S &s, const LinearForm &a) { return {s * a[0], s * a[1], s * a[2]}; }
    friend bool operator==(const LinearForm &a, const LinearForm &b) { return a.c_ == b.c_; }

private:
    std::array<S, 3> c_;
};

// Dense homogeneous polynomial in X, Y, Z used for intermediate products.
template <typename S>
class TernaryForm
{
public:
    explicit TernaryForm(int degree) : degree_(degree), c_(monomial_count(degree), S(0)) {}

    TernaryForm(const LinearForm<S> &l) : degree_(1), c_{l[0], l[1], l[2]} {}

    int degree() const { return degree_; }
    const S &coeff(int i, int j) const { return c_[monomial_index(degree_, i, j)]; }
    S &coeff(int i, int j) { return c_[monomial_index(degree_, i, j)]; }
    const std::vector<S> &coefficients() const { return c_; }
    std::vector<S> &coefficients() { return c_; }

    friend TernaryForm operator*(const TernaryForm &a, const TernaryForm &b)
    {
        TernaryForm out(a.degree_ + b.degree_);
        for (int i = a.degree_; i >= 0; --i) {
            for (int j = a.degree_ - i; j >= 0; --j) {
                const S &x = a.coeff(i, j);
                if (x == S(0)) {
                    continue;
                }
                for (int k = b.degree_; k >= 0; --k) {
                    for (int l = b.degree_ - k; l >= 0; --l) {
                        out.coeff(i + k, j + l) += x * b.coeff(k, l);
                    }
                }
            }
        }
        return out;
    }

    friend TernaryForm operator+(TernaryForm a, const TernaryForm &b)
    {
        a.require_same_degree(b);
        for (std::size_t k = 0; k < a.c_.size(); ++k) {
            a.c_[k] += b.c_[k];
        }
        return a;
    }

    friend TernaryForm operator-(TernaryForm a, const TernaryForm &b)
    {
        a.require_same_degree(b);
        for (std::size_t k = 0; k < a.c_.size(); ++k) {
            a.c_[k] -= b.c_[k];
        }
        return a;
    }

    friend TernaryForm operator*(const S &s, TernaryForm a)
    {
        for (auto &x : a.c_) {
            x *= s;
        }
        return a;
    }

    S operator()(const std::array<S, 3> &p) const
    {
        S acc(0);
        for (int i = degree_; i >= 0; --i) {
            for (int j = degree_ - i; j >= 0; --j) {
                S term = coeff(i, j);
                for (int e = 0; e < i; ++e) {
                    term *= p[0];
                }
                for (int e = 0; e < j; ++e) {
                    term *= p[1];
                }
                for (int e = 0; e < degree_ - i - j; ++e) {
                    term *= p[2];
                }
                acc += term;
            }
        }
        return acc;
    }

private:
    void require_same_degree(const TernaryForm &b) const
    {
        if (degree_ != b.degree_) {
            throw std::invalid_argument("adding forms of different degree");
        }
    }

    int degree_;
    std::vector<S> c_;
};

// Quartic in X, Y, Z; coefficients in the order
// X^4, X^3Y, X^3Z, X^2Y^2, X^2YZ, X^2Z^2, XY^3, XY^2Z, XYZ^2, XZ^3, Y^4, Y^3Z, Y^2Z^2, YZ^3, Z^4.
template <typename S>
class QuarticForm
{
public:
    QuarticForm() { c_.fill(S(0)); }
    explicit QuarticForm(const std::array<S, 15> &c) : c_(c) {}

    explicit QuarticForm(const TernaryForm<S> &f)
    {
        if (f.degree() != 4) {
            throw std::invalid_argument("quartic form needs a degree-4 polynomial");
        }
        for (std::size_t k = 0; k < 15; ++k) {
            c_[k] = f.coefficients()[k];
        }
    }

    TernaryForm<S> as_ternary() const
    {
        TernaryForm<S> f(4);
        for (std::size_t k = 0; k < 15; ++k) {
            f.coefficients()[k] = c_[k];
        }
        return f;
    }

    const S &operator[](std::size_t k) const { return c_[k]; }
    S &operator[](std::size_t k) { return c_[k]; }
    const std::array<S, 15> &coefficients() const { return c_; }

    bool is_zero() const
    {
        for (const auto &x : c_) {
            if (!(x == S(0))) {
                return false;
            }
        }
        return true;
    }

    S operator()(const std::array<S, 3> &p) const { return as_ternary()(p); }

    friend QuarticForm operator*(const S &s, QuarticForm q)
    {
        for (auto &x : q.c_) {
            x *= s;
        }
        return q;
    }
    friend bool operator==(const QuarticForm &a, const QuarticForm &b) { return a.c_ == b.c_; }

private:
    std::array<S, 15> c_;
};

// Names of the monomials in coefficient order, e.g. "X^3*Y".
const std::array<const char *, 15> &quartic_monomial_names();

} // namespace theta3

#endif
