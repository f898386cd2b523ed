#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "patmaj/arith.hpp"

namespace patmaj {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial in n with exact rational coefficients, lowest degree first.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial constant(Rational c) { return Polynomial({std::move(c)}); }

    // x - r
    static Polynomial linear_root(const Rational& r) { return Polynomial({-r, Rational(1)}); }

    /// binom(n + shift, r) as a polynomial in n: (n+shift)(n+shift-1)...(n+shift-r+1) / r!.
    static Polynomial binomial_in_n(long long shift, int r) {
        Polynomial p = constant(1);
        BigInt fact = 1;
        for (int j = 0; j < r; ++j) {
            p = p * linear_root(Rational(-(shift - j)));
            fact *= (j + 1);
        }
        return p * constant(Rational(1, 1) / Rational(fact));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as 0.
    int degree() const noexcept { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Rational operator()(long long x) const { return (*this)(Rational(x)); }

    // Exact evaluation where the value is known to be a non-negative integer count.
    bool equals_count(long long x, Count value) const {
        Rational v = (*this)(x);
        return v == Rational(BigInt(value));
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

    friend Polynomial operator-(Polynomial a, const Polynomial& b) {
        if (b.coeffs_.size() > a.coeffs_.size()) a.coeffs_.resize(b.coeffs_.size());
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
        a.trim();
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(c));
    }

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

    /// Newton forward-difference interpolation through (x0, y0), (x0+1, y1), ...
    static Polynomial interpolate(long long x0, std::span<const Rational> ys) {
        std::vector<Rational> diff(ys.begin(), ys.end());
        Polynomial p;
        for (std::size_t j = 0; j < ys.size(); ++j) {
            // diff[0] now holds the j-th forward difference at x0
            p += binomial_in_n(-x0, static_cast<int>(j)) * constant(diff[0]);
            for (std::size_t i = 0; i + 1 < diff.size() - j; ++i) diff[i] = diff[i + 1] - diff[i];
        }
        return p;
    }

    // e.g. "1/2*n^2 - 1/2*n - 1"
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rational& c = coeffs_[i];
            if (c == 0) continue;
            Rational mag = c < 0 ? Rational(-c) : c;
            if (s.empty()) {
                if (c < 0) s += "-";
            } else {
                s += c < 0 ? " - " : " + ";
            }
            const bool unit = mag == 1;
            if (i == 0 || !unit) s += mag.str();
            if (i > 0) {
                if (!unit) s += "*";
                s += "n";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

}  // namespace patmaj
