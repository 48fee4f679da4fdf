#pragma once

#include "nilgeo/rational.hpp"

#include <string>
#include <string_view>

namespace nilgeo {

/// Parse failure for scalar text; message names the offending token.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Element of Q(i): re + im*i with exact rational parts.
/// The text form follows the grammar
///     scalar := rat ( [+-] rat "i" )? | rat "i"
///     rat    := [-]? digits ( "/" digits )?
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(long n) : re(n) {}
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussianRational conj() const { return {re, -im}; }
    /// |z|^2 = re^2 + im^2, as a rational.
    Rational norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational operator/(const GaussianRational& o) const {
        if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        Rational n = o.norm();
        GaussianRational ob = o.conj();
        GaussianRational p = *this * ob;
        return {p.re / n, p.im / n};
    }
    GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }
    GaussianRational& operator/=(const GaussianRational& o) { *this = *this / o; return *this; }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    GaussianRational inverse() const { return GaussianRational(1) / *this; }

    std::string str() const;
};

/// Exact value of scalar text; throws ParseError on malformed input or a
/// zero denominator, naming the offending token.
GaussianRational parse_scalar(std::string_view text);

/// Canonical text: "0", "3/2", "-2i", "3/2-1/3i". parse_scalar(emit_scalar(z)) == z.
std::string emit_scalar(const GaussianRational& z);

} // namespace nilgeo
