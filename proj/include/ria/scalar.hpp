#pragma once

#include <complex>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "ria/errors.hpp"

namespace ria {

enum class Backend { exact, floating };

std::string to_string(Backend b);
Backend backend_from_string(const std::string& s);

/// Complex number with arbitrary-precision rational real and imaginary
/// parts.  A field: every operation is closed and exact.  Components are
/// kept canonical (reduced, positive denominator).
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(mpq_class re, mpq_class im);
    static GaussianRational integer(long re, long im = 0);

    /// Parses "p/q" or "p" (decimal integers, optional sign).
    static mpq_class parse_rational(const std::string& text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// re² + im², the squared modulus; always a nonnegative rational.
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational operator+(const GaussianRational& o) const;
    GaussianRational operator-(const GaussianRational& o) const;
    GaussianRational operator*(const GaussianRational& o) const;
    /// Exact division; throws std::domain_error on division by zero.
    GaussianRational operator/(const GaussianRational& o) const;

    bool operator==(const GaussianRational& o) const;

    std::complex<double> to_complex() const;

private:
    mpq_class re_, im_;
};

/// A single matrix entry: exact Gaussian rational or complex double,
/// tagged by backend.  Mixed-backend arithmetic is rejected, never
/// coerced; lift() converts exact -> floating explicitly.
class Scalar {
public:
    Scalar() : v_(GaussianRational{}) {}

    static Scalar exact(GaussianRational q) { return Scalar(std::move(q)); }
    static Scalar exact(long re, long im = 0) {
        return Scalar(GaussianRational::integer(re, im));
    }
    static Scalar floating(std::complex<double> c) { return Scalar(c); }

    Backend backend() const {
        return std::holds_alternative<GaussianRational>(v_) ? Backend::exact
                                                            : Backend::floating;
    }

    const GaussianRational& rat() const;
    std::complex<double> cplx() const;

    bool is_zero() const;
    Scalar conj() const;
    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;

    /// Exact equality (rationals bit-exact; doubles bitwise).
    bool operator==(const Scalar& o) const;

    Scalar lift() const;

    double abs() const;

private:
    explicit Scalar(GaussianRational q) : v_(std::move(q)) {}
    explicit Scalar(std::complex<double> c) : v_(c) {}

    std::variant<GaussianRational, std::complex<double>> v_;
};

/// Serializes one real component: exact = "p" or "p/q", float = shortest
/// decimal that round-trips.
std::string format_rational(const mpq_class& q);
std::string format_double(double x);
double parse_double(const std::string& text);

} // namespace ria
