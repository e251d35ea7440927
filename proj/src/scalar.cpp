#include "ria/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace ria {

std::string to_string(Backend b) {
    return b == Backend::exact ? "exact" : "float";
}

Backend backend_from_string(const std::string& s) {
    if (s == "exact") return Backend::exact;
    if (s == "float") return Backend::floating;
    throw ParseError("unknown backend '" + s + "' (expected \"exact\" or \"float\")");
}

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::integer(long re, long im) {
    return {mpq_class(re), mpq_class(im)};
}

mpq_class GaussianRational::parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw ParseError("bad rational literal '" + text + "'");
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("bad rational literal '" + text + "'");
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

GaussianRational GaussianRational::operator+(const GaussianRational& o) const {
    return {re_ + o.re_, im_ + o.im_};
}

GaussianRational GaussianRational::operator-(const GaussianRational& o) const {
    return {re_ - o.re_, im_ - o.im_};
}

GaussianRational GaussianRational::operator*(const GaussianRational& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
    mpq_class n2 = o.norm2();
    if (sgn(n2) == 0) throw std::domain_error("division by zero");
    // (a+bi)/(c+di) = (a+bi)(c-di) / (c^2+d^2)
    GaussianRational num = *this * o.conj();
    return {num.re() / n2, num.im() / n2};
}

bool GaussianRational::operator==(const GaussianRational& o) const {
    return cmp(re_, o.re_) == 0 && cmp(im_, o.im_) == 0;
}

std::complex<double> GaussianRational::to_complex() const {
    return {re_.get_d(), im_.get_d()};
}

const GaussianRational& Scalar::rat() const {
    if (backend() != Backend::exact)
        throw BackendMismatch("exact value requested from float scalar");
    return std::get<GaussianRational>(v_);
}

std::complex<double> Scalar::cplx() const {
    if (backend() != Backend::floating)
        throw BackendMismatch("float value requested from exact scalar");
    return std::get<std::complex<double>>(v_);
}

bool Scalar::is_zero() const {
    if (backend() == Backend::exact) return rat().is_zero();
    return cplx() == std::complex<double>(0.0, 0.0);
}

Scalar Scalar::conj() const {
    if (backend() == Backend::exact) return Scalar(rat().conj());
    return Scalar(std::conj(cplx()));
}

Scalar Scalar::operator-() const {
    if (backend() == Backend::exact) return Scalar(-rat());
    return Scalar(-cplx());
}

namespace {
void require_same_backend(const Scalar& a, const Scalar& b) {
    if (a.backend() != b.backend())
        throw BackendMismatch("mixed exact/float operands; lift() explicitly first");
}
} // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_backend(*this, o);
    if (backend() == Backend::exact) return Scalar(rat() + o.rat());
    return Scalar(cplx() + o.cplx());
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_backend(*this, o);
    if (backend() == Backend::exact) return Scalar(rat() - o.rat());
    return Scalar(cplx() - o.cplx());
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_backend(*this, o);
    if (backend() == Backend::exact) return Scalar(rat() * o.rat());
    return Scalar(cplx() * o.cplx());
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_backend(*this, o);
    if (backend() == Backend::exact) return Scalar(rat() / o.rat());
    return Scalar(cplx() / o.cplx());
}

bool Scalar::operator==(const Scalar& o) const {
    if (backend() != o.backend()) return false;
    if (backend() == Backend::exact) return rat() == o.rat();
    return cplx() == o.cplx();
}

Scalar Scalar::lift() const {
    if (backend() == Backend::floating) return *this;
    return Scalar(rat().to_complex());
}

double Scalar::abs() const {
    if (backend() == Backend::exact) return std::abs(rat().to_complex());
    return std::abs(cplx());
}

std::string format_rational(const mpq_class& q) {
    return q.get_str();
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double parse_double(const std::string& text) {
    try {
        std::size_t pos = 0;
        double v = std::stod(text, &pos);
        if (pos != text.size()) throw ParseError("bad float literal '" + text + "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad float literal '" + text + "'");
    } catch (const std::out_of_range&) {
        throw ParseError("float literal out of range '" + text + "'");
    }
}

} // namespace ria
