#include "rotinv/sqrt_rational.hpp"

#include <cmath>
#include <stdexcept>

namespace rotinv {

namespace {

std::optional<mpz_class> exact_sqrt(const mpz_class& z) {
    if (sgn(z) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(z.get_mpz_t())) return std::nullopt;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), z.get_mpz_t());
    return root;
}

}  // namespace

SqrtRational SqrtRational::of_rational(mpq_class r) {
    r.canonicalize();
    SqrtRational s;
    s.sign_ = sgn(r);
    s.radicand_ = r * r;
    return s;
}

SqrtRational SqrtRational::sqrt_of(mpq_class r) {
    r.canonicalize();
    if (sgn(r) < 0) throw std::domain_error("SqrtRational::sqrt_of negative radicand");
    SqrtRational s;
    s.sign_ = sgn(r) > 0 ? 1 : 0;
    s.radicand_ = std::move(r);
    return s;
}

SqrtRational SqrtRational::signed_sqrt(int sign, mpq_class r) {
    SqrtRational s = sqrt_of(std::move(r));
    if (sign == 0 || s.sign_ == 0) return zero();
    s.sign_ = sign > 0 ? 1 : -1;
    return s;
}

SqrtRational SqrtRational::operator-() const {
    SqrtRational s = *this;
    s.sign_ = -s.sign_;
    return s;
}

SqrtRational& SqrtRational::operator*=(const SqrtRational& o) {
    sign_ *= o.sign_;
    if (sign_ == 0)
        radicand_ = 0;
    else
        radicand_ *= o.radicand_;
    return *this;
}

SqrtRational& SqrtRational::operator/=(const SqrtRational& o) {
    if (o.sign_ == 0) throw std::domain_error("SqrtRational: division by zero");
    sign_ *= o.sign_;
    if (sign_ == 0)
        radicand_ = 0;
    else
        radicand_ /= o.radicand_;
    return *this;
}

std::optional<mpq_class> SqrtRational::ratio(const SqrtRational& o) const {
    if (o.sign_ == 0) return std::nullopt;
    if (sign_ == 0) return mpq_class(0);
    mpq_class q = radicand_ / o.radicand_;
    auto num = exact_sqrt(q.get_num());
    auto den = exact_sqrt(q.get_den());
    if (!num || !den) return std::nullopt;
    mpq_class value(*num, *den);
    value.canonicalize();
    return sign_ * o.sign_ > 0 ? value : mpq_class(-value);
}

std::optional<mpq_class> SqrtRational::as_rational() const {
    if (sign_ == 0) return mpq_class(0);
    auto num = exact_sqrt(radicand_.get_num());
    auto den = exact_sqrt(radicand_.get_den());
    if (!num || !den) return std::nullopt;
    mpq_class value(*num, *den);
    value.canonicalize();
    return sign_ > 0 ? value : mpq_class(-value);
}

double SqrtRational::to_double() const {
    return sign_ * std::sqrt(radicand_.get_d());
}

std::string SqrtRational::str() const {
    if (sign_ == 0) return "0";
    if (auto r = as_rational()) return r->get_str();
    std::string body = "sqrt(" + radicand_.get_str() + ")";
    return sign_ < 0 ? "-" + body : body;
}

}  // namespace rotinv
