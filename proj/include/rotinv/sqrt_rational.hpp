#ifndef ROTINV_SQRT_RATIONAL_HPP
#define ROTINV_SQRT_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace rotinv {

/// Exact number of the form sign * sqrt(p/q) with p/q >= 0 held in lowest
/// terms over arbitrary-precision integers. Closed under multiplication and
/// division but deliberately not under addition (a sum of distinct surds
/// leaves the type); that is all the coupling coefficients and tensor matrix
/// elements need.
class SqrtRational {
public:
    SqrtRational() = default;  // zero

    static SqrtRational zero() { return {}; }
    static SqrtRational one() { return of_rational(1); }

    /// The rational r itself, stored as sign(r) * sqrt(r^2).
    static SqrtRational of_rational(mpq_class r);
    /// sqrt(r); throws std::domain_error when r < 0.
    static SqrtRational sqrt_of(mpq_class r);
    /// sign * sqrt(r) with the sign normalized to {-1, 0, +1}.
    static SqrtRational signed_sqrt(int sign, mpq_class r);

    int sign() const { return sign_; }
    /// The represented value is sign() * sqrt(radicand()).
    const mpq_class& radicand() const { return radicand_; }
    bool is_zero() const { return sign_ == 0; }

    SqrtRational operator-() const;
    SqrtRational& operator*=(const SqrtRational& o);
    SqrtRational& operator/=(const SqrtRational& o);
    friend SqrtRational operator*(SqrtRational a, const SqrtRational& b) { return a *= b; }
    friend SqrtRational operator/(SqrtRational a, const SqrtRational& b) { return a /= b; }

    friend bool operator==(const SqrtRational& a, const SqrtRational& b) {
        return a.sign_ == b.sign_ && a.radicand_ == b.radicand_;
    }

    /// Exact quotient this / o as a rational, defined whenever the two
    /// radicands differ by a perfect rational square; nullopt for
    /// incommensurable surds (or a zero divisor).
    std::optional<mpq_class> ratio(const SqrtRational& o) const;

    /// The value as a rational when the radicand is a perfect square.
    std::optional<mpq_class> as_rational() const;

    double to_double() const;

    /// "sqrt(3/4)", "-sqrt(2)", "1/2", "0"; rational form whenever exact.
    std::string str() const;

private:
    int sign_ = 0;
    mpq_class radicand_ = 0;
};

}  // namespace rotinv

#endif  // ROTINV_SQRT_RATIONAL_HPP
