#include "rotinv/wigner.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace rotinv {

namespace {

std::shared_mutex factorial_mutex;
// deque: growth never invalidates references handed out to readers
std::deque<mpz_class> factorial_cache{mpz_class(1)};

long as_nonneg_int(HalfInt x, const char* what) {
    if (!x.is_integer() || x.is_negative())
        throw std::invalid_argument(std::string(what) + ": " + x.str() +
                                    " is not a nonnegative integer");
    return x.to_int();
}

// (a+b-c)! (a-b+c)! (-a+b+c)! / (a+b+c+1)!
mpq_class triangle_delta(HalfInt a, HalfInt b, HalfInt c) {
    mpz_class num = factorial(as_nonneg_int(a + b - c, "triangle_delta")) *
                    factorial(as_nonneg_int(a - b + c, "triangle_delta")) *
                    factorial(as_nonneg_int(-a + b + c, "triangle_delta"));
    mpz_class den = factorial((a + b + c).to_int() + 1);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

const mpz_class& factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    const auto idx = static_cast<std::size_t>(n);
    {
        std::shared_lock lock(factorial_mutex);
        if (idx < factorial_cache.size()) return factorial_cache[idx];
    }
    std::unique_lock lock(factorial_mutex);
    while (factorial_cache.size() <= idx)
        factorial_cache.push_back(factorial_cache.back() *
                                  mpz_class(static_cast<unsigned long>(factorial_cache.size())));
    return factorial_cache[idx];
}

bool triangle_ok(HalfInt a, HalfInt b, HalfInt c) {
    return (a + b + c).is_integer() && abs(a - b) <= c && c <= a + b;
}

SqrtRational wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3,
                       HalfInt m1, HalfInt m2, HalfInt m3) {
    const HalfInt js[3] = {j1, j2, j3};
    const HalfInt ms[3] = {m1, m2, m3};
    for (int i = 0; i < 3; ++i) {
        if (js[i].is_negative())
            throw std::invalid_argument("wigner_3j: negative angular momentum " + js[i].str());
        if (!(js[i] + ms[i]).is_integer())
            throw std::invalid_argument("wigner_3j: m = " + ms[i].str() +
                                        " has the wrong parity for j = " + js[i].str());
    }
    if ((m1 + m2 + m3).twice() != 0) return SqrtRational::zero();
    if (!triangle_ok(j1, j2, j3)) return SqrtRational::zero();
    for (int i = 0; i < 3; ++i)
        if (abs(ms[i]) > js[i]) return SqrtRational::zero();

    // Racah sum. All factorial arguments below are integers once the parity
    // and triangle checks have passed.
    const long p0 = (j1 + j2 - j3).to_int();
    const long p1 = (j1 - m1).to_int();
    const long p2 = (j2 + m2).to_int();
    const long q1 = (j3 - j2 + m1).to_int();
    const long q2 = (j3 - j1 - m2).to_int();

    const long t_lo = std::max({0L, -q1, -q2});
    const long t_hi = std::min({p0, p1, p2});

    mpq_class sum = 0;
    for (long t = t_lo; t <= t_hi; ++t) {
        mpz_class den = factorial(t) * factorial(p0 - t) * factorial(p1 - t) *
                        factorial(p2 - t) * factorial(q1 + t) * factorial(q2 + t);
        mpq_class term(1, den);
        term.canonicalize();
        sum += (t % 2 == 0) ? term : -term;
    }
    if (sum == 0) return SqrtRational::zero();

    mpz_class mag = factorial((j1 + m1).to_int()) * factorial((j1 - m1).to_int()) *
                    factorial((j2 + m2).to_int()) * factorial((j2 - m2).to_int()) *
                    factorial((j3 + m3).to_int()) * factorial((j3 - m3).to_int());
    mpq_class radicand = triangle_delta(j1, j2, j3) * mpq_class(mag) * sum * sum;
    const int phase = parity_sign(j1 - j2 - m3);
    return SqrtRational::signed_sqrt(phase * sgn(sum), radicand);
}

SqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                            HalfInt j_total, HalfInt m_total) {
    SqrtRational three_j = wigner_3j(j1, j2, j_total, m1, m2, -m_total);
    if (three_j.is_zero()) return three_j;
    const int phase = parity_sign(j1 - j2 + m_total);
    return SqrtRational::signed_sqrt(phase, mpq_class(j_total.twice() + 1)) * three_j;
}

SqrtRational wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3,
                       HalfInt j4, HalfInt j5, HalfInt j6) {
    for (HalfInt j : {j1, j2, j3, j4, j5, j6})
        if (j.is_negative())
            throw std::invalid_argument("wigner_6j: negative angular momentum " + j.str());
    if (!triangle_ok(j1, j2, j3) || !triangle_ok(j1, j5, j6) ||
        !triangle_ok(j4, j2, j6) || !triangle_ok(j4, j5, j3))
        return SqrtRational::zero();

    const long s1 = (j1 + j2 + j3).to_int();
    const long s2 = (j1 + j5 + j6).to_int();
    const long s3 = (j4 + j2 + j6).to_int();
    const long s4 = (j4 + j5 + j3).to_int();
    const long r1 = (j1 + j2 + j4 + j5).to_int();
    const long r2 = (j2 + j3 + j5 + j6).to_int();
    const long r3 = (j1 + j3 + j4 + j6).to_int();

    mpq_class sum = 0;
    for (long t = std::max({s1, s2, s3, s4}); t <= std::min({r1, r2, r3}); ++t) {
        mpz_class den = factorial(t - s1) * factorial(t - s2) * factorial(t - s3) *
                        factorial(t - s4) * factorial(r1 - t) * factorial(r2 - t) *
                        factorial(r3 - t);
        mpq_class term(factorial(t + 1), den);
        term.canonicalize();
        sum += (t % 2 == 0) ? term : -term;
    }
    if (sum == 0) return SqrtRational::zero();

    mpq_class radicand = triangle_delta(j1, j2, j3) * triangle_delta(j1, j5, j6) *
                         triangle_delta(j4, j2, j6) * triangle_delta(j4, j5, j3) *
                         sum * sum;
    return SqrtRational::signed_sqrt(sgn(sum), radicand);
}

}  // namespace rotinv
