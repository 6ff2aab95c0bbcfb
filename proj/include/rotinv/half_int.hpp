#ifndef ROTINV_HALF_INT_HPP
#define ROTINV_HALF_INT_HPP

#include <ostream>
#include <stdexcept>
#include <string>

namespace rotinv {

/// Angular momentum quantum number stored exactly as twice its value, so that
/// half-integer spins never touch floating point: j = 3/2 is
/// HalfInt::from_twice(3), while integers convert implicitly.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int whole) : twice_(2 * whole) {}

    static constexpr HalfInt from_twice(int twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr bool is_negative() const { return twice_ < 0; }

    /// The value as a plain integer; only valid when is_integer().
    constexpr int to_int() const {
        if (!is_integer())
            throw std::logic_error("HalfInt::to_int on a half-odd value");
        return twice_ / 2;
    }

    constexpr double to_double() const { return 0.5 * twice_; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

    friend constexpr bool operator==(HalfInt a, HalfInt b) { return a.twice_ == b.twice_; }
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) { return a.twice_ <=> b.twice_; }

    friend constexpr HalfInt abs(HalfInt a) { return from_twice(a.twice_ < 0 ? -a.twice_ : a.twice_); }

    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    friend std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

private:
    int twice_ = 0;
};

/// (-1)^x for an integer-valued exponent; half-odd exponents are rejected.
inline int parity_sign(HalfInt x) {
    if (!x.is_integer())
        throw std::invalid_argument("parity_sign: exponent " + x.str() + " is not an integer");
    return x.to_int() % 2 == 0 ? 1 : -1;
}

}  // namespace rotinv

#endif  // ROTINV_HALF_INT_HPP
