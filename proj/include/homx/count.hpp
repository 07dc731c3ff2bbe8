#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace homx {

namespace mp = boost::multiprecision;

using BigInt = mp::cpp_int;
using Rational = mp::cpp_rational;

/// Exact nonnegative count (hom(G,H) and friends).
///
/// Thin value wrapper over an arbitrary-precision integer. It exists so that
/// counts can be used as an Eigen scalar; Boost's own number type trips over
/// Eigen's scalar-promotion traits in C++20.
class Count {
public:
    Count() = default;
    template <std::integral I>
    Count(I v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Count(BigInt v) : v_(std::move(v)) {}

    static Count from_string(std::string_view text);

    const BigInt& value() const noexcept { return v_; }
    std::string str() const { return v_.str(); }
    bool is_zero() const { return v_.is_zero(); }

    Count& operator+=(const Count& o) {
        v_ += o.v_;
        return *this;
    }
    Count& operator-=(const Count& o) {
        v_ -= o.v_;
        return *this;
    }
    Count& operator*=(const Count& o) {
        v_ *= o.v_;
        return *this;
    }
    friend Count operator+(Count a, const Count& b) { return a += b; }
    friend Count operator-(Count a, const Count& b) { return a -= b; }
    friend Count operator*(Count a, const Count& b) { return a *= b; }
    friend Count operator-(const Count& a) { return Count(BigInt(-a.v_)); }

    friend bool operator==(const Count& a, const Count& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Count& a, const Count& b) {
        return a.v_.compare(b.v_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Count& c) { return os << c.v_; }

private:
    BigInt v_;
};

Count pow(const Count& base, std::uint64_t exponent);

/// Orders a^(1/p) against b^(1/q) by comparing a^q with b^p exactly.
std::strong_ordering cmp_root_powers(const Count& a, std::uint64_t p, const Count& b, std::uint64_t q);

std::string to_string(std::strong_ordering o);  // "less", "equal" or "greater"
std::string op_symbol(std::strong_ordering o);  // "<", "=" or ">"

/// Canonical "num/den" (or "num" when integral).
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace homx

namespace Eigen {

template <>
struct NumTraits<homx::Count> : GenericNumTraits<homx::Count> {
    using Real = homx::Count;
    using NonInteger = homx::Count;
    using Nested = homx::Count;
    using Literal = homx::Count;
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 8,
        MulCost = 16
    };
    static int digits10() { return 0; }
};

}  // namespace Eigen
