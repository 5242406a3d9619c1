#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vecchoose
{
    using Integer = boost::multiprecision::cpp_int;
    using Rational = boost::multiprecision::cpp_rational;

    auto is_prime_number(std::uint64_t n) -> bool;

    /// Either GF(p) for a prime p <= 2^31, or the rationals.
    class Field
    {
        private:
            std::uint32_t _p = 0;   // 0 encodes the rationals

            explicit Field(std::uint32_t p) : _p(p) { }

        public:
            Field() = default;      // the rationals

            static auto prime(std::uint64_t p) -> Field;
            static auto rationals() -> Field { return Field{}; }

            /// Accepts a decimal prime or "Q".
            static auto parse(std::string_view text) -> Field;

            auto is_prime() const -> bool { return _p != 0; }
            auto is_rationals() const -> bool { return _p == 0; }

            /// 0 for the rationals.
            auto characteristic() const -> std::uint32_t { return _p; }

            /// Number of elements; throws InfiniteField over Q.
            auto order() const -> std::uint32_t;

            auto to_string() const -> std::string;

            friend auto operator== (const Field &, const Field &) -> bool = default;
    };

    /// An element of a Field in canonical form: a residue in [0, p) or a
    /// fully reduced fraction with positive denominator.
    class Scalar
    {
        private:
            Field _field;
            std::uint32_t _residue = 0;
            Rational _value;

            auto check_same(const Scalar & other) const -> void;

        public:
            explicit Scalar(Field field = Field::rationals()) : _field(field) { }

            static auto from_int(Field field, std::int64_t value) -> Scalar;
            static auto from_rational(Field field, const Rational & value) -> Scalar;
            static auto parse(Field field, std::string_view text) -> Scalar;

            auto field() const -> const Field & { return _field; }
            auto is_zero() const -> bool;
            auto is_one() const -> bool;

            /// Residue of a prime-field element.
            auto residue() const -> std::uint32_t;

            /// Value of a rational element.
            auto rational() const -> const Rational &;

            auto inv() const -> Scalar;

            auto operator+ (const Scalar & other) const -> Scalar;
            auto operator- (const Scalar & other) const -> Scalar;
            auto operator* (const Scalar & other) const -> Scalar;
            auto operator/ (const Scalar & other) const -> Scalar;
            auto operator- () const -> Scalar;

            auto operator+= (const Scalar & other) -> Scalar & { return *this = *this + other; }
            auto operator-= (const Scalar & other) -> Scalar & { return *this = *this - other; }
            auto operator*= (const Scalar & other) -> Scalar & { return *this = *this * other; }

            auto operator== (const Scalar & other) const -> bool;
            auto operator!= (const Scalar & other) const -> bool { return ! (*this == other); }

            /// Decimal residue, or "a/b" with b omitted when it is 1.
            auto to_string() const -> std::string;
    };

    auto pow(const Scalar & base, std::uint64_t exponent) -> Scalar;

    /// 0, 1, ..., p-1 in ascending residue order.
    auto enumerate_scalars(const Field & field) -> std::vector<Scalar>;

    enum class SpecialAlpha
    {
        nonsquare,              // not a square
        quadratic_no_root,      // z^2 - alpha z + 1 has no root
        artin_schreier          // nonzero, outside the image of z -> z^2 + z
    };

    /// Least qualifying residue for prime fields; fixed witnesses over Q
    /// (-1 for nonsquare, 0 for quadratic_no_root).
    auto find_special_alpha(const Field & field, SpecialAlpha mode) -> Scalar;

    auto is_square(const Scalar & value) -> bool;
}
