#pragma once

#include <vecchoose/field.hh>

#include <string>
#include <utility>
#include <vector>

namespace vecchoose
{
    /// A univariate polynomial with rational coefficients, lowest degree
    /// first, with no trailing zero coefficients.
    class Polynomial
    {
        private:
            std::vector<Rational> _coefficients;

            auto normalize() -> void;

        public:
            Polynomial() = default;
            explicit Polynomial(std::vector<Rational> coefficients);

            static auto constant(const Rational & c) -> Polynomial;

            /// The monomial c z^d.
            static auto monomial(const Rational & c, std::size_t d) -> Polynomial;

            auto is_zero() const -> bool { return _coefficients.empty(); }

            /// -1 for the zero polynomial.
            auto degree() const -> int { return static_cast<int>(_coefficients.size()) - 1; }
            auto coefficients() const -> const std::vector<Rational> & { return _coefficients; }
            auto coefficient(std::size_t i) const -> Rational;
            auto leading() const -> Rational;

            auto operator() (const Rational & z) const -> Rational;

            auto operator+ (const Polynomial & other) const -> Polynomial;
            auto operator- (const Polynomial & other) const -> Polynomial;
            auto operator- () const -> Polynomial;
            auto operator* (const Polynomial & other) const -> Polynomial;
            auto operator* (const Rational & factor) const -> Polynomial;
            auto operator== (const Polynomial & other) const -> bool = default;

            auto derivative() const -> Polynomial;

            /// Quotient and remainder; throws DivisionByZero for a zero divisor.
            auto divmod(const Polynomial & divisor) const -> std::pair<Polynomial, Polynomial>;

            /// Scaled to leading coefficient 1 (zero stays zero).
            auto monic() const -> Polynomial;

            /// e.g. "-z^2 - 1".
            auto to_string(const std::string & variable = "z") const -> std::string;
    };

    auto gcd(const Polynomial & a, const Polynomial & b) -> Polynomial;

    /// p, p', then negated remainders down to a constant.
    auto sturm_sequence(const Polynomial & p) -> std::vector<Polynomial>;

    /// Number of distinct real roots, counted exactly by a Sturm sequence.
    auto count_real_roots(const Polynomial & p) -> std::size_t;

    /// Distinct rational roots in ascending order, by the rational root test
    /// on the primitive integer form. The zero polynomial throws InvalidParameter.
    auto rational_roots(const Polynomial & p) -> std::vector<Rational>;

    /// det(z I - m) for a square rational matrix given row-major.
    auto characteristic_polynomial(const std::vector<std::vector<Rational>> & m) -> Polynomial;
}
