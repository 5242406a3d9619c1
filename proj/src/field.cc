#include <vecchoose/field.hh>
#include <vecchoose/errors.hh>

#include <charconv>
#include <limits>

using namespace vecchoose;

using std::string;
using std::string_view;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace
{
    auto mod_pow(uint64_t base, uint64_t exponent, uint64_t p) -> uint64_t
    {
        uint64_t result = 1 % p;
        base %= p;
        while (exponent > 0) {
            if (exponent & 1)
                result = result * base % p;
            base = base * base % p;
            exponent >>= 1;
        }
        return result;
    }

    auto parse_integer(string_view text) -> Integer
    {
        if (text.empty())
            throw ParseError("empty scalar");
        size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
        if (start == text.size())
            throw ParseError("malformed integer '" + string(text) + "'");
        for (size_t i = start ; i < text.size() ; ++i)
            if (text[i] < '0' || text[i] > '9')
                throw ParseError("malformed integer '" + string(text) + "'");
        Integer value{string(text[0] == '+' ? text.substr(1) : text)};
        return value;
    }
}

auto vecchoose::is_prime_number(uint64_t n) -> bool
{
    if (n < 2)
        return false;
    for (uint64_t d = 2 ; d * d <= n ; ++d)
        if (n % d == 0)
            return false;
    return true;
}

auto Field::prime(uint64_t p) -> Field
{
    if (p < 2 || p > (uint64_t{1} << 31))
        throw InvalidParameter("field characteristic " + std::to_string(p) + " outside [2, 2^31]");
    if (! is_prime_number(p))
        throw NotPrime(std::to_string(p) + " is not prime");
    return Field{static_cast<uint32_t>(p)};
}

auto Field::parse(string_view text) -> Field
{
    if (text == "Q" || text == "q")
        return rationals();
    uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError("field must be a prime or 'Q', got '" + string(text) + "'");
    return prime(p);
}

auto Field::order() const -> uint32_t
{
    if (is_rationals())
        throw InfiniteField("the rationals have no finite order");
    return _p;
}

auto Field::to_string() const -> string
{
    return is_rationals() ? string("Q") : std::to_string(_p);
}

auto Scalar::from_int(Field field, std::int64_t value) -> Scalar
{
    Scalar result(field);
    if (field.is_prime()) {
        std::int64_t p = field.characteristic();
        std::int64_t r = value % p;
        if (r < 0)
            r += p;
        result._residue = static_cast<uint32_t>(r);
    }
    else
        result._value = value;
    return result;
}

auto Scalar::from_rational(Field field, const Rational & value) -> Scalar
{
    Scalar result(field);
    if (field.is_prime()) {
        Integer p = field.characteristic();
        Integer num = numerator(value) % p, den = denominator(value) % p;
        if (num < 0)
            num += p;
        if (den == 0)
            throw DivisionByZero("denominator vanishes modulo " + field.to_string());
        Scalar n = from_int(field, static_cast<std::int64_t>(num));
        Scalar d = from_int(field, static_cast<std::int64_t>(den));
        return n / d;
    }
    result._value = value;
    return result;
}

auto Scalar::parse(Field field, string_view text) -> Scalar
{
    auto slash = text.find('/');
    if (slash == string_view::npos) {
        Integer v = parse_integer(text);
        if (field.is_prime()) {
            Integer r = v % field.characteristic();
            if (r < 0)
                r += field.characteristic();
            return from_int(field, static_cast<std::int64_t>(r));
        }
        return from_rational(field, Rational(v));
    }
    Integer num = parse_integer(text.substr(0, slash));
    string_view dtext = text.substr(slash + 1);
    if (! dtext.empty() && (dtext[0] == '-' || dtext[0] == '+'))
        throw ParseError("denominator must be unsigned in '" + string(text) + "'");
    Integer den = parse_integer(dtext);
    if (den == 0)
        throw DivisionByZero("zero denominator in '" + string(text) + "'");
    return from_rational(field, Rational(num, den));
}

auto Scalar::check_same(const Scalar & other) const -> void
{
    if (! (_field == other._field))
        throw FieldMismatch("mixed fields " + _field.to_string() + " and " + other._field.to_string());
}

auto Scalar::is_zero() const -> bool
{
    return _field.is_prime() ? _residue == 0 : _value == 0;
}

auto Scalar::is_one() const -> bool
{
    return _field.is_prime() ? _residue == 1 : _value == 1;
}

auto Scalar::residue() const -> uint32_t
{
    if (! _field.is_prime())
        throw FieldMismatch("residue() on a rational scalar");
    return _residue;
}

auto Scalar::rational() const -> const Rational &
{
    if (! _field.is_rationals())
        throw FieldMismatch("rational() on a prime-field scalar");
    return _value;
}

auto Scalar::inv() const -> Scalar
{
    if (is_zero())
        throw DivisionByZero("inverse of zero");
    Scalar result(_field);
    if (_field.is_prime())
        result._residue = static_cast<uint32_t>(mod_pow(_residue, _field.characteristic() - 2, _field.characteristic()));
    else
        result._value = 1 / _value;
    return result;
}

auto Scalar::operator+ (const Scalar & other) const -> Scalar
{
    check_same(other);
    Scalar result(_field);
    if (_field.is_prime())
        result._residue = static_cast<uint32_t>((uint64_t{_residue} + other._residue) % _field.characteristic());
    else
        result._value = _value + other._value;
    return result;
}

auto Scalar::operator- (const Scalar & other) const -> Scalar
{
    return *this + (-other);
}

auto Scalar::operator- () const -> Scalar
{
    Scalar result(_field);
    if (_field.is_prime())
        result._residue = _residue == 0 ? 0 : _field.characteristic() - _residue;
    else
        result._value = -_value;
    return result;
}

auto Scalar::operator* (const Scalar & other) const -> Scalar
{
    check_same(other);
    Scalar result(_field);
    if (_field.is_prime())
        result._residue = static_cast<uint32_t>(uint64_t{_residue} * other._residue % _field.characteristic());
    else
        result._value = _value * other._value;
    return result;
}

auto Scalar::operator/ (const Scalar & other) const -> Scalar
{
    check_same(other);
    return *this * other.inv();
}

auto Scalar::operator== (const Scalar & other) const -> bool
{
    check_same(other);
    return _field.is_prime() ? _residue == other._residue : _value == other._value;
}

auto Scalar::to_string() const -> string
{
    if (_field.is_prime())
        return std::to_string(_residue);
    if (denominator(_value) == 1)
        return numerator(_value).str();
    return numerator(_value).str() + "/" + denominator(_value).str();
}

auto vecchoose::pow(const Scalar & base, uint64_t exponent) -> Scalar
{
    Scalar result = Scalar::from_int(base.field(), 1), b = base;
    while (exponent > 0) {
        if (exponent & 1)
            result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

auto vecchoose::enumerate_scalars(const Field & field) -> vector<Scalar>
{
    if (field.is_rationals())
        throw InfiniteField("cannot enumerate the rationals");
    vector<Scalar> result;
    result.reserve(field.order());
    for (uint32_t r = 0 ; r < field.order() ; ++r)
        result.push_back(Scalar::from_int(field, r));
    return result;
}

auto vecchoose::is_square(const Scalar & value) -> bool
{
    const Field & field = value.field();
    if (value.is_zero())
        return true;
    if (field.is_prime()) {
        uint32_t p = field.characteristic();
        if (p == 2)
            return true;
        return mod_pow(value.residue(), (p - 1) / 2, p) == 1;
    }
    const Rational & q = value.rational();
    if (q < 0)
        return false;
    auto is_square_integer = [] (const Integer & n) {
        Integer r = boost::multiprecision::sqrt(n);
        return r * r == n;
    };
    return is_square_integer(numerator(q)) && is_square_integer(denominator(q));
}

auto vecchoose::find_special_alpha(const Field & field, SpecialAlpha mode) -> Scalar
{
    switch (mode) {
        case SpecialAlpha::nonsquare:
            if (field.characteristic() == 2)
                throw PreconditionViolated("nonsquare search needs characteristic other than 2");
            if (field.is_rationals())
                return Scalar::from_int(field, -1);
            for (auto & a : enumerate_scalars(field))
                if (! is_square(a))
                    return a;
            break;

        case SpecialAlpha::quadratic_no_root:
            if (field.is_rationals())
                return Scalar::from_int(field, 0);
            if (field.characteristic() != 2) {
                // odd characteristic: a root exists iff alpha^2 - 4 is a square
                Scalar four = Scalar::from_int(field, 4);
                for (uint32_t r = 0 ; r < field.order() ; ++r) {
                    Scalar alpha = Scalar::from_int(field, r);
                    if (! is_square(alpha * alpha - four))
                        return alpha;
                }
            }
            else {
                auto elements = enumerate_scalars(field);
                Scalar one = Scalar::from_int(field, 1);
                for (auto & alpha : elements) {
                    bool has_root = false;
                    for (auto & z : elements)
                        if ((z * z - alpha * z + one).is_zero()) {
                            has_root = true;
                            break;
                        }
                    if (! has_root)
                        return alpha;
                }
            }
            break;

        case SpecialAlpha::artin_schreier:
            if (field.characteristic() != 2)
                throw PreconditionViolated("Artin-Schreier search needs characteristic 2");
            {
                auto elements = enumerate_scalars(field);
                for (auto & alpha : elements) {
                    if (alpha.is_zero())
                        continue;
                    bool hit = false;
                    for (auto & z : elements)
                        if (z * z + z == alpha) {
                            hit = true;
                            break;
                        }
                    if (! hit)
                        return alpha;
                }
            }
            break;
    }
    throw NoSuchElement("no qualifying element in GF(" + field.to_string() + ")");
}
