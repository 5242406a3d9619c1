#include <vecchoose/polynomial.hh>
#include <vecchoose/errors.hh>

#include <algorithm>
#include <optional>
#include <set>

using namespace vecchoose;

using std::pair;
using std::size_t;
using std::string;
using std::optional;
using std::vector;

namespace
{
    auto sign(const Rational & r) -> int
    {
        return r > 0 ? 1 : (r < 0 ? -1 : 0);
    }

    auto sign_changes(const vector<int> & signs) -> size_t
    {
        size_t changes = 0;
        int last = 0;
        for (int s : signs) {
            if (s == 0)
                continue;
            if (last != 0 && s != last)
                ++changes;
            last = s;
        }
        return changes;
    }

    /// Sign variations of a Sturm sequence at a point, zeros skipped.
    auto variations(const vector<Polynomial> & seq, const Rational & x) -> size_t
    {
        vector<int> signs;
        for (auto & s : seq)
            signs.push_back(sign(s(x)));
        return sign_changes(signs);
    }

    auto floor_of(const Rational & x) -> Integer
    {
        Integer q = numerator(x) / denominator(x);
        if (x < 0 && Rational(q) != x)
            q -= 1;
        return q;
    }

    /// The fraction with the least denominator in [lo, hi].
    auto simplest_between(const Rational & lo, const Rational & hi) -> Rational
    {
        if (lo <= 0 && hi >= 0)
            return Rational(0);
        if (hi < 0)
            return -simplest_between(-hi, -lo);
        Integer f = floor_of(lo);
        if (Rational(f) == lo)
            return lo;
        if (Rational(f + 1) <= hi)
            return Rational(f + 1);
        return Rational(f) + Rational(1) / simplest_between(Rational(1) / (hi - f), Rational(1) / (lo - f));
    }

    /// Leading coefficient of the primitive integer multiple of p.
    auto integer_leading(const Polynomial & p) -> Integer
    {
        Integer common = 1;
        for (auto & c : p.coefficients())
            common = lcm(common, denominator(c));
        Integer content = 0;
        for (auto & c : p.coefficients())
            content = gcd(content, numerator(Rational(c * common)));
        Integer lead = numerator(Rational(p.leading() * common)) / content;
        return lead < 0 ? Integer(-lead) : lead;
    }

    /// One rational root of a squarefree p, if it has any.
    auto some_rational_root(const Polynomial & p) -> optional<Rational>
    {
        if (p.degree() < 1)
            return std::nullopt;
        if (p.degree() == 1)
            return -p.coefficient(0) / p.coefficient(1);
        auto seq = sturm_sequence(p);
        Rational bound = 1;
        for (int i = 0 ; i < p.degree() ; ++i) {
            Rational r = p.coefficient(i) / p.leading();
            bound += r < 0 ? Rational(-r) : r;
        }
        Integer lead = integer_leading(p);
        // distinct fractions with denominators dividing lead are this far apart
        Rational gap = Rational(1) / Rational(lead * lead);

        struct Piece { Rational lo, hi; size_t vlo, vhi; };
        vector<Piece> stack{ { -bound, bound, variations(seq, -bound), variations(seq, bound) } };
        while (! stack.empty()) {
            auto piece = stack.back();
            stack.pop_back();
            size_t count = piece.vlo - piece.vhi;
            if (count == 0)
                continue;
            if (count == 1 && piece.hi - piece.lo < gap) {
                Rational s = simplest_between(piece.lo, piece.hi);
                if (p(s) == 0)
                    return s;
                continue;
            }
            Rational mid = (piece.lo + piece.hi) / 2;
            if (p(mid) == 0)
                return mid;
            size_t vmid = variations(seq, mid);
            stack.push_back({ piece.lo, mid, piece.vlo, vmid });
            stack.push_back({ mid, piece.hi, vmid, piece.vhi });
        }
        return std::nullopt;
    }

}

Polynomial::Polynomial(vector<Rational> coefficients) :
    _coefficients(std::move(coefficients))
{
    normalize();
}

auto Polynomial::normalize() -> void
{
    while (! _coefficients.empty() && _coefficients.back() == 0)
        _coefficients.pop_back();
}

auto Polynomial::constant(const Rational & c) -> Polynomial
{
    return Polynomial(vector<Rational>{ c });
}

auto Polynomial::monomial(const Rational & c, size_t d) -> Polynomial
{
    vector<Rational> coefficients(d + 1);
    coefficients[d] = c;
    return Polynomial(std::move(coefficients));
}

auto Polynomial::coefficient(size_t i) const -> Rational
{
    return i < _coefficients.size() ? _coefficients[i] : Rational(0);
}

auto Polynomial::leading() const -> Rational
{
    return is_zero() ? Rational(0) : _coefficients.back();
}

auto Polynomial::operator() (const Rational & z) const -> Rational
{
    Rational result = 0;
    for (auto c = _coefficients.rbegin() ; c != _coefficients.rend() ; ++c)
        result = result * z + *c;
    return result;
}

auto Polynomial::operator+ (const Polynomial & other) const -> Polynomial
{
    vector<Rational> result(std::max(_coefficients.size(), other._coefficients.size()));
    for (size_t i = 0 ; i < result.size() ; ++i)
        result[i] = coefficient(i) + other.coefficient(i);
    return Polynomial(std::move(result));
}

auto Polynomial::operator- (const Polynomial & other) const -> Polynomial
{
    return *this + (-other);
}

auto Polynomial::operator- () const -> Polynomial
{
    Polynomial result = *this;
    for (auto & c : result._coefficients)
        c = -c;
    return result;
}

auto Polynomial::operator* (const Polynomial & other) const -> Polynomial
{
    if (is_zero() || other.is_zero())
        return Polynomial{};
    vector<Rational> result(_coefficients.size() + other._coefficients.size() - 1);
    for (size_t i = 0 ; i < _coefficients.size() ; ++i)
        if (_coefficients[i] != 0)
            for (size_t j = 0 ; j < other._coefficients.size() ; ++j)
                result[i + j] += _coefficients[i] * other._coefficients[j];
    return Polynomial(std::move(result));
}

auto Polynomial::operator* (const Rational & factor) const -> Polynomial
{
    vector<Rational> result = _coefficients;
    for (auto & c : result)
        c *= factor;
    return Polynomial(std::move(result));
}

auto Polynomial::derivative() const -> Polynomial
{
    if (_coefficients.size() <= 1)
        return Polynomial{};
    vector<Rational> result(_coefficients.size() - 1);
    for (size_t i = 1 ; i < _coefficients.size() ; ++i)
        result[i - 1] = _coefficients[i] * i;
    return Polynomial(std::move(result));
}

auto Polynomial::divmod(const Polynomial & divisor) const -> pair<Polynomial, Polynomial>
{
    if (divisor.is_zero())
        throw DivisionByZero("polynomial division by zero");
    vector<Rational> remainder = _coefficients;
    int dd = divisor.degree();
    if (degree() < dd)
        return { Polynomial{}, *this };
    vector<Rational> quotient(degree() - dd + 1);
    Rational lead = divisor.leading();
    for (int i = degree() ; i >= dd ; --i) {
        Rational c = remainder[i] / lead;
        quotient[i - dd] = c;
        if (c == 0)
            continue;
        for (int j = 0 ; j <= dd ; ++j)
            remainder[i - dd + j] -= c * divisor._coefficients[j];
    }
    remainder.resize(dd);
    return { Polynomial(std::move(quotient)), Polynomial(std::move(remainder)) };
}

auto Polynomial::monic() const -> Polynomial
{
    if (is_zero())
        return *this;
    return *this * (Rational(1) / leading());
}

auto Polynomial::to_string(const string & variable) const -> string
{
    if (is_zero())
        return "0";
    string result;
    for (int i = degree() ; i >= 0 ; --i) {
        Rational c = _coefficients[i];
        if (c == 0)
            continue;
        bool negative = c < 0;
        if (negative)
            c = -c;
        if (result.empty())
            result += negative ? "-" : "";
        else
            result += negative ? " - " : " + ";
        string body = denominator(c) == 1 ? numerator(c).str() : numerator(c).str() + "/" + denominator(c).str();
        if (i == 0)
            result += body;
        else {
            if (c != 1)
                result += body + "*";
            result += variable;
            if (i > 1)
                result += "^" + std::to_string(i);
        }
    }
    return result;
}

auto vecchoose::gcd(const Polynomial & a, const Polynomial & b) -> Polynomial
{
    Polynomial x = a, y = b;
    while (! y.is_zero()) {
        auto r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

auto vecchoose::sturm_sequence(const Polynomial & p) -> vector<Polynomial>
{
    vector<Polynomial> result;
    if (p.is_zero())
        return result;
    result.push_back(p);
    Polynomial d = p.derivative();
    if (d.is_zero())
        return result;
    result.push_back(d);
    while (true) {
        auto r = result[result.size() - 2].divmod(result.back()).second;
        if (r.is_zero())
            break;
        result.push_back(-r);
    }
    return result;
}

auto vecchoose::count_real_roots(const Polynomial & p) -> size_t
{
    if (p.is_zero())
        throw InvalidParameter("the zero polynomial has infinitely many roots");
    auto seq = sturm_sequence(p);
    vector<int> at_minus, at_plus;
    for (auto & s : seq) {
        int lead = sign(s.leading());
        at_plus.push_back(lead);
        at_minus.push_back(s.degree() % 2 == 0 ? lead : -lead);
    }
    return sign_changes(at_minus) - sign_changes(at_plus);
}

auto vecchoose::rational_roots(const Polynomial & p) -> vector<Rational>
{
    if (p.is_zero())
        throw InvalidParameter("the zero polynomial has infinitely many roots");
    vector<Rational> roots;
    Polynomial rest = p;
    if (rest.degree() > 0)
        rest = rest.divmod(gcd(rest, rest.derivative())).first;
    while (auto r = some_rational_root(rest)) {
        roots.push_back(*r);
        rest = rest.divmod(Polynomial({ -*r, Rational(1) })).first;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

auto vecchoose::characteristic_polynomial(const vector<vector<Rational>> & m) -> Polynomial
{
    size_t n = m.size();
    for (auto & row : m)
        if (row.size() != n)
            throw InvalidParameter("characteristic polynomial of a non-square matrix");
    // Faddeev-LeVerrier
    vector<Rational> c(n + 1);
    c[n] = 1;
    vector<vector<Rational>> acc(n, vector<Rational>(n));
    for (size_t k = 1 ; k <= n ; ++k) {
        vector<vector<Rational>> next(n, vector<Rational>(n));
        for (size_t i = 0 ; i < n ; ++i)
            for (size_t j = 0 ; j < n ; ++j) {
                Rational sum = 0;
                for (size_t l = 0 ; l < n ; ++l)
                    sum += m[i][l] * acc[l][j];
                next[i][j] = sum;
            }
        for (size_t i = 0 ; i < n ; ++i)
            next[i][i] += c[n - k + 1];
        acc = std::move(next);
        Rational trace = 0;
        for (size_t i = 0 ; i < n ; ++i)
            for (size_t l = 0 ; l < n ; ++l)
                trace += m[i][l] * acc[l][i];
        c[n - k] = -trace / k;
    }
    return Polynomial(std::move(c));
}
