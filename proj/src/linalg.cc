#include <vecchoose/linalg.hh>
#include <vecchoose/errors.hh>

#include <algorithm>

using namespace vecchoose;

using std::array;
using std::optional;
using std::size_t;
using std::span;
using std::string;
using std::vector;

namespace
{
    auto check_field(const Field & a, const Field & b) -> void
    {
        if (! (a == b))
            throw FieldMismatch("mixed fields " + a.to_string() + " and " + b.to_string());
    }

    auto check_length(size_t a, size_t b) -> void
    {
        if (a != b)
            throw AmbientMismatch("lengths " + std::to_string(a) + " and " + std::to_string(b));
    }

    /// In-place Gauss-Jordan elimination; returns pivot columns. Rows are
    /// left in reduced form with zero rows moved to the end.
    auto eliminate(vector<vector<Scalar>> & rows, size_t cols) -> vector<size_t>
    {
        vector<size_t> pivots;
        size_t r = 0;
        for (size_t c = 0 ; c < cols && r < rows.size() ; ++c) {
            size_t sel = r;
            while (sel < rows.size() && rows[sel][c].is_zero())
                ++sel;
            if (sel == rows.size())
                continue;
            std::swap(rows[r], rows[sel]);
            Scalar inv = rows[r][c].inv();
            for (size_t k = c ; k < cols ; ++k)
                rows[r][k] *= inv;
            for (size_t o = 0 ; o < rows.size() ; ++o) {
                if (o == r || rows[o][c].is_zero())
                    continue;
                Scalar factor = rows[o][c];
                for (size_t k = c ; k < cols ; ++k)
                    rows[o][k] -= factor * rows[r][k];
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }
}

Vector::Vector(Field field, size_t length) :
    _field(field),
    _entries(length, Scalar(field))
{
    if (field.is_prime())
        for (auto & e : _entries)
            e = Scalar::from_int(field, 0);
}

Vector::Vector(Field field, vector<Scalar> entries) :
    _field(field),
    _entries(std::move(entries))
{
    for (auto & e : _entries)
        check_field(field, e.field());
}

auto Vector::from_ints(Field field, const vector<std::int64_t> & values) -> Vector
{
    vector<Scalar> entries;
    entries.reserve(values.size());
    for (auto v : values)
        entries.push_back(Scalar::from_int(field, v));
    return Vector(field, std::move(entries));
}

auto Vector::unit(Field field, size_t length, size_t index) -> Vector
{
    if (index >= length)
        throw InvalidParameter("unit index " + std::to_string(index) + " outside length " + std::to_string(length));
    Vector result(field, length);
    result[index] = Scalar::from_int(field, 1);
    return result;
}

auto Vector::is_zero() const -> bool
{
    return std::all_of(_entries.begin(), _entries.end(), [] (const Scalar & s) { return s.is_zero(); });
}

auto Vector::operator+ (const Vector & other) const -> Vector
{
    check_field(_field, other._field);
    check_length(size(), other.size());
    Vector result = *this;
    for (size_t i = 0 ; i < size() ; ++i)
        result._entries[i] += other._entries[i];
    return result;
}

auto Vector::operator- (const Vector & other) const -> Vector
{
    check_field(_field, other._field);
    check_length(size(), other.size());
    Vector result = *this;
    for (size_t i = 0 ; i < size() ; ++i)
        result._entries[i] -= other._entries[i];
    return result;
}

auto Vector::operator* (const Scalar & factor) const -> Vector
{
    Vector result = *this;
    for (auto & e : result._entries)
        e *= factor;
    return result;
}

auto Vector::operator== (const Vector & other) const -> bool
{
    return _field == other._field && _entries == other._entries;
}

auto Vector::to_string() const -> string
{
    string result;
    for (size_t i = 0 ; i < size() ; ++i) {
        if (i)
            result += ' ';
        result += _entries[i].to_string();
    }
    return result;
}

auto vecchoose::dot(const Vector & x, const Vector & y) -> Scalar
{
    check_field(x.field(), y.field());
    check_length(x.size(), y.size());
    Scalar sum = Scalar::from_int(x.field(), 0);
    for (size_t i = 0 ; i < x.size() ; ++i)
        if (! x[i].is_zero() && ! y[i].is_zero())
            sum += x[i] * y[i];
    return sum;
}

auto vecchoose::proportional(const Vector & x, const Vector & y) -> bool
{
    check_length(x.size(), y.size());
    if (x.is_zero() || y.is_zero())
        return x.is_zero() && y.is_zero();
    size_t lead = 0;
    while (x[lead].is_zero())
        ++lead;
    if (y[lead].is_zero())
        return false;
    Scalar ratio = y[lead] / x[lead];
    return x * ratio == y;
}

auto vecchoose::concat(span<const Vector> parts) -> Vector
{
    if (parts.empty())
        throw InvalidParameter("concat of nothing");
    vector<Scalar> entries;
    for (auto & p : parts)
        for (auto & e : p.entries())
            entries.push_back(e);
    return Vector(parts[0].field(), std::move(entries));
}

auto vecchoose::tensor_unit(size_t k, size_t block, const Vector & b) -> Vector
{
    Vector result(b.field(), k * b.size());
    for (size_t i = 0 ; i < b.size() ; ++i)
        result[block * b.size() + i] = b[i];
    return result;
}

auto vecchoose::embed(const Vector & x, size_t ambient, size_t offset) -> Vector
{
    if (offset + x.size() > ambient)
        throw AmbientMismatch("cannot embed length " + std::to_string(x.size()) + " at offset "
                + std::to_string(offset) + " into " + std::to_string(ambient));
    Vector result(x.field(), ambient);
    for (size_t i = 0 ; i < x.size() ; ++i)
        result[offset + i] = x[i];
    return result;
}

Matrix::Matrix(Field field, size_t rows, size_t cols) :
    _field(field),
    _rows(rows),
    _cols(cols),
    _data(rows * cols, Scalar::from_int(field, 0))
{
}

auto Matrix::from_rows(Field field, size_t cols, span<const Vector> rows) -> Matrix
{
    Matrix result(field, rows.size(), cols);
    for (size_t r = 0 ; r < rows.size() ; ++r) {
        check_field(field, rows[r].field());
        check_length(cols, rows[r].size());
        for (size_t c = 0 ; c < cols ; ++c)
            result(r, c) = rows[r][c];
    }
    return result;
}

auto Matrix::identity(Field field, size_t n) -> Matrix
{
    Matrix result(field, n, n);
    for (size_t i = 0 ; i < n ; ++i)
        result(i, i) = Scalar::from_int(field, 1);
    return result;
}

auto Matrix::row(size_t r) const -> Vector
{
    vector<Scalar> entries(_data.begin() + r * _cols, _data.begin() + (r + 1) * _cols);
    return Vector(_field, std::move(entries));
}

auto Matrix::column(size_t c) const -> Vector
{
    Vector result(_field, _rows);
    for (size_t r = 0 ; r < _rows ; ++r)
        result[r] = (*this)(r, c);
    return result;
}

auto Matrix::operator* (const Matrix & other) const -> Matrix
{
    check_field(_field, other._field);
    check_length(_cols, other._rows);
    Matrix result(_field, _rows, other._cols);
    for (size_t i = 0 ; i < _rows ; ++i)
        for (size_t k = 0 ; k < _cols ; ++k) {
            const Scalar & a = (*this)(i, k);
            if (a.is_zero())
                continue;
            for (size_t j = 0 ; j < other._cols ; ++j)
                result(i, j) += a * other(k, j);
        }
    return result;
}

auto Matrix::operator* (const Vector & x) const -> Vector
{
    check_length(_cols, x.size());
    Vector result(_field, _rows);
    for (size_t i = 0 ; i < _rows ; ++i)
        for (size_t k = 0 ; k < _cols ; ++k)
            result[i] += (*this)(i, k) * x[k];
    return result;
}

auto Matrix::operator+ (const Matrix & other) const -> Matrix
{
    check_length(_rows, other._rows);
    check_length(_cols, other._cols);
    Matrix result = *this;
    for (size_t i = 0 ; i < _data.size() ; ++i)
        result._data[i] += other._data[i];
    return result;
}

auto Matrix::operator* (const Scalar & factor) const -> Matrix
{
    Matrix result = *this;
    for (auto & e : result._data)
        e *= factor;
    return result;
}

auto Matrix::transpose() const -> Matrix
{
    Matrix result(_field, _cols, _rows);
    for (size_t i = 0 ; i < _rows ; ++i)
        for (size_t j = 0 ; j < _cols ; ++j)
            result(j, i) = (*this)(i, j);
    return result;
}

auto Matrix::rank() const -> size_t
{
    vector<vector<Scalar>> rows;
    for (size_t r = 0 ; r < _rows ; ++r)
        rows.emplace_back(_data.begin() + r * _cols, _data.begin() + (r + 1) * _cols);
    return eliminate(rows, _cols).size();
}

auto Matrix::determinant() const -> Scalar
{
    if (_rows != _cols)
        throw InvalidParameter("determinant of a non-square matrix");
    vector<vector<Scalar>> a;
    for (size_t r = 0 ; r < _rows ; ++r)
        a.emplace_back(_data.begin() + r * _cols, _data.begin() + (r + 1) * _cols);
    Scalar det = Scalar::from_int(_field, 1);
    for (size_t c = 0 ; c < _cols ; ++c) {
        size_t sel = c;
        while (sel < _rows && a[sel][c].is_zero())
            ++sel;
        if (sel == _rows)
            return Scalar::from_int(_field, 0);
        if (sel != c) {
            std::swap(a[sel], a[c]);
            det = -det;
        }
        det *= a[c][c];
        Scalar inv = a[c][c].inv();
        for (size_t r = c + 1 ; r < _rows ; ++r) {
            if (a[r][c].is_zero())
                continue;
            Scalar factor = a[r][c] * inv;
            for (size_t k = c ; k < _cols ; ++k)
                a[r][k] -= factor * a[c][k];
        }
    }
    return det;
}

auto Matrix::inverse() const -> Matrix
{
    if (_rows != _cols)
        throw InvalidParameter("inverse of a non-square matrix");
    size_t n = _rows;
    vector<vector<Scalar>> a;
    for (size_t r = 0 ; r < n ; ++r) {
        vector<Scalar> row(_data.begin() + r * n, _data.begin() + (r + 1) * n);
        for (size_t c = 0 ; c < n ; ++c)
            row.push_back(Scalar::from_int(_field, r == c ? 1 : 0));
        a.push_back(std::move(row));
    }
    auto pivots = eliminate(a, 2 * n);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        throw DivisionByZero("singular matrix has no inverse");
    Matrix result(_field, n, n);
    for (size_t r = 0 ; r < n ; ++r)
        for (size_t c = 0 ; c < n ; ++c)
            result(r, c) = a[r][n + c];
    return result;
}

auto Matrix::kernel() const -> vector<Vector>
{
    vector<vector<Scalar>> rows;
    for (size_t r = 0 ; r < _rows ; ++r)
        rows.emplace_back(_data.begin() + r * _cols, _data.begin() + (r + 1) * _cols);
    auto pivots = eliminate(rows, _cols);
    vector<bool> is_pivot(_cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    vector<Vector> result;
    for (size_t f = 0 ; f < _cols ; ++f) {
        if (is_pivot[f])
            continue;
        Vector v(_field, _cols);
        v[f] = Scalar::from_int(_field, 1);
        for (size_t i = 0 ; i < pivots.size() ; ++i)
            v[pivots[i]] = -rows[i][f];
        result.push_back(std::move(v));
    }
    return result;
}

auto vecchoose::rref(Field field, size_t ambient, span<const Vector> vectors) -> vector<Vector>
{
    vector<vector<Scalar>> rows;
    rows.reserve(vectors.size());
    for (auto & v : vectors) {
        check_field(field, v.field());
        check_length(ambient, v.size());
        rows.push_back(v.entries());
    }
    auto pivots = eliminate(rows, ambient);
    vector<Vector> result;
    for (size_t i = 0 ; i < pivots.size() ; ++i)
        result.emplace_back(field, std::move(rows[i]));
    return result;
}

Subspace::Subspace(Field field, size_t ambient) :
    _field(field),
    _ambient(ambient)
{
}

auto Subspace::span(Field field, size_t ambient, std::span<const Vector> vectors) -> Subspace
{
    Subspace result(field, ambient);
    result._basis = rref(field, ambient, vectors);
    for (auto & b : result._basis) {
        size_t p = 0;
        while (b[p].is_zero())
            ++p;
        result._pivots.push_back(p);
    }
    return result;
}

auto Subspace::span(std::span<const Vector> vectors) -> Subspace
{
    if (vectors.empty())
        throw InvalidParameter("span of no vectors needs an explicit ambient dimension");
    return span(vectors[0].field(), vectors[0].size(), vectors);
}

auto Subspace::full(Field field, size_t ambient) -> Subspace
{
    vector<size_t> all(ambient);
    for (size_t i = 0 ; i < ambient ; ++i)
        all[i] = i;
    return coordinate(field, ambient, all);
}

auto Subspace::coordinate(Field field, size_t ambient, const vector<size_t> & indices) -> Subspace
{
    vector<Vector> gens;
    for (auto i : indices)
        gens.push_back(Vector::unit(field, ambient, i));
    return span(field, ambient, gens);
}

auto Subspace::coordinates(const Vector & v) const -> optional<vector<Scalar>>
{
    check_field(_field, v.field());
    check_length(_ambient, v.size());
    Vector residue = v;
    vector<Scalar> coefficients;
    for (size_t i = 0 ; i < _basis.size() ; ++i) {
        Scalar c = residue[_pivots[i]];
        coefficients.push_back(c);
        if (! c.is_zero())
            residue = residue - _basis[i] * c;
    }
    if (! residue.is_zero())
        return std::nullopt;
    return coefficients;
}

auto Subspace::contains(const Vector & v) const -> bool
{
    return coordinates(v).has_value();
}

auto Subspace::first_nonzero() const -> Vector
{
    if (_basis.empty())
        throw NoSuchElement("the zero subspace has no nonzero member");
    return _basis.front();
}

auto Subspace::truncated(size_t d) const -> Subspace
{
    if (d > dim())
        throw InvalidParameter("cannot truncate to a larger dimension");
    Subspace result = *this;
    result._basis.resize(d, Vector(_field, _ambient));
    result._pivots.resize(d);
    return result;
}

auto Subspace::operator== (const Subspace & other) const -> bool
{
    return _field == other._field && _ambient == other._ambient && _basis == other._basis;
}

auto Subspace::to_string() const -> string
{
    string result;
    for (auto & b : _basis)
        result += b.to_string() + "\n";
    return result;
}

auto vecchoose::subspace_sum(const Subspace & u, const Subspace & v) -> Subspace
{
    check_field(u.field(), v.field());
    check_length(u.ambient(), v.ambient());
    vector<Vector> gens = u.basis();
    gens.insert(gens.end(), v.basis().begin(), v.basis().end());
    return Subspace::span(u.field(), u.ambient(), gens);
}

auto vecchoose::subspace_intersect(const Subspace & u, const Subspace & v) -> Subspace
{
    check_field(u.field(), v.field());
    check_length(u.ambient(), v.ambient());
    size_t t = u.ambient();
    // Zassenhaus: rows (u | u) and (v | 0); rows with vanishing left half
    // span the intersection in their right half.
    vector<vector<Scalar>> rows;
    for (auto & b : u.basis()) {
        vector<Scalar> row = b.entries();
        row.insert(row.end(), b.entries().begin(), b.entries().end());
        rows.push_back(std::move(row));
    }
    for (auto & b : v.basis()) {
        vector<Scalar> row = b.entries();
        for (size_t i = 0 ; i < t ; ++i)
            row.push_back(Scalar::from_int(u.field(), 0));
        rows.push_back(std::move(row));
    }
    auto pivots = eliminate(rows, 2 * t);
    vector<Vector> gens;
    for (size_t i = 0 ; i < pivots.size() ; ++i)
        if (pivots[i] >= t)
            gens.emplace_back(u.field(), vector<Scalar>(rows[i].begin() + t, rows[i].end()));
    return Subspace::span(u.field(), t, gens);
}

auto vecchoose::orthogonal_complement(const Subspace & u) -> Subspace
{
    Matrix m = Matrix::from_rows(u.field(), u.ambient(), u.basis());
    auto k = m.kernel();
    return Subspace::span(u.field(), u.ambient(), k);
}

auto vecchoose::restrict_orthogonal(const Subspace & u, const Vector & x) -> Subspace
{
    check_length(u.ambient(), x.size());
    const auto & basis = u.basis();
    vector<Scalar> products;
    products.reserve(basis.size());
    size_t pivot = basis.size();
    for (size_t i = 0 ; i < basis.size() ; ++i) {
        products.push_back(dot(basis[i], x));
        if (pivot == basis.size() && ! products.back().is_zero())
            pivot = i;
    }
    if (pivot == basis.size())
        return u;
    vector<Vector> gens;
    Scalar inv = products[pivot].inv();
    for (size_t i = 0 ; i < basis.size() ; ++i)
        if (i != pivot)
            gens.push_back(basis[i] - basis[pivot] * (products[i] * inv));
    return Subspace::span(u.field(), u.ambient(), gens);
}

auto vecchoose::solve_combination(span<const Vector> vectors, const Vector & target) -> optional<vector<Scalar>>
{
    const Field & field = target.field();
    size_t t = target.size(), r = vectors.size();
    Matrix m(field, t, r + 1);
    for (size_t c = 0 ; c < r ; ++c) {
        check_field(field, vectors[c].field());
        check_length(t, vectors[c].size());
        for (size_t i = 0 ; i < t ; ++i)
            m(i, c) = vectors[c][i];
    }
    for (size_t i = 0 ; i < t ; ++i)
        m(i, r) = target[i];
    for (auto & k : m.kernel())
        if (! k[r].is_zero()) {
            Scalar scale = -k[r].inv();
            vector<Scalar> result;
            for (size_t c = 0 ; c < r ; ++c)
                result.push_back(k[c] * scale);
            return result;
        }
    return std::nullopt;
}

auto vecchoose::projective_coefficients(const Field & field, size_t d) -> vector<vector<Scalar>>
{
    uint32_t p = field.order();
    vector<vector<Scalar>> result;
    Scalar zero = Scalar::from_int(field, 0), one = Scalar::from_int(field, 1);
    for (size_t lead = 0 ; lead < d ; ++lead) {
        size_t tail = d - lead - 1;
        vector<uint32_t> counter(tail, 0);
        while (true) {
            vector<Scalar> c(d, zero);
            c[lead] = one;
            for (size_t i = 0 ; i < tail ; ++i)
                c[lead + 1 + i] = Scalar::from_int(field, counter[i]);
            result.push_back(std::move(c));
            size_t pos = 0;
            while (pos < tail && ++counter[pos] == p)
                counter[pos++] = 0;
            if (pos == tail)
                break;
        }
    }
    return result;
}

auto vecchoose::projective_points(const Subspace & u) -> vector<Vector>
{
    if (u.field().is_rationals())
        throw InfiniteField("projective points of a rational subspace");
    vector<Vector> result;
    for (auto & c : projective_coefficients(u.field(), u.dim())) {
        Vector v(u.field(), u.ambient());
        for (size_t i = 0 ; i < c.size() ; ++i)
            if (! c[i].is_zero())
                v = v + u.basis()[i] * c[i];
        result.push_back(std::move(v));
    }
    return result;
}

auto vecchoose::find_isotropic_combination(const array<Vector, 3> & w, const array<Vector, 3> & z) -> array<Scalar, 3>
{
    const Field & field = w[0].field();
    if (field.is_rationals())
        throw InfiniteField("isotropic search needs a finite field");
    size_t t = w[0].size();
    for (size_t i = 0 ; i < 3 ; ++i) {
        check_field(field, w[i].field());
        check_field(field, z[i].field());
        check_length(t, w[i].size());
        check_length(t, z[i].size());
    }
    // the form is a ternary quadratic: precompute its Gram entries
    array<array<Scalar, 3>, 3> gram{ { { Scalar(field), Scalar(field), Scalar(field) },
        { Scalar(field), Scalar(field), Scalar(field) }, { Scalar(field), Scalar(field), Scalar(field) } } };
    for (size_t i = 0 ; i < 3 ; ++i)
        for (size_t j = 0 ; j < 3 ; ++j)
            gram[i][j] = dot(w[i], z[j]);
    for (auto & c : projective_coefficients(field, 3)) {
        Scalar value = Scalar::from_int(field, 0);
        for (size_t i = 0 ; i < 3 ; ++i)
            for (size_t j = 0 ; j < 3 ; ++j)
                if (! c[i].is_zero() && ! c[j].is_zero())
                    value += c[i] * c[j] * gram[i][j];
        if (value.is_zero())
            return { c[0], c[1], c[2] };
    }
    throw InternalError("no isotropic combination found; contradicts Chevalley-Warning");
}

auto vecchoose::random_vector(const Field & field, size_t ambient, std::mt19937_64 & rng) -> Vector
{
    Vector v(field, ambient);
    if (field.is_prime()) {
        std::uniform_int_distribution<uint32_t> dist(0, field.order() - 1);
        for (size_t i = 0 ; i < ambient ; ++i)
            v[i] = Scalar::from_int(field, dist(rng));
    }
    else {
        std::uniform_int_distribution<int> dist(-3, 3);
        for (size_t i = 0 ; i < ambient ; ++i)
            v[i] = Scalar::from_int(field, dist(rng));
    }
    return v;
}

auto vecchoose::random_subspace(const Field & field, size_t ambient, size_t d, std::mt19937_64 & rng) -> Subspace
{
    if (d > ambient)
        throw InvalidParameter("dimension " + std::to_string(d) + " exceeds ambient " + std::to_string(ambient));
    vector<Vector> rows;
    Subspace current(field, ambient);
    while (rows.size() < d) {
        Vector v = random_vector(field, ambient, rng);
        if (current.contains(v))
            continue;
        rows.push_back(v);
        current = Subspace::span(field, ambient, rows);
    }
    return current;
}

auto vecchoose::random_subspace(const Field & field, size_t ambient, size_t d, std::uint64_t seed) -> Subspace
{
    std::mt19937_64 rng(seed);
    return random_subspace(field, ambient, d, rng);
}
