#pragma once

#include <vecchoose/field.hh>

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace vecchoose
{
    /// A vector of F^t.
    class Vector
    {
        private:
            Field _field;
            std::vector<Scalar> _entries;

        public:
            Vector(Field field, std::size_t length);
            Vector(Field field, std::vector<Scalar> entries);

            static auto from_ints(Field field, const std::vector<std::int64_t> & values) -> Vector;

            /// The standard basis vector e_{index+1} (index is 0-based).
            static auto unit(Field field, std::size_t length, std::size_t index) -> Vector;

            auto field() const -> const Field & { return _field; }
            auto size() const -> std::size_t { return _entries.size(); }
            auto operator[] (std::size_t i) const -> const Scalar & { return _entries[i]; }
            auto operator[] (std::size_t i) -> Scalar & { return _entries[i]; }
            auto entries() const -> const std::vector<Scalar> & { return _entries; }

            auto is_zero() const -> bool;

            auto operator+ (const Vector & other) const -> Vector;
            auto operator- (const Vector & other) const -> Vector;
            auto operator* (const Scalar & factor) const -> Vector;
            auto operator== (const Vector & other) const -> bool;

            /// Space-separated scalars.
            auto to_string() const -> std::string;
    };

    /// <x, y> = sum x_i y_i.
    auto dot(const Vector & x, const Vector & y) -> Scalar;

    /// Whether one of the two nonzero vectors is a multiple of the other.
    auto proportional(const Vector & x, const Vector & y) -> bool;

    /// Concatenation x_1 | x_2 | ... used for tensor-style block layouts.
    auto concat(std::span<const Vector> parts) -> Vector;

    /// e_i (x) b laid out as k blocks of length |b|, block i holding b.
    auto tensor_unit(std::size_t k, std::size_t block, const Vector & b) -> Vector;

    /// Zero-pad (or shift) a vector into a longer ambient space.
    auto embed(const Vector & x, std::size_t ambient, std::size_t offset = 0) -> Vector;

    class Matrix
    {
        private:
            Field _field;
            std::size_t _rows, _cols;
            std::vector<Scalar> _data;

        public:
            Matrix(Field field, std::size_t rows, std::size_t cols);

            static auto from_rows(Field field, std::size_t cols, std::span<const Vector> rows) -> Matrix;
            static auto identity(Field field, std::size_t n) -> Matrix;

            auto field() const -> const Field & { return _field; }
            auto rows() const -> std::size_t { return _rows; }
            auto cols() const -> std::size_t { return _cols; }

            auto operator() (std::size_t r, std::size_t c) const -> const Scalar & { return _data[r * _cols + c]; }
            auto operator() (std::size_t r, std::size_t c) -> Scalar & { return _data[r * _cols + c]; }

            auto row(std::size_t r) const -> Vector;
            auto column(std::size_t c) const -> Vector;

            auto operator* (const Matrix & other) const -> Matrix;
            auto operator* (const Vector & x) const -> Vector;
            auto operator+ (const Matrix & other) const -> Matrix;
            auto operator* (const Scalar & factor) const -> Matrix;
            auto transpose() const -> Matrix;

            auto rank() const -> std::size_t;
            auto determinant() const -> Scalar;
            auto inverse() const -> Matrix;

            /// Basis of { x : M x = 0 } in reduced form.
            auto kernel() const -> std::vector<Vector>;
    };

    /// A linear subspace of F^t stored by its reduced row-echelon basis, so
    /// that equal subspaces compare equal structurally.
    class Subspace
    {
        private:
            Field _field;
            std::size_t _ambient;
            std::vector<Vector> _basis;
            std::vector<std::size_t> _pivots;

        public:
            /// The zero subspace of F^ambient.
            Subspace(Field field, std::size_t ambient);

            /// Canonical span of the given vectors, all of length ambient.
            static auto span(Field field, std::size_t ambient, std::span<const Vector> vectors) -> Subspace;
            static auto span(std::span<const Vector> vectors) -> Subspace;
            static auto full(Field field, std::size_t ambient) -> Subspace;

            /// span(e_i : i in indices), 0-based.
            static auto coordinate(Field field, std::size_t ambient, const std::vector<std::size_t> & indices) -> Subspace;

            auto field() const -> const Field & { return _field; }
            auto ambient() const -> std::size_t { return _ambient; }
            auto dim() const -> std::size_t { return _basis.size(); }
            auto basis() const -> const std::vector<Vector> & { return _basis; }
            auto pivots() const -> const std::vector<std::size_t> & { return _pivots; }

            auto contains(const Vector & v) const -> bool;

            /// Coefficients of v in the canonical basis; nullopt if v is not a member.
            auto coordinates(const Vector & v) const -> std::optional<std::vector<Scalar>>;

            /// The first canonical nonzero member (the first basis row).
            auto first_nonzero() const -> Vector;

            /// span(basis rows [0, d)).
            auto truncated(std::size_t d) const -> Subspace;

            auto operator== (const Subspace & other) const -> bool;

            auto to_string() const -> std::string;
    };

    auto subspace_sum(const Subspace & u, const Subspace & v) -> Subspace;
    auto subspace_intersect(const Subspace & u, const Subspace & v) -> Subspace;
    auto orthogonal_complement(const Subspace & u) -> Subspace;

    /// u intersected with x^perp.
    auto restrict_orthogonal(const Subspace & u, const Vector & x) -> Subspace;

    /// Coefficients c with sum c_i vectors_i = target, if any exist.
    auto solve_combination(std::span<const Vector> vectors, const Vector & target) -> std::optional<std::vector<Scalar>>;

    /// Reduced row echelon form of a list of equal-length vectors; zero rows dropped.
    auto rref(Field field, std::size_t ambient, std::span<const Vector> vectors) -> std::vector<Vector>;

    /// Projective coefficient tuples of length d in canonical order: the
    /// leading nonzero coefficient is 1 and sits as early as possible; the
    /// tail is counted with its first coordinate varying fastest.
    auto projective_coefficients(const Field & field, std::size_t d) -> std::vector<std::vector<Scalar>>;

    /// One canonical representative per 1-dimensional subspace of u, in the
    /// order of projective_coefficients applied to the canonical basis.
    auto projective_points(const Subspace & u) -> std::vector<Vector>;

    /// Nonzero (a1, a2, a3) with <sum a_i w_i, sum a_i z_i> = 0, the first
    /// such in canonical projective order.
    auto find_isotropic_combination(const std::array<Vector, 3> & w, const std::array<Vector, 3> & z) -> std::array<Scalar, 3>;

    /// Uniform d-dimensional subspace for prime fields; small-integer rows over Q.
    auto random_subspace(const Field & field, std::size_t ambient, std::size_t d, std::mt19937_64 & rng) -> Subspace;
    auto random_subspace(const Field & field, std::size_t ambient, std::size_t d, std::uint64_t seed) -> Subspace;
    auto random_vector(const Field & field, std::size_t ambient, std::mt19937_64 & rng) -> Vector;
}
