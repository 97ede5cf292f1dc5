#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "prmkit/gf.hpp"

namespace prmkit {

/// Dense row-major matrix over a finite field.
class Matrix {
  public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t cols, const std::vector<std::vector<Elem>>& rows);

    static Matrix identity(FieldPtr field, std::size_t n);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    const std::vector<Elem>& data() const { return data_; }

    void append_row(std::span<const Elem> r);
    Matrix transpose() const;
    Matrix multiply(const Matrix& rhs) const;
    Matrix columns(std::span<const std::size_t> idx) const;
    bool is_zero() const;

    bool operator==(const Matrix& other) const;

  private:
    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

struct RrefResult {
    Matrix reduced;                   // zero rows removed
    std::vector<std::size_t> pivots;  // one per row of `reduced`
    std::size_t rank = 0;
};

/// Reduced row echelon form: leftmost pivot, first nonzero row below as the pivot row.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of the right null space, as rows: m * kernel(m)^T = 0.
Matrix kernel(const Matrix& m);
bool row_space_equal(const Matrix& a, const Matrix& b);
bool in_row_space(const Matrix& m, std::span<const Elem> v);
/// True iff every row of `a` lies in the row space of `b`.
bool row_space_contains(const Matrix& b, const Matrix& a);
Matrix row_space_intersection(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
/// Some x with x * m = target, or nullopt when target is outside the row space.
std::optional<std::vector<Elem>> solve_left(const Matrix& m, std::span<const Elem> target);

/// Element-wise helpers over a field.
std::vector<Elem> add_vectors(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
std::vector<Elem> scale_vector(const Field& f, Elem c, std::span<const Elem> v);
Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
/// Evaluates coefficients * m (row combination).
std::vector<Elem> combine_rows(const Matrix& m, std::span<const Elem> coefficients);

}  // namespace prmkit
