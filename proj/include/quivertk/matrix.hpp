#pragma once

#include <cstddef>
#include <vector>

#include "quivertk/field.hpp"

namespace quivertk {

  // Dense row-major matrix with exact entries.  Field operations are supplied
  // by the caller; the matrix itself does not know its field.
  class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::vector<std::vector<Rational>> const& rows);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    bool empty() const noexcept {
      return _rows == 0 || _cols == 0;
    }

    Rational& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    Rational const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

    Matrix transpose() const;
    Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
    void set_block(std::size_t row0, std::size_t col0, Matrix const& b);

    bool is_zero() const;

    friend bool operator==(Matrix const&, Matrix const&) = default;

   private:
    std::size_t           _rows = 0;
    std::size_t           _cols = 0;
    std::vector<Rational> _data;
  };

  namespace linalg {

    Matrix normalize(Field const& f, Matrix m);
    Matrix multiply(Field const& f, Matrix const& a, Matrix const& b);
    Matrix add(Field const& f, Matrix const& a, Matrix const& b);
    Matrix subtract(Field const& f, Matrix const& a, Matrix const& b);
    Matrix scale(Field const& f, Rational const& c, Matrix const& a);
    Rational trace(Field const& f, Matrix const& a);

    // Reduced row echelon form; pivots are chosen at the lowest row index in
    // the lowest column index available.
    struct Echelon {
      Matrix                   reduced;
      std::vector<std::size_t> pivot_columns;
    };
    Echelon rref(Field const& f, Matrix m);

    std::size_t rank(Field const& f, Matrix const& m);

    // Columns form a basis of {x : m x = 0}.
    Matrix nullspace(Field const& f, Matrix const& m);

    // Columns of m at the pivot columns of its echelon form: a basis of the
    // column space made of original columns.
    Matrix column_space(Field const& f, Matrix const& m);

    // Throws ValidationError if m is singular or not square.
    Matrix inverse(Field const& f, Matrix const& m);

    // [a | b]
    Matrix hconcat(Matrix const& a, Matrix const& b);
    // [a ; b]
    Matrix vconcat(Matrix const& a, Matrix const& b);

  }  // namespace linalg

}  // namespace quivertk
