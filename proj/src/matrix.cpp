#include "quivertk/matrix.hpp"

#include "quivertk/errors.hpp"

namespace quivertk {

  Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  Matrix Matrix::from_rows(std::vector<std::vector<Rational>> const& rows) {
    if (rows.empty()) {
      return Matrix();
    }
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols()) {
        throw ValidationError("ragged matrix rows");
      }
      for (std::size_t j = 0; j < m.cols(); ++j) {
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  Matrix Matrix::transpose() const {
    Matrix t(_cols, _rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        t(j, i) = (*this)(i, j);
      }
    }
    return t;
  }

  Matrix Matrix::block(std::size_t row0,
                       std::size_t col0,
                       std::size_t nrows,
                       std::size_t ncols) const {
    if (row0 + nrows > _rows || col0 + ncols > _cols) {
      throw ValidationError("matrix block out of range");
    }
    Matrix b(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i) {
      for (std::size_t j = 0; j < ncols; ++j) {
        b(i, j) = (*this)(row0 + i, col0 + j);
      }
    }
    return b;
  }

  void Matrix::set_block(std::size_t row0, std::size_t col0, Matrix const& b) {
    if (row0 + b.rows() > _rows || col0 + b.cols() > _cols) {
      throw ValidationError("matrix block out of range");
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        (*this)(row0 + i, col0 + j) = b(i, j);
      }
    }
  }

  bool Matrix::is_zero() const {
    for (auto const& x : _data) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

  namespace linalg {

    Matrix normalize(Field const& f, Matrix m) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          m(i, j) = f.normalize(m(i, j));
        }
      }
      return m;
    }

    Matrix multiply(Field const& f, Matrix const& a, Matrix const& b) {
      if (a.cols() != b.rows()) {
        throw ValidationError("matrix product shape mismatch: " + std::to_string(a.rows()) + "x"
                              + std::to_string(a.cols()) + " * " + std::to_string(b.rows())
                              + "x" + std::to_string(b.cols()));
      }
      Matrix c(a.rows(), b.cols());
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
          if (a(i, k) == 0) {
            continue;
          }
          for (std::size_t j = 0; j < b.cols(); ++j) {
            if (b(k, j) != 0) {
              c(i, j) += a(i, k) * b(k, j);
            }
          }
        }
      }
      return normalize(f, std::move(c));
    }

    Matrix add(Field const& f, Matrix const& a, Matrix const& b) {
      if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ValidationError("matrix sum shape mismatch");
      }
      Matrix c(a.rows(), a.cols());
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          c(i, j) = f.add(a(i, j), b(i, j));
        }
      }
      return c;
    }

    Matrix subtract(Field const& f, Matrix const& a, Matrix const& b) {
      return add(f, a, scale(f, Rational(-1), b));
    }

    Matrix scale(Field const& f, Rational const& s, Matrix const& a) {
      Matrix c(a.rows(), a.cols());
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
          c(i, j) = f.mul(s, a(i, j));
        }
      }
      return c;
    }

    Rational trace(Field const& f, Matrix const& a) {
      if (a.rows() != a.cols()) {
        throw ValidationError("trace of a non-square matrix");
      }
      Rational t = 0;
      for (std::size_t i = 0; i < a.rows(); ++i) {
        t += a(i, i);
      }
      return f.normalize(t);
    }

    Echelon rref(Field const& f, Matrix m) {
      m = normalize(f, std::move(m));
      Echelon     result;
      std::size_t row = 0;
      for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col) == 0) {
          ++pivot;
        }
        if (pivot == m.rows()) {
          continue;
        }
        if (pivot != row) {
          for (std::size_t j = 0; j < m.cols(); ++j) {
            std::swap(m(pivot, j), m(row, j));
          }
        }
        Rational inv = f.inv(m(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) {
          m(row, j) = f.mul(m(row, j), inv);
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
          if (i == row || m(i, col) == 0) {
            continue;
          }
          Rational factor = m(i, col);
          for (std::size_t j = col; j < m.cols(); ++j) {
            if (m(row, j) != 0) {
              m(i, j) = f.sub(m(i, j), factor * m(row, j));
            }
          }
        }
        result.pivot_columns.push_back(col);
        ++row;
      }
      result.reduced = std::move(m);
      return result;
    }

    std::size_t rank(Field const& f, Matrix const& m) {
      return rref(f, m).pivot_columns.size();
    }

    Matrix nullspace(Field const& f, Matrix const& m) {
      auto                     e = rref(f, m);
      std::vector<bool>        is_pivot(m.cols(), false);
      for (auto c : e.pivot_columns) {
        is_pivot[c] = true;
      }
      std::vector<std::size_t> free;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!is_pivot[c]) {
          free.push_back(c);
        }
      }
      Matrix basis(m.cols(), free.size());
      for (std::size_t k = 0; k < free.size(); ++k) {
        basis(free[k], k) = 1;
        for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) {
          basis(e.pivot_columns[r], k) = f.neg(e.reduced(r, free[k]));
        }
      }
      return basis;
    }

    Matrix column_space(Field const& f, Matrix const& m) {
      auto   e = rref(f, m);
      Matrix basis(m.rows(), e.pivot_columns.size());
      for (std::size_t k = 0; k < e.pivot_columns.size(); ++k) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
          basis(i, k) = f.normalize(m(i, e.pivot_columns[k]));
        }
      }
      return basis;
    }

    Matrix inverse(Field const& f, Matrix const& m) {
      if (m.rows() != m.cols()) {
        throw ValidationError("inverse of a non-square matrix");
      }
      std::size_t n = m.rows();
      auto        e = rref(f, hconcat(m, Matrix::identity(n)));
      if (e.pivot_columns.size() < n || (n > 0 && e.pivot_columns[n - 1] != n - 1)) {
        throw ValidationError("matrix is singular");
      }
      return e.reduced.block(0, n, n, n);
    }

    Matrix hconcat(Matrix const& a, Matrix const& b) {
      if (a.rows() != b.rows()) {
        throw ValidationError("hconcat row mismatch");
      }
      Matrix c(a.rows(), a.cols() + b.cols());
      c.set_block(0, 0, a);
      c.set_block(0, a.cols(), b);
      return c;
    }

    Matrix vconcat(Matrix const& a, Matrix const& b) {
      if (a.cols() != b.cols()) {
        throw ValidationError("vconcat column mismatch");
      }
      Matrix c(a.rows() + b.rows(), a.cols());
      c.set_block(0, 0, a);
      c.set_block(a.rows(), 0, b);
      return c;
    }

  }  // namespace linalg

}  // namespace quivertk
