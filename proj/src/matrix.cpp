#include "mbt/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "mbt/error.hpp"

namespace mbt {

  Matrix::Matrix(std::size_t rows, std::size_t cols, Vector entries)
      : _rows(rows), _cols(cols), _entries(std::move(entries)) {
    if (_entries.size() != rows * cols) {
      throw InputError("matrix entry count does not match its shape");
    }
  }

  Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
      : _rows(rows.size()), _cols(rows.size() == 0 ? 0 : rows.begin()->size()) {
    _entries.reserve(_rows * _cols);
    for (auto const& r : rows) {
      if (r.size() != _cols) {
        throw InputError("ragged matrix literal");
      }
      _entries.insert(_entries.end(), r.begin(), r.end());
    }
  }

  Matrix Matrix::identity(std::size_t n) {
    Matrix id(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      id(i, i) = 1;
    }
    return id;
  }

  Matrix Matrix::from_rows(std::vector<Vector> const& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) {
        throw InputError("row length does not match column count");
      }
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  Vector Matrix::row(std::size_t i) const {
    return Vector(_entries.begin() + i * _cols,
                  _entries.begin() + (i + 1) * _cols);
  }

  Vector Matrix::column(std::size_t j) const {
    Vector v;
    v.reserve(_rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      v.push_back((*this)(i, j));
    }
    return v;
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

  Rational Matrix::trace() const {
    if (!is_square()) {
      throw InputError("trace of a non-square matrix");
    }
    Rational t;
    for (std::size_t i = 0; i < _rows; ++i) {
      t += (*this)(i, i);
    }
    return t;
  }

  bool Matrix::is_zero() const {
    return mbt::is_zero(_entries);
  }

  Matrix& Matrix::operator+=(Matrix const& other) {
    if (_rows != other._rows || _cols != other._cols) {
      throw InputError("matrix shape mismatch in addition");
    }
    for (std::size_t k = 0; k < _entries.size(); ++k) {
      _entries[k] += other._entries[k];
    }
    return *this;
  }

  Matrix& Matrix::operator-=(Matrix const& other) {
    if (_rows != other._rows || _cols != other._cols) {
      throw InputError("matrix shape mismatch in subtraction");
    }
    for (std::size_t k = 0; k < _entries.size(); ++k) {
      _entries[k] -= other._entries[k];
    }
    return *this;
  }

  Matrix& Matrix::operator*=(Rational const& scalar) {
    for (auto& x : _entries) {
      x *= scalar;
    }
    return *this;
  }

  Matrix operator*(Matrix const& a, Matrix const& b) {
    if (a._cols != b._rows) {
      throw InputError("matrix shape mismatch in product");
    }
    Matrix c(a._rows, b._cols);
    for (std::size_t i = 0; i < a._rows; ++i) {
      for (std::size_t k = 0; k < a._cols; ++k) {
        Rational const& x = a(i, k);
        if (x.is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j < b._cols; ++j) {
          if (!b(k, j).is_zero()) {
            c(i, j).add_product(x, b(k, j));
          }
        }
      }
    }
    return c;
  }

  Vector operator*(Matrix const& a, Vector const& v) {
    if (a._cols != v.size()) {
      throw InputError("matrix/vector shape mismatch");
    }
    Vector out(a._rows);
    for (std::size_t i = 0; i < a._rows; ++i) {
      for (std::size_t j = 0; j < a._cols; ++j) {
        if (!a(i, j).is_zero() && !v[j].is_zero()) {
          out[i].add_product(a(i, j), v[j]);
        }
      }
    }
    return out;
  }

  Echelon rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t              row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
      std::size_t p = row;
      while (p < m.rows() && m(p, col).is_zero()) {
        ++p;
      }
      if (p == m.rows()) {
        continue;
      }
      if (p != row) {
        for (std::size_t j = col; j < m.cols(); ++j) {
          std::swap(m(p, j), m(row, j));
        }
      }
      Rational inv = Rational(1) / m(row, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m(row, j) *= inv;
      }
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i == row || m(i, col).is_zero()) {
          continue;
        }
        Rational factor = m(i, col);
        for (std::size_t j = col; j < m.cols(); ++j) {
          if (!m(row, j).is_zero()) {
            m(i, j) -= factor * m(row, j);
          }
        }
      }
      pivots.push_back(col);
      ++row;
    }
    return {std::move(m), std::move(pivots)};
  }

  std::size_t rank(Matrix const& m) {
    return rref(m).pivots.size();
  }

  std::vector<Vector> kernel_basis(Matrix const& m) {
    Echelon                  e = rref(m);
    std::vector<bool>        is_pivot(m.cols(), false);
    for (auto p : e.pivots) {
      is_pivot[p] = true;
    }
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
      if (is_pivot[free]) {
        continue;
      }
      Vector v(m.cols());
      v[free] = 1;
      for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        v[e.pivots[r]] = -e.reduced(r, free);
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  Matrix kron(Matrix const& a, Matrix const& b) {
    Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a(i, j).is_zero()) {
          continue;
        }
        for (std::size_t k = 0; k < b.rows(); ++k) {
          for (std::size_t l = 0; l < b.cols(); ++l) {
            c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
          }
        }
      }
    }
    return c;
  }

  Matrix inverse(Matrix const& m) {
    if (!m.is_square()) {
      throw std::domain_error("inverse of a non-square matrix");
    }
    std::size_t n = m.rows();
    Matrix      aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        aug(i, j) = m(i, j);
      }
      aug(i, n + i) = 1;
    }
    Echelon e = rref(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) {
      throw std::domain_error("inverse of a singular matrix");
    }
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        inv(i, j) = e.reduced(i, n + j);
      }
    }
    return inv;
  }

  Matrix matrix_power(Matrix const& m, std::size_t k) {
    if (!m.is_square()) {
      throw InputError("power of a non-square matrix");
    }
    Matrix result = Matrix::identity(m.rows());
    for (std::size_t i = 0; i < k; ++i) {
      result = result * m;
    }
    return result;
  }

  Rational frobenius(Matrix const& a, Matrix const& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw InputError("matrix shape mismatch in inner product");
    }
    Rational s;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
      if (!a.entries()[k].is_zero() && !b.entries()[k].is_zero()) {
        s.add_product(a.entries()[k], b.entries()[k]);
      }
    }
    return s;
  }

  Vector power_traces(Matrix const& m, std::size_t k) {
    if (!m.is_square()) {
      throw InputError("power traces of a non-square matrix");
    }
    Vector traces;
    traces.reserve(k);
    Matrix p = m;
    for (std::size_t i = 1; i <= k; ++i) {
      if (i > 1) {
        p = p * m;
      }
      traces.push_back(p.trace());
    }
    return traces;
  }

  Matrix block_diagonal(std::vector<Matrix> const& blocks) {
    std::size_t rows = 0, cols = 0;
    for (auto const& b : blocks) {
      rows += b.rows();
      cols += b.cols();
    }
    Matrix out(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (auto const& b : blocks) {
      for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
          out(r0 + i, c0 + j) = b(i, j);
        }
      }
      r0 += b.rows();
      c0 += b.cols();
    }
    return out;
  }

}  // namespace mbt
