#ifndef MBT_MATRIX_HPP_
#define MBT_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "mbt/rational.hpp"

namespace mbt {

  //! Dense row-major matrix of rationals.
  class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _entries(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, Vector entries);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) {
      return Matrix(rows, cols);
    }
    //! Matrix whose rows are the given vectors (all of length cols).
    static Matrix from_rows(std::vector<Vector> const& rows, std::size_t cols);

    [[nodiscard]] std::size_t rows() const noexcept { return _rows; }
    [[nodiscard]] std::size_t cols() const noexcept { return _cols; }
    [[nodiscard]] bool is_square() const noexcept { return _rows == _cols; }
    [[nodiscard]] Vector const& entries() const noexcept { return _entries; }

    Rational& operator()(std::size_t i, std::size_t j) {
      return _entries[i * _cols + j];
    }
    Rational const& operator()(std::size_t i, std::size_t j) const {
      return _entries[i * _cols + j];
    }

    [[nodiscard]] Vector row(std::size_t i) const;
    [[nodiscard]] Vector column(std::size_t j) const;
    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] Rational trace() const;
    [[nodiscard]] bool is_zero() const;

    Matrix& operator+=(Matrix const& other);
    Matrix& operator-=(Matrix const& other);
    Matrix& operator*=(Rational const& scalar);

    friend Matrix operator+(Matrix a, Matrix const& b) { return a += b; }
    friend Matrix operator-(Matrix a, Matrix const& b) { return a -= b; }
    friend Matrix operator*(Matrix a, Rational const& s) { return a *= s; }
    friend Matrix operator*(Matrix const& a, Matrix const& b);
    friend Vector operator*(Matrix const& a, Vector const& v);

    friend bool operator==(Matrix const&, Matrix const&) = default;

   private:
    std::size_t _rows = 0;
    std::size_t _cols = 0;
    Vector      _entries;
  };

  //! Reduced row echelon form together with its pivot columns.
  struct Echelon {
    Matrix                   reduced;
    std::vector<std::size_t> pivots;
  };

  [[nodiscard]] Echelon rref(Matrix m);
  [[nodiscard]] std::size_t rank(Matrix const& m);

  //! Canonical kernel basis: one vector per free column, in ascending
  //! order, with a 1 at its free column and 0 at the other free columns.
  [[nodiscard]] std::vector<Vector> kernel_basis(Matrix const& m);

  //! Kronecker product, left factor major.
  [[nodiscard]] Matrix kron(Matrix const& a, Matrix const& b);

  //! Throws std::domain_error when singular or non-square.
  [[nodiscard]] Matrix inverse(Matrix const& m);

  [[nodiscard]] Matrix matrix_power(Matrix const& m, std::size_t k);

  //! Sum of entrywise products, i.e. trace(a^T b).
  [[nodiscard]] Rational frobenius(Matrix const& a, Matrix const& b);

  //! trace(m^i) for i = 1, ..., k by repeated multiplication.
  [[nodiscard]] Vector power_traces(Matrix const& m, std::size_t k);

  //! Block-diagonal matrix.
  [[nodiscard]] Matrix block_diagonal(std::vector<Matrix> const& blocks);

}  // namespace mbt

#endif  // MBT_MATRIX_HPP_
