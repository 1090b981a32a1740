// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace rhf {

using Complex = std::complex<double>;

enum class Field { Real, Complex };

// Real joined with anything is the other operand; Complex absorbs.
constexpr Field join(Field a, Field b) noexcept {
  return (a == Field::Complex || b == Field::Complex) ? Field::Complex : Field::Real;
}

std::string_view to_string(Field f) noexcept;

// Comparison tolerance used when a caller does not supply one.
inline constexpr double kDefaultTol = 1e-10;

/// Dense row-major matrix over C with a field tag.
///
/// A Real-tagged matrix keeps every imaginary part exactly zero; this is
/// checked whenever entries are supplied. Entries must be finite.
/// Zero-extent matrices are allowed (a null space may be empty).
class Mat {
 public:
  Mat() = default;
  Mat(Field field, std::size_t rows, std::size_t cols);
  Mat(Field field, std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static Mat identity(std::size_t n, Field field = Field::Real);
  static Mat zeros(std::size_t rows, std::size_t cols, Field field = Field::Real);
  static Mat real(std::size_t rows, std::size_t cols, std::initializer_list<double> rowmajor);
  static Mat complex(std::size_t rows, std::size_t cols, std::initializer_list<Complex> rowmajor);
  static Mat diag(std::span<const Complex> d, Field field);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  // Throws InvalidInputError when writing a nonzero imaginary part into a Real matrix.
  void set(std::size_t i, std::size_t j, Complex v);

  std::span<const Complex> entries() const noexcept { return data_; }

  // Re-tag. Promotion to Complex always succeeds; demotion requires zero imaginary parts.
  Mat as_field(Field f) const;

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  Field field_ = Field::Real;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

// Arithmetic. All functions are pure; shape mismatches throw ShapeError.
Mat matmul(const Mat& a, const Mat& b);
Mat adjoint(const Mat& a);
Mat kron(const Mat& a, const Mat& b);
Mat kron(std::initializer_list<Mat> factors);
Mat add(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);
Mat scale(Complex z, const Mat& a);

inline Mat operator*(const Mat& a, const Mat& b) { return matmul(a, b); }
inline Mat operator+(const Mat& a, const Mat& b) { return add(a, b); }
inline Mat operator-(const Mat& a, const Mat& b) { return sub(a, b); }
inline Mat operator-(const Mat& a) { return scale(-1.0, a); }
inline Mat operator*(Complex z, const Mat& a) { return scale(z, a); }
inline Mat operator*(double x, const Mat& a) { return scale(x, a); }

Mat vstack(std::span<const Mat> blocks);
Mat hstack(std::span<const Mat> blocks);
Mat vstack(std::initializer_list<Mat> blocks);
Mat hstack(std::initializer_list<Mat> blocks);
Mat block_diag(const Mat& a, const Mat& b);
Mat submatrix(const Mat& a, std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols);

Complex trace(const Mat& a);
// Largest entry modulus, ‖a‖_max. Zero for an empty matrix.
double max_abs(const Mat& a);
double max_abs_diff(const Mat& a, const Mat& b);
// ‖a*a − I‖_max.
double unitarity_residual(const Mat& a);
// ‖a* + a‖_max.
double skew_residual(const Mat& a);

struct Svd {
  Mat u;                  // rows × k, orthonormal columns
  std::vector<double> s;  // k = min(rows, cols), nonincreasing
  Mat v;                  // cols × k, orthonormal columns
};

// Thin SVD, a = U diag(s) V*. Real inputs produce real factors.
Svd svd(const Mat& a);
std::vector<double> singular_values(const Mat& a);
double op_norm(const Mat& a);

// Unitary polar factor U V* of a square invertible matrix.
// Throws SingularInputError when s_min <= 1e-10 · s_max.
Mat polar_unitary(const Mat& a);

// Orthonormal basis (as columns) of the numerical null space: right singular
// vectors whose singular value is <= tol · s_max, plus the cols − rows
// directions a wide matrix always has. May have zero columns.
Mat nullspace(const Mat& a, double tol);

// Minimum-norm least-squares solution of a·x ≈ b.
Mat lstsq(const Mat& a, const Mat& b);

}  // namespace rhf
