// SPDX-License-Identifier: Apache-2.0
#include "rhframes/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <string>

#include "rhframes/errors.hpp"
#include "rhframes/kernels.hpp"

namespace rhf {

std::string_view to_string(Field f) noexcept { return f == Field::Real ? "R" : "C"; }

namespace {

void check_entry(Field field, Complex v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw InvalidInputError("matrix entry is not finite");
  if (field == Field::Real && v.imag() != 0.0)
    throw InvalidInputError("real matrix entry has nonzero imaginary part");
}

std::string shape(const Mat& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

using EigenR = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using EigenC = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EigenC to_eigen(const Mat& a) {
  EigenC m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

EigenR to_eigen_real(const Mat& a) {
  EigenR m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).real();
  return m;
}

template <class Derived>
Mat from_eigen(const Eigen::MatrixBase<Derived>& m, Field field) {
  std::vector<Complex> data(static_cast<std::size_t>(m.rows() * m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      data[static_cast<std::size_t>(i * m.cols() + j)] = Complex(m(i, j));
  return Mat(field, static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()),
             std::move(data));
}

// Jacobi for small problems (most accurate), divide-and-conquer above that.
constexpr Eigen::Index kJacobiLimit = 48;

template <class EM>
struct Decomposed {
  EM u;
  Eigen::VectorXd s;
  EM v;
};

template <class EM>
Decomposed<EM> decompose(const EM& m, unsigned options) {
  const bool small = std::min(m.rows(), m.cols()) <= kJacobiLimit;
  Decomposed<EM> out;
  if (small) {
    Eigen::JacobiSVD<EM> solver(m, options);
    if (solver.info() != Eigen::Success) throw NumericError("SVD did not converge");
    out.s = solver.singularValues();
    if (options & (Eigen::ComputeThinU | Eigen::ComputeFullU)) out.u = solver.matrixU();
    if (options & (Eigen::ComputeThinV | Eigen::ComputeFullV)) out.v = solver.matrixV();
  } else {
    Eigen::BDCSVD<EM> solver(m, options);
    if (solver.info() != Eigen::Success) throw NumericError("SVD did not converge");
    out.s = solver.singularValues();
    if (options & (Eigen::ComputeThinU | Eigen::ComputeFullU)) out.u = solver.matrixU();
    if (options & (Eigen::ComputeThinV | Eigen::ComputeFullV)) out.v = solver.matrixV();
  }
  if (!out.s.allFinite()) throw NumericError("SVD produced non-finite values");
  return out;
}

// Eigen's solvers want column-major storage for U/V.
using ColR = Eigen::MatrixXd;
using ColC = Eigen::MatrixXcd;

}  // namespace

Mat::Mat(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

Mat::Mat(Field field, std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw ShapeError("entry count " + std::to_string(data_.size()) + " does not match " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  for (const Complex& v : data_) check_entry(field_, v);
}

Mat Mat::identity(std::size_t n, Field field) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1.0;
  return m;
}

Mat Mat::zeros(std::size_t rows, std::size_t cols, Field field) { return Mat(field, rows, cols); }

Mat Mat::real(std::size_t rows, std::size_t cols, std::initializer_list<double> rowmajor) {
  std::vector<Complex> data(rowmajor.begin(), rowmajor.end());
  return Mat(Field::Real, rows, cols, std::move(data));
}

Mat Mat::complex(std::size_t rows, std::size_t cols, std::initializer_list<Complex> rowmajor) {
  return Mat(Field::Complex, rows, cols, std::vector<Complex>(rowmajor));
}

Mat Mat::diag(std::span<const Complex> d, Field field) {
  Mat m(field, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
  return m;
}

void Mat::set(std::size_t i, std::size_t j, Complex v) {
  if (i >= rows_ || j >= cols_)
    throw ShapeError("set: index (" + std::to_string(i) + "," + std::to_string(j) +
                     ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  check_entry(field_, v);
  data_[i * cols_ + j] = v;
}

Mat Mat::as_field(Field f) const {
  if (f == field_) return *this;
  return Mat(f, rows_, cols_, data_);
}

Mat matmul(const Mat& a, const Mat& b) { return kernels::matmul(a, b, kernels::Exec::Parallel); }

Mat adjoint(const Mat& a) {
  Mat out(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(j, i, std::conj(a(i, j)));
  return out;
}

Mat kron(const Mat& a, const Mat& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  std::vector<Complex> data(rows * cols);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex s = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          data[(i * b.rows() + k) * cols + j * b.cols() + l] = s * b(k, l);
    }
  return Mat(join(a.field(), b.field()), rows, cols, std::move(data));
}

Mat kron(std::initializer_list<Mat> factors) {
  if (factors.size() == 0) return Mat::identity(1);
  auto it = factors.begin();
  Mat out = *it;
  for (++it; it != factors.end(); ++it) out = kron(out, *it);
  return out;
}

namespace {
template <class Op>
Mat entrywise(const Mat& a, const Mat& b, Op op, const char* name) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError(std::string(name) + ": " + shape(a) + " vs " + shape(b));
  std::vector<Complex> data(a.rows() * a.cols());
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < data.size(); ++k) data[k] = op(ea[k], eb[k]);
  return Mat(join(a.field(), b.field()), a.rows(), a.cols(), std::move(data));
}
}  // namespace

Mat add(const Mat& a, const Mat& b) { return entrywise(a, b, std::plus<>{}, "add"); }
Mat sub(const Mat& a, const Mat& b) { return entrywise(a, b, std::minus<>{}, "sub"); }

Mat scale(Complex z, const Mat& a) {
  const Field f = z.imag() == 0.0 ? a.field() : Field::Complex;
  std::vector<Complex> data(a.entries().begin(), a.entries().end());
  for (Complex& v : data) v *= z;
  return Mat(f, a.rows(), a.cols(), std::move(data));
}

Mat vstack(std::span<const Mat> blocks) {
  if (blocks.empty()) return {};
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  Field f = Field::Real;
  for (const Mat& m : blocks) {
    if (m.cols() != cols) throw ShapeError("vstack: column counts differ");
    rows += m.rows();
    f = join(f, m.field());
  }
  std::vector<Complex> data;
  data.reserve(rows * cols);
  for (const Mat& m : blocks) data.insert(data.end(), m.entries().begin(), m.entries().end());
  return Mat(f, rows, cols, std::move(data));
}

Mat hstack(std::span<const Mat> blocks) {
  if (blocks.empty()) return {};
  const std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  Field f = Field::Real;
  for (const Mat& m : blocks) {
    if (m.rows() != rows) throw ShapeError("hstack: row counts differ");
    cols += m.cols();
    f = join(f, m.field());
  }
  Mat out(f, rows, cols);
  std::size_t offset = 0;
  for (const Mat& m : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, offset + j, m(i, j));
    offset += m.cols();
  }
  return out;
}

Mat vstack(std::initializer_list<Mat> blocks) {
  return vstack(std::span<const Mat>(blocks.begin(), blocks.size()));
}
Mat hstack(std::initializer_list<Mat> blocks) {
  return hstack(std::span<const Mat>(blocks.begin(), blocks.size()));
}

Mat block_diag(const Mat& a, const Mat& b) {
  Mat out(join(a.field(), b.field()), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, a.cols() + j, b(i, j));
  return out;
}

Mat submatrix(const Mat& a, std::size_t row0, std::size_t col0, std::size_t rows,
              std::size_t cols) {
  if (row0 + rows > a.rows() || col0 + cols > a.cols())
    throw ShapeError("submatrix out of range for " + shape(a));
  Mat out(a.field(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.set(i, j, a(row0 + i, col0 + j));
  return out;
}

Complex trace(const Mat& a) {
  if (!a.is_square()) throw ShapeError("trace of non-square " + shape(a));
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double max_abs(const Mat& a) {
  double m = 0.0;
  for (const Complex& v : a.entries()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const Mat& a, const Mat& b) { return max_abs(sub(a, b)); }

double unitarity_residual(const Mat& a) {
  if (!a.is_square()) throw ShapeError("unitarity of non-square " + shape(a));
  return max_abs_diff(matmul(adjoint(a), a), Mat::identity(a.rows()));
}

double skew_residual(const Mat& a) { return max_abs(add(adjoint(a), a)); }

Svd svd(const Mat& a) {
  const unsigned opts = Eigen::ComputeThinU | Eigen::ComputeThinV;
  if (a.rows() == 0 || a.cols() == 0)
    return {Mat(a.field(), a.rows(), 0), {}, Mat(a.field(), a.cols(), 0)};
  Svd out;
  Eigen::VectorXd s;
  if (a.field() == Field::Real) {
    auto d = decompose<ColR>(to_eigen_real(a), opts);
    out.u = from_eigen(d.u, Field::Real);
    out.v = from_eigen(d.v, Field::Real);
    s = d.s;
  } else {
    auto d = decompose<ColC>(to_eigen(a), opts);
    out.u = from_eigen(d.u, Field::Complex);
    out.v = from_eigen(d.v, Field::Complex);
    s = d.s;
  }
  out.s.assign(s.data(), s.data() + s.size());
  return out;
}

std::vector<double> singular_values(const Mat& a) {
  if (a.rows() == 0 || a.cols() == 0) return {};
  Eigen::VectorXd s;
  if (a.field() == Field::Real)
    s = decompose<ColR>(to_eigen_real(a), 0).s;
  else
    s = decompose<ColC>(to_eigen(a), 0).s;
  return {s.data(), s.data() + s.size()};
}

double op_norm(const Mat& a) {
  const auto s = singular_values(a);
  return s.empty() ? 0.0 : s.front();
}

Mat polar_unitary(const Mat& a) {
  if (!a.is_square()) throw ShapeError("polar_unitary of non-square " + shape(a));
  const Svd d = svd(a);
  if (d.s.empty() || !(d.s.back() > 1e-10 * d.s.front()))
    throw SingularInputError("polar_unitary: matrix is numerically singular");
  return matmul(d.u, adjoint(d.v));
}

Mat nullspace(const Mat& a, double tol) {
  if (!(tol > 0.0)) throw DomainError("nullspace: tolerance must be positive");
  const std::size_t n = a.cols();
  if (n == 0) return Mat(a.field(), 0, 0);
  if (a.rows() == 0 || max_abs(a) == 0.0) return Mat::identity(n, a.field());

  Eigen::VectorXd s;
  Mat v;
  if (a.field() == Field::Real) {
    auto d = decompose<ColR>(to_eigen_real(a), Eigen::ComputeFullV);
    s = d.s;
    v = from_eigen(d.v, Field::Real);
  } else {
    auto d = decompose<ColC>(to_eigen(a), Eigen::ComputeFullV);
    s = d.s;
    v = from_eigen(d.v, Field::Complex);
  }
  const double cutoff = tol * s(0);
  std::size_t first_null = static_cast<std::size_t>(s.size());
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(k) <= cutoff) {
      first_null = static_cast<std::size_t>(k);
      break;
    }
  return submatrix(v, 0, first_null, n, n - first_null);
}

Mat lstsq(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw ShapeError("lstsq: " + shape(a) + " vs " + shape(b));
  const Svd d = svd(a);
  const double cutoff = d.s.empty() ? 0.0 : 1e-12 * d.s.front();
  Mat ub = matmul(adjoint(d.u), b);  // k × nrhs
  Mat scaled(ub.field(), ub.rows(), ub.cols());
  for (std::size_t i = 0; i < ub.rows(); ++i) {
    const double inv = d.s[i] > cutoff ? 1.0 / d.s[i] : 0.0;
    for (std::size_t j = 0; j < ub.cols(); ++j) scaled.set(i, j, ub(i, j) * inv);
  }
  return matmul(d.v, scaled);
}

}  // namespace rhf
