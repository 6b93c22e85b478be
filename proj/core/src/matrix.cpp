#include "rlie/matrix.hpp"

#include <sstream>
#include <utility>

#include "rlie/errors.hpp"

namespace rlie {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Elem{1};
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<Elem>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = (*this)(i, k);
      if (a.v == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Elem b = o(k, j);
        if (b.v != 0) out(i, j) = field_.add(out(i, j), field_.mul(a, b));
      }
    }
  return out;
}

Matrix Matrix::scaled(Elem c) const {
  Matrix out(*this);
  for (auto& x : out.data_) x = field_.mul(x, c);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::stacked(const Matrix& o) const {
  if (cols_ != o.cols_) throw DimensionMismatch("stacking matrices with different column counts");
  Matrix out(field_, rows_ + o.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(o.data_.begin(), o.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

std::vector<Elem> Matrix::apply(std::span<const Elem> v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  std::vector<Elem> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] = field_.add(out[i], field_.mul((*this)(i, j), v[j]));
  return out;
}

Matrix Matrix::pow(std::uint64_t k) const {
  if (rows_ != cols_) throw DimensionMismatch("power of a non-square matrix");
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

bool Matrix::is_zero() const {
  for (auto x : data_)
    if (x.v != 0) return false;
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
  Matrix m(*this);
  if (pivots) pivots->clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && m(piv, c).v == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(piv, j), m(r, j));
    const Elem inv = field_.inv(m(r, c));
    for (std::size_t j = c; j < cols_; ++j) m(r, j) = field_.mul(m(r, j), inv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const Elem f = m(i, c);
      if (f.v == 0) continue;
      for (std::size_t j = c; j < cols_; ++j)
        if (m(r, j).v != 0) m(i, j) = field_.sub(m(i, j), field_.mul(f, m(r, j)));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

std::size_t Matrix::rank() const {
  std::vector<std::size_t> piv;
  // eliminate on the shorter side
  if (rows_ > cols_) transposed().rref(&piv);
  else rref(&piv);
  return piv.size();
}

std::vector<std::vector<Elem>> Matrix::kernel() const {
  std::vector<std::size_t> piv;
  const Matrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Elem>> out;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(cols_);
    v[free] = Elem{1};
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = field_.neg(r(i, free));
    out.push_back(std::move(v));
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).v;
    os << ']';
  }
  os << ']';
  return os.str();
}

std::vector<Elem> charpoly(const Matrix& input) {
  if (input.rows() != input.cols()) throw DimensionMismatch("charpoly of a non-square matrix");
  const Field& F = input.field();
  const std::size_t n = input.rows();
  Matrix h(input);

  // similarity reduction to upper Hessenberg form
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1).v == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    const Elem inv = F.inv(h(m, m - 1));
    for (i = m + 1; i < n; ++i) {
      const Elem u = F.mul(h(i, m - 1), inv);
      if (u.v == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h(i, j) = F.sub(h(i, j), F.mul(u, h(m, j)));
      for (std::size_t j = 0; j < n; ++j) h(j, m) = F.add(h(j, m), F.mul(u, h(j, i)));
    }
  }

  // p_k = det(t I - H_k) for leading k x k blocks
  std::vector<std::vector<Elem>> p(n + 1);
  p[0] = {Elem{1}};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Elem> next(m + 1);
    const auto& prev = p[m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      next[k + 1] = F.add(next[k + 1], prev[k]);
      next[k] = F.sub(next[k], F.mul(h(m - 1, m - 1), prev[k]));
    }
    Elem prod{1};
    for (std::size_t i = m - 1; i >= 1; --i) {
      prod = F.mul(prod, h(i, i - 1));
      if (prod.v == 0) break;
      const Elem coef = F.mul(h(i - 1, m - 1), prod);
      if (coef.v != 0)
        for (std::size_t k = 0; k < p[i - 1].size(); ++k) next[k] = F.sub(next[k], F.mul(coef, p[i - 1][k]));
    }
    p[m] = std::move(next);
  }
  return p[n];
}

std::optional<std::vector<Elem>> solve_combination(const Field& field, const std::vector<std::vector<Elem>>& vectors,
                                                   std::span<const Elem> target) {
  const std::size_t dim = target.size();
  const std::size_t k = vectors.size();
  // columns: the vectors, then the target
  Matrix aug(field, dim, k + 1);
  for (std::size_t j = 0; j < k; ++j) {
    if (vectors[j].size() != dim) throw DimensionMismatch("vector length mismatch");
    for (std::size_t i = 0; i < dim; ++i) aug(i, j) = vectors[j][i];
  }
  for (std::size_t i = 0; i < dim; ++i) aug(i, k) = target[i];
  std::vector<std::size_t> piv;
  const Matrix r = aug.rref(&piv);
  if (!piv.empty() && piv.back() == k) return std::nullopt;
  std::vector<Elem> x(k);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, k);
  return x;
}

std::size_t rank_of(const Field& field, const std::vector<std::vector<Elem>>& vectors, std::size_t dim) {
  return Matrix::from_rows(field, vectors, dim).rank();
}

}  // namespace rlie
