#include "strcg/matrix.hpp"

#include <stdexcept>

#include "strcg/errors.hpp"

namespace strcg {

namespace {

void require_same_space(const Matrix& a, const Matrix& b, const char* what) {
  if (a.dim() != b.dim() || !(*a.field() == *b.field())) {
    throw std::invalid_argument(std::string("field/dimension mismatch in ") + what);
  }
}

}  // namespace

Matrix::Matrix(FieldPtr field, int dim) : field_(std::move(field)), dim_(dim) {
  if (!field_) throw std::invalid_argument("null field");
  if (dim_ <= 0) throw std::invalid_argument("matrix dimension must be positive");
  a_.assign(static_cast<std::size_t>(dim_) * dim_, 0);
}

Matrix Matrix::identity(FieldPtr field, int dim) {
  Matrix m(std::move(field), dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, m.field_->one());
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<int>>& rows) {
  if (!field) throw std::invalid_argument("null field");
  int d = static_cast<int>(rows.size());
  Matrix m(field, d);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(rows[i].size()) != d) {
      throw std::invalid_argument("matrix rows must all have length dim");
    }
    for (int j = 0; j < d; ++j) m.set(i, j, field->from_int(rows[i][j]));
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_same_space(*this, rhs, "matrix product");
  const FiniteField& f = *field_;
  Matrix out(field_, dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < dim_; ++k) {
      Elem aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < dim_; ++j) {
        Elem t = f.mul(aik, rhs.at(k, j));
        out.set(i, j, f.add(out.at(i, j), t));
      }
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) out.set(j, i, at(i, j));
  }
  return out;
}

std::optional<Matrix> Matrix::inverse() const {
  const FiniteField& f = *field_;
  Matrix work = *this;
  Matrix inv = identity(field_, dim_);
  for (int col = 0; col < dim_; ++col) {
    int pivot = -1;
    for (int r = col; r < dim_; ++r) {
      if (work.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) {
      for (int j = 0; j < dim_; ++j) {
        std::swap(work.a_[pivot * dim_ + j], work.a_[col * dim_ + j]);
        std::swap(inv.a_[pivot * dim_ + j], inv.a_[col * dim_ + j]);
      }
    }
    Elem scale = f.inv(work.at(col, col));
    for (int j = 0; j < dim_; ++j) {
      work.set(col, j, f.mul(work.at(col, j), scale));
      inv.set(col, j, f.mul(inv.at(col, j), scale));
    }
    for (int r = 0; r < dim_; ++r) {
      if (r == col) continue;
      Elem factor = work.at(r, col);
      if (factor == 0) continue;
      for (int j = 0; j < dim_; ++j) {
        work.set(r, j, f.sub(work.at(r, j), f.mul(factor, work.at(col, j))));
        inv.set(r, j, f.sub(inv.at(r, j), f.mul(factor, inv.at(col, j))));
      }
    }
  }
  return inv;
}

bool Matrix::is_identity() const {
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if (at(i, j) != (i == j ? field_->one() : 0)) return false;
    }
  }
  return true;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return dim_ == rhs.dim_ && *field_ == *rhs.field_ && a_ == rhs.a_;
}

std::uint64_t Matrix::order(std::uint64_t cap) const {
  if (!is_invertible()) throw std::invalid_argument("order of a singular matrix");
  Matrix acc = *this;
  std::uint64_t n = 1;
  while (!acc.is_identity()) {
    acc = acc * *this;
    if (++n > cap) throw OverflowError("matrix order exceeds cap", cap);
  }
  return n;
}

std::vector<Matrix::Elem> Matrix::apply_row(std::span<const Elem> x) const {
  if (static_cast<int>(x.size()) != dim_) {
    throw std::invalid_argument("vector length mismatch");
  }
  const FiniteField& f = *field_;
  std::vector<Elem> out(dim_, 0);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      out[j] = f.add(out[j], f.mul(x[i], at(i, j)));
    }
  }
  return out;
}

std::string Matrix::to_string() const {
  const bool prime_field = field_->degree() == 1;
  std::string out = "[";
  for (int i = 0; i < dim_; ++i) {
    if (i) out += ',';
    out += '[';
    for (int j = 0; j < dim_; ++j) {
      if (j) out += ',';
      if (prime_field) {
        out += std::to_string(at(i, j));
      } else {
        auto cs = field_->coeffs(at(i, j));
        out += '[';
        for (std::size_t t = 0; t < cs.size(); ++t) {
          if (t) out += ',';
          out += std::to_string(cs[t]);
        }
        out += ']';
      }
    }
    out += ']';
  }
  out += ']';
  return out;
}

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  for (int i = 0; i < gram_.dim(); ++i) {
    for (int j = i + 1; j < gram_.dim(); ++j) {
      if (gram_.at(i, j) != gram_.at(j, i)) {
        throw std::invalid_argument("Gram matrix must be symmetric");
      }
    }
  }
}

FiniteField::Elem BilinearForm::evaluate(std::span<const FiniteField::Elem> x,
                                         std::span<const FiniteField::Elem> y) const {
  const FiniteField& f = *field();
  if (static_cast<int>(x.size()) != dim() || static_cast<int>(y.size()) != dim()) {
    throw std::invalid_argument("vector length mismatch");
  }
  FiniteField::Elem acc = 0;
  for (int i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      acc = f.add(acc, f.mul(x[i], f.mul(gram_.at(i, j), y[j])));
    }
  }
  return acc;
}

bool is_isometry(const Matrix& m, const BilinearForm& form) {
  require_same_space(m, form.gram(), "isometry test");
  return m * form.gram() * m.transpose() == form.gram();
}

Matrix reflection(const BilinearForm& form, std::span<const FiniteField::Elem> v) {
  const FiniteField& f = *form.field();
  if (f.characteristic() == 2) {
    throw std::invalid_argument("reflections require odd characteristic");
  }
  FiniteField::Elem vv = form.evaluate(v, v);
  if (vv == 0) throw std::invalid_argument("reflection vector is singular (B(v,v) = 0)");
  int d = form.dim();
  FiniteField::Elem two = f.from_int(2);
  FiniteField::Elem scale = f.mul(two, f.inv(vv));
  Matrix out(form.field(), d);
  std::vector<FiniteField::Elem> e(d, 0);
  for (int i = 0; i < d; ++i) {
    e.assign(d, 0);
    e[i] = f.one();
    FiniteField::Elem coef = f.mul(scale, form.evaluate(e, v));
    for (int j = 0; j < d; ++j) {
      FiniteField::Elem val = (i == j) ? f.one() : f.zero();
      out.set(i, j, f.sub(val, f.mul(coef, v[j])));
    }
  }
  return out;
}

MatrixPermImage::MatrixPermImage(FieldPtr field, int dim, std::vector<Permutation> perms)
    : field_(std::move(field)), dim_(dim), perms_(std::move(perms)) {}

std::uint64_t MatrixPermImage::domain_size() const {
  std::uint64_t n = 1;
  for (int i = 0; i < dim_; ++i) n *= field_->order();
  return n - 1;
}

std::vector<FiniteField::Elem> MatrixPermImage::point_vector(std::uint64_t point) const {
  // base-q digits, first coordinate most significant
  std::uint64_t q = field_->order();
  std::vector<FiniteField::Elem> v(dim_);
  for (int i = dim_ - 1; i >= 0; --i) {
    v[i] = static_cast<FiniteField::Elem>(point % q);
    point /= q;
  }
  return v;
}

std::uint64_t MatrixPermImage::vector_point(std::span<const FiniteField::Elem> v) const {
  std::uint64_t q = field_->order();
  std::uint64_t point = 0;
  for (int i = 0; i < dim_; ++i) point = point * q + v[i];
  return point;
}

MatrixPermImage matrix_rep_to_perm(const std::vector<Matrix>& gens,
                                   const ElementBudget& budget) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  const FieldPtr& field = gens.front().field();
  int dim = gens.front().dim();
  for (const auto& g : gens) {
    require_same_space(g, gens.front(), "matrix-to-permutation conversion");
    if (!g.is_invertible()) {
      throw std::invalid_argument("singular matrix in representation");
    }
  }
  std::uint64_t q = field->order();
  std::uint64_t n = 1;
  for (int i = 0; i < dim; ++i) {
    n *= q;
    if (n - 1 > budget.max_elements) {
      throw OverflowError("vector domain too large for permutation conversion",
                          budget.max_elements);
    }
  }
  MatrixPermImage image(field, dim, {});
  std::uint64_t points = n - 1;
  std::vector<Permutation> perms;
  perms.reserve(gens.size());
  for (const auto& g : gens) {
    std::vector<int> images(points);
    for (std::uint64_t pt = 1; pt <= points; ++pt) {
      auto v = image.point_vector(pt);
      auto w = g.apply_row(v);
      images[pt - 1] = static_cast<int>(image.vector_point(w) - 1);
    }
    perms.push_back(Permutation::from_images(std::move(images)));
  }
  return MatrixPermImage(field, dim, std::move(perms));
}

}  // namespace strcg
