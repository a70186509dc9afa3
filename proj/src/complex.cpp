#include "gerst/complex.hpp"

#include <mutex>

namespace gerst {

struct TruncatedComplex::Cache {
  explicit Cache(size_t n)
      : d_once(n), d(n), z_once(n + 1), z(n + 1), rank(n), b_once(n + 1), b(n + 1), q_once(n + 1), q(n + 1) {}
  std::vector<std::once_flag> d_once;
  std::vector<Matrix> d;
  std::vector<std::once_flag> z_once;
  std::vector<Matrix> z;
  std::vector<size_t> rank;
  std::vector<std::once_flag> b_once;
  std::vector<std::unique_ptr<ColumnSpace>> b;
  std::vector<std::once_flag> q_once;
  std::vector<std::shared_ptr<const Quotient>> q;
};

TruncatedComplex::TruncatedComplex(Field field, std::vector<size_t> dims, Builder build)
    : field_(field), dims_(std::move(dims)), build_(std::move(build)) {
  if (dims_.empty()) throw Error(ErrorCode::DimensionMismatch, "a complex needs at least one degree");
  cache_ = std::make_unique<Cache>(dims_.size() - 1);
}

TruncatedComplex::~TruncatedComplex() = default;
TruncatedComplex::TruncatedComplex(TruncatedComplex&&) noexcept = default;
TruncatedComplex& TruncatedComplex::operator=(TruncatedComplex&&) noexcept = default;

void TruncatedComplex::check_degree(size_t n, size_t limit, const char* what) const {
  if (n > limit) {
    throw Error(ErrorCode::DegreeOutOfRange, std::string(what) + " requested in degree " + std::to_string(n) +
                                                 " but the complex is truncated at " + std::to_string(max_degree()));
  }
}

size_t TruncatedComplex::dim(size_t n) const {
  check_degree(n, max_degree(), "cochain space");
  return dims_[n];
}

const Matrix& TruncatedComplex::differential(size_t n) const {
  if (n >= max_degree()) throw Error(ErrorCode::DegreeOutOfRange, "no differential out of the top degree");
  std::call_once(cache_->d_once[n], [&] {
    Matrix m = build_(n);
    if (m.rows() != dims_[n + 1] || m.cols() != dims_[n]) {
      throw Error(ErrorCode::DimensionMismatch, "differential in degree " + std::to_string(n) + " has the wrong shape");
    }
    require_same_field(field_, m.field());
    cache_->d[n] = std::move(m);
  });
  return cache_->d[n];
}

const Matrix& TruncatedComplex::cocycles(size_t n) const {
  check_degree(n, max_degree(), "cocycles");
  std::call_once(cache_->z_once[n], [&] {
    if (n == max_degree()) {
      cache_->z[n] = Matrix::identity(field_, dims_[n]);
    } else {
      cache_->z[n] = kernel_basis(differential(n));
      cache_->rank[n] = dims_[n] - cache_->z[n].cols();
    }
  });
  return cache_->z[n];
}

size_t TruncatedComplex::differential_rank(size_t n) const {
  if (n >= max_degree()) throw Error(ErrorCode::DegreeOutOfRange, "no differential out of the top degree");
  cocycles(n);
  return cache_->rank[n];
}

const ColumnSpace& TruncatedComplex::image(size_t n) const {
  std::call_once(cache_->b_once[n], [&] {
    cache_->b[n] = std::make_unique<ColumnSpace>(n == 0 ? Matrix::zero(field_, dims_[0], 0) : differential(n - 1));
  });
  return *cache_->b[n];
}

CohomologySpace TruncatedComplex::cohomology(size_t n) const {
  check_degree(n, max_degree(), "cohomology");
  std::call_once(cache_->q_once[n], [&] {
    const Matrix b = n == 0 ? Matrix::zero(field_, dims_[0], 0) : differential(n - 1);
    cache_->q[n] = std::make_shared<const Quotient>(cocycles(n), b);
  });
  CohomologySpace h;
  h.degree = n;
  h.quotient = cache_->q[n];
  h.dim = h.quotient->dim();
  h.representatives = h.quotient->representatives();
  h.upper_truncation_unsafe = n == max_degree();
  return h;
}

std::vector<size_t> TruncatedComplex::cohomology_dims() const {
  std::vector<size_t> out;
  for (size_t n = 0; n <= max_degree(); ++n) {
    // dim H^n = dim ker D_n - rank D_{n-1}
    const size_t ker = n == max_degree() ? dims_[n] : cocycles(n).cols();
    out.push_back(ker - (n == 0 ? 0 : differential_rank(n - 1)));
  }
  return out;
}

std::optional<Vector> TruncatedComplex::is_coboundary(size_t n, const Vector& v) const {
  check_degree(n, max_degree(), "coboundary test");
  if (v.size() != dims_[n]) throw Error(ErrorCode::DimensionMismatch, "cochain has the wrong dimension");
  if (is_zero(v)) return Vector(n == 0 ? 0 : dims_[n - 1]);
  if (n == 0) return std::nullopt;
  return image(n).solve(v);
}

bool TruncatedComplex::is_cocycle(size_t n, const Vector& v) const {
  if (n >= max_degree()) throw Error(ErrorCode::DegreeOutOfRange, "cocycle test needs the outgoing differential");
  if (v.size() != dims_[n]) throw Error(ErrorCode::DimensionMismatch, "cochain has the wrong dimension");
  return is_zero(differential(n).apply(v));
}

std::optional<size_t> TruncatedComplex::verify_d_squared() const {
  for (size_t n = 0; n + 1 < max_degree(); ++n) {
    if (!differential(n + 1).multiply(differential(n)).is_zero()) return n;
  }
  return std::nullopt;
}

}  // namespace gerst
