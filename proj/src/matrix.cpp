#include "elliptope/matrix.hpp"

#include <sstream>

#include "elliptope/error.hpp"

namespace ell {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ok: return "Ok";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::duplicate_edge: return "DuplicateEdge";
    case ErrorCode::self_loop: return "SelfLoop";
    case ErrorCode::not_unweighted: return "NotUnweighted";
    case ErrorCode::zero_multiplicity: return "ZeroMultiplicity";
    case ErrorCode::empty_part_list: return "EmptyPartList";
    case ErrorCode::nonpositive_mass: return "NonpositiveMass";
    case ErrorCode::bad_size: return "BadSize";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::size_mismatch: return "SizeMismatch";
    case ErrorCode::not_symmetric_backing: return "NotSymmetricBacking";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::bad_block_sizes: return "BadBlockSizes";
    case ErrorCode::mixed_backings: return "MixedBackings";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::not_complementary: return "NotComplementary";
    case ErrorCode::unequal_sizes: return "UnequalSizes";
    case ErrorCode::degree_bound_violated: return "DegreeBoundViolated";
    case ErrorCode::sizes_not_strict: return "SizesNotStrict";
    case ErrorCode::witness_invalid: return "WitnessInvalid";
    case ErrorCode::odd_order: return "OddOrder";
    case ErrorCode::dominating: return "Dominating";
    case ErrorCode::too_small: return "TooSmall";
    case ErrorCode::spec_mismatch: return "SpecMismatch";
    case ErrorCode::infeasible_input: return "InfeasibleInput";
    case ErrorCode::pair_not_optimal: return "PairNotOptimal";
    case ErrorCode::not_rank_one: return "NotRankOne";
    case ErrorCode::unsorted: return "Unsorted";
    case ErrorCode::degenerate_instance: return "DegenerateInstance";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::io_error: return "IoError";
    case ErrorCode::usage_error: return "UsageError";
    case ErrorCode::internal_error: return "InternalError";
  }
  return "Unknown";
}

SymMatrix SymMatrix::zero_exact(int n) {
  SymMatrix m;
  m.n_ = n;
  m.tri_ = std::vector<Rational>(static_cast<size_t>(n) * (n + 1) / 2);
  return m;
}

SymMatrix SymMatrix::zero_float(int n) {
  SymMatrix m;
  m.n_ = n;
  m.tri_ = std::vector<double>(static_cast<size_t>(n) * (n + 1) / 2, 0.0);
  return m;
}

SymMatrix SymMatrix::identity_exact(int n) {
  SymMatrix m = zero_exact(n);
  for (int i = 0; i < n; ++i) m.set_q(i, i, Rational(1));
  return m;
}

SymMatrix SymMatrix::ones_exact(int n) {
  SymMatrix m = zero_exact(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) m.set_q(i, j, Rational(1));
  return m;
}

SymMatrix SymMatrix::diag_exact(const std::vector<Rational>& d) {
  SymMatrix m = zero_exact(static_cast<int>(d.size()));
  for (int i = 0; i < m.n_; ++i) m.set_q(i, i, d[i]);
  return m;
}

SymMatrix SymMatrix::outer_exact(const std::vector<Rational>& x) {
  SymMatrix m = zero_exact(static_cast<int>(x.size()));
  for (int i = 0; i < m.n_; ++i)
    for (int j = 0; j <= i; ++j) m.set_q(i, j, x[i] * x[j]);
  return m;
}

void SymMatrix::require_exact(const char* op) const {
  if (!is_exact())
    fail(ErrorCode::not_symmetric_backing,
         std::string(op) + " requires the exact rational backing");
}

const Rational& SymMatrix::q(int i, int j) const {
  require_exact("element access q()");
  if (j > i) std::swap(i, j);
  return std::get<std::vector<Rational>>(tri_)[tidx(i, j)];
}

void SymMatrix::set_q(int i, int j, const Rational& v) {
  require_exact("element access set_q()");
  if (j > i) std::swap(i, j);
  std::get<std::vector<Rational>>(tri_)[tidx(i, j)] = v;
}

double SymMatrix::d(int i, int j) const {
  if (is_exact())
    fail(ErrorCode::not_symmetric_backing, "element access d() requires float backing");
  if (j > i) std::swap(i, j);
  return std::get<std::vector<double>>(tri_)[tidx(i, j)];
}

void SymMatrix::set_d(int i, int j, double v) {
  if (is_exact())
    fail(ErrorCode::not_symmetric_backing, "element access set_d() requires float backing");
  if (j > i) std::swap(i, j);
  std::get<std::vector<double>>(tri_)[tidx(i, j)] = v;
}

SymMatrix SymMatrix::to_float() const {
  if (!is_exact()) return *this;
  SymMatrix m = zero_float(n_);
  const auto& src = std::get<std::vector<Rational>>(tri_);
  auto& dst = std::get<std::vector<double>>(m.tri_);
  for (size_t k = 0; k < src.size(); ++k) dst[k] = src[k].to_double();
  return m;
}

std::vector<Rational> SymMatrix::matvec(const std::vector<Rational>& x) const {
  require_exact("matvec");
  if (static_cast<int>(x.size()) != n_)
    fail(ErrorCode::dimension_mismatch, "matvec size mismatch");
  std::vector<Rational> y(n_);
  for (int i = 0; i < n_; ++i) {
    Rational s;
    for (int j = 0; j < n_; ++j) s += q(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

Rational SymMatrix::trace() const {
  require_exact("trace");
  Rational s;
  for (int i = 0; i < n_; ++i) s += q(i, i);
  return s;
}

Rational SymMatrix::inner(const SymMatrix& other) const {
  require_exact("inner");
  other.require_exact("inner");
  if (other.n_ != n_) fail(ErrorCode::dimension_mismatch, "inner size mismatch");
  Rational s;
  for (int i = 0; i < n_; ++i) {
    s += q(i, i) * other.q(i, i);
    for (int j = 0; j < i; ++j) s += Rational(2) * q(i, j) * other.q(i, j);
  }
  return s;
}

Rational SymMatrix::quad_form(const std::vector<Rational>& x) const {
  require_exact("quad_form");
  if (static_cast<int>(x.size()) != n_)
    fail(ErrorCode::dimension_mismatch, "quad_form size mismatch");
  Rational s;
  for (int i = 0; i < n_; ++i) {
    s += q(i, i) * x[i] * x[i];
    for (int j = 0; j < i; ++j) s += Rational(2) * q(i, j) * x[i] * x[j];
  }
  return s;
}

bool SymMatrix::equals(const SymMatrix& other) const {
  if (n_ != other.n_ || backing() != other.backing()) return false;
  if (is_exact())
    return std::get<std::vector<Rational>>(tri_) ==
           std::get<std::vector<Rational>>(other.tri_);
  return std::get<std::vector<double>>(tri_) == std::get<std::vector<double>>(other.tri_);
}

bool SymMatrix::is_zero() const {
  if (is_exact()) {
    for (const auto& v : std::get<std::vector<Rational>>(tri_))
      if (!v.is_zero()) return false;
    return true;
  }
  for (double v : std::get<std::vector<double>>(tri_))
    if (v != 0.0) return false;
  return true;
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
  if (a.n_ != b.n_) fail(ErrorCode::dimension_mismatch, "matrix sum size mismatch");
  if (a.backing() != b.backing()) fail(ErrorCode::mixed_backings, "matrix sum backings differ");
  SymMatrix m = a;
  if (a.is_exact()) {
    auto& dst = std::get<std::vector<Rational>>(m.tri_);
    const auto& src = std::get<std::vector<Rational>>(b.tri_);
    for (size_t k = 0; k < dst.size(); ++k) dst[k] += src[k];
  } else {
    auto& dst = std::get<std::vector<double>>(m.tri_);
    const auto& src = std::get<std::vector<double>>(b.tri_);
    for (size_t k = 0; k < dst.size(); ++k) dst[k] += src[k];
  }
  return m;
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
  if (a.n_ != b.n_) fail(ErrorCode::dimension_mismatch, "matrix difference size mismatch");
  if (a.backing() != b.backing())
    fail(ErrorCode::mixed_backings, "matrix difference backings differ");
  SymMatrix m = a;
  if (a.is_exact()) {
    auto& dst = std::get<std::vector<Rational>>(m.tri_);
    const auto& src = std::get<std::vector<Rational>>(b.tri_);
    for (size_t k = 0; k < dst.size(); ++k) dst[k] -= src[k];
  } else {
    auto& dst = std::get<std::vector<double>>(m.tri_);
    const auto& src = std::get<std::vector<double>>(b.tri_);
    for (size_t k = 0; k < dst.size(); ++k) dst[k] -= src[k];
  }
  return m;
}

SymMatrix SymMatrix::scaled(const Rational& k) const {
  require_exact("scaled");
  SymMatrix m = *this;
  for (auto& v : std::get<std::vector<Rational>>(m.tri_)) v *= k;
  return m;
}

std::string SymMatrix::dump() const {
  std::ostringstream out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j <= i; ++j) {
      if (j) out << ' ';
      if (is_exact())
        out << q(i, j).str();
      else
        out << d(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ell
