#ifndef ELLIPTOPE_MATRIX_HPP
#define ELLIPTOPE_MATRIX_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "elliptope/rational.hpp"

namespace ell {

// Dense symmetric matrix with either exact rational or binary64 backing.
// Only the lower triangle is stored; (i,j) and (j,i) read identically by
// construction.
class SymMatrix {
 public:
  enum class Backing { exact, floating };

  SymMatrix() : n_(0), tri_(std::vector<Rational>{}) {}

  static SymMatrix zero_exact(int n);
  static SymMatrix zero_float(int n);
  static SymMatrix identity_exact(int n);
  static SymMatrix ones_exact(int n);  // all-ones matrix
  static SymMatrix diag_exact(const std::vector<Rational>& d);
  static SymMatrix outer_exact(const std::vector<Rational>& x);  // x x^T

  int n() const { return n_; }
  Backing backing() const {
    return std::holds_alternative<std::vector<Rational>>(tri_) ? Backing::exact
                                                               : Backing::floating;
  }
  bool is_exact() const { return backing() == Backing::exact; }

  const Rational& q(int i, int j) const;
  void set_q(int i, int j, const Rational& v);
  double d(int i, int j) const;
  void set_d(int i, int j, double v);

  SymMatrix to_float() const;  // exact -> binary64 (no-op on float backing)

  // Exact-backing helpers (throw not_symmetric_backing on float backing).
  std::vector<Rational> matvec(const std::vector<Rational>& x) const;
  Rational trace() const;
  Rational inner(const SymMatrix& other) const;  // <A,B> = tr(AB)
  Rational quad_form(const std::vector<Rational>& x) const;  // x^T M x
  bool equals(const SymMatrix& other) const;
  bool is_zero() const;

  friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
  SymMatrix scaled(const Rational& k) const;

  // Row-major lower triangle, rationals as p/q, one row per line.
  std::string dump() const;

 private:
  void require_exact(const char* op) const;
  static int tidx(int i, int j) { return i * (i + 1) / 2 + j; }  // j <= i

  int n_;
  std::variant<std::vector<Rational>, std::vector<double>> tri_;
};

}  // namespace ell

#endif
