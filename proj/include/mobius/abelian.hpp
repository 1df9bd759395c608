#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mobius/errors.hpp"

namespace mobius {

/// Exact integers.  Smith reduction squares the surviving entries at every
/// elimination stage, which bursts any fixed-width type already on 6x6
/// inputs, so the scalars are GMP integers.
using Int = mpz_class;

/// Dense integer matrix over exact integers.
class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(std::vector<std::vector<long>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c)
        throw config_error("ragged rows in integer matrix");
      for (int j = 0; j < c; ++j)
        m(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const Int& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  IntMatrix column(int j) const {
    IntMatrix c(rows_, 1);
    for (int i = 0; i < rows_; ++i)
      c(i, 0) = (*this)(i, j);
    return c;
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_)
      throw config_error("integer matrix dimension mismatch");
    IntMatrix r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int j = 0; j < y.cols_; ++j) {
        Int s = 0;
        for (int k = 0; k < x.cols_; ++k)
          s += x(i, k) * y(k, j);
        r(i, j) = s;
      }
    return r;
  }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  bool is_zero() const {
    for (const Int& v : a_)
      if (v != 0)
        return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
      s += i == 0 ? "[" : " [";
      for (int j = 0; j < cols_; ++j)
        s += (*this)(i, j).get_str() + (j + 1 < cols_ ? ", " : "");
      s += i + 1 < rows_ ? "]\n" : "]";
    }
    return s + "]";
  }

private:
  int rows_, cols_;
  std::vector<Int> a_;
};

/// D = U M V with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0.
/// u_inverse is carried along so image bases come out without a separate
/// inversion.
struct SmithDecomposition {
  IntMatrix d;
  IntMatrix u;
  IntMatrix u_inverse;
  IntMatrix v;
  int rank = 0;

  std::vector<Int> invariant_factors() const {
    std::vector<Int> f;
    for (int i = 0; i < rank; ++i)
      f.push_back(d(i, i));
    return f;
  }
};

namespace detail {

struct Egcd {
  Int g, p, q; // p*a + q*b = g >= 0
};

inline Egcd egcd(const Int& a, const Int& b) {
  Egcd e;
  mpz_gcdext(e.g.get_mpz_t(), e.p.get_mpz_t(), e.q.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return e;
}

struct SnfOps {
  IntMatrix* a;
  IntMatrix* u;     // collects row ops
  IntMatrix* uinv;  // collects inverse row ops (as column ops)
  IntMatrix* v;     // collects column ops

  void row_swap(int i, int j) {
    if (i == j)
      return;
    for (int k = 0; k < a->cols(); ++k)
      std::swap((*a)(i, k), (*a)(j, k));
    for (int k = 0; k < u->cols(); ++k)
      std::swap((*u)(i, k), (*u)(j, k));
    for (int k = 0; k < uinv->rows(); ++k)
      std::swap((*uinv)(k, i), (*uinv)(k, j));
  }
  // row_i += c * row_j
  void row_addmul(int i, int j, const Int& c) {
    if (c == 0)
      return;
    for (int k = 0; k < a->cols(); ++k)
      (*a)(i, k) += c * (*a)(j, k);
    for (int k = 0; k < u->cols(); ++k)
      (*u)(i, k) += c * (*u)(j, k);
    for (int k = 0; k < uinv->rows(); ++k)
      (*uinv)(k, j) -= c * (*uinv)(k, i);
  }
  // (row_i, row_j) <- (p*row_i + q*row_j, r*row_i + s*row_j), ps - qr = 1
  void row_transform(int i, int j, const Int& p, const Int& q, const Int& r,
                     const Int& s) {
    auto apply = [&](IntMatrix& x) {
      for (int k = 0; k < x.cols(); ++k) {
        const Int xi = x(i, k), xj = x(j, k);
        x(i, k) = p * xi + q * xj;
        x(j, k) = r * xi + s * xj;
      }
    };
    apply(*a);
    apply(*u);
    // inverse of [[p,q],[r,s]] is [[s,-q],[-r,p]], applied as column ops
    for (int k = 0; k < uinv->rows(); ++k) {
      const Int xi = (*uinv)(k, i), xj = (*uinv)(k, j);
      (*uinv)(k, i) = s * xi - r * xj;
      (*uinv)(k, j) = p * xj - q * xi;
    }
  }
  void row_negate(int i) {
    for (int k = 0; k < a->cols(); ++k)
      (*a)(i, k) = -(*a)(i, k);
    for (int k = 0; k < u->cols(); ++k)
      (*u)(i, k) = -(*u)(i, k);
    for (int k = 0; k < uinv->rows(); ++k)
      (*uinv)(k, i) = -(*uinv)(k, i);
  }
  void col_swap(int i, int j) {
    if (i == j)
      return;
    for (int k = 0; k < a->rows(); ++k)
      std::swap((*a)(k, i), (*a)(k, j));
    for (int k = 0; k < v->rows(); ++k)
      std::swap((*v)(k, i), (*v)(k, j));
  }
  // col_i += c * col_j
  void col_addmul(int i, int j, const Int& c) {
    if (c == 0)
      return;
    for (int k = 0; k < a->rows(); ++k)
      (*a)(k, i) += c * (*a)(k, j);
    for (int k = 0; k < v->rows(); ++k)
      (*v)(k, i) += c * (*v)(k, j);
  }
  // (col_i, col_j) <- (p*col_i + q*col_j, r*col_i + s*col_j), ps - qr = 1
  void col_transform(int i, int j, const Int& p, const Int& q, const Int& r,
                     const Int& s) {
    auto apply = [&](IntMatrix& x) {
      for (int k = 0; k < x.rows(); ++k) {
        const Int xi = x(k, i), xj = x(k, j);
        x(k, i) = p * xi + q * xj;
        x(k, j) = r * xi + s * xj;
      }
    };
    apply(*a);
    apply(*v);
  }
};

} // namespace detail

/// Smith normal form around minimal pivots, with one-shot extended-gcd
/// transforms per cleared entry.
inline SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithDecomposition s;
  s.d = m;
  s.u = IntMatrix::identity(m.rows());
  s.u_inverse = IntMatrix::identity(m.rows());
  s.v = IntMatrix::identity(m.cols());
  detail::SnfOps ops{&s.d, &s.u, &s.u_inverse, &s.v};

  const int n = std::min(m.rows(), m.cols());
  int t = 0;
  for (; t < n; ++t) {
    // move a pivot of minimal |value| into position
    int pi = -1, pj = -1;
    for (int i = t; i < m.rows(); ++i)
      for (int j = t; j < m.cols(); ++j)
        if (s.d(i, j) != 0 &&
            (pi < 0 || cmp(abs(s.d(i, j)), abs(s.d(pi, pj))) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi < 0)
      break; // trailing submatrix is zero
    ops.row_swap(t, pi);
    ops.col_swap(t, pj);

    for (;;) {
      for (int i = t + 1; i < m.rows(); ++i) {
        const Int b = s.d(i, t);
        if (b == 0)
          continue;
        const Int a = s.d(t, t);
        if (b % a == 0) {
          ops.row_addmul(i, t, -(b / a));
        } else {
          const detail::Egcd e = detail::egcd(a, b);
          ops.row_transform(t, i, e.p, e.q, -(b / e.g), a / e.g);
        }
      }
      // clearing the pivot row by column transforms can refill the pivot
      // column (and vice versa); iterate until both are clear, which
      // terminates because every gcd transform strictly shrinks the pivot
      for (int j = t + 1; j < m.cols(); ++j) {
        const Int b = s.d(t, j);
        if (b == 0)
          continue;
        const Int a = s.d(t, t);
        if (b % a == 0) {
          ops.col_addmul(j, t, -(b / a));
        } else {
          const detail::Egcd e = detail::egcd(a, b);
          ops.col_transform(t, j, e.p, e.q, -(b / e.g), a / e.g);
        }
      }
      bool clear = true;
      for (int i = t + 1; i < m.rows() && clear; ++i)
        clear = s.d(i, t) == 0;
      for (int j = t + 1; j < m.cols() && clear; ++j)
        clear = s.d(t, j) == 0;
      if (!clear)
        continue;
      // the pivot must divide the trailing block for the divisor chain;
      // fold an offending row in and reduce again
      bool divides = true;
      for (int i = t + 1; i < m.rows() && divides; ++i)
        for (int j = t + 1; j < m.cols() && divides; ++j)
          if (s.d(i, j) % s.d(t, t) != 0) {
            ops.row_addmul(t, i, 1);
            divides = false;
          }
      if (divides)
        break;
    }
    if (s.d(t, t) < 0)
      ops.row_negate(t);
  }
  s.rank = t;
  return s;
}

/// A finitely generated abelian group Z^free_rank (+) Z/t_1 (+) ... with
/// t_1 | t_2 | ...
struct AbelianGroup {
  int free_rank = 0;
  std::vector<Int> torsion;

  AbelianGroup() = default;
  AbelianGroup(int rank, std::vector<Int> tors)
      : free_rank(rank), torsion(std::move(tors)) {
    if (free_rank < 0)
      throw config_error("negative free rank");
    for (std::size_t i = 0; i < torsion.size(); ++i) {
      if (torsion[i] < 2)
        throw config_error("torsion coefficients must be >= 2");
      if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0)
        throw config_error("torsion coefficients must form a divisibility chain");
    }
  }

  static AbelianGroup free(int rank) { return AbelianGroup(rank, {}); }
  static AbelianGroup zero() { return AbelianGroup(0, {}); }

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }

  std::string to_string() const {
    if (is_zero())
      return "0";
    std::string s;
    if (free_rank == 1)
      s = "Z";
    else if (free_rank > 1)
      s = "Z^" + std::to_string(free_rank);
    for (const Int& t : torsion)
      s += (s.empty() ? "" : " (+) ") + std::string("Z/") + t.get_str();
    return s;
  }
};

/// A homomorphism between free abelian groups, as the integer matrix acting
/// on generator columns (rows index target generators).
struct IntegerMap {
  IntMatrix matrix;
  AbelianGroup source;
  AbelianGroup target;

  IntegerMap(IntMatrix m, AbelianGroup src, AbelianGroup tgt)
      : matrix(std::move(m)), source(std::move(src)), target(std::move(tgt)) {
    if (!source.is_free() || !target.is_free())
      throw config_error("integer maps are supported between free groups only");
    if (matrix.rows() != target.free_rank || matrix.cols() != source.free_rank)
      throw config_error("integer map shape does not match declared ranks");
  }
};

/// Kernel, image and cokernel of an integer map, with explicit bases:
/// kernel_basis columns are source-coordinate generators of ker f,
/// image_basis columns are target-coordinate generators of im f.
struct KernelImage {
  AbelianGroup kernel;
  IntMatrix kernel_basis;
  AbelianGroup image;
  IntMatrix image_basis;
  AbelianGroup cokernel;
};

inline KernelImage kernel_image(const IntegerMap& f) {
  const SmithDecomposition s = smith_normal_form(f.matrix);
  const int n = f.matrix.cols(), mr = f.matrix.rows(), r = s.rank;

  KernelImage out;
  out.kernel = AbelianGroup::free(n - r);
  out.kernel_basis = IntMatrix(n, n - r);
  for (int j = r; j < n; ++j) {
    // columns of V past the rank are killed by M; normalize the sign of the
    // leading entry
    int lead = -1;
    for (int i = 0; i < n && lead < 0; ++i)
      if (s.v(i, j) != 0)
        lead = i;
    const int sign = (lead >= 0 && s.v(lead, j) < 0) ? -1 : 1;
    for (int i = 0; i < n; ++i)
      out.kernel_basis(i, j - r) = sign * s.v(i, j);
  }

  out.image = AbelianGroup::free(r);
  out.image_basis = IntMatrix(mr, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < mr; ++i)
      out.image_basis(i, j) = s.d(j, j) * s.u_inverse(i, j);

  std::vector<Int> torsion;
  for (int i = 0; i < r; ++i)
    if (s.d(i, i) >= 2)
      torsion.push_back(s.d(i, i));
  out.cokernel = AbelianGroup(mr - r, std::move(torsion));
  return out;
}

/// Result of the two determined corners of the cyclic six-term sequence:
/// with both corner groups of the ideal/quotient zero, the middle K-groups
/// are kernel and cokernel of the connecting map.
struct SixTermSolution {
  AbelianGroup k0_middle;
  IntMatrix k0_generator_basis;           // columns in quotient coordinates
  std::vector<std::string> k0_generators; // formatted in quotient generators
  AbelianGroup k1_middle;
  AbelianGroup exp_image;
  std::vector<std::string> notes;
};

inline std::string format_combination(const IntMatrix& column,
                                      const std::vector<std::string>& names) {
  std::string s;
  for (int i = 0; i < column.rows(); ++i) {
    const Int& c = column(i, 0);
    if (c == 0)
      continue;
    const std::string& g = names[static_cast<std::size_t>(i)];
    if (s.empty())
      s += (c == 1 ? "" : c == -1 ? "-" : c.get_str() + "*") + g;
    else
      s += (c > 0 ? " + " : " - ") +
           (abs(c) == 1 ? "" : Int(abs(c)).get_str() + "*") + g;
  }
  return s.empty() ? "0" : s;
}

/// Solves the six-term diagram in the determined regime: the ideal K_0 and
/// quotient K_1 corners must vanish, so that
///   K_0(middle) = ker(exp)  and  K_1(middle) = coker(exp).
/// `quotient_generators` names the K_0(quotient) generators for the
/// formatted kernel basis.
inline SixTermSolution solve_six_term(const AbelianGroup& k0_quotient,
                                      const AbelianGroup& k1_ideal,
                                      const IntegerMap& exp_map,
                                      const AbelianGroup& k0_ideal,
                                      const AbelianGroup& k1_quotient,
                                      std::vector<std::string> quotient_generators = {}) {
  if (!k0_ideal.is_zero() || !k1_quotient.is_zero()) {
    std::string bad;
    if (!k0_ideal.is_zero())
      bad += "K0(ideal) = " + k0_ideal.to_string();
    if (!k1_quotient.is_zero())
      bad += std::string(bad.empty() ? "" : ", ") +
             "K1(quotient) = " + k1_quotient.to_string();
    throw underdetermined_error(
        "six-term: middle groups are only determined when the corner groups "
        "vanish; nonzero: " + bad);
  }
  if (!(exp_map.source == k0_quotient) || !(exp_map.target == k1_ideal))
    throw config_error("six-term: exp must map K0(quotient) to K1(ideal)");

  if (quotient_generators.empty())
    for (int i = 0; i < k0_quotient.free_rank; ++i)
      quotient_generators.push_back("g" + std::to_string(i + 1));

  const KernelImage ki = kernel_image(exp_map);
  SixTermSolution sol;
  sol.k0_middle = ki.kernel;
  sol.k0_generator_basis = ki.kernel_basis;
  for (int j = 0; j < ki.kernel_basis.cols(); ++j)
    sol.k0_generators.push_back(
        format_combination(ki.kernel_basis.column(j), quotient_generators));
  sol.k1_middle = ki.cokernel;
  sol.exp_image = ki.image;
  if (!(sol.exp_image == sol.k1_middle))
    sol.notes.push_back(
        "exactness determines K1(middle) as coker(exp) = " +
        sol.k1_middle.to_string() + "; the image of exp is " +
        sol.exp_image.to_string() +
        ", a different group, so an Im(exp) identification of K1(middle) "
        "is inconsistent with the diagram");
  return sol;
}

} // namespace mobius
