#pragma once
#include <stdexcept>
#include <variant>
#include <vector>

#include "galrep/linalg.hpp"

namespace galrep {

// small dense complex matrix, row-major
struct CMatrix {
  int n = 0;
  std::vector<complexd> a;

  CMatrix() = default;
  explicit CMatrix(int dim) : n(dim), a(static_cast<size_t>(dim) * dim, complexd(0)) {}
  static CMatrix identity(int dim) {
    CMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }
  complexd& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const complexd& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  CMatrix operator*(const CMatrix& o) const {
    if (n != o.n) throw std::invalid_argument("CMatrix: dimension mismatch");
    CMatrix r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const complexd s = at(i, k);
        for (int j = 0; j < n; ++j) r.at(i, j) += s * o.at(k, j);
      }
    return r;
  }
  CMatrix adjoint() const {
    CMatrix r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.at(i, j) = std::conj(at(j, i));
    return r;
  }
  std::vector<complexd> operator*(const std::vector<complexd>& v) const {
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("CMatrix: vector mismatch");
    std::vector<complexd> r(v.size(), complexd(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r[i] += at(i, j) * v[j];
    return r;
  }
  complexd trace() const {
    complexd t = 0;
    for (int i = 0; i < n; ++i) t += at(i, i);
    return t;
  }
};

double max_abs_diff(const CMatrix& x, const CMatrix& y);
double unitarity_defect(const CMatrix& u);  // max |(U*U - I)_{ij}|

// value of a cocycle or representation operator at a point
struct Phase {
  complexd c = 1;
};
struct MatrixOp {
  CMatrix m;
};
// f(z) -> phase * z^power * f(rot * z) on functions of |z| = 1
struct TorusOp {
  complexd phase = 1;
  long long power = 0;
  complexd rot = 1;
};
// psi(q) -> phase * exp{i F v1 (q + v2/2)} psi(q + v2)
struct WeylOp {
  complexd phase = 1;
  Vec2 v;
  double F = 0;
};

using UnitaryValue = std::variant<Phase, MatrixOp, TorusOp, WeylOp>;

UnitaryValue uv_scale(complexd c, const UnitaryValue& u);
UnitaryValue uv_mul(const UnitaryValue& a, const UnitaryValue& b);
// sampled sup-distance for TorusOp/WeylOp, exact for Phase/Matrix
double uv_distance(const UnitaryValue& a, const UnitaryValue& b);
double uv_unitarity_defect(const UnitaryValue& u);

std::vector<complexd> uv_apply_vec(const UnitaryValue& u, const std::vector<complexd>& f);
complexd pow_int(complexd z, long long n);

}  // namespace galrep
