#include "galrep/unitary.hpp"

namespace galrep {

double max_abs_diff(const CMatrix& x, const CMatrix& y) {
  if (x.n != y.n) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double m = 0;
  for (size_t i = 0; i < x.a.size(); ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
  return m;
}

double unitarity_defect(const CMatrix& u) {
  return max_abs_diff(u.adjoint() * u, CMatrix::identity(u.n));
}

complexd pow_int(complexd z, long long n) {
  if (n == 0) return 1;
  if (n < 0) return pow_int(1.0 / z, -n);
  complexd r = 1, b = z;
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

UnitaryValue uv_scale(complexd c, const UnitaryValue& u) {
  UnitaryValue r = u;
  std::visit(
      [&](auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Phase>) {
          v.c *= c;
        } else if constexpr (std::is_same_v<T, MatrixOp>) {
          for (auto& e : v.m.a) e *= c;
        } else {
          v.phase *= c;
        }
      },
      r);
  return r;
}

UnitaryValue uv_mul(const UnitaryValue& a, const UnitaryValue& b) {
  if (const auto* pa = std::get_if<Phase>(&a)) return uv_scale(pa->c, b);
  if (const auto* pb = std::get_if<Phase>(&b)) return uv_scale(pb->c, a);
  if (const auto* ma = std::get_if<MatrixOp>(&a)) {
    const auto* mb = std::get_if<MatrixOp>(&b);
    if (!mb) throw std::invalid_argument("uv_mul: incompatible operand kinds");
    return MatrixOp{ma->m * mb->m};
  }
  if (const auto* ta = std::get_if<TorusOp>(&a)) {
    const auto* tb = std::get_if<TorusOp>(&b);
    if (!tb) throw std::invalid_argument("uv_mul: incompatible operand kinds");
    // (T1 T2 f)(z) = ph1 ph2 rot1^{n2} z^{n1+n2} f(rot1 rot2 z)
    return TorusOp{ta->phase * tb->phase * pow_int(ta->rot, tb->power), ta->power + tb->power,
                   ta->rot * tb->rot};
  }
  const auto* wa = std::get_if<WeylOp>(&a);
  const auto* wb = std::get_if<WeylOp>(&b);
  if (!wa || !wb) throw std::invalid_argument("uv_mul: incompatible operand kinds");
  // Weyl relation: pi_v pi_w = exp{-i F <v,w>/2} pi_{v+w}
  const double F = wa->F;
  const complexd ph = wa->phase * wb->phase *
                      unit_phase(-0.5 * F * (wa->v.x * wb->v.y - wa->v.y * wb->v.x));
  return WeylOp{ph, wa->v + wb->v, F};
}

namespace {

// fixed probe data for the sampled sup-norms
const complexd kTorusCoeff[7] = {{0.31, -0.12}, {-0.54, 0.22}, {0.81, 0.43}, {1.0, 0.0},
                                 {-0.27, 0.64}, {0.15, -0.88}, {-0.41, 0.09}};
constexpr double kTorusAngles[8] = {0.13, 0.95, 1.71, 2.63, 3.41, 4.22, 5.08, 5.90};
constexpr double kWeylQ[6] = {-1.3, -0.5, 0.0, 0.7, 1.1, 2.0};

complexd torus_probe(complexd z) {
  complexd s = 0;
  for (int m = -3; m <= 3; ++m) s += kTorusCoeff[m + 3] * pow_int(z, m);
  return s;
}

complexd apply_torus(const TorusOp& t, complexd z) {
  return t.phase * pow_int(z, t.power) * torus_probe(t.rot * z);
}

complexd weyl_probe(double q) {
  return std::exp(complexd(-0.5 * q * q, 0.3 * q));
}

complexd apply_weyl(const WeylOp& w, double q) {
  return w.phase * unit_phase(w.F * w.v.x * (q + 0.5 * w.v.y)) * weyl_probe(q + w.v.y);
}

}  // namespace

double uv_distance(const UnitaryValue& a, const UnitaryValue& b) {
  if (a.index() != b.index()) throw std::invalid_argument("uv_distance: mixed operand kinds");
  if (const auto* pa = std::get_if<Phase>(&a)) return std::abs(pa->c - std::get<Phase>(b).c);
  if (const auto* ma = std::get_if<MatrixOp>(&a))
    return max_abs_diff(ma->m, std::get<MatrixOp>(b).m);
  if (const auto* ta = std::get_if<TorusOp>(&a)) {
    const auto& tb = std::get<TorusOp>(b);
    double d = 0;
    for (double ang : kTorusAngles) {
      const complexd z = unit_phase(ang);
      d = std::max(d, std::abs(apply_torus(*ta, z) - apply_torus(tb, z)));
    }
    return d;
  }
  const auto& wa = std::get<WeylOp>(a);
  const auto& wb = std::get<WeylOp>(b);
  double d = 0;
  for (double q : kWeylQ) d = std::max(d, std::abs(apply_weyl(wa, q) - apply_weyl(wb, q)));
  return d;
}

double uv_unitarity_defect(const UnitaryValue& u) {
  if (const auto* p = std::get_if<Phase>(&u)) return std::fabs(std::abs(p->c) - 1);
  if (const auto* m = std::get_if<MatrixOp>(&u)) return unitarity_defect(m->m);
  if (const auto* t = std::get_if<TorusOp>(&u))
    return std::fabs(std::abs(t->phase) - 1) + std::fabs(std::abs(t->rot) - 1);
  const auto& w = std::get<WeylOp>(u);
  return std::fabs(std::abs(w.phase) - 1);
}

std::vector<complexd> uv_apply_vec(const UnitaryValue& u, const std::vector<complexd>& f) {
  if (const auto* p = std::get_if<Phase>(&u)) {
    std::vector<complexd> r = f;
    for (auto& e : r) e *= p->c;
    return r;
  }
  if (const auto* m = std::get_if<MatrixOp>(&u)) return m->m * f;
  throw std::invalid_argument("uv_apply_vec: operand does not act on a finite fiber");
}

}  // namespace galrep
