#pragma once
#include <functional>
#include <span>
#include <vector>

#include "galrep/unitary.hpp"

namespace galrep {

template <class G>
struct GroupOps {
  std::function<G(const G&, const G&)> mul;
  std::function<G(const G&)> inv;
  G id;
};

// a transitive orbit with a marked base point, its action, and a Borel cross
// section normalized to section(base) = identity
template <class G, class X>
struct PointedOrbit {
  GroupOps<G> ops;
  X base;
  std::function<X(const G&, const X&)> act;
  std::function<G(const X&)> section;
  std::function<double(const X&, const X&)> dist;

  X beta(const G& g) const { return act(g, base); }
};

template <class G>
using Multiplier = std::function<complexd(const G&, const G&)>;

// stabilizer m-representation, evaluated on group elements that lie in the
// stabilizer (throws otherwise)
template <class G>
using StabRep = std::function<UnitaryValue(const G&)>;

template <class G, class X>
struct CocycleFn {
  std::function<UnitaryValue(const G&, const X&)> eval;
  Multiplier<G> mult;
};

// b(g) = m(c(beta(g))^{-1}, g)^{-1} D(a(g)) with a(g) = c(beta(g))^{-1} g;
// restricts to D on the stabilizer and satisfies b(gh) = m(g,h) b(g) b(h)
// for stabilizer h
template <class G, class X>
std::function<UnitaryValue(const G&)> build_b_map(StabRep<G> D, PointedOrbit<G, X> po,
                                                  Multiplier<G> m) {
  return [D = std::move(D), po = std::move(po), m = std::move(m)](const G& g) -> UnitaryValue {
    const G c_inv = po.ops.inv(po.section(po.beta(g)));
    const G a = po.ops.mul(c_inv, g);
    return uv_scale(1.0 / m(c_inv, g), D(a));
  };
}

// the strict cocycle
//   phi(g, x) = m(c(gx)^{-1}, g)^{-1} m(c(gx)^{-1} g c(x), c(x)^{-1})
//               D(c(gx)^{-1} g c(x))
// associated to a stabilizer m-representation D
template <class G, class X>
CocycleFn<G, X> canonical_cocycle(StabRep<G> D, PointedOrbit<G, X> po, Multiplier<G> m) {
  auto eval = [D = std::move(D), po, m](const G& g, const X& x) -> UnitaryValue {
    const X gx = po.act(g, x);
    const G cgx_inv = po.ops.inv(po.section(gx));
    const G cx = po.section(x);
    const G h = po.ops.mul(po.ops.mul(cgx_inv, g), cx);
    const complexd m1 = m(cgx_inv, g);
    const complexd m2 = m(h, po.ops.inv(cx));
    return uv_scale(m2 / m1, D(h));
  };
  return CocycleFn<G, X>{std::move(eval), std::move(m)};
}

// residual of phi(g1 g2, x) = m(g1, g2) phi(g1, g2 x) phi(g2, x)
template <class G, class X>
double check_strict_cocycle(const CocycleFn<G, X>& phi, const PointedOrbit<G, X>& po, const G& g1,
                            const G& g2, const X& x) {
  const UnitaryValue lhs = phi.eval(po.ops.mul(g1, g2), x);
  const UnitaryValue rhs =
      uv_scale(phi.mult(g1, g2), uv_mul(phi.eval(g1, po.act(g2, x)), phi.eval(g2, x)));
  return uv_distance(lhs, rhs);
}

// D(h) = phi(h, base)
template <class G, class X>
StabRep<G> restrict_to_stabilizer(const CocycleFn<G, X>& phi, const PointedOrbit<G, X>& po) {
  return [phi, base = po.base](const G& h) { return phi.eval(h, base); };
}

// ---- wavefunctions and induced operators --------------------------------
//
// Wavefunctions are immutable evaluators; operators wrap rather than sample,
// so composed operators are exact at any query point. The Radon-Nikodym
// factor is identically 1 here: every charted action preserves Lebesgue
// measure (verified as a property in the orbit tests).

template <class X>
using ScalarWave = std::function<complexd(const X&)>;
template <class X>
using VecWave = std::function<std::vector<complexd>(const X&)>;
template <class X>
using TorusWave = std::function<complexd(const X&, const complexd&)>;
template <class X>
using SchroWave = std::function<complexd(const X&, double)>;

// scalar specialization: the cocycle must be Phase-valued
template <class G, class X>
ScalarWave<X> induced_scalar(const CocycleFn<G, X>& phi, const PointedOrbit<G, X>& po, const G& g,
                             ScalarWave<X> f) {
  const G ginv = po.ops.inv(g);
  return [phi, po, g, ginv, f = std::move(f)](const X& x) -> complexd {
    const X y = po.act(ginv, x);
    return std::get<Phase>(phi.eval(g, y)).c * f(y);
  };
}

// (U_g f)(x) = phi(g, g^{-1} x) f(g^{-1} x)
template <class G, class X>
VecWave<X> induced_vec(const CocycleFn<G, X>& phi, const PointedOrbit<G, X>& po, const G& g,
                       VecWave<X> f) {
  const G ginv = po.ops.inv(g);
  return [phi, po, g, ginv, f = std::move(f)](const X& x) {
    const X y = po.act(ginv, x);
    return uv_apply_vec(phi.eval(g, y), f(y));
  };
}

template <class G, class X>
TorusWave<X> induced_torus(const CocycleFn<G, X>& phi, const PointedOrbit<G, X>& po, const G& g,
                           TorusWave<X> f) {
  const G ginv = po.ops.inv(g);
  return [phi, po, g, ginv, f = std::move(f)](const X& x, const complexd& z) -> complexd {
    const X y = po.act(ginv, x);
    const UnitaryValue u = phi.eval(g, y);
    if (const auto* p = std::get_if<Phase>(&u)) return p->c * f(y, z);
    const auto& t = std::get<TorusOp>(u);
    return t.phase * pow_int(z, t.power) * f(y, t.rot * z);
  };
}

template <class G, class X>
SchroWave<X> induced_schro(const CocycleFn<G, X>& phi, const PointedOrbit<G, X>& po, const G& g,
                           SchroWave<X> f) {
  const G ginv = po.ops.inv(g);
  return [phi, po, g, ginv, f = std::move(f)](const X& x, double q) -> complexd {
    const X y = po.act(ginv, x);
    const UnitaryValue u = phi.eval(g, y);
    if (const auto* p = std::get_if<Phase>(&u)) return p->c * f(y, q);
    const auto& w = std::get<WeylOp>(u);
    return w.phase * unit_phase(w.F * w.v.x * (q + 0.5 * w.v.y)) * f(y, q + w.v.y);
  };
}

template <class X>
using BorelSet = std::function<bool(const X&)>;

template <class X>
VecWave<X> project_vec(const BorelSet<X>& E, VecWave<X> f) {
  return [E, f = std::move(f)](const X& x) {
    auto v = f(x);
    if (!E(x))
      for (auto& e : v) e = 0;
    return v;
  };
}

// sup over samples of |m(g, g^{-1}) (U_g P_E U_{g^{-1}} f)(x) - chi_E(g^{-1} x) f(x)|;
// the image set g.E is probed lazily through chi_E(g^{-1} x)
template <class G, class X>
double check_imprimitivity(const CocycleFn<G, X>& phi, const PointedOrbit<G, X>& po, const G& g,
                           const BorelSet<X>& E, const VecWave<X>& f, std::span<const X> samples) {
  const G ginv = po.ops.inv(g);
  const complexd scale = phi.mult(g, ginv);
  VecWave<X> conj = induced_vec(phi, po, g, project_vec(E, induced_vec(phi, po, ginv, f)));
  double resid = 0;
  for (const X& x : samples) {
    const auto lhs = conj(x);
    const auto fx = f(x);
    const double chi = E(po.act(ginv, x)) ? 1.0 : 0.0;
    for (size_t i = 0; i < fx.size(); ++i)
      resid = std::max(resid, std::abs(scale * lhs[i] - chi * fx[i]));
  }
  return resid;
}

template <class G, class X>
double check_imprimitivity_scalar(const CocycleFn<G, X>& phi, const PointedOrbit<G, X>& po,
                                  const G& g, const BorelSet<X>& E, const ScalarWave<X>& f,
                                  std::span<const X> samples) {
  const G ginv = po.ops.inv(g);
  const complexd scale = phi.mult(g, ginv);
  ScalarWave<X> projected = [E, inner = induced_scalar(phi, po, ginv, f)](const X& x) {
    return E(x) ? inner(x) : complexd(0);
  };
  ScalarWave<X> conj = induced_scalar(phi, po, g, std::move(projected));
  double resid = 0;
  for (const X& x : samples) {
    const double chi = E(po.act(ginv, x)) ? 1.0 : 0.0;
    resid = std::max(resid, std::abs(scale * conj(x) - chi * f(x)));
  }
  return resid;
}

template <class G, class X>
double check_imprimitivity_torus(const CocycleFn<G, X>& phi, const PointedOrbit<G, X>& po,
                                 const G& g, const BorelSet<X>& E, const TorusWave<X>& f,
                                 std::span<const std::pair<X, complexd>> samples) {
  const G ginv = po.ops.inv(g);
  const complexd scale = phi.mult(g, ginv);
  TorusWave<X> projected = [E, inner = induced_torus(phi, po, ginv, f)](const X& x,
                                                                        const complexd& z) {
    return E(x) ? inner(x, z) : complexd(0);
  };
  TorusWave<X> conj = induced_torus(phi, po, g, std::move(projected));
  double resid = 0;
  for (const auto& [x, z] : samples) {
    const double chi = E(po.act(ginv, x)) ? 1.0 : 0.0;
    resid = std::max(resid, std::abs(scale * conj(x, z) - chi * f(x, z)));
  }
  return resid;
}

template <class G, class X>
double check_imprimitivity_schro(const CocycleFn<G, X>& phi, const PointedOrbit<G, X>& po,
                                 const G& g, const BorelSet<X>& E, const SchroWave<X>& f,
                                 std::span<const std::pair<X, double>> samples) {
  const G ginv = po.ops.inv(g);
  const complexd scale = phi.mult(g, ginv);
  SchroWave<X> projected = [E, inner = induced_schro(phi, po, ginv, f)](const X& x, double q) {
    return E(x) ? inner(x, q) : complexd(0);
  };
  SchroWave<X> conj = induced_schro(phi, po, g, std::move(projected));
  double resid = 0;
  for (const auto& [x, q] : samples) {
    const double chi = E(po.act(ginv, x)) ? 1.0 : 0.0;
    resid = std::max(resid, std::abs(scale * conj(x, q) - chi * f(x, q)));
  }
  return resid;
}

}  // namespace galrep
