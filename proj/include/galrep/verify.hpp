#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galrep/reps.hpp"
#include "galrep/sampling.hpp"

namespace galrep {

using FiberVal = std::vector<complexd>;

inline double val_dist(const FiberVal& a, const FiberVal& b) {
  double m = 0;
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

struct SweepConfig {
  std::uint64_t seed = 42;
  int pairs = 1000;
  int points = 100;
  std::optional<double> tol_override;  // replaces every per-check tolerance when set
  bool verbatim = false;               // uncorrected legacy phases (documented failure mode)
};

struct CheckResult {
  std::string name;
  double residual = 0;
  double tol = 0;
  bool pass = false;
};

struct CaseReport {
  std::string name;
  std::vector<std::pair<std::string, double>> params;
  std::vector<CheckResult> checks;
  bool pass = true;
  double elapsed_ms = 0;
};

// parameter bag for the CLI; each case reads the fields it uses
struct CaseParams {
  double tau = 1;
  double F = 1;
  double S = 1;
  double r = kTwoPi;
  double rho = 0;
  double s = 0.5;
  double t = 0.7;
  double lambda = 0.25;
};

std::vector<std::string> catalogue_names();
CaseReport run_catalogue_case(const std::string& name, const SweepConfig& cfg);
CaseReport run_case(const std::string& case_name, const CaseParams& p, const SweepConfig& cfg);

// standalone operator-family sweeps
double weyl_relation_residual(double F, Rng& rng, int pairs);
double torus_relation_residual(double k, double lambda, Rng& rng, int pairs);
double torus_intertwiner_residual(double k, double lambda, Rng& rng);

// ---- case adapters ---------------------------------------------------------
// Uniform surface over the catalogue entries so the sweep drivers below can
// be written once. `apply_full` is the representation of the whole covering
// group; `apply_homog` the induced operator of the homogeneous part.

struct AdapterG3 {
  using G = Gal3Element;
  using Chart = Vec3;
  using Sample = Vec3;
  using AVec = Vec3;
  using Wave = Wave3;
  static constexpr bool has_connection = true;

  CaseG3 c;
  PointedOrbit<G, Chart> po;
  CocycleFn<G, Chart> phi;
  StabRep<G> D;
  bool kernel_scalar_valid = true;

  explicit AdapterG3(const CaseG3& cc);

  G random_full(Rng& r) const { return random_gal3(r); }
  G random_homog(Rng& r) const { return random_gal3_homog(r); }
  G random_stab(Rng& r) const { return {random_su2(r), {0, 0, 0}, 0, {0, 0, 0}}; }
  complexd mult_full(const G& a, const G& b) const { return m_tau(c.tau, a, b); }
  Wave apply_full(const G& g, Wave f) const { return apply_V3(c, g, std::move(f)); }
  Wave apply_homog(const G& g, Wave f) const { return induced_vec(phi, po, g, std::move(f)); }
  Wave apply_U(const G& h, Wave f) const { return apply_U3(c, h, std::move(f)); }
  Wave apply_W(double eta, const AVec& a, Wave f) const {
    return apply_W3(c, eta, a, std::move(f));
  }
  Wave project(const BorelSet<Chart>& E, Wave f) const { return project_vec(E, std::move(f)); }
  FiberVal eval(const Wave& w, const Sample& s) const { return w(s); }
  Chart chart_of(const Sample& s) const { return s; }
  Chart random_chart(Rng& r) const { return r.vec3(-2, 2); }
  Sample random_sample(Rng& r) const { return random_chart(r); }
  Wave random_wave(Rng& r) const { return packet3(c.two_s + 1, r); }
  std::pair<double, AVec> generator(const Sample& p) const {
    return {(norm2(p) - c.rho) / (2 * c.tau), p};
  }
  complexd conn_phase(const G& h, double eta, const AVec& a) const {
    return unit_phase(c.tau * (dot(h.v, su2_delta(h.A) * a) + 0.5 * eta * norm2(h.v)));
  }
  std::pair<double, AVec> conn_transformed(const G& h, double eta, const AVec& a) const {
    return {eta, su2_delta(h.A) * a + eta * h.v};
  }
  BorelSet<Chart> random_box(Rng& r) const;
  std::vector<std::pair<G, complexd>> kernels() const {
    const G k{SU2Element{-1, 0, 0, 0}, {0, 0, 0}, 0, {0, 0, 0}};
    return {{k, (c.two_s % 2 == 0) ? complexd(1) : complexd(-1)}};
  }
  std::pair<double, double> modulus_pair(const G& g, const Wave& f, const Wave& vf,
                                         const Sample& s) const;
};

struct AdapterA2 {
  using G = Gal2Element;
  using Chart = Vec2;
  using Sample = Vec2;
  using AVec = Vec2;
  using Wave = WaveA2;
  static constexpr bool has_connection = true;

  CaseA2 c;
  PointedOrbit<G, Chart> po;
  CocycleFn<G, Chart> phi;
  StabRep<G> D;
  bool kernel_scalar_valid = true;

  explicit AdapterA2(const CaseA2& cc);

  G random_full(Rng& r) const { return random_gal2(r); }
  G random_homog(Rng& r) const { return random_gal2_homog(r); }
  G random_stab(Rng& r) const { return {r.uniform(-4, 4), {0, 0}, 0, {0, 0}}; }
  complexd mult_full(const G& a, const G& b) const { return m_tfs({c.tau, c.F, 0}, a, b); }
  Wave apply_full(const G& g, Wave f) const { return apply_V2_caseA(c, g, std::move(f)); }
  Wave apply_homog(const G& g, Wave f) const { return induced_scalar(phi, po, g, std::move(f)); }
  Wave apply_U(const G& h, Wave f) const { return apply_U2_caseA(c, h, std::move(f)); }
  Wave apply_W(double eta, const AVec& a, Wave f) const {
    return apply_W2_caseA(c, eta, a, std::move(f));
  }
  Wave project(const BorelSet<Chart>& E, Wave f) const {
    return [E, f = std::move(f)](const Chart& x) { return E(x) ? f(x) : complexd(0); };
  }
  FiberVal eval(const Wave& w, const Sample& s) const { return {w(s)}; }
  Chart chart_of(const Sample& s) const { return s; }
  Chart random_chart(Rng& r) const { return r.vec2(-2, 2); }
  Sample random_sample(Rng& r) const { return random_chart(r); }
  Wave random_wave(Rng& r) const { return packetA2(r); }
  std::pair<double, AVec> generator(const Sample& p) const {
    return {(norm2(p) - c.rho) / (2 * c.tau), p};
  }
  complexd conn_phase(const G& h, double eta, const AVec& a) const {
    return unit_phase(c.tau * (dot(h.v, rot2_delta(h.x) * a) + 0.5 * eta * norm2(h.v)));
  }
  std::pair<double, AVec> conn_transformed(const G& h, double eta, const AVec& a) const {
    return {eta, rot2_delta(h.x) * a + eta * h.v};
  }
  BorelSet<Chart> random_box(Rng& r) const;
  std::vector<std::pair<G, complexd>> kernels() const;
  std::pair<double, double> modulus_pair(const G& g, const Wave& f, const Wave& vf,
                                         const Sample& s) const;
};

struct AdapterB2 {
  using G = Gal2Element;
  using Chart = MomentumPoint2;
  using Sample = MomentumPoint2;
  using AVec = Vec2;
  using Wave = WaveB2;
  static constexpr bool has_connection = true;

  CaseB2 c;
  PointedOrbit<G, Chart> po;
  CocycleFn<G, Chart> phi;
  StabRep<G> D;
  bool kernel_scalar_valid = false;  // S != 0: kernel elements translate p0

  explicit AdapterB2(const CaseB2& cc);

  G random_full(Rng& r) const { return random_gal2(r); }
  G random_homog(Rng& r) const { return random_gal2_homog(r); }
  G random_stab(Rng&) const { return Gal2Element::identity(); }
  complexd mult_full(const G& a, const G& b) const { return m_tfs({c.tau, c.F, c.S}, a, b); }
  Wave apply_full(const G& g, Wave f) const { return apply_V2_caseB(c, g, std::move(f)); }
  Wave apply_homog(const G& g, Wave f) const { return induced_scalar(phi, po, g, std::move(f)); }
  Wave apply_U(const G& h, Wave f) const { return apply_U2_caseB(c, h, std::move(f)); }
  Wave apply_W(double eta, const AVec& a, Wave f) const {
    return apply_W2_caseB(c, eta, a, std::move(f));
  }
  Wave project(const BorelSet<Chart>& E, Wave f) const {
    return [E, f = std::move(f)](const Chart& x) { return E(x) ? f(x) : complexd(0); };
  }
  FiberVal eval(const Wave& w, const Sample& s) const { return {w(s)}; }
  Chart chart_of(const Sample& s) const { return s; }
  Chart random_chart(Rng& r) const { return {r.uniform(-2, 2), r.vec2(-2, 2)}; }
  Sample random_sample(Rng& r) const { return random_chart(r); }
  Wave random_wave(Rng& r) const { return packetB2(r); }
  std::pair<double, AVec> generator(const Sample& pt) const { return {pt.p0, pt.p}; }
  complexd conn_phase(const G& h, double eta, const AVec& a) const {
    return unit_phase(c.tau * (dot(h.v, rot2_delta(h.x) * a) + 0.5 * eta * norm2(h.v)) +
                      c.S * eta * h.x);
  }
  std::pair<double, AVec> conn_transformed(const G& h, double eta, const AVec& a) const {
    return {eta, rot2_delta(h.x) * a + eta * h.v};
  }
  BorelSet<Chart> random_box(Rng& r) const;
  std::vector<std::pair<G, complexd>> kernels() const;
  std::pair<double, double> modulus_pair(const G& g, const Wave& f, const Wave& vf,
                                         const Sample& s) const;
};

struct AdapterC2i {
  using G = Gal2Element;
  using Chart = ChartCyl;
  using Sample = ChartCyl;
  using AVec = Vec2;
  using Wave = WaveCyl;
  static constexpr bool has_connection = false;

  SystemC2i sys;
  PointedOrbit<G, Chart> po;
  CocycleFn<G, Chart> phi;
  StabRep<G> D;
  bool kernel_scalar_valid = false;

  explicit AdapterC2i(const CaseC2i& cc);

  G random_full(Rng& r) const { return random_gal2(r); }
  G random_homog(Rng& r) const { return random_gal2_homog(r); }
  G random_stab(Rng& r) const {
    return embed_torus_line(sys.orbit, r.uniform_int(-2, 2), r.uniform(-2, 2));
  }
  complexd mult_full(const G& a, const G& b) const {
    return m_tfs({0, sys.c.F, sys.c.S}, a, b);
  }
  Wave apply_full(const G& g, Wave f) const { return apply_V2_caseCi(sys, g, std::move(f)); }
  Wave apply_homog(const G& g, Wave f) const { return apply_U2_caseCi(sys, g, std::move(f)); }
  Wave apply_W(double eta, const AVec& a, Wave f) const {
    return apply_W2_cyl(sys.c.r, eta, a, std::move(f));
  }
  Wave project(const BorelSet<Chart>& E, Wave f) const {
    return [E, f = std::move(f)](const Chart& x) { return E(x) ? f(x) : complexd(0); };
  }
  FiberVal eval(const Wave& w, const Sample& s) const { return {w(s)}; }
  Chart chart_of(const Sample& s) const { return s; }
  Chart random_chart(Rng& r) const { return {r.uniform(-2, 2), r.uniform(0, kTwoPi)}; }
  Sample random_sample(Rng& r) const { return random_chart(r); }
  Wave random_wave(Rng& r) const { return packet_cyl(r); }
  std::pair<double, AVec> generator(const Sample& s) const {
    return {s.p0, cyl_to_momentum(sys.c.r, s).p};
  }
  BorelSet<Chart> random_box(Rng& r) const;
  std::vector<std::pair<G, complexd>> kernels() const;
  std::pair<double, double> modulus_pair(const G& g, const Wave& f, const Wave& vf,
                                         const Sample& s) const;
};

struct AdapterC2ii {
  using G = Gal2Element;
  using Chart = ChartCyl;
  using Sample = std::pair<ChartCyl, complexd>;
  using AVec = Vec2;
  using Wave = WaveCylT;
  static constexpr bool has_connection = false;

  SystemC2ii sys;
  PointedOrbit<G, Chart> po;
  CocycleFn<G, Chart> phi;
  StabRep<G> D;
  bool kernel_scalar_valid = false;

  explicit AdapterC2ii(const CaseC2ii& cc);

  G random_full(Rng& r) const { return random_gal2(r); }
  G random_homog(Rng& r) const { return random_gal2_homog(r); }
  G random_stab(Rng& r) const {
    return embed_torus_line(sys.orbit, r.uniform_int(-2, 2), r.uniform(-2, 2));
  }
  complexd mult_full(const G& a, const G& b) const {
    return m_tfs({0, sys.c.F, sys.c.S}, a, b);
  }
  Wave apply_full(const G& g, Wave f) const { return apply_V2_caseCii(sys, g, std::move(f)); }
  Wave apply_homog(const G& g, Wave f) const { return apply_U2_caseCii(sys, g, std::move(f)); }
  Wave apply_W(double eta, const AVec& a, Wave f) const {
    return apply_W2_cylt(sys.c.r, eta, a, std::move(f));
  }
  Wave project(const BorelSet<Chart>& E, Wave f) const {
    return [E, f = std::move(f)](const Chart& x, const complexd& z) {
      return E(x) ? f(x, z) : complexd(0);
    };
  }
  FiberVal eval(const Wave& w, const Sample& s) const { return {w(s.first, s.second)}; }
  Chart chart_of(const Sample& s) const { return s.first; }
  Chart random_chart(Rng& r) const { return {r.uniform(-2, 2), r.uniform(0, kTwoPi)}; }
  Sample random_sample(Rng& r) const {
    return {random_chart(r), unit_phase(r.uniform(0, kTwoPi))};
  }
  Wave random_wave(Rng& r) const { return packet_cylt(r); }
  std::pair<double, AVec> generator(const Sample& s) const {
    return {s.first.p0, cyl_to_momentum(sys.c.r, s.first).p};
  }
  BorelSet<Chart> random_box(Rng& r) const;
  std::vector<std::pair<G, complexd>> kernels() const;
  std::pair<double, double> modulus_pair(const G& g, const Wave& f, const Wave& vf,
                                         const Sample& s) const;
};

struct AdapterD2r0 {
  using G = Gal2Element;
  using Chart = double;
  using Sample = std::pair<double, double>;  // (p0, q)
  using AVec = Vec2;
  using Wave = WaveLineQ;
  static constexpr bool has_connection = false;

  SystemD2r0 sys;
  PointedOrbit<G, Chart> po;
  CocycleFn<G, Chart> phi;
  StabRep<G> D;
  bool kernel_scalar_valid = false;

  explicit AdapterD2r0(const CaseD2r0& cc);

  G random_full(Rng& r) const { return random_gal2(r); }
  G random_homog(Rng& r) const { return random_gal2_homog(r); }
  G random_stab(Rng& r) const { return {0, r.vec2(-1.5, 1.5), 0, {0, 0}}; }
  complexd mult_full(const G& a, const G& b) const {
    return m_tfs({0, sys.c.F, sys.c.S}, a, b);
  }
  Wave apply_full(const G& g, Wave f) const { return apply_V2_caseDr0(sys, g, std::move(f)); }
  Wave apply_homog(const G& g, Wave f) const { return apply_U2_caseDr0(sys, g, std::move(f)); }
  Wave apply_W(double eta, const AVec&, Wave f) const {
    return [eta, f = std::move(f)](const double& p0, double q) {
      return unit_phase(eta * p0) * f(p0, q);
    };
  }
  Wave project(const BorelSet<Chart>& E, Wave f) const {
    return [E, f = std::move(f)](const double& p0, double q) {
      return E(p0) ? f(p0, q) : complexd(0);
    };
  }
  FiberVal eval(const Wave& w, const Sample& s) const { return {w(s.first, s.second)}; }
  Chart chart_of(const Sample& s) const { return s.first; }
  Chart random_chart(Rng& r) const { return r.uniform(-2, 2); }
  Sample random_sample(Rng& r) const { return {r.uniform(-2, 2), r.uniform(-2, 2)}; }
  Wave random_wave(Rng& r) const { return packet_lineq(r); }
  std::pair<double, AVec> generator(const Sample& s) const { return {s.first, {0, 0}}; }
  BorelSet<Chart> random_box(Rng& r) const;
  std::vector<std::pair<G, complexd>> kernels() const;
  std::pair<double, double> modulus_pair(const G& g, const Wave& f, const Wave& vf,
                                         const Sample& s) const;
};

// ---- sweep drivers ---------------------------------------------------------

template <class A>
std::vector<typename A::Sample> make_samples(const A& a, Rng& rng, int n) {
  std::vector<typename A::Sample> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(a.random_sample(rng));
  return out;
}

// |V_{g1 g2} f - m(g1,g2) V_{g1} V_{g2} f| over random pairs and fixed samples
template <class A>
double law_residual(const A& a, Rng& rng, int pairs, int points) {
  const auto samples = make_samples(a, rng, points);
  typename A::Wave f[3] = {a.random_wave(rng), a.random_wave(rng), a.random_wave(rng)};
  double res = 0;
  for (int i = 0; i < pairs; ++i) {
    const auto g1 = a.random_full(rng);
    const auto g2 = a.random_full(rng);
    const auto g12 = a.po.ops.mul(g1, g2);
    const auto& w = f[i % 3];
    const auto lhs = a.apply_full(g12, w);
    const auto rhs = a.apply_full(g1, a.apply_full(g2, w));
    const complexd m = a.mult_full(g1, g2);
    for (const auto& s : samples) {
      const auto lv = a.eval(lhs, s);
      auto rv = a.eval(rhs, s);
      for (auto& e : rv) e *= m;
      res = std::max(res, val_dist(lv, rv));
    }
  }
  return res;
}

// same, for the induced operators of the homogeneous subgroup
template <class A>
double homog_law_residual(const A& a, Rng& rng, int pairs, int points) {
  const auto samples = make_samples(a, rng, points);
  typename A::Wave f[3] = {a.random_wave(rng), a.random_wave(rng), a.random_wave(rng)};
  double res = 0;
  for (int i = 0; i < pairs; ++i) {
    const auto g1 = a.random_homog(rng);
    const auto g2 = a.random_homog(rng);
    const auto g12 = a.po.ops.mul(g1, g2);
    const auto& w = f[i % 3];
    const auto lhs = a.apply_homog(g12, w);
    const auto rhs = a.apply_homog(g1, a.apply_homog(g2, w));
    const complexd m = a.phi.mult(g1, g2);
    for (const auto& s : samples) {
      const auto lv = a.eval(lhs, s);
      auto rv = a.eval(rhs, s);
      for (auto& e : rv) e *= m;
      res = std::max(res, val_dist(lv, rv));
    }
  }
  return res;
}

template <class A>
double cocycle_residual_sweep(const A& a, Rng& rng, int triples) {
  double res = 0;
  for (int i = 0; i < triples; ++i) {
    const auto g1 = a.random_homog(rng);
    const auto g2 = a.random_homog(rng);
    const auto x = a.random_chart(rng);
    res = std::max(res, check_strict_cocycle(a.phi, a.po, g1, g2, x));
  }
  return res;
}

template <class A>
double restriction_residual(const A& a, Rng& rng, int n) {
  const auto R = restrict_to_stabilizer(a.phi, a.po);
  double res = 0;
  for (int i = 0; i < n; ++i) {
    const auto h = a.random_stab(rng);
    res = std::max(res, uv_distance(R(h), a.D(h)));
  }
  return res;
}

// pointwise agreement of the closed-form representation (restricted to the
// homogeneous subgroup) with the cocycle-induced operator
template <class A>
double closed_vs_induced_residual(const A& a, Rng& rng, int trials, int points) {
  const auto samples = make_samples(a, rng, points);
  const auto f = a.random_wave(rng);
  double res = 0;
  for (int i = 0; i < trials; ++i) {
    const auto g = a.random_homog(rng);
    const auto u1 = a.apply_full(g, f);
    const auto u2 = a.apply_homog(g, f);
    for (const auto& s : samples)
      res = std::max(res, val_dist(a.eval(u1, s), a.eval(u2, s)));
  }
  return res;
}

// U_g P_E U_g^{-1} = P_{g.E} probed lazily through chi_E(g^{-1} x)
template <class A>
double imprimitivity_residual(const A& a, Rng& rng, int trials, int points) {
  const auto samples = make_samples(a, rng, points);
  double res = 0;
  for (int i = 0; i < trials; ++i) {
    const auto g = a.random_homog(rng);
    const auto E = a.random_box(rng);
    const auto f = a.random_wave(rng);
    const auto ginv = a.po.ops.inv(g);
    const complexd scale = a.phi.mult(g, ginv);
    const auto conj = a.apply_homog(g, a.project(E, a.apply_homog(ginv, f)));
    for (const auto& s : samples) {
      const double chi = E(a.po.act(ginv, a.chart_of(s))) ? 1.0 : 0.0;
      const auto lv = a.eval(conj, s);
      const auto rv = a.eval(f, s);
      for (size_t j = 0; j < rv.size(); ++j)
        res = std::max(res, std::abs(scale * lv[j] - chi * rv[j]));
    }
  }
  return res;
}

// covering-kernel elements must act as the expected constant unit scalar
template <class A>
double kernel_scalar_residual(const A& a, Rng& rng, int points) {
  const auto samples = make_samples(a, rng, points);
  const auto f = a.random_wave(rng);
  double res = 0;
  for (const auto& [g0, lam] : a.kernels()) {
    res = std::max(res, std::fabs(std::abs(lam) - 1));
    const auto vf = a.apply_full(g0, f);
    for (const auto& s : samples) {
      const auto lv = a.eval(vf, s);
      const auto rv = a.eval(f, s);
      for (size_t j = 0; j < rv.size(); ++j)
        res = std::max(res, std::abs(lv[j] - lam * rv[j]));
    }
  }
  return res;
}

// finite-difference check of the abelian generators:
// (W_{eta,a} f)(xi) = exp{i (p0(xi) eta + p(xi).a)} f(xi)
template <class A>
double snag_residual(const A& a, Rng& rng, int points, double h = 1e-5) {
  const auto samples = make_samples(a, rng, points);
  const auto f = a.random_wave(rng);
  using AVec = typename A::AVec;
  constexpr int adim = std::is_same_v<AVec, Vec2> ? 2 : 3;
  double res = 0;
  auto fd = [&](const typename A::Wave& wp, const typename A::Wave& wm,
                const typename A::Sample& s, complexd expect) {
    const auto vp = a.eval(wp, s);
    const auto vm = a.eval(wm, s);
    const auto v0 = a.eval(f, s);
    for (size_t j = 0; j < v0.size(); ++j) {
      const complexd d = (vp[j] - vm[j]) / (2 * h);
      res = std::max(res, std::abs(d - expect * v0[j]));
    }
  };
  const AVec zero{};
  const auto wp_eta = a.apply_W(h, zero, f);
  const auto wm_eta = a.apply_W(-h, zero, f);
  std::vector<typename A::Wave> wp_a, wm_a;
  for (int k = 0; k < adim; ++k) {
    AVec e{};
    if constexpr (std::is_same_v<AVec, Vec2>) {
      (k == 0 ? e.x : e.y) = h;
    } else {
      (k == 0 ? e.x : (k == 1 ? e.y : e.z)) = h;
    }
    wp_a.push_back(a.apply_W(0, e, f));
    AVec em{};
    if constexpr (std::is_same_v<AVec, Vec2>) {
      (k == 0 ? em.x : em.y) = -h;
    } else {
      (k == 0 ? em.x : (k == 1 ? em.y : em.z)) = -h;
    }
    wm_a.push_back(a.apply_W(0, em, f));
  }
  for (const auto& s : samples) {
    const auto [g0, gv] = a.generator(s);
    fd(wp_eta, wm_eta, s, complexd(0, g0));
    double comps[3] = {0, 0, 0};
    if constexpr (std::is_same_v<AVec, Vec2>) {
      comps[0] = gv.x;
      comps[1] = gv.y;
    } else {
      comps[0] = gv.x;
      comps[1] = gv.y;
      comps[2] = gv.z;
    }
    for (int k = 0; k < adim; ++k) fd(wp_a[k], wm_a[k], s, complexd(0, comps[k]));
  }
  return res;
}

// | |(V_g f)(s)| - |f at the transported point| |
template <class A>
double modulus_residual(const A& a, Rng& rng, int trials, int points) {
  const auto samples = make_samples(a, rng, points);
  const auto f = a.random_wave(rng);
  double res = 0;
  for (int i = 0; i < trials; ++i) {
    const auto g = a.random_homog(rng);
    const auto vf = a.apply_homog(g, f);
    for (const auto& s : samples) {
      const auto [lhs, rhs] = a.modulus_pair(g, f, vf, s);
      res = std::max(res, std::fabs(lhs - rhs));
    }
  }
  return res;
}

// U_h W_{eta,a} U_h^{-1} = conn_phase(h,eta,a) W at the transformed argument
template <class A>
double connection_residual(const A& a, Rng& rng, int trials, int points) {
  static_assert(A::has_connection);
  const auto samples = make_samples(a, rng, points);
  const auto f = a.random_wave(rng);
  double res = 0;
  for (int i = 0; i < trials; ++i) {
    const auto h = a.random_homog(rng);
    const double eta = rng.uniform(-1.5, 1.5);
    typename A::AVec av{};
    if constexpr (std::is_same_v<typename A::AVec, Vec2>) {
      av = rng.vec2(-1.5, 1.5);
    } else {
      av = rng.vec3(-1.5, 1.5);
    }
    const auto lhs = a.apply_U(h, a.apply_W(eta, av, a.apply_U(a.po.ops.inv(h), f)));
    const auto [eta2, av2] = a.conn_transformed(h, eta, av);
    const complexd ph = a.conn_phase(h, eta, av);
    const auto rhs = a.apply_W(eta2, av2, f);
    for (const auto& s : samples) {
      const auto lv = a.eval(lhs, s);
      auto rv = a.eval(rhs, s);
      for (auto& e : rv) e *= ph;
      res = std::max(res, val_dist(lv, rv));
    }
  }
  return res;
}

// deterministic phase jitter; breaks strictness by about eps (detector control)
template <class G, class X>
CocycleFn<G, X> jitter_cocycle(const CocycleFn<G, X>& phi, const PointedOrbit<G, X>& po,
                               double eps) {
  auto eval = [phi, po, eps](const G& g, const X& x) {
    const double d1 = po.dist(x, po.base);
    const double d2 = po.dist(po.act(g, x), po.base);
    return uv_scale(unit_phase(eps * std::sin(73.1 * d1 + 31.7 * d2)), phi.eval(g, x));
  };
  return {std::move(eval), phi.mult};
}

}  // namespace galrep
