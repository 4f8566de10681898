#include "galrep/wigner.hpp"

namespace galrep {

namespace {

constexpr int kMaxTwoS = 25;

// factorials 0! .. 25!, correctly rounded doubles
const double kFact[kMaxTwoS + 1] = {
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362880.0,
    3628800.0,
    39916800.0,
    479001600.0,
    6227020800.0,
    87178291200.0,
    1307674368000.0,
    20922789888000.0,
    355687428096000.0,
    6402373705728000.0,
    121645100408832000.0,
    2432902008176640000.0,
    51090942171709440000.0,
    1124000727777607680000.0,
    25852016738884976640000.0,
    620448401733239439360000.0,
    15511210043330985984000000.0};

}  // namespace

CMatrix wigner_d(int two_s, const SU2Element& A) {
  if (two_s < 0 || two_s > kMaxTwoS)
    throw std::invalid_argument("wigner_d: spin out of range (0 <= 2s <= 25)");
  const auto U = A.matrix();  // {U00, U01, U10, U11}
  const int dim = two_s + 1;
  CMatrix D(dim);

  // powers of the four entries up to 2s
  std::vector<complexd> p00(dim + 1), p01(dim + 1), p10(dim + 1), p11(dim + 1);
  p00[0] = p01[0] = p10[0] = p11[0] = 1;
  for (int k = 1; k <= two_s; ++k) {
    p00[k] = p00[k - 1] * U[0];
    p01[k] = p01[k - 1] * U[1];
    p10[k] = p10[k - 1] * U[2];
    p11[k] = p11[k - 1] * U[3];
  }

  // column c carries m = s - c, row rp carries m' = s - rp; with
  // a = s + m = two_s - c and ap = s + m' = two_s - rp:
  //   D_{m'm} = sqrt(ap! bp! / (a! b!)) *
  //             sum_j C(a, j) C(b, ap - j) U00^j U10^{a-j} U01^{ap-j} U11^{j-a-ap+2s}
  for (int c = 0; c < dim; ++c) {
    const int a = two_s - c;
    const int b = c;
    for (int rp = 0; rp < dim; ++rp) {
      const int ap = two_s - rp;
      const int bp = rp;
      const double pref = std::sqrt(kFact[ap] * kFact[bp] / (kFact[a] * kFact[b]));
      const int jlo = std::max(0, a + ap - two_s);
      const int jhi = std::min(a, ap);
      complexd sum = 0;
      for (int j = jlo; j <= jhi; ++j) {
        const double binom = (kFact[a] / (kFact[j] * kFact[a - j])) *
                             (kFact[b] / (kFact[ap - j] * kFact[b - ap + j]));
        sum += binom * p00[j] * p10[a - j] * p01[ap - j] * p11[j - a - ap + two_s];
      }
      D.at(rp, c) = pref * sum;
    }
  }
  return D;
}

}  // namespace galrep
