#pragma once
#include "galrep/galilei.hpp"
#include "galrep/unitary.hpp"

namespace galrep {

// spin-s rotation matrix D^(s)(A), s = two_s / 2, basis ordered m = s .. -s.
// Built from the action on homogeneous polynomials of degree 2s, so
// D^(1/2)(A) = A exactly and D is a homomorphism by construction.
// two_s is capped at 25 (factorial-accuracy guard).
CMatrix wigner_d(int two_s, const SU2Element& A);

inline int wigner_dim(int two_s) { return two_s + 1; }

}  // namespace galrep
