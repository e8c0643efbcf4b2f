#pragma once

#include "cubics/poly/mat3.hpp"
#include "cubics/poly/ternary_form.hpp"

namespace cubics {

/// Left action of GL3 on forms by (g.f)(x) = f(g^{-1} x), so that
/// act(g1, act(g2, f)) = act(g1*g2, f) and zero sets transform covariantly:
/// C(g.f) = g.C(f). Both conventions appear in the literature; this library
/// uses substitution by the inverse throughout.
template <class S>
TernaryForm<S> act(const Mat3<S>& g, const TernaryForm<S>& f) {
  return f.substitute(inverse(g));
}

}  // namespace cubics
