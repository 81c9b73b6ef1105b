// The Wagner-Preston representation: every finite inverse semigroup S acts
// faithfully on itself by the partial bijections lambda_a : x -> ax with
// domain d(a)S.

#ifndef INVSG_WAGNER_PRESTON_HPP_
#define INVSG_WAGNER_PRESTON_HPP_

#include "invsg/closure.hpp"
#include "invsg/homomorphism.hpp"
#include "invsg/semigroup.hpp"

namespace invsg {

struct WagnerPreston {
  ConcreteSemigroup image;   // partial bijections on |S| points (point i+1 is element i)
  Homomorphism      lambda;  // S -> image.semigroup
};

//! lambda_a as a partial bijection of degree |S|.
PartialBijection left_translation(FiniteInverseSemigroup const& s, Element a);

WagnerPreston wagner_preston(SemigroupPtr const& s);

}  // namespace invsg

#endif  // INVSG_WAGNER_PRESTON_HPP_
