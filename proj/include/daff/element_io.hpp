#pragma once

#include <string>
#include <string_view>

#include "daff/double_affine.hpp"

namespace daff {

/*
  Text forms (whitespace is ignored on input):

    element := "X[" weight "]" ( "Y[" intvec "]" )? word?
    weight  := ( "w:" )? intvec ";" int ";" int    mu, m, l
    word    := ( "s" digit )+                      finite simple reflections
    root    := intvec ";" int ";" int              nu, r, j

  mu is read in simple-root coordinates unless prefixed by "w:", which
  switches to fundamental-weight coordinates. A lone "0" stands for the zero
  vector. Output is canonical: mu in simple-root coordinates whenever it lies
  in the root lattice, Y omitted for lambda = 0, and the word is the
  lexicographically first reduced word (omitted for the identity).
*/
SemigroupElement parse_element(const RootSystem& system, std::string_view text);
DoubleAffineRoot parse_root(const RootSystem& system, std::string_view text);
IntVec parse_intvec(const RootSystem& system, std::string_view text);

std::string format_element(const SemigroupElement& x);
std::string format_weight(const AffineWeight& zeta);
std::string format_root(const DoubleAffineRoot& root);
std::string format_affine_root(const AffineRoot& root);
std::string format_affine_element(const AffineWeylElement& w);

}  // namespace daff
