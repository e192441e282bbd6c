#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

#include "wb/formula.hpp"

namespace wb {

using Code = boost::multiprecision::cpp_int;

struct CodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Injective numbering of formulas, invariant under renaming of bound
// variables: bound occurrences are serialized as binder depths, binder
// names are not recorded, free variables keep their names. A token
// sequence is combined into one number by exact Cantor pairing over a
// balanced tree, with the length paired on at the root (this keeps codes
// linear-size in the token count). encode(top) = 1.
Code godelEncode(const FormulaPtr& f);

// Inverts godelEncode up to alpha-equivalence; bound variables are given
// canonical names. Throws CodeError on numbers no formula encodes to.
FormulaPtr godelDecode(const Code& c);

}  // namespace wb
