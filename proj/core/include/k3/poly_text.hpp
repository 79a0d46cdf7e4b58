#pragma once

#include <string>
#include <string_view>

#include "k3/binary_form.hpp"
#include "k3/multipoly.hpp"

namespace k3 {

/// Canonical text form: `c * v^e * ...` terms in graded-lex order joined by " + ".
///
/// Every term carries its coefficient (decimal or p/q), exponents of 1 are
/// omitted, and the zero polynomial prints as "0". parse_poly reads this
/// back exactly and additionally accepts " - " between terms and bare monomials.
std::string format_poly(const MultiPoly& p);

/// Throws PreconditionError on syntax errors or unknown variables.
MultiPoly parse_poly(std::string_view text, VariableTablePtr vars, CoeffRing ring);

/// The variable table {x, w} (unit weights) used for printing binary forms.
VariableTablePtr binary_variables();

MultiPoly form_to_poly(const BinaryForm<Scalar>& f);
std::string format_form(const BinaryForm<Scalar>& f);

}  // namespace k3
