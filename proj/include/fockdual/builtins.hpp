#pragma once

// Named test instances.

#include <string>
#include <vector>

#include "fockdual/bimodule.hpp"

namespace fockdual::builtins {

/// A = C, X = C with the standard structure.
Bimodule scalar();
/// A_alpha over C + C with alpha the coordinate swap.
Bimodule swap();
/// A_alpha over M_2(C) with alpha = Ad diag(1, i).
Bimodule matrix();
/// X = C over C + C with a.x = a_1 x, x.a = x a_2; full on neither side.
Bimodule half();

/// The scalar bimodule with <x,y>_L doubled; breaks compatibility.
Bimodule scaled_left_product();
/// A copy of x whose right action is multiplied by `factor`.
Bimodule with_scaled_right_action(const Bimodule& x, double factor);

Automorphism swap_automorphism();
Automorphism matrix_automorphism();

const std::vector<std::string>& names();
/// Throws std::invalid_argument for unknown names.
Bimodule by_name(const std::string& name);

}  // namespace fockdual::builtins
