#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "dpg/family.hpp"
#include "dpg/nonsym.hpp"

namespace dpg {

/// Exact value as a canonical string: in formal q when q0 = 0, else its
/// image in Q(i)(q0^{1/4}).
std::string scalar_text(const Scalar& s, long q0);

/// One row per polynomial (l_0^-, l_0^+, ..., l_{D-1}^+, l_D^-, l_D^+), one
/// column per exponent of eta from -D-1 to D. The boundary polynomials
/// l_D^± reach one step past L on either side.
std::string ell_polys_csv(const NonsymFamily& fam, long q0);
nlohmann::json ell_polys_json(const NonsymFamily& fam, long q0);

/// The four parameter sequences and their parameter arrays, as
/// "system,quantity,i,value" rows.
std::string param_arrays_csv(const Rational& e, int D, long q0);
nlohmann::json param_arrays_json(const Rational& e, int D, long q0);

/// Gram of the l_i^± under <,>_L, the expected cell sizes, the points
/// lambda_i and the weights of the form.
nlohmann::json orthogonality_json(const Instance& inst);

}  // namespace dpg
