#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "twistkit/presentation.hpp"

namespace twistkit {

// Built-in presentations, ready to twist:
//   poly_ring                 commutative k[x_1..x_n] graded by Z^n   (n)
//   torus                     Laurent polynomials, x_i y_i = 1        (n)
//   tetrahedron               k[x,y,z]/(p_1 p_2 p_3 p_4), Klein degrees
//   sl2_coord                 coordinate algebra of SL(2) with its coproduct
//   u_sl2                     enveloping algebra of sl2, [a,b] = -2h
//   u_sl2_xyz                 the twisted enveloping algebra in X, Y, Z form
//   poly_ring_root_of_unity   k[x_1..x_n] graded by (Z/r)^n           (r, n, alpha)
// Entries that come with a distinguished twisting datum carry it in the
// cocycle field.
GradedPresentation catalog(const std::string& name, const nlohmann::json& params =
                                                        nlohmann::json::object());

const std::vector<std::string>& catalog_names();

}  // namespace twistkit
