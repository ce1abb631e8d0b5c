#pragma once

#include <string>

#include "gln/ktheory.hpp"
#include "gln/orbit.hpp"

namespace gln {

// All emitters carry "schema": 1 and render exact integers only.
std::string orbit_space_json(const OrbitSpace& space);
std::string matrices_json(const OrbitSpace& space, const MultiplicityMatrices& mm);
std::string square_report_json(const SquareReport& report);
std::string packet_json(Workspace& ws, const ArthurParameter& psi);
std::string lift_json(Workspace& ws, const ArthurParameter& psi,
                      const std::vector<std::vector<int>>& grouping);

}  // namespace gln
