#pragma once

#include <string>

#include "groth/expansion.hpp"
#include "groth/insertion.hpp"
#include "groth/quiver.hpp"

namespace groth {

// Aligned text grids; set-valued cells are braced, e.g. {1,2}.
std::string render(const IncreasingTableau& t);
std::string render(const DecreasingTableau& t);
std::string render(const SetValuedTableau& t);
std::string render(const Expansion& e);
std::string render(const SparsePolynomial& p);
std::string render(const QuiverExpansion& e);
std::string render_shape_text(const Partition& p);

}  // namespace groth
