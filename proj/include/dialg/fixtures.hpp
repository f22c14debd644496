#pragma once

#include "dialg/dialgebra.hpp"

#include <string>
#include <vector>

namespace dialg {

// Bundled example dialgebras: zero1..zero3 (zero products), kx2 (the
// associative algebra K[x]/(x²) with ⊣ = ⊢), barunit2/barunit3 (the
// inner-product family a ⊣ b = ⟨b,e⟩a, a ⊢ b = ⟨a,e⟩b with e = e1).
const std::vector<std::string>& fixture_names();
bool is_fixture_name(const std::string& name);
Dialgebra fixture(const std::string& name);

} // namespace dialg
