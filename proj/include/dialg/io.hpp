#pragma once

#include "dialg/cochain.hpp"
#include "dialg/deformation.hpp"
#include "dialg/dialgebra.hpp"
#include "dialg/localalg.hpp"
#include "dialg/miniversal.hpp"
#include "dialg/obstruction.hpp"
#include "dialg/polyquot.hpp"

#include <json.hpp>

#include <string>

namespace dialg {

using Json = nlohmann::json;

// Rationals travel as "p/q" strings; integer inputs are also accepted.
Json rat_json(const Rat& q);
Rat rat_from_json(const Json& j);

Json dialgebra_to_json(const Dialgebra& d);
Dialgebra dialgebra_from_json(const Json& j, bool check = true);

Json cochain_to_json(const Cochain& f);
Cochain cochain_from_json(const Json& j, int dim);

Json local_algebra_to_json(const LocalAlgebra& a);
LocalAlgebra local_algebra_from_json(const Json& j);

Json polyquot_to_json(const PolyQuotient& q);
PolyQuotient polyquot_from_json(const Json& j);

// base is either a LocalAlgebra document ("mideal_basis") or a PolyQuotient
// document ("vars"); the dialgebra is inline, a file path, or omitted when a
// context dialgebra is supplied.
Json deformation_law_to_json(const DeformationLaw& law);
DeformationLaw deformation_law_from_json(const Json& j, bool check = true,
                                         const Dialgebra* context = nullptr);

Json sym_bilinear_to_json(const SymBilinear& f);
SymBilinear sym_bilinear_from_json(const Json& j, int r);

Json obstruction_report(const ObstructionResult& result);
Json miniversal_report(const MiniversalState& state);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
std::string dump_json(const Json& j);

} // namespace dialg
