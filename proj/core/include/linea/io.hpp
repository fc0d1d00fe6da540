#pragma once

#include <json.hpp>

#include "linea/betti.hpp"
#include "linea/koszul.hpp"

namespace linea {

using Json = nlohmann::ordered_json;

Json ideal_to_json(const Ideal& I);
Ideal ideal_from_json(const Json& j);

Json arrangement_to_json(const LineArrangement& A);
LineArrangement arrangement_from_json(const Json& j);

Json filtration_to_json(const Filtration& F);
/// nvars inferred from the forms when not supplied (the maximal ideal
/// mentions every variable).
Filtration filtration_from_json(const Json& j, int nvars = 0);

Json betti_to_json(const BettiTable& t);
Json profile_to_json(const HilbertProfile& p);
Json classification_to_json(const Classification& c);
Json filtration_report_to_json(const FiltrationReport& r);
Json claims_report_to_json(const ClaimsReport& r);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace linea
