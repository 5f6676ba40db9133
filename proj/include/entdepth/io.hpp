#pragma once

#include <string>

#include "json.hpp"

#include "entdepth/bounds.hpp"
#include "entdepth/classify.hpp"
#include "entdepth/qstate.hpp"

namespace entdepth {

/// {"n": 10, "members": [{"p": 0.5, "parts": [4,3,2,1]}, ...]}
Ensemble ensemble_from_json(const nlohmann::json& j);
nlohmann::json ensemble_to_json(const Ensemble& e);

/// State specs:
///   {"kind":"ghz_product","parts":[4,3,2,1]}
///   {"kind":"mixture","terms":[{"w":0.1,"state":{...}}, ...]}
/// A mixture's terms must be ghz_product states; the parsed result carries
/// the separability certificate alongside the state.
struct ParsedState {
    bool pure = false;
    int n = 0;
    // exactly one of the two is meaningful, per `pure`
    std::shared_ptr<StateVector> psi;
    std::shared_ptr<DensityMatrix> rho;
    Ensemble certificate;
};

ParsedState state_from_json(const nlohmann::json& j);

nlohmann::json bound_table_to_json(const BoundTable& t);
nlohmann::json usefulness_to_json(const UsefulnessReport& r);
nlohmann::json criterion_to_json(const CriterionReport& r);

/// Fixed numeric text: integers without exponent, reals with 12 significant
/// digits and '.' decimal separator.
std::string format_real(double v);
std::string format_level(const GenFun& f, double k);

std::string bound_table_to_csv(const BoundTable& t);

}  // namespace entdepth
