#pragma once

#include "homlie/constructions.hpp"
#include "homlie/fixtures.hpp"

#include <json.hpp>

#include <string>

namespace homlie {

// JSON reports; the schema lives in docs/report.schema.json.

nlohmann::json vector_json(const Vector& v);
nlohmann::json subspace_json(const Subspace& s);
nlohmann::json verdict_json(const SeriesReport& report);
nlohmann::json axioms_json(const HomLieAlgebra& L, const AxiomReport& report);
nlohmann::json series_json(const SeriesReport& report);
nlohmann::json class_json(const std::string& notion, const SeriesReport& report);
nlohmann::json morphism_json(const MorphismVerdict& verdict);
nlohmann::json algebra_json(const std::string& name, const HomLieAlgebra& L);

// Human-readable reports.

/// "span{e1 + e2, e3}" in the algebra's basis names, or "0".
std::string format_subspace(const Subspace& s, const std::vector<std::string>& names);
std::string format_axioms(const HomLieAlgebra& L, const AxiomReport& report);
std::string format_series(const std::string& name, const HomLieAlgebra& L, const SeriesReport& report);
/// "solvable: class 3" / "not nilpotent (stabilized at dim 1)".
std::string format_class(const std::string& notion, const SeriesReport& report);
std::string format_morphism(const LinearMap& f, const MorphismVerdict& verdict);

} // namespace homlie
