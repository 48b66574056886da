#ifndef CHARVAR_JSON_IO_HPP
#define CHARVAR_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "charvar/compactified.hpp"
#include "charvar/simplicial.hpp"
#include "charvar/stability.hpp"

namespace charvar {

// Wire formats; rationals travel as "p/q" strings.

// { "n": int, "alphas": ["p/q", ...], "matrices": [{"a": ..., "e": ...}, ...] }
nlohmann::json config_to_json(const Configuration& cfg);
Configuration config_from_json(const nlohmann::json& j, bool check_trace = true);

// { "m1": int, "m2": int, "verdict": str, "mu_min": int? }
nlohmann::json report_to_json(const StabilityReport& report);

// { "vertices": [labels], "facets": [[indices]] }
nlohmann::json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const nlohmann::json& j);

// { "reduced_betti": [ints], "torsion": [[str]] }
nlohmann::json homology_to_json(const HomologyProfile& profile);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace charvar

#endif
