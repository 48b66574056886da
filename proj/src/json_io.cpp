#include "charvar/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace charvar {

namespace {

Rational rational_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string())
        throw std::runtime_error(std::string("matrix entry needs a string field \"") + key + "\"");
    return Rational::from_string(j.at(key).get<std::string>());
}

}  // namespace

nlohmann::json config_to_json(const Configuration& cfg) {
    nlohmann::json j;
    j["n"] = cfg.n();
    nlohmann::json alphas = nlohmann::json::array();
    for (const auto& e : cfg.eigen()) alphas.push_back(e.alpha.str());
    j["alphas"] = std::move(alphas);
    nlohmann::json matrices = nlohmann::json::array();
    for (const auto& m : cfg.mats()) {
        nlohmann::json entry;
        entry["a"] = m.a().get_str();
        entry["b"] = m.b().get_str();
        entry["c"] = m.c().get_str();
        entry["d"] = m.d().get_str();
        entry["e"] = m.e().get_str();
        matrices.push_back(std::move(entry));
    }
    j["matrices"] = std::move(matrices);
    return j;
}

Configuration config_from_json(const nlohmann::json& j, bool check_trace) {
    if (!j.is_object() || !j.contains("n") || !j.contains("alphas") || !j.contains("matrices"))
        throw std::runtime_error("configuration JSON needs fields n, alphas, matrices");
    if (!j.at("n").is_number_integer()) throw std::runtime_error("field n must be an integer");
    const auto n = j.at("n").get<long>();
    const auto& alphas = j.at("alphas");
    const auto& matrices = j.at("matrices");
    if (!alphas.is_array() || !matrices.is_array())
        throw std::runtime_error("fields alphas and matrices must be arrays");
    if (static_cast<long>(alphas.size()) != n)
        throw std::runtime_error("alpha count must equal n");
    if (static_cast<long>(matrices.size()) + 1 != n)
        throw std::runtime_error("matrix count must equal n minus one");

    std::vector<EigenvalueData> eigen;
    eigen.reserve(alphas.size());
    for (const auto& a : alphas) {
        if (!a.is_string()) throw std::runtime_error("alphas must be rational strings");
        eigen.emplace_back(Rational::from_string(a.get<std::string>()));
    }
    std::vector<CompactifiedMatrix> mats;
    mats.reserve(matrices.size());
    for (const auto& m : matrices)
        mats.emplace_back(rational_field(m, "a"), rational_field(m, "b"), rational_field(m, "c"),
                          rational_field(m, "d"), rational_field(m, "e"));
    return Configuration::make(eigen, mats, check_trace);
}

nlohmann::json report_to_json(const StabilityReport& report) {
    nlohmann::json j;
    j["m1"] = report.m1;
    j["m2"] = report.m2;
    j["verdict"] = verdict_name(report.verdict);
    if (report.mu_min)
        j["mu_min"] = *report.mu_min;
    else
        j["mu_min"] = nullptr;
    return j;
}

nlohmann::json complex_to_json(const SimplicialComplex& c) {
    nlohmann::json j;
    j["vertices"] = c.vertices;
    nlohmann::json facets = nlohmann::json::array();
    for (const auto& f : c.facets) facets.push_back(f);
    j["facets"] = std::move(facets);
    return j;
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
        throw std::runtime_error("complex JSON needs fields vertices, facets");
    const auto vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : j.at("facets")) {
        std::vector<std::string> labels;
        for (const auto& idx : f) {
            const auto i = idx.get<size_t>();
            if (i >= vertices.size()) throw std::runtime_error("facet index out of range");
            labels.push_back(vertices[i]);
        }
        facets.push_back(std::move(labels));
    }
    return build_complex(vertices, facets);
}

nlohmann::json homology_to_json(const HomologyProfile& profile) {
    nlohmann::json j;
    j["reduced_betti"] = profile.reduced_betti;
    nlohmann::json torsion = nlohmann::json::array();
    for (const auto& degree : profile.torsion) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& t : degree) factors.push_back(t.get_str());
        torsion.push_back(std::move(factors));
    }
    j["torsion"] = std::move(torsion);
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

}  // namespace charvar
