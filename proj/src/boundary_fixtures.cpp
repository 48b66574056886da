#include "charvar/boundary_fixtures.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace charvar {

namespace {

// The four blown-up component lines and the four exceptional components of
// the second blow-up; ex13p/ex13m sit over the two pieces of E1 ∩ E3,
// ex24p/ex24m over the two pieces of E2 ∩ E4.
const std::vector<std::string> kEquatorVertices{"E1",    "E2",    "E3",    "E4",
                                                "ex13p", "ex13m", "ex24p", "ex24m"};

// Pairwise intersections that survive on the equator (18 of the 28 pairs).
const std::vector<std::array<const char*, 2>> kEquatorEdges{
    {"E1", "E2"},    {"E2", "E3"},    {"E3", "E4"},    {"E4", "E1"},
    {"E1", "ex13p"}, {"E2", "ex13p"}, {"E3", "ex13p"},
    {"E1", "ex13m"}, {"E3", "ex13m"}, {"E4", "ex13m"},
    {"ex13p", "ex13m"},
    {"E1", "ex24p"}, {"E2", "ex24p"}, {"E4", "ex24p"},
    {"E2", "ex24m"}, {"E3", "ex24m"}, {"E4", "ex24m"},
    {"ex24p", "ex24m"},
};

// Triple intersections that survive (the twelve glued triangles).
const std::vector<std::array<const char*, 3>> kEquatorTriangles{
    {"E1", "E2", "ex13p"}, {"E2", "E3", "ex13p"}, {"E3", "E4", "ex13m"},
    {"E4", "E1", "ex13m"}, {"E1", "ex13p", "ex13m"}, {"E3", "ex13p", "ex13m"},
    {"E1", "E2", "ex24p"}, {"E4", "E1", "ex24p"}, {"E2", "E3", "ex24m"},
    {"E3", "E4", "ex24m"}, {"E2", "ex24p", "ex24m"}, {"E4", "ex24p", "ex24m"},
};

std::vector<std::vector<std::string>> equator_facets() {
    std::vector<std::vector<std::string>> out;
    for (const auto& t : kEquatorTriangles) out.push_back({t[0], t[1], t[2]});
    return out;
}

std::set<std::vector<std::string>> sorted_set_of_edges() {
    std::set<std::vector<std::string>> out;
    for (const auto& e : kEquatorEdges) {
        std::vector<std::string> v{e[0], e[1]};
        std::sort(v.begin(), v.end());
        out.insert(v);
    }
    return out;
}

std::set<std::vector<std::string>> sorted_set_of_triangles() {
    std::set<std::vector<std::string>> out;
    for (const auto& t : kEquatorTriangles) {
        std::vector<std::string> v{t[0], t[1], t[2]};
        std::sort(v.begin(), v.end());
        out.insert(v);
    }
    return out;
}

void all_subsets(const std::vector<std::string>& pool, size_t k, size_t start,
                 std::vector<std::string>& cur, std::vector<std::vector<std::string>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (size_t i = start; i + (k - cur.size()) <= pool.size(); ++i) {
        cur.push_back(pool[i]);
        all_subsets(pool, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::string>> subsets(const std::vector<std::string>& pool, size_t k) {
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> cur;
    all_subsets(pool, k, 0, cur, out);
    return out;
}

}  // namespace

ComplexCase parse_complex_case(const std::string& name) {
    if (name == "n4") return ComplexCase::n4;
    if (name == "n5-equator") return ComplexCase::n5_equator;
    if (name == "n5-full") return ComplexCase::n5_full;
    throw std::invalid_argument("unknown case: " + name);
}

std::string complex_case_name(ComplexCase c) {
    switch (c) {
        case ComplexCase::n4: return "n4";
        case ComplexCase::n5_equator: return "n5-equator";
        default: return "n5-full";
    }
}

SimplicialComplex paper_complex(ComplexCase c) {
    switch (c) {
        case ComplexCase::n4:
            return build_complex({"E1", "E2", "E3"}, {{"E1", "E2"}, {"E2", "E3"}, {"E3", "E1"}});
        case ComplexCase::n5_equator:
            return build_complex(kEquatorVertices, equator_facets());
        case ComplexCase::n5_full:
            return suspension(paper_complex(ComplexCase::n5_equator), "ex1", "ex2");
    }
    throw std::invalid_argument("unknown case");
}

std::vector<IntersectionEntry> intersection_table(ComplexCase c) {
    std::vector<IntersectionEntry> out;
    if (c == ComplexCase::n4) {
        for (const auto& pair : subsets({"E1", "E2", "E3"}, 2))
            out.push_back({pair, IntersectionStatus::nonempty_irreducible});
        out.push_back({{"E1", "E2", "E3"}, IntersectionStatus::empty});
        return out;
    }
    if (c != ComplexCase::n5_full)
        throw std::invalid_argument("no intersection table for this case");

    const auto edges = sorted_set_of_edges();
    const auto triangles = sorted_set_of_triangles();
    std::vector<std::string> all = kEquatorVertices;
    all.push_back("ex1");
    all.push_back("ex2");
    std::sort(all.begin(), all.end());

    auto is_apex = [](const std::string& v) { return v == "ex1" || v == "ex2"; };
    for (size_t k = 2; k <= 4; ++k) {
        for (const auto& tuple : subsets(all, k)) {
            std::vector<std::string> equator_part;
            size_t apexes = 0;
            for (const auto& v : tuple)
                if (is_apex(v))
                    ++apexes;
                else
                    equator_part.push_back(v);
            // Both cone points never meet; one cone point meets exactly the
            // closures of the equator strata.
            bool nonempty = false;
            if (apexes <= 1) {
                switch (equator_part.size()) {
                    case 0: nonempty = true; break;
                    case 1: nonempty = true; break;
                    case 2: nonempty = edges.count(equator_part) > 0; break;
                    case 3: nonempty = triangles.count(equator_part) > 0; break;
                    default: nonempty = false;
                }
            }
            out.push_back({tuple, nonempty ? IntersectionStatus::nonempty_irreducible
                                           : IntersectionStatus::empty});
        }
    }
    return out;
}

}  // namespace charvar
