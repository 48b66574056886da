#ifndef CHARVAR_BOUNDARY_FIXTURES_HPP
#define CHARVAR_BOUNDARY_FIXTURES_HPP

#include <string>
#include <vector>

#include "charvar/simplicial.hpp"

namespace charvar {

enum class ComplexCase { n4, n5_equator, n5_full };

// Accepts "n4", "n5-equator", "n5-full".
ComplexCase parse_complex_case(const std::string& name);
std::string complex_case_name(ComplexCase c);

// Canonical boundary complexes:
//   n4: the triangle of three lines E1, E2, E3 (a circle);
//   n5_equator: the eight boundary components of the blown-up n = 5 space
//     with twelve glued triangles (a two-sphere);
//   n5_full: the double cone over the equator with apexes ex1, ex2
//     (a three-sphere).
SimplicialComplex paper_complex(ComplexCase c);

enum class IntersectionStatus { nonempty_irreducible, empty };

struct IntersectionEntry {
    std::vector<std::string> vertices;
    IntersectionStatus status = IntersectionStatus::empty;
};

// Status of every pairwise, triple, and quadruple intersection of boundary
// components, assembled from the recorded edge and triangle lists plus the
// apex rules. Supported cases: n4 and n5_full.
std::vector<IntersectionEntry> intersection_table(ComplexCase c);

}  // namespace charvar

#endif
