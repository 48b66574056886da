#ifndef CHARVAR_SIMPLICIAL_HPP
#define CHARVAR_SIMPLICIAL_HPP

#include <string>
#include <vector>

#include "charvar/smith.hpp"

namespace charvar {

// Abstract simplicial complex given by vertex labels and maximal faces.
// Facets are stored as sorted index sets forming an antichain; the face
// closure is derived on demand. Vertices outside every listed facet count
// as zero-dimensional facets.
struct SimplicialComplex {
    std::vector<std::string> vertices;
    std::vector<std::vector<size_t>> facets;

    int dim() const;
};

SimplicialComplex build_complex(const std::vector<std::string>& vertices,
                                const std::vector<std::vector<std::string>>& facets);

// All faces of dimension d (sorted index tuples, lexicographic order).
std::vector<std::vector<size_t>> faces_of_dim(const SimplicialComplex& c, int d);

// Reduced integral homology data; entries are indexed by degree 0..dim.
struct HomologyProfile {
    std::vector<long> reduced_betti;
    std::vector<std::vector<mpz_class>> torsion;
};

HomologyProfile homology(const SimplicialComplex& c);

long euler_characteristic(const SimplicialComplex& c);

// Double cone: every facet is joined to each of the two fresh apexes; the
// apexes never share a face.
SimplicialComplex suspension(const SimplicialComplex& c, const std::string& apex1,
                             const std::string& apex2);

// Sphere certificate at dimension dim: reduced homology of S^dim, purity,
// every ridge in exactly two facets, and (dim >= 2) every vertex link
// certifies as a sphere of dimension dim - 1.
bool certify_sphere(const SimplicialComplex& c, int dim);

// The link of a vertex: faces f with f ∪ {v} a face and v not in f.
SimplicialComplex vertex_link(const SimplicialComplex& c, size_t v);

}  // namespace charvar

#endif
