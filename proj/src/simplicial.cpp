#include "charvar/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace charvar {

namespace {

void collect_subsets(const std::vector<size_t>& facet, size_t k,
                     std::set<std::vector<size_t>>& out) {
    std::vector<size_t> pick(k);
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        for (size_t i = 0; i < k; ++i) pick[i] = facet[idx[i]];
        out.insert(pick);
        size_t i = k;
        while (i-- > 0) {
            if (idx[i] + (k - i) < facet.size()) {
                ++idx[i];
                for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

}  // namespace

int SimplicialComplex::dim() const {
    size_t best = 0;
    for (const auto& f : facets) best = std::max(best, f.size());
    return static_cast<int>(best) - 1;
}

SimplicialComplex build_complex(const std::vector<std::string>& vertices,
                                const std::vector<std::vector<std::string>>& facets) {
    if (vertices.empty()) throw std::invalid_argument("empty complex");
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < vertices.size(); ++i)
        if (!index.emplace(vertices[i], i).second)
            throw std::invalid_argument("duplicate vertex label: " + vertices[i]);

    std::vector<std::vector<size_t>> raw;
    std::vector<bool> covered(vertices.size(), false);
    for (const auto& f : facets) {
        if (f.empty()) throw std::invalid_argument("empty facet");
        std::vector<size_t> g;
        g.reserve(f.size());
        for (const auto& label : f) {
            auto it = index.find(label);
            if (it == index.end()) throw std::invalid_argument("unknown vertex label: " + label);
            g.push_back(it->second);
        }
        std::sort(g.begin(), g.end());
        if (std::adjacent_find(g.begin(), g.end()) != g.end())
            throw std::invalid_argument("repeated vertex in facet");
        for (size_t i : g) covered[i] = true;
        raw.push_back(std::move(g));
    }
    for (size_t i = 0; i < vertices.size(); ++i)
        if (!covered[i]) raw.push_back({i});

    // Antichain normalization: drop faces contained in another facet.
    std::vector<std::vector<size_t>> kept;
    for (size_t i = 0; i < raw.size(); ++i) {
        bool subsumed = false;
        for (size_t j = 0; j < raw.size() && !subsumed; ++j) {
            if (i == j) continue;
            if (raw[i].size() > raw[j].size()) continue;
            if (raw[i] == raw[j] && i > j) {
                subsumed = true;
                break;
            }
            if (raw[i].size() < raw[j].size() &&
                std::includes(raw[j].begin(), raw[j].end(), raw[i].begin(), raw[i].end()))
                subsumed = true;
        }
        if (!subsumed) kept.push_back(raw[i]);
    }
    std::sort(kept.begin(), kept.end());

    SimplicialComplex c;
    c.vertices = vertices;
    c.facets = std::move(kept);
    return c;
}

std::vector<std::vector<size_t>> faces_of_dim(const SimplicialComplex& c, int d) {
    if (d < 0) return {};
    const size_t k = static_cast<size_t>(d) + 1;
    std::set<std::vector<size_t>> out;
    for (const auto& f : c.facets)
        if (f.size() >= k) collect_subsets(f, k, out);
    return {out.begin(), out.end()};
}

namespace {

// Boundary map from d-faces to (d-1)-faces over the sorted face lists;
// d = 0 gives the augmentation row.
IntMatrix boundary_matrix(const std::vector<std::vector<size_t>>& lower,
                          const std::vector<std::vector<size_t>>& upper, int d) {
    if (d == 0) {
        IntMatrix m(1, upper.size());
        for (size_t j = 0; j < upper.size(); ++j) m.at(0, j) = 1;
        return m;
    }
    std::map<std::vector<size_t>, size_t> row;
    for (size_t i = 0; i < lower.size(); ++i) row.emplace(lower[i], i);
    IntMatrix m(lower.size(), upper.size());
    for (size_t j = 0; j < upper.size(); ++j) {
        std::vector<size_t> face = upper[j];
        for (size_t drop = 0; drop < face.size(); ++drop) {
            std::vector<size_t> sub;
            sub.reserve(face.size() - 1);
            for (size_t i = 0; i < face.size(); ++i)
                if (i != drop) sub.push_back(face[i]);
            m.at(row.at(sub), j) = (drop % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

}  // namespace

HomologyProfile homology(const SimplicialComplex& c) {
    const int dim = c.dim();
    std::vector<std::vector<std::vector<size_t>>> faces(dim + 1);
    for (int d = 0; d <= dim; ++d) faces[d] = faces_of_dim(c, d);

    std::vector<long> rank(dim + 2, 0);
    std::vector<std::vector<mpz_class>> factors(dim + 2);
    for (int d = 0; d <= dim; ++d) {
        const auto lower = (d == 0) ? std::vector<std::vector<size_t>>{}
                                    : faces[d - 1];
        IntMatrix b = boundary_matrix(lower, faces[d], d);
        if (b.rows() == 0 || b.cols() == 0) continue;
        SmithResult s = smith_normal_form(b);
        rank[d] = static_cast<long>(s.rank);
        factors[d] = s.invariant_factors;
    }

    HomologyProfile profile;
    profile.reduced_betti.resize(dim + 1);
    profile.torsion.resize(dim + 1);
    for (int d = 0; d <= dim; ++d) {
        profile.reduced_betti[d] =
            static_cast<long>(faces[d].size()) - rank[d] - rank[d + 1];
        for (const auto& f : factors[d + 1])
            if (f != 1 && f != -1) profile.torsion[d].push_back(abs(f));
        std::sort(profile.torsion[d].begin(), profile.torsion[d].end());
    }
    return profile;
}

long euler_characteristic(const SimplicialComplex& c) {
    long chi = 0;
    for (int d = 0; d <= c.dim(); ++d) {
        const long count = static_cast<long>(faces_of_dim(c, d).size());
        chi += (d % 2 == 0) ? count : -count;
    }
    return chi;
}

SimplicialComplex suspension(const SimplicialComplex& c, const std::string& apex1,
                             const std::string& apex2) {
    if (apex1 == apex2) throw std::invalid_argument("label collision: " + apex1);
    for (const auto& v : c.vertices)
        if (v == apex1 || v == apex2)
            throw std::invalid_argument("label collision: " + (v == apex1 ? apex1 : apex2));
    SimplicialComplex out;
    out.vertices = c.vertices;
    out.vertices.push_back(apex1);
    out.vertices.push_back(apex2);
    const size_t i1 = out.vertices.size() - 2, i2 = out.vertices.size() - 1;
    for (const auto& f : c.facets) {
        std::vector<size_t> g1 = f, g2 = f;
        g1.push_back(i1);
        g2.push_back(i2);
        out.facets.push_back(std::move(g1));
        out.facets.push_back(std::move(g2));
    }
    std::sort(out.facets.begin(), out.facets.end());
    return out;
}

SimplicialComplex vertex_link(const SimplicialComplex& c, size_t v) {
    std::vector<std::vector<std::string>> link_facets;
    std::set<std::string> used;
    for (const auto& f : c.facets) {
        if (std::find(f.begin(), f.end(), v) == f.end()) continue;
        std::vector<std::string> g;
        for (size_t i : f)
            if (i != v) {
                g.push_back(c.vertices[i]);
                used.insert(c.vertices[i]);
            }
        if (!g.empty()) link_facets.push_back(std::move(g));
    }
    if (link_facets.empty()) throw std::invalid_argument("vertex has an empty link");
    return build_complex({used.begin(), used.end()}, link_facets);
}

bool certify_sphere(const SimplicialComplex& c, int dim) {
    if (dim < 0) return false;
    for (const auto& f : c.facets)
        if (f.size() != static_cast<size_t>(dim) + 1) return false;

    const HomologyProfile h = homology(c);
    if (h.reduced_betti.size() != static_cast<size_t>(dim) + 1) return false;
    for (int d = 0; d <= dim; ++d) {
        if (h.reduced_betti[d] != (d == dim ? 1 : 0)) return false;
        if (!h.torsion[d].empty()) return false;
    }

    if (dim >= 1) {
        std::map<std::vector<size_t>, int> ridge_count;
        for (const auto& f : c.facets) {
            std::set<std::vector<size_t>> ridges;
            collect_subsets(f, static_cast<size_t>(dim), ridges);
            for (const auto& r : ridges) ++ridge_count[r];
        }
        for (const auto& [ridge, count] : ridge_count)
            if (count != 2) return false;
    }

    if (dim >= 2)
        for (size_t v = 0; v < c.vertices.size(); ++v)
            if (!certify_sphere(vertex_link(c, v), dim - 1)) return false;
    return true;
}

}  // namespace charvar
