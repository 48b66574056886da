#include "charvar/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace charvar {

PartitionTuple PartitionTuple::make(std::vector<std::vector<unsigned>> parts) {
    if (parts.empty()) throw std::invalid_argument("empty partition tuple");
    unsigned r = 0;
    for (const auto& p : parts) {
        if (p.empty()) throw std::invalid_argument("empty partition");
        for (size_t i = 0; i < p.size(); ++i) {
            if (p[i] == 0) throw std::invalid_argument("zero part in partition");
            if (i > 0 && p[i] > p[i - 1])
                throw std::invalid_argument("partition parts must be nonincreasing");
        }
        unsigned s = std::accumulate(p.begin(), p.end(), 0u);
        if (r == 0)
            r = s;
        else if (s != r)
            throw std::invalid_argument("partitions have different sums");
    }
    return PartitionTuple{std::move(parts)};
}

PartitionTuple PartitionTuple::parse(const std::string& text) {
    std::vector<std::vector<unsigned>> parts;
    std::stringstream outer(text);
    std::string chunk;
    while (std::getline(outer, chunk, ';')) {
        std::vector<unsigned> p;
        std::stringstream inner(chunk);
        std::string tok;
        while (std::getline(inner, tok, ',')) {
            size_t pos = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed partition: " + text);
            }
            while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
            if (pos != tok.size()) throw std::invalid_argument("malformed partition: " + text);
            p.push_back(static_cast<unsigned>(v));
        }
        if (p.empty()) throw std::invalid_argument("malformed partition: " + text);
        parts.push_back(std::move(p));
    }
    return make(std::move(parts));
}

unsigned PartitionTuple::rank() const {
    return std::accumulate(parts[0].begin(), parts[0].end(), 0u);
}

long dimension(unsigned g, const PartitionTuple& mu) {
    long r = mu.rank();
    long n = static_cast<long>(mu.punctures());
    long sq = 0;
    for (const auto& p : mu.parts)
        for (unsigned v : p) sq += static_cast<long>(v) * v;
    return r * r * (2 * static_cast<long>(g) - 2 + n) - sq + 2 - 2 * static_cast<long>(g);
}

bool is_dim2_case(const PartitionTuple& mu) {
    static const std::vector<std::vector<std::vector<unsigned>>> cases = {
        {{1, 1}, {1, 1}, {1, 1}, {1, 1}},
        {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}},
        {{2, 2}, {1, 1, 1, 1}, {1, 1, 1, 1}},
        {{3, 3}, {2, 2, 2}, {1, 1, 1, 1, 1, 1}},
    };
    std::vector<std::vector<unsigned>> sorted = mu.parts;
    std::sort(sorted.begin(), sorted.end());
    for (auto c : cases) {
        std::sort(c.begin(), c.end());
        if (c == sorted) return true;
    }
    return false;
}

}  // namespace charvar
