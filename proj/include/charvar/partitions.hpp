#ifndef CHARVAR_PARTITIONS_HPP
#define CHARVAR_PARTITIONS_HPP

#include <string>
#include <vector>

namespace charvar {

// Tuple of partitions mu^1, ..., mu^n of a common rank r; one per puncture.
struct PartitionTuple {
    std::vector<std::vector<unsigned>> parts;

    // Throws unless every partition is nonincreasing, positive, and all sums agree.
    static PartitionTuple make(std::vector<std::vector<unsigned>> parts);
    // Parses "a,b;c,d;..." (semicolon-separated partitions, comma-separated parts).
    static PartitionTuple parse(const std::string& text);

    unsigned rank() const;            // common sum r
    size_t punctures() const { return parts.size(); }
};

// Moduli dimension r^2(2g-2+n) - sum (mu^i_j)^2 + 2 - 2g; may be negative.
long dimension(unsigned g, const PartitionTuple& mu);

// True iff mu is one of the four genus-0 tuples with two-dimensional moduli,
// up to reordering the punctures.
bool is_dim2_case(const PartitionTuple& mu);

}  // namespace charvar

#endif
