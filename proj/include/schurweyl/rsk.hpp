#pragma once

#include "schurweyl/young.hpp"

#include <utility>
#include <vector>

namespace schurweyl {

// Trace of one Schensted insertion: the (row, position) pairs that were
// incremented, one per row from the entry row up to row n.
struct BubblingPath {
    std::vector<std::pair<int, int>> entries;
    int box_row() const { return entries.back().second; }
};

// Deterministic Schensted insertion of letter k: increment m(1,k), then in
// each row above increment the left neighbor if the new value exceeds it,
// otherwise the right neighbor. Preserves betweenness; the top row gains one
// box at position box_row().
std::pair<GTPattern, BubblingPath> schensted_insert_gt(GTPattern p, int k);

// Recording and insertion triangles; the recording triangle has one row per
// node (its j-th row is the shape after j insertions), the insertion triangle
// one row per spin letter. Their top rows agree as partitions.
struct DoubleGTPattern {
    GTPattern recording;
    GTPattern insertion;

    bool operator==(const DoubleGTPattern& o) const {
        return recording == o.recording && insertion == o.insertion;
    }
};

// Throws std::invalid_argument describing the first violated condition.
void validate_double_pattern(const DoubleGTPattern& d);

DoubleGTPattern rsk_forward(const Configuration& f, int n);

// Unique preimage of a consistent double pattern; throws std::invalid_argument
// when d is not in the image of rsk_forward.
Configuration rsk_inverse(const DoubleGTPattern& d);

// Growth chain (lambda_1, lambda_12, ..., lambda_1..N) read off y by
// restricting to letters <= j. t is consulted only to validate shape equality.
std::vector<Partition> shape_sequence(const WeylTableau& t, const YoungTableau& y);

// Shape-chain triangle of a standard tableau (row j = shape of letters <= j)
// and its inverse.
GTPattern gt_from_syt(const YoungTableau& y);
YoungTableau syt_from_gt(const GTPattern& p);

}  // namespace schurweyl
