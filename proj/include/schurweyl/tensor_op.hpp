#pragma once

#include "schurweyl/surd.hpp"
#include "schurweyl/young.hpp"

#include <optional>
#include <vector>

namespace schurweyl {

// Increment positions tau_j (1 <= tau_j <= j) for rows j = start_row..n.
// A chain is legal for a ket when the incremented pattern stays
// betweenness-valid.
struct TauChain {
    int start_row = 1;
    std::vector<int> tau;  // tau[j - start_row] = tau_j

    int at(int j) const { return tau[static_cast<std::size_t>(j - start_row)]; }
    int top() const { return tau.back(); }
};

// Ket pattern with one increment per row start_row..n; no validity check.
GTPattern apply_chain(const GTPattern& ket, const TauChain& chain);

bool chain_legal(const GTPattern& ket, const TauChain& chain);

// Matrix element <ket + chain| F_{k, tau_n} |ket> of the fundamental tensor
// operator in the Gelfand-Tsetlin basis. All partial hooks are evaluated on
// the ket pattern; the result is a single exact surd term, with the sign
// convention sgn(0) = +1. Throws std::domain_error on an illegal chain.
SurdSum tensor_op_element(const GTPattern& ket, int k, const TauChain& chain);

}  // namespace schurweyl
