#pragma once

#include "schurweyl/engine.hpp"
#include "schurweyl/surd.hpp"
#include "schurweyl/young.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace schurweyl {

// Young's orthogonal representation of the symmetric group on N letters for
// shape lambda, in the basis enumerate_syt(lambda). Generators are the
// adjacent transpositions s_1 .. s_{N-1}, stored sparsely: each couples at
// most pairs of tableaux.
class PermutationRep {
public:
    PermutationRep(Partition lambda, int node_count);

    const Partition& lambda() const { return lambda_; }
    int node_count() const { return node_count_; }
    const std::vector<YoungTableau>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }

    // Dense matrix of s_i (1 <= i <= N-1).
    std::vector<std::vector<SurdSum>> generator_matrix(int i) const;

    // row <- row * M(s_i), in place.
    void apply_generator_right(int i, std::vector<SurdSum>& row) const;

private:
    Partition lambda_;
    int node_count_;
    std::vector<YoungTableau> basis_;
    // per generator: diagonal 1/d, partner index (-1 if none), off-diagonal
    std::vector<std::vector<Rational>> diag_;
    std::vector<std::vector<int>> partner_;
    std::vector<std::vector<SurdSum>> offdiag_;
};

PermutationRep young_orthogonal_rep(const Partition& lambda, int node_count);

// Matrix of an arbitrary permutation (one-line images sigma(1..N)), as a
// product of generator matrices along a reduced word.
std::vector<std::vector<SurdSum>> rep_of_permutation(const PermutationRep& rep,
                                                     const std::vector<int>& sigma);

struct FactorialBudgetExceeded : std::runtime_error {
    explicit FactorialBudgetExceeded(const std::string& message)
        : std::runtime_error(message) {}
};

// Standard construction of |lambda t y> by group projection: sum over all N!
// permutations of representation matrix elements applied to a reference
// configuration. Refuses when N exceeds the budget, naming the factorial
// cost. The result is normalized to unit norm with the global sign fixed so
// the lexicographically first nonzero amplitude is positive; when the squared
// norm is irrational the exact amplitudes stay unnormalized (exact = false)
// and only float_amplitudes are normalized.
SchurWeylState projection_state(const SchurWeylLabel& label, int n, int budget = 8);

}  // namespace schurweyl
