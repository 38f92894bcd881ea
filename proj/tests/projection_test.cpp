#include "schurweyl/projection.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

using namespace schurweyl;

namespace {

using Matrix = std::vector<std::vector<SurdSum>>;

Matrix multiply(const Matrix& a, const Matrix& b) {
    Matrix c(a.size(), std::vector<SurdSum>(b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

Matrix identity(std::size_t dim) {
    Matrix m(dim, std::vector<SurdSum>(dim));
    for (std::size_t i = 0; i < dim; ++i) m[i][i] = SurdSum(1);
    return m;
}

bool equal(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a[0].size(), std::vector<SurdSum>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

// match up to one global sign; both states enumerate the same orbit order
bool states_match(const SchurWeylState& graph_state, const SchurWeylState& projected) {
    REQUIRE(graph_state.amplitudes.size() == projected.amplitudes.size());
    int sign = 0;
    for (std::size_t c = 0; c < graph_state.amplitudes.size(); ++c) {
        double g = graph_state.float_amplitudes[c];
        double p = projected.float_amplitudes[c];
        if (std::fabs(g) < 1e-12 && std::fabs(p) < 1e-12) continue;
        if (sign == 0) sign = (g > 0) == (p > 0) ? 1 : -1;
        if (std::fabs(g - sign * p) > 1e-10) return false;
    }
    if (projected.exact && sign != 0) {
        for (std::size_t c = 0; c < graph_state.amplitudes.size(); ++c) {
            SurdSum expected = sign > 0 ? projected.amplitudes[c].second
                                        : -projected.amplitudes[c].second;
            if (graph_state.amplitudes[c].second != expected) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("one-dimensional representations") {
    PermutationRep sign_rep = young_orthogonal_rep(Partition{1, 1}, 2);
    CHECK(sign_rep.generator_matrix(1) == Matrix{{SurdSum(-1)}});
    PermutationRep trivial = young_orthogonal_rep(Partition{4}, 4);
    for (int i = 1; i <= 3; ++i) CHECK(trivial.generator_matrix(i) == Matrix{{SurdSum(1)}});
}

TEST_CASE("the standard two-dimensional representation") {
    PermutationRep rep = young_orthogonal_rep(Partition{2, 1}, 3);
    REQUIRE(rep.dim() == 2);
    // basis order (12/3), (13/2)
    CHECK(rep.basis()[0] == YoungTableau({{1, 2}, {3}}));
    Matrix s2 = rep.generator_matrix(2);
    CHECK(s2[0][0] == SurdSum(Rational(-1, 2)));
    CHECK(s2[1][1] == SurdSum(Rational(1, 2)));
    CHECK(s2[0][1] == SurdSum::sqrt_of(Rational(3, 4)));
    CHECK(s2[1][0] == SurdSum::sqrt_of(Rational(3, 4)));
    Matrix s1 = rep.generator_matrix(1);
    CHECK(s1[0][0] == SurdSum(1));
    CHECK(s1[1][1] == SurdSum(-1));
}

TEST_CASE("generators are involutive and satisfy the braid relations (N<=5)") {
    for (int node_count = 2; node_count <= 5; ++node_count) {
        for (const auto& lambda : partitions_of(node_count, node_count)) {
            PermutationRep rep = young_orthogonal_rep(lambda, node_count);
            Matrix id = identity(rep.dim());
            for (int i = 1; i < node_count; ++i) {
                Matrix s = rep.generator_matrix(i);
                CHECK(equal(multiply(s, s), id));
                if (i + 1 < node_count) {
                    Matrix t = rep.generator_matrix(i + 1);
                    CHECK(equal(multiply(multiply(s, t), s), multiply(multiply(t, s), t)));
                }
                for (int j = i + 2; j < node_count; ++j) {
                    Matrix far = rep.generator_matrix(j);
                    CHECK(equal(multiply(s, far), multiply(far, s)));
                }
            }
        }
    }
}

TEST_CASE("representation matrices of arbitrary permutations") {
    PermutationRep rep = young_orthogonal_rep(Partition{2, 1, 1}, 4);
    CHECK(equal(rep_of_permutation(rep, {1, 2, 3, 4}), identity(rep.dim())));
    Matrix s1 = rep.generator_matrix(1);
    CHECK(equal(multiply(s1, s1), identity(rep.dim())));

    std::mt19937 rng(99);
    std::vector<int> sigma{1, 2, 3, 4};
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(sigma.begin(), sigma.end(), rng);
        Matrix m = rep_of_permutation(rep, sigma);
        CHECK(equal(multiply(m, transpose(m)), identity(rep.dim())));
    }

    // homomorphism on a sampled pair
    std::vector<int> a{2, 4, 1, 3};
    std::vector<int> b{3, 1, 4, 2};
    std::vector<int> ab(4);
    for (int i = 0; i < 4; ++i) ab[i] = a[static_cast<std::size_t>(b[i]) - 1];
    CHECK(equal(rep_of_permutation(rep, ab),
                multiply(rep_of_permutation(rep, a), rep_of_permutation(rep, b))));
}

TEST_CASE("projection reproduces the worked four-node state up to global sign") {
    SchurWeylLabel label{Partition{3, 1}, WeylTableau({{1, 2, 3}, {2}}),
                         YoungTableau({{1, 3, 4}, {2}})};
    SchurWeylState projected = projection_state(label, 3);
    CHECK(projected.exact);
    CHECK(states_match(expand_state(label, 3), projected));
}

TEST_CASE("projection of the one-node state") {
    SchurWeylLabel label{Partition{1}, WeylTableau(std::vector<std::vector<int>>{{1}}), YoungTableau(std::vector<std::vector<int>>{{1}})};
    SchurWeylState s = projection_state(label, 1);
    REQUIRE(s.amplitudes.size() == 1);
    CHECK(s.amplitudes[0].second == SurdSum(1));
}

TEST_CASE("projection matches the graph method for all three-node labels") {
    for (int n = 1; n <= 2; ++n)
        for (const auto& label : labels_for_alphabet(3, n)) {
            SchurWeylState projected = projection_state(label, n);
            CHECK(projected.exact);
            CHECK(projected.norm_squared() == SurdSum(1));
            CHECK(states_match(expand_state(label, n), projected));
        }
}

TEST_CASE("the factorial budget refuses oversized projections") {
    SchurWeylLabel label{Partition{9}, WeylTableau({{1, 1, 1, 1, 1, 1, 1, 1, 1}}),
                         YoungTableau({{1, 2, 3, 4, 5, 6, 7, 8, 9}})};
    try {
        projection_state(label, 1, 8);
        CHECK_MESSAGE(false, "expected a budget refusal");
    } catch (const FactorialBudgetExceeded& e) {
        CHECK(std::string(e.what()).find("9! operations") != std::string::npos);
        CHECK(std::string(e.what()).find("budget of 8") != std::string::npos);
    }
}
