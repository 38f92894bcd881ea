#include "schurweyl/projection.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace schurweyl {

namespace {

// content(letter) = column - row, 1-based, for the box holding the letter
int content_of(const YoungTableau& y, int letter) {
    const auto& rows = y.rows();
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] == letter) return static_cast<int>(c) - static_cast<int>(r);
    throw std::invalid_argument("content_of: letter not in tableau");
}

YoungTableau swap_letters(const YoungTableau& y, int a, int b) {
    auto rows = y.rows();
    for (auto& row : rows)
        for (auto& v : row) {
            if (v == a)
                v = b;
            else if (v == b)
                v = a;
        }
    return YoungTableau(std::move(rows));
}

}  // namespace

PermutationRep::PermutationRep(Partition lambda, int node_count)
    : lambda_(trimmed(std::move(lambda))), node_count_(node_count) {
    int total = std::accumulate(lambda_.begin(), lambda_.end(), 0);
    if (total != node_count_)
        throw std::invalid_argument("PermutationRep: |lambda| != node count");
    basis_ = enumerate_syt(lambda_);
    std::map<YoungTableau, int> index;
    for (std::size_t b = 0; b < basis_.size(); ++b) index.emplace(basis_[b], static_cast<int>(b));

    diag_.resize(static_cast<std::size_t>(std::max(node_count_ - 1, 0)));
    partner_.resize(diag_.size());
    offdiag_.resize(diag_.size());
    for (int i = 1; i < node_count_; ++i) {
        auto& diag = diag_[static_cast<std::size_t>(i - 1)];
        auto& partner = partner_[static_cast<std::size_t>(i - 1)];
        auto& off = offdiag_[static_cast<std::size_t>(i - 1)];
        diag.resize(basis_.size());
        partner.assign(basis_.size(), -1);
        off.resize(basis_.size());
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            const auto& y = basis_[b];
            int d = content_of(y, i + 1) - content_of(y, i);  // axial distance
            diag[b] = Rational(1, d > 0 ? d : -d) * (d > 0 ? 1 : -1);
            YoungTableau swapped = swap_letters(y, i, i + 1);
            auto it = index.find(swapped);
            if (it != index.end()) {
                partner[b] = it->second;
                // sqrt(1 - 1/d^2), the same positive value for both partners
                off[b] = SurdSum::sqrt_of(Rational(1) - diag[b] * diag[b]);
            }
        }
    }
}

PermutationRep young_orthogonal_rep(const Partition& lambda, int node_count) {
    return PermutationRep(lambda, node_count);
}

std::vector<std::vector<SurdSum>> PermutationRep::generator_matrix(int i) const {
    if (i < 1 || i >= node_count_)
        throw std::invalid_argument("generator_matrix: generator index out of range");
    std::vector<std::vector<SurdSum>> matrix(dim(), std::vector<SurdSum>(dim()));
    const auto& diag = diag_[static_cast<std::size_t>(i - 1)];
    const auto& partner = partner_[static_cast<std::size_t>(i - 1)];
    const auto& off = offdiag_[static_cast<std::size_t>(i - 1)];
    for (std::size_t b = 0; b < dim(); ++b) {
        matrix[b][b] = SurdSum(diag[b]);
        if (partner[b] >= 0) matrix[b][static_cast<std::size_t>(partner[b])] = off[b];
    }
    return matrix;
}

void PermutationRep::apply_generator_right(int i, std::vector<SurdSum>& row) const {
    const auto& diag = diag_[static_cast<std::size_t>(i - 1)];
    const auto& partner = partner_[static_cast<std::size_t>(i - 1)];
    const auto& off = offdiag_[static_cast<std::size_t>(i - 1)];
    std::vector<SurdSum> result(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) {
        result[c] = row[c] * SurdSum(diag[c]);
        if (partner[c] >= 0)
            result[c] += row[static_cast<std::size_t>(partner[c])] * off[c];
    }
    row = std::move(result);
}

std::vector<std::vector<SurdSum>> rep_of_permutation(const PermutationRep& rep,
                                                     const std::vector<int>& sigma) {
    const int node_count = rep.node_count();
    if (static_cast<int>(sigma.size()) != node_count)
        throw std::invalid_argument("rep_of_permutation: wrong permutation size");
    // bubble sigma down to the identity; sigma = s_{i_m} ... s_{i_1}
    std::vector<int> word;
    std::vector<int> cur = sigma;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i < node_count; ++i) {
            if (cur[i - 1] > cur[i]) {
                std::swap(cur[i - 1], cur[i]);
                word.push_back(i);
                changed = true;
            }
        }
    }
    std::vector<std::vector<SurdSum>> matrix(rep.dim(), std::vector<SurdSum>(rep.dim()));
    for (std::size_t b = 0; b < rep.dim(); ++b) matrix[b][b] = SurdSum(1);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        // multiply on the right: every row independently
        for (auto& row : matrix) rep.apply_generator_right(*it, row);
    }
    return matrix;
}

SchurWeylState projection_state(const SchurWeylLabel& label, int n, int budget) {
    validate_label(label, n);
    const int node_count = std::accumulate(label.lambda.begin(), label.lambda.end(), 0);
    if (node_count > budget)
        throw FactorialBudgetExceeded(
            "group projection over Sigma_" + std::to_string(node_count) +
            " requires roughly " + std::to_string(node_count) +
            "! operations, above the budget of " + std::to_string(budget) +
            "; raise --budget (or SW_BUDGET) to force it");

    PermutationRep rep = young_orthogonal_rep(label.lambda, node_count);
    std::map<YoungTableau, int> syt_index;
    for (std::size_t b = 0; b < rep.basis().size(); ++b)
        syt_index.emplace(rep.basis()[b], static_cast<int>(b));

    // reference state: the sorted configuration 1^mu1 2^mu2 ... and the
    // column y_t = standardization of t. This pairing keeps the projection on
    // the single copy labelled t even when the weight space carries several
    // tableaux of the same shape (Kostka multiplicity > 1).
    Composition mu = weight_of(label.t, n);
    Configuration f0;
    for (std::size_t i = 0; i < mu.size(); ++i)
        f0.insert(f0.end(), static_cast<std::size_t>(mu[i]), static_cast<int>(i) + 1);
    const std::size_t row_index = static_cast<std::size_t>(syt_index.at(label.y));
    const std::size_t column = static_cast<std::size_t>(syt_index.at(standardize(label.t)));

    auto orbit = orbit_enumerate(mu);
    std::map<Configuration, std::size_t> orbit_index;
    for (std::size_t c = 0; c < orbit.size(); ++c) orbit_index.emplace(orbit[c], c);
    std::vector<SurdSum> raw(orbit.size());

    // plain-changes enumeration: successive permutations differ by one
    // adjacent transposition on the right, so the tracked row of the
    // representation matrix updates in O(dim) exact operations per step
    std::vector<int> perm(static_cast<std::size_t>(node_count));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> direction(perm.size(), -1);
    std::vector<SurdSum> row(rep.dim());
    row[row_index] = SurdSum(1);

    Configuration image(perm.size());
    auto accumulate = [&]() {
        // A(sigma)|f0> = |f0 o sigma^{-1}>, i.e. node sigma(i) gets f0(i)
        for (std::size_t i = 0; i < perm.size(); ++i)
            image[static_cast<std::size_t>(perm[i]) - 1] = f0[i];
        raw[orbit_index.at(image)] += row[column];
    };

    accumulate();
    while (true) {
        // largest mobile value (points at a smaller adjacent neighbor)
        int best_pos = -1;
        for (std::size_t pos = 0; pos < perm.size(); ++pos) {
            std::size_t adj = static_cast<std::size_t>(static_cast<int>(pos) + direction[pos]);
            if (static_cast<int>(pos) + direction[pos] < 0 || adj >= perm.size()) continue;
            if (perm[adj] < perm[pos] &&
                (best_pos < 0 || perm[pos] > perm[static_cast<std::size_t>(best_pos)]))
                best_pos = static_cast<int>(pos);
        }
        if (best_pos < 0) break;
        int moving = perm[static_cast<std::size_t>(best_pos)];
        int target = best_pos + direction[static_cast<std::size_t>(best_pos)];
        std::swap(perm[static_cast<std::size_t>(best_pos)], perm[static_cast<std::size_t>(target)]);
        std::swap(direction[static_cast<std::size_t>(best_pos)],
                  direction[static_cast<std::size_t>(target)]);
        for (std::size_t pos = 0; pos < perm.size(); ++pos)
            if (perm[pos] > moving) direction[pos] = -direction[pos];
        int swapped_at = std::min(best_pos, target) + 1;  // sigma' = sigma * s_i
        rep.apply_generator_right(swapped_at, row);
        accumulate();
    }

    SchurWeylState state;
    state.label = label;
    state.mu = mu;
    SurdSum norm2;
    for (const auto& a : raw) norm2 += a * a;
    if (norm2.is_zero())
        throw std::logic_error("projection_state: projection vanished");

    // global sign: first nonzero amplitude in orbit order is positive
    int sign = 0;
    for (const auto& a : raw) {
        if (!a.is_zero()) {
            sign = a.to_double() > 0 ? 1 : -1;
            break;
        }
    }

    if (norm2.is_rational()) {
        SurdSum scale = SurdSum::sqrt_of(Rational(1) / norm2.rational_value(), sign);
        for (std::size_t c = 0; c < orbit.size(); ++c) {
            SurdSum a = raw[c] * scale;
            state.float_amplitudes.push_back(a.to_double());
            state.amplitudes.emplace_back(orbit[c], std::move(a));
        }
        state.exact = true;
    } else {
        double scale = sign / std::sqrt(norm2.to_double());
        for (std::size_t c = 0; c < orbit.size(); ++c) {
            state.float_amplitudes.push_back(raw[c].to_double() * scale);
            state.amplitudes.emplace_back(orbit[c], raw[c]);
        }
        state.exact = false;
    }
    return state;
}

}  // namespace schurweyl
