#include "schurweyl/tensor_op.hpp"

#include <cstdlib>
#include <stdexcept>

namespace schurweyl {

GTPattern apply_chain(const GTPattern& ket, const TauChain& chain) {
    GTPattern result = ket;
    for (int j = chain.start_row; j <= ket.size(); ++j) ++result.m(chain.at(j), j);
    return result;
}

bool chain_legal(const GTPattern& ket, const TauChain& chain) {
    return betweenness_valid(apply_chain(ket, chain));
}

namespace {

// Trial division; operands are differences of partial hooks, so tiny.
void factor_into(std::int64_t value, std::map<std::int64_t, std::int64_t>& exponents,
                 std::int64_t multiplicity) {
    value = std::abs(value);
    for (std::int64_t d = 2; d * d <= value; d += (d == 2) ? 1 : 2) {
        while (value % d == 0) {
            exponents[d] += multiplicity;
            value /= d;
        }
    }
    if (value > 1) exponents[value] += multiplicity;
}

}  // namespace

SurdSum tensor_op_element(const GTPattern& ket, int k, const TauChain& chain) {
    const int n = ket.size();
    if (k < 1 || k > n) throw std::invalid_argument("tensor_op_element: letter out of range");
    if (chain.start_row != k || chain.tau.size() != static_cast<std::size_t>(n - k + 1))
        throw std::invalid_argument("tensor_op_element: chain does not cover rows k..n");
    for (int j = k; j <= n; ++j)
        if (chain.at(j) < 1 || chain.at(j) > j)
            throw std::invalid_argument("tensor_op_element: tau_j outside 1..j");
    if (!chain_legal(ket, chain))
        throw std::domain_error("tensor_op_element: chain breaks betweenness (illegal edge)");

    auto hook = [&](int i, int j) { return partial_hook(ket, i, j); };

    int sign = 1;
    bool zero = false;
    std::map<std::int64_t, std::int64_t> exponents;
    auto numer = [&](std::int64_t v) {
        if (v == 0)
            zero = true;
        else
            factor_into(v, exponents, +1);
    };
    auto denom = [&](std::int64_t v) {
        if (v == 0)
            throw std::logic_error("tensor_op_element: zero denominator on a legal chain");
        factor_into(v, exponents, -1);
    };

    for (int j = k + 1; j <= n; ++j) {
        int prev = chain.at(j - 1);
        int cur = chain.at(j);
        if (prev < cur) sign = -sign;  // sgn(prev - cur), sgn(0) = +1
        for (int i = 1; i <= j - 1; ++i)
            if (i != prev) numer(hook(cur, j) - hook(i, j - 1));
        for (int i = 1; i <= j; ++i)
            if (i != cur) numer(hook(prev, j - 1) - hook(i, j) + 1);
        for (int i = 1; i <= j; ++i)
            if (i != cur) denom(hook(cur, j) - hook(i, j));
        for (int i = 1; i <= j - 1; ++i)
            if (i != prev) denom(hook(prev, j - 1) - hook(i, j - 1) + 1);
    }
    // entry factor for the starting row; empty products when k = 1
    int start = chain.at(k);
    for (int i = 1; i <= k - 1; ++i) numer(hook(start, k) - hook(i, k - 1));
    for (int i = 1; i <= k; ++i)
        if (i != start) denom(hook(start, k) - hook(i, k));

    if (zero) return SurdSum();
    return SurdSum::sqrt_of_factored(exponents, sign);
}

}  // namespace schurweyl
