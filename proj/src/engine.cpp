#include "schurweyl/engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace schurweyl {

void validate_label(const SchurWeylLabel& label, int n) {
    if (!is_partition(label.lambda))
        throw std::invalid_argument("label: lambda is not a partition");
    if (!is_semistandard(label.t, n))
        throw std::invalid_argument("label: t is not semistandard over 1..n");
    if (!is_standard(label.y)) throw std::invalid_argument("label: y is not standard");
    if (trimmed(shape_of(label.t)) != trimmed(label.lambda) ||
        trimmed(shape_of(label.y)) != trimmed(label.lambda))
        throw std::invalid_argument("label: tableau shapes differ from lambda");
}

std::size_t CouplingGraph::vertex_count() const {
    std::size_t count = 0;
    for (const auto& level : levels) count += level.vertices.size();
    return count;
}

std::size_t CouplingGraph::edge_count() const {
    std::size_t count = 0;
    for (const auto& level : levels) count += level.edges.size();
    return count;
}

std::vector<std::pair<GTPattern, TauChain>> insertion_candidates(const GTPattern& p, int k,
                                                                 const Partition& target_shape) {
    const int n = p.size();
    if (k < 1 || k > n) throw std::invalid_argument("insertion_candidates: letter out of range");
    Partition target = padded(target_shape, n);

    // the top row must gain exactly one box; its row fixes tau_n
    int box_row = 0;
    for (int i = 1; i <= n; ++i) {
        int diff = target[i - 1] - p.m(i, n);
        if (diff == 0) continue;
        if (diff != 1 || box_row != 0) return {};
        box_row = i;
    }
    if (box_row == 0) return {};

    std::vector<std::pair<GTPattern, TauChain>> out;
    TauChain chain;
    chain.start_row = k;
    chain.tau.assign(static_cast<std::size_t>(n - k + 1), 0);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == n) {
            chain.tau.back() = box_row;
            GTPattern q = apply_chain(p, chain);
            if (betweenness_valid(q)) out.emplace_back(std::move(q), chain);
            return;
        }
        for (int pos = 1; pos <= j; ++pos) {
            chain.tau[static_cast<std::size_t>(j - k)] = pos;
            self(self, j + 1);
        }
    };
    rec(rec, k);
    return out;
}

CouplingGraph build_graph(const Configuration& f, const SchurWeylLabel& label, int n) {
    validate_label(label, n);
    const int node_count = static_cast<int>(f.size());
    auto chain_shapes = shape_sequence(label.t, label.y);
    if (static_cast<int>(chain_shapes.size()) != node_count)
        throw std::invalid_argument("build_graph: configuration length differs from |lambda|");
    const GTPattern final_pattern = gt_from_tableau(label.t, n);

    CouplingGraph graph;
    graph.levels.resize(static_cast<std::size_t>(node_count) + 1);
    graph.levels[0].vertices.emplace_back(n);  // zero pattern, the minimal vertex
    for (int j = 1; j <= node_count; ++j) {
        if (f[j - 1] < 1 || f[j - 1] > n)
            throw std::invalid_argument("build_graph: letter out of range");
        graph.levels[static_cast<std::size_t>(j)].letter = f[j - 1];
    }

    for (int j = 1; j <= node_count; ++j) {
        int letter = f[j - 1];
        auto& level = graph.levels[static_cast<std::size_t>(j)];
        const auto& prev = graph.levels[static_cast<std::size_t>(j) - 1];
        std::map<GTPattern, int> index;
        for (std::size_t u = 0; u < prev.vertices.size(); ++u) {
            for (auto& [q, chain] : insertion_candidates(prev.vertices[u], letter,
                                                         chain_shapes[j - 1])) {
                if (j == node_count && q != final_pattern) continue;
                SurdSum weight = tensor_op_element(prev.vertices[u], letter, chain);
                auto it = index.find(q);
                int v;
                if (it == index.end()) {
                    v = static_cast<int>(level.vertices.size());
                    index.emplace(q, v);
                    level.vertices.push_back(q);
                } else {
                    v = it->second;
                }
                level.edges.push_back({static_cast<int>(u), v, std::move(weight)});
            }
        }
        if (level.vertices.empty()) break;  // graph dies; amplitude is zero
    }
    return graph;
}

SurdSum amplitude(const CouplingGraph& graph) {
    if (graph.dead()) return SurdSum();
    std::vector<SurdSum> current{SurdSum(1)};
    for (std::size_t j = 1; j < graph.levels.size(); ++j) {
        const auto& level = graph.levels[j];
        std::vector<SurdSum> next(level.vertices.size());
        for (const auto& edge : level.edges)
            next[static_cast<std::size_t>(edge.to)] +=
                current[static_cast<std::size_t>(edge.from)] * edge.weight;
        current = std::move(next);
    }
    return current.size() == 1 ? current[0] : SurdSum();
}

SurdSum amplitude(const Configuration& f, const SchurWeylLabel& label, int n) {
    if (weight_of(f, n) != weight_of(label.t, n)) return SurdSum();
    return amplitude(build_graph(f, label, n));
}

SurdSum SchurWeylState::norm_squared() const {
    SurdSum total;
    for (const auto& [f, a] : amplitudes) total += a * a;
    return total;
}

SchurWeylState expand_state(const SchurWeylLabel& label, int n) {
    validate_label(label, n);
    SchurWeylState state;
    state.label = label;
    state.mu = weight_of(label.t, n);
    for (const auto& f : orbit_enumerate(state.mu)) {
        SurdSum a = amplitude(build_graph(f, label, n));
        state.float_amplitudes.push_back(a.to_double());
        state.amplitudes.emplace_back(f, std::move(a));
    }
    return state;
}

std::vector<SchurWeylLabel> labels_for_weight(const Composition& mu) {
    const int n = static_cast<int>(mu.size());
    const int node_count = std::accumulate(mu.begin(), mu.end(), 0);
    Partition sorted_mu(mu);
    std::sort(sorted_mu.rbegin(), sorted_mu.rend());
    std::vector<SchurWeylLabel> labels;
    for (const auto& lambda : partitions_of(node_count, n)) {
        if (!dominance_leq(sorted_mu, lambda)) continue;
        auto ts = enumerate_ssyt_with_weight(lambda, mu);
        if (ts.empty()) continue;
        auto ys = enumerate_syt(lambda);
        for (const auto& t : ts)
            for (const auto& y : ys) labels.push_back({lambda, t, y});
    }
    return labels;
}

std::vector<SchurWeylLabel> labels_for_alphabet(int node_count, int n) {
    std::vector<SchurWeylLabel> labels;
    for (const auto& lambda : partitions_of(node_count, n)) {
        auto ys = enumerate_syt(lambda);
        for (const auto& t : enumerate_ssyt(lambda, n))
            for (const auto& y : ys) labels.push_back({lambda, t, y});
    }
    return labels;
}

UnitarityReport verify_unitarity(const Composition& mu, int n, std::size_t exact_dim_limit) {
    UnitarityReport report;
    report.mu = mu;
    report.n = n;
    auto orbit = orbit_enumerate(mu);
    auto labels = labels_for_weight(mu);
    report.dim = orbit.size();
    report.counting_ok = labels.size() == orbit.size();
    if (!report.counting_ok) {
        report.unitary = false;
        return report;
    }

    std::vector<SchurWeylState> states;
    states.reserve(labels.size());
    for (const auto& label : labels) states.push_back(expand_state(label, n));

    const std::size_t dim = orbit.size();
    report.exact = dim <= exact_dim_limit;
    if (report.exact) {
        bool ok = true;
        double max_dev = 0.0;
        for (std::size_t a = 0; a < dim && ok; ++a) {
            for (std::size_t b = a; b < dim; ++b) {
                SurdSum dot;
                for (std::size_t c = 0; c < dim; ++c)
                    dot += states[a].amplitudes[c].second * states[b].amplitudes[c].second;
                SurdSum expected(a == b ? 1 : 0);
                if (dot != expected) {
                    ok = false;
                    max_dev = std::max(max_dev,
                                       std::fabs(dot.to_double() - (a == b ? 1.0 : 0.0)));
                    break;
                }
            }
        }
        report.unitary = ok;
        report.max_deviation = ok ? 0.0 : max_dev;
    } else {
        double max_dev = 0.0;
        for (std::size_t a = 0; a < dim; ++a) {
            for (std::size_t b = a; b < dim; ++b) {
                double dot = 0.0;
                for (std::size_t c = 0; c < dim; ++c)
                    dot += states[a].float_amplitudes[c] * states[b].float_amplitudes[c];
                max_dev = std::max(max_dev, std::fabs(dot - (a == b ? 1.0 : 0.0)));
            }
        }
        report.max_deviation = max_dev;
        report.unitary = max_dev < 1e-12;
    }
    return report;
}

}  // namespace schurweyl
