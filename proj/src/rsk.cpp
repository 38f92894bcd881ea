#include "schurweyl/rsk.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schurweyl {

std::pair<GTPattern, BubblingPath> schensted_insert_gt(GTPattern p, int k) {
    const int n = p.size();
    if (k < 1 || k > n) throw std::invalid_argument("schensted_insert_gt: letter out of range");
    BubblingPath path;
    int i = 1;
    ++p.m(1, k);
    path.entries.emplace_back(k, 1);
    for (int j = k; j < n; ++j) {
        if (p.m(i, j) > p.m(i, j + 1)) {
            ++p.m(i, j + 1);
        } else {
            ++p.m(i + 1, j + 1);
            ++i;
        }
        path.entries.emplace_back(j + 1, i);
    }
    return {std::move(p), std::move(path)};
}

void validate_double_pattern(const DoubleGTPattern& d) {
    if (!betweenness_valid(d.recording))
        throw std::invalid_argument("double pattern: recording triangle violates betweenness");
    if (!betweenness_valid(d.insertion))
        throw std::invalid_argument("double pattern: insertion triangle violates betweenness");
    const int node_count = d.recording.size();
    for (int j = 1; j <= node_count; ++j) {
        int sum = std::accumulate(d.recording.row(j).begin(), d.recording.row(j).end(), 0);
        if (sum != j)
            throw std::invalid_argument(
                "double pattern: recording row sums must be 1..N (not a standard-tableau chain)");
    }
    if (trimmed(d.recording.top_row()) != trimmed(d.insertion.top_row()))
        throw std::invalid_argument("double pattern: triangles disagree on the shape");
}

DoubleGTPattern rsk_forward(const Configuration& f, int n) {
    const int node_count = static_cast<int>(f.size());
    if (node_count == 0) throw std::invalid_argument("rsk_forward: empty configuration");
    DoubleGTPattern d{GTPattern(node_count), GTPattern(n)};
    for (int j = 1; j <= node_count; ++j) {
        int letter = f[j - 1];
        if (letter < 1 || letter > n)
            throw std::invalid_argument("rsk_forward: letter out of range for alphabet n");
        auto [inserted, path] = schensted_insert_gt(d.insertion, letter);
        d.insertion = std::move(inserted);
        int row = path.box_row();
        // the shape grew in row `row`; record it in every recording row >= j
        for (int jj = j; jj <= node_count; ++jj) ++d.recording.m(row, jj);
    }
    return d;
}

Configuration rsk_inverse(const DoubleGTPattern& d) {
    validate_double_pattern(d);
    const int node_count = d.recording.size();
    auto rows = tableau_from_gt(d.insertion).rows();
    Configuration f(static_cast<std::size_t>(node_count), 0);
    for (int j = node_count; j >= 1; --j) {
        // which shape row lost its box between recording rows j and j-1
        int box_row = 0;
        for (int i = 1; i <= j; ++i) {
            int below = (j >= 2 && i <= j - 1) ? d.recording.m(i, j - 1) : 0;
            int diff = d.recording.m(i, j) - below;
            if (diff == 0) continue;
            if (diff != 1 || box_row != 0)
                throw std::invalid_argument("rsk_inverse: recording rows do not grow by one box");
            box_row = i;
        }
        if (box_row == 0 || box_row > static_cast<int>(rows.size()) ||
            rows[box_row - 1].empty())
            throw std::invalid_argument("rsk_inverse: inconsistent recording triangle");
        // reverse row bumping from the vanished box down to row 1
        int value = rows[box_row - 1].back();
        rows[box_row - 1].pop_back();
        for (int r = box_row - 1; r >= 1; --r) {
            auto& row = rows[r - 1];
            auto it = std::upper_bound(row.begin(), row.end(), value - 1);
            if (it == row.begin())
                throw std::invalid_argument("rsk_inverse: reverse bumping failed");
            --it;  // rightmost entry < value
            std::swap(*it, value);
        }
        f[j - 1] = value;
        while (!rows.empty() && rows.back().empty()) rows.pop_back();
    }
    return f;
}

std::vector<Partition> shape_sequence(const WeylTableau& t, const YoungTableau& y) {
    if (trimmed(shape_of(t)) != trimmed(shape_of(y)))
        throw std::invalid_argument("shape_sequence: tableaux have different shapes");
    const auto& rows = y.rows();
    int node_count = 0;
    for (const auto& row : rows) node_count += static_cast<int>(row.size());
    std::vector<Partition> chain;
    chain.reserve(static_cast<std::size_t>(node_count));
    for (int j = 1; j <= node_count; ++j) {
        Partition shape;
        for (const auto& row : rows) {
            int count = static_cast<int>(
                std::count_if(row.begin(), row.end(), [&](int v) { return v <= j; }));
            if (count == 0) break;
            shape.push_back(count);
        }
        chain.push_back(std::move(shape));
    }
    return chain;
}

GTPattern gt_from_syt(const YoungTableau& y) {
    if (!is_standard(y)) throw std::invalid_argument("gt_from_syt: not a standard tableau");
    const auto& rows = y.rows();
    int node_count = 0;
    for (const auto& row : rows) node_count += static_cast<int>(row.size());
    GTPattern p(node_count);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int v : rows[r])
            for (int j = v; j <= node_count; ++j) ++p.m(static_cast<int>(r) + 1, j);
    return p;
}

YoungTableau syt_from_gt(const GTPattern& p) {
    const int node_count = p.size();
    std::vector<std::vector<int>> rows;
    for (int j = 1; j <= node_count; ++j) {
        int box_row = 0;
        for (int i = 1; i <= j; ++i) {
            int below = (i <= j - 1) ? p.m(i, j - 1) : 0;
            int diff = p.m(i, j) - below;
            if (diff == 0) continue;
            if (diff != 1 || box_row != 0)
                throw std::invalid_argument("syt_from_gt: rows do not grow by one box");
            box_row = i;
        }
        if (box_row == 0) throw std::invalid_argument("syt_from_gt: rows do not grow");
        if (box_row > static_cast<int>(rows.size()) + 1)
            throw std::invalid_argument("syt_from_gt: box lands below a missing row");
        if (box_row == static_cast<int>(rows.size()) + 1) rows.emplace_back();
        rows[box_row - 1].push_back(j);
    }
    return YoungTableau(std::move(rows));
}

}  // namespace schurweyl
