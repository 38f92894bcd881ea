#include "schurweyl/bench.hpp"

#include "schurweyl/rsk.hpp"

#include <stdexcept>

namespace schurweyl {

std::pair<SchurWeylLabel, Configuration> homogeneous_query(int node_count, int n) {
    if (node_count < 1 || n < 1) throw std::invalid_argument("homogeneous_query: sizes >= 1");
    Partition lambda;
    int base = node_count / n;
    int extra = node_count % n;
    for (int i = 0; i < n; ++i) {
        int part = base + (i < extra ? 1 : 0);
        if (part > 0) lambda.push_back(part);
    }

    std::vector<std::vector<int>> t_rows;
    std::vector<std::vector<int>> y_rows;
    int next_node = 1;
    for (std::size_t r = 0; r < lambda.size(); ++r) {
        t_rows.emplace_back(static_cast<std::size_t>(lambda[r]), static_cast<int>(r) + 1);
        std::vector<int> y_row;
        for (int c = 0; c < lambda[r]; ++c) y_row.push_back(next_node++);
        y_rows.push_back(std::move(y_row));
    }
    SchurWeylLabel label{lambda, WeylTableau(std::move(t_rows)), YoungTableau(std::move(y_rows))};
    Configuration f =
        rsk_inverse({gt_from_syt(label.y), gt_from_tableau(label.t, n)});
    return {std::move(label), std::move(f)};
}

}  // namespace schurweyl
