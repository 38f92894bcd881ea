#include "schurweyl/young.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schurweyl {

GTPattern::GTPattern(std::vector<std::vector<int>> rows_bottom_up)
    : rows_(std::move(rows_bottom_up)) {
    for (std::size_t j = 0; j < rows_.size(); ++j)
        if (rows_[j].size() != j + 1)
            throw std::invalid_argument("GTPattern: row " + std::to_string(j + 1) +
                                        " must have " + std::to_string(j + 1) + " entries");
}

GTPattern GTPattern::from_rows_top_down(std::vector<std::vector<int>> rows) {
    std::reverse(rows.begin(), rows.end());
    return GTPattern(std::move(rows));
}

std::vector<std::vector<int>> GTPattern::rows_top_down() const {
    std::vector<std::vector<int>> rows(rows_.rbegin(), rows_.rend());
    return rows;
}

bool betweenness_valid(const GTPattern& p) {
    const int n = p.size();
    for (int j = 1; j < n; ++j)
        for (int i = 1; i <= j; ++i)
            if (!(p.m(i, j + 1) >= p.m(i, j) && p.m(i, j) >= p.m(i + 1, j + 1))) return false;
    // interlacing covers within-row decrease below the top row, and the
    // down-right chains reduce non-negativity to the top row's entries
    for (int i = 1; i < n; ++i)
        if (p.m(i, n) < p.m(i + 1, n)) return false;
    for (int i = 1; i <= n; ++i)
        if (p.m(i, n) < 0) return false;
    return true;
}

int partial_hook(const GTPattern& p, int i, int j) {
    if (j < 1 || j > p.size() || i < 1 || i > j)
        throw std::out_of_range("partial_hook: index outside triangle");
    return p.m(i, j) + j - i;
}

bool is_partition(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) return false;
        if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
    }
    return true;
}

bool is_semistandard(const WeylTableau& t, int n) {
    const auto& rows = t.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) return false;
        if (r + 1 < rows.size() && rows[r + 1].size() > rows[r].size()) return false;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            int v = rows[r][c];
            if (v < 1 || v > n) return false;
            if (c + 1 < rows[r].size() && rows[r][c + 1] < v) return false;
            if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r + 1][c] <= v)
                return false;
        }
    }
    return true;
}

bool is_standard(const YoungTableau& y) {
    const auto& rows = y.rows();
    int total = 0;
    for (const auto& row : rows) total += static_cast<int>(row.size());
    std::vector<bool> seen(static_cast<std::size_t>(total) + 1, false);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) return false;
        if (r + 1 < rows.size() && rows[r + 1].size() > rows[r].size()) return false;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            int v = rows[r][c];
            if (v < 1 || v > total || seen[v]) return false;
            seen[v] = true;
            if (c + 1 < rows[r].size() && rows[r][c + 1] <= v) return false;
            if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r + 1][c] <= v)
                return false;
        }
    }
    return true;
}

Partition trimmed(Partition lambda) {
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    return lambda;
}

Partition padded(Partition lambda, int n) {
    lambda = trimmed(std::move(lambda));
    if (static_cast<int>(lambda.size()) > n)
        throw std::invalid_argument("padded: partition has more than n parts");
    lambda.resize(static_cast<std::size_t>(n), 0);
    return lambda;
}

Partition shape_of(const WeylTableau& t) {
    Partition shape;
    for (const auto& row : t.rows()) shape.push_back(static_cast<int>(row.size()));
    return shape;
}

Partition shape_of(const YoungTableau& y) {
    Partition shape;
    for (const auto& row : y.rows()) shape.push_back(static_cast<int>(row.size()));
    return shape;
}

Composition weight_of(const WeylTableau& t, int n) {
    Composition mu(static_cast<std::size_t>(n), 0);
    for (const auto& row : t.rows())
        for (int v : row) {
            if (v < 1 || v > n) throw std::invalid_argument("weight_of: letter out of range");
            ++mu[v - 1];
        }
    return mu;
}

Composition weight_of(const Configuration& f, int n) {
    Composition mu(static_cast<std::size_t>(n), 0);
    for (int v : f) {
        if (v < 1 || v > n) throw std::invalid_argument("weight_of: letter out of range");
        ++mu[v - 1];
    }
    return mu;
}

WeylTableau tableau_from_gt(const GTPattern& p) {
    const int n = p.size();
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> row;
        for (int k = i; k <= n; ++k) {
            int tau = (k == i) ? p.m(i, i) : p.m(i, k) - p.m(i, k - 1);
            row.insert(row.end(), static_cast<std::size_t>(tau), k);
        }
        if (row.empty()) break;  // shorter rows below by betweenness
        rows.push_back(std::move(row));
    }
    return WeylTableau(std::move(rows));
}

GTPattern gt_from_tableau(const WeylTableau& t, int n) {
    if (!is_semistandard(t, n))
        throw std::invalid_argument("gt_from_tableau: not semistandard over 1..n");
    GTPattern p(n);
    // m(i,k) = number of letters <= k in row i
    for (std::size_t r = 0; r < t.rows().size(); ++r)
        for (int v : t.rows()[r])
            for (int k = v; k <= n; ++k) ++p.m(static_cast<int>(r) + 1, k);
    return p;
}

YoungTableau standardize(const WeylTableau& t) {
    struct Cell {
        int letter;
        int col;
        int row;
    };
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < t.rows().size(); ++r)
        for (std::size_t c = 0; c < t.rows()[r].size(); ++c)
            cells.push_back({t.rows()[r][c], static_cast<int>(c), static_cast<int>(r)});
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        return a.letter != b.letter ? a.letter < b.letter : a.col < b.col;
    });
    std::vector<std::vector<int>> rows(t.rows().size());
    for (auto& row : rows) row.resize(0);
    for (std::size_t r = 0; r < t.rows().size(); ++r)
        rows[r].resize(t.rows()[r].size());
    int next = 1;
    for (const auto& cell : cells)
        rows[static_cast<std::size_t>(cell.row)][static_cast<std::size_t>(cell.col)] = next++;
    return YoungTableau(std::move(rows));
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    long long sum_mu = std::accumulate(mu.begin(), mu.end(), 0LL);
    long long sum_lambda = std::accumulate(lambda.begin(), lambda.end(), 0LL);
    if (sum_mu != sum_lambda) throw std::invalid_argument("dominance_leq: sums differ");
    long long prefix_mu = 0;
    long long prefix_lambda = 0;
    std::size_t len = std::max(mu.size(), lambda.size());
    for (std::size_t i = 0; i < len; ++i) {
        prefix_mu += i < mu.size() ? mu[i] : 0;
        prefix_lambda += i < lambda.size() ? lambda[i] : 0;
        if (prefix_lambda < prefix_mu) return false;
    }
    return true;
}

long long kostka(const Partition& lambda, const Composition& mu) {
    long long sum_lambda = std::accumulate(lambda.begin(), lambda.end(), 0LL);
    long long sum_mu = std::accumulate(mu.begin(), mu.end(), 0LL);
    if (sum_lambda != sum_mu) throw std::invalid_argument("kostka: |lambda| != |mu|");
    return static_cast<long long>(enumerate_ssyt_with_weight(lambda, mu).size());
}

Int dim_irrep(const Partition& lambda, int n) {
    Partition l = padded(lambda, n);
    Int numerator = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) numerator *= (l[i] - i) - (l[j] - j);
    Int denominator = 1;
    Int factorial = 1;
    for (int k = 1; k < n; ++k) {
        factorial *= k;
        denominator *= factorial;
    }
    return numerator / denominator;
}

std::vector<Configuration> orbit_enumerate(const Composition& mu) {
    Configuration f;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] < 0) throw std::invalid_argument("orbit_enumerate: negative part");
        f.insert(f.end(), static_cast<std::size_t>(mu[i]), static_cast<int>(i) + 1);
    }
    std::vector<Configuration> orbit;
    do {
        orbit.push_back(f);
    } while (std::next_permutation(f.begin(), f.end()));
    return orbit;
}

namespace {

void gt_rows_below(std::vector<std::vector<int>>& rows_top_down,
                   std::vector<GTPattern>& out) {
    // copy: the recursion grows rows_top_down, which may reallocate
    const std::vector<int> above = rows_top_down.back();
    if (above.size() == 1) {
        std::vector<std::vector<int>> bottom_up(rows_top_down.rbegin(), rows_top_down.rend());
        out.emplace_back(std::move(bottom_up));
        return;
    }
    std::size_t len = above.size() - 1;
    std::vector<int> row(len);
    // DFS over interlacing choices, each entry from its maximum downward
    std::vector<int> stack_pos;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == len) {
            rows_top_down.push_back(row);
            gt_rows_below(rows_top_down, out);
            rows_top_down.pop_back();
            return;
        }
        int hi = above[i];
        int lo = above[i + 1];
        for (int v = hi; v >= lo; --v) {
            row[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<GTPattern> enumerate_gt_patterns(const Partition& lambda, int n) {
    Partition top = padded(lambda, n);
    std::vector<std::vector<int>> rows_top_down{top};
    std::vector<GTPattern> out;
    gt_rows_below(rows_top_down, out);
    return out;
}

std::vector<YoungTableau> enumerate_syt(const Partition& lambda) {
    Partition shape = trimmed(lambda);
    if (!is_partition(shape)) throw std::invalid_argument("enumerate_syt: not a partition");
    int total = std::accumulate(shape.begin(), shape.end(), 0);
    std::vector<std::vector<int>> rows(shape.size());
    std::vector<int> filled(shape.size(), 0);
    std::vector<YoungTableau> out;
    auto rec = [&](auto&& self, int letter) -> void {
        if (letter > total) {
            std::vector<std::vector<int>> copy = rows;
            out.emplace_back(std::move(copy));
            return;
        }
        for (std::size_t r = 0; r < shape.size(); ++r) {
            if (filled[r] >= shape[r]) continue;
            if (r > 0 && filled[r] >= filled[r - 1]) continue;  // column strictness
            rows[r].push_back(letter);
            ++filled[r];
            self(self, letter + 1);
            --filled[r];
            rows[r].pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WeylTableau> enumerate_ssyt(const Partition& lambda, int n) {
    std::vector<WeylTableau> out;
    if (trimmed(lambda).size() > static_cast<std::size_t>(n)) return out;
    for (const auto& p : enumerate_gt_patterns(lambda, n)) out.push_back(tableau_from_gt(p));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WeylTableau> enumerate_ssyt_with_weight(const Partition& lambda,
                                                    const Composition& mu) {
    int n = static_cast<int>(mu.size());
    std::vector<WeylTableau> out;
    if (trimmed(lambda).size() > static_cast<std::size_t>(n)) return out;
    for (auto& t : enumerate_ssyt(lambda, n))
        if (weight_of(t, n) == mu) out.push_back(std::move(t));
    return out;
}

std::vector<Partition> partitions_of(int total, int max_parts) {
    std::vector<Partition> out;
    Partition current;
    auto rec = [&](auto&& self, int remaining, int limit) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        if (static_cast<int>(current.size()) == max_parts) return;
        for (int part = std::min(limit, remaining); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    rec(rec, total, total);
    return out;
}

std::vector<Composition> compositions_of(int total, int n) {
    std::vector<Composition> out;
    Composition current(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n - 1) {
            current[pos] = remaining;
            out.push_back(current);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            current[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    if (n >= 1)
        rec(rec, 0, total);
    else if (total == 0)
        out.push_back({});
    return out;
}

std::string format_rows(const std::vector<std::vector<int>>& rows) {
    bool compact = true;
    for (const auto& row : rows)
        for (int v : row)
            if (v > 9) compact = false;
    std::ostringstream os;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r > 0) os << '/';
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (!compact && c > 0) os << ',';
            os << rows[r][c];
        }
    }
    return os.str();
}

std::string format_tableau(const WeylTableau& t) { return format_rows(t.rows()); }
std::string format_tableau(const YoungTableau& y) { return format_rows(y.rows()); }

std::string format_int_list(const std::vector<int>& values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) os << ',';
        os << values[i];
    }
    return os.str();
}

std::string format_gt_pattern(const GTPattern& p) {
    std::ostringstream os;
    os << '(';
    auto rows = p.rows_top_down();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r > 0) os << '/';
        bool compact = true;
        for (int v : rows[r])
            if (v > 9) compact = false;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (!compact && c > 0) os << ',';
            os << rows[r][c];
        }
    }
    os << ')';
    return os.str();
}

std::vector<std::vector<int>> parse_rows(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream stream(text);
    std::string row_text;
    while (std::getline(stream, row_text, '/')) {
        std::vector<int> row;
        if (row_text.find(',') != std::string::npos) {
            std::istringstream row_stream(row_text);
            std::string item;
            while (std::getline(row_stream, item, ',')) {
                if (item.empty()) throw std::invalid_argument("parse_rows: empty entry");
                row.push_back(std::stoi(item));
            }
        } else {
            for (char c : row_text) {
                if (c < '0' || c > '9')
                    throw std::invalid_argument("parse_rows: expected digit, got '" +
                                                std::string(1, c) + "'");
                row.push_back(c - '0');
            }
        }
        if (row.empty()) throw std::invalid_argument("parse_rows: empty row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("parse_rows: empty tableau text");
    return rows;
}

WeylTableau parse_weyl_tableau(const std::string& text) {
    return WeylTableau(parse_rows(text));
}

YoungTableau parse_young_tableau(const std::string& text) {
    return YoungTableau(parse_rows(text));
}

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> values;
    std::istringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) throw std::invalid_argument(std::string(what) + ": empty entry");
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size())
            throw std::invalid_argument(std::string(what) + ": bad entry '" + item + "'");
        values.push_back(v);
    }
    if (values.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
    return values;
}

}  // namespace

Partition parse_partition(const std::string& text) {
    Partition parts = parse_int_list(text, "parse_partition");
    if (!is_partition(parts))
        throw std::invalid_argument("parse_partition: parts must weakly decrease");
    return parts;
}

Configuration parse_configuration(const std::string& text) {
    Configuration f = parse_int_list(text, "parse_configuration");
    for (int v : f)
        if (v < 1) throw std::invalid_argument("parse_configuration: letters start at 1");
    return f;
}

}  // namespace schurweyl
