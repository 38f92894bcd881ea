#pragma once

#include "schurweyl/surd.hpp"

#include <string>
#include <vector>

namespace schurweyl {

// Weakly decreasing non-negative parts; trailing zeros permitted (and kept
// when a partition is used as a U(n) irrep label).
using Partition = std::vector<int>;
// Non-negative parts, fixed length n, summing to the node count N.
using Composition = std::vector<int>;
// Letters 1..n, one per node.
using Configuration = std::vector<int>;

// Triangular array: row j has j entries m(1,j) >= ... >= m(j,j); row n is the
// top row (the irrep label), row 1 the single bottom entry.
class GTPattern {
public:
    GTPattern() = default;
    explicit GTPattern(int n) : rows_(static_cast<std::size_t>(n)) {
        for (int j = 1; j <= n; ++j) rows_[j - 1].assign(j, 0);
    }
    // Rows ordered bottom-up: rows[j-1] has length j.
    explicit GTPattern(std::vector<std::vector<int>> rows_bottom_up);
    static GTPattern from_rows_top_down(std::vector<std::vector<int>> rows);

    int size() const { return static_cast<int>(rows_.size()); }
    int m(int i, int j) const { return rows_[j - 1][i - 1]; }
    int& m(int i, int j) { return rows_[j - 1][i - 1]; }
    const std::vector<int>& row(int j) const { return rows_[j - 1]; }
    Partition top_row() const { return rows_.back(); }
    std::vector<std::vector<int>> rows_top_down() const;

    bool operator==(const GTPattern& o) const { return rows_ == o.rows_; }
    bool operator!=(const GTPattern& o) const { return rows_ != o.rows_; }
    bool operator<(const GTPattern& o) const { return rows_ < o.rows_; }

private:
    std::vector<std::vector<int>> rows_;
};

// Interlacing: m(i,j+1) >= m(i,j) >= m(i+1,j+1) for all 1 <= i <= j < n,
// plus within-row weak decrease of the top row.
bool betweenness_valid(const GTPattern& p);

// p(i,j) = m(i,j) + j - i. Throws on indices outside the triangle.
int partial_hook(const GTPattern& p, int i, int j);

// Semistandard filling: rows weakly increase, columns strictly increase.
class WeylTableau {
public:
    WeylTableau() = default;
    explicit WeylTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {}
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    bool operator==(const WeylTableau& o) const { return rows_ == o.rows_; }
    bool operator<(const WeylTableau& o) const { return rows_ < o.rows_; }

private:
    std::vector<std::vector<int>> rows_;
};

// Standard filling: letters 1..N each once, rows and columns strictly increase.
class YoungTableau {
public:
    YoungTableau() = default;
    explicit YoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {}
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    bool operator==(const YoungTableau& o) const { return rows_ == o.rows_; }
    bool operator<(const YoungTableau& o) const { return rows_ < o.rows_; }

private:
    std::vector<std::vector<int>> rows_;
};

bool is_partition(const std::vector<int>& parts);
bool is_semistandard(const WeylTableau& t, int n);
bool is_standard(const YoungTableau& y);

// Drop trailing zeros (for comparing padded and unpadded labels).
Partition trimmed(Partition lambda);
Partition padded(Partition lambda, int n);  // throws if more than n nonzero parts

Partition shape_of(const WeylTableau& t);
Partition shape_of(const YoungTableau& y);
Composition weight_of(const WeylTableau& t, int n);
Composition weight_of(const Configuration& f, int n);

// Occupation-number bijection between GT patterns and Weyl tableaux:
// tau(i,k) = m(i,k) - m(i,k-1) copies of letter k in row i, and back.
WeylTableau tableau_from_gt(const GTPattern& p);
GTPattern gt_from_tableau(const WeylTableau& t, int n);

// Replace the letters of a semistandard tableau by 1..N, numbering equal
// letters left to right (by column); the result is standard.
YoungTableau standardize(const WeylTableau& t);

// True iff lambda dominates mu (prefix sums of lambda >= prefix sums of mu).
// Throws if the sums differ.
bool dominance_leq(const Partition& mu, const Partition& lambda);

// Number of semistandard tableaux of shape lambda and weight mu, by
// enumeration; desk-scale instances only.
long long kostka(const Partition& lambda, const Composition& mu);

// prod_{i<j} (p_i - p_j) / (1! 2! ... (n-1)!) with p_i = lambda_i + n - i.
Int dim_irrep(const Partition& lambda, int n);

// All distinct arrangements of the multiset {1^mu1, ..., n^mun}, lexicographic.
std::vector<Configuration> orbit_enumerate(const Composition& mu);

// All betweenness-valid triangles with top row lambda (padded to n).
std::vector<GTPattern> enumerate_gt_patterns(const Partition& lambda, int n);

std::vector<YoungTableau> enumerate_syt(const Partition& lambda);
std::vector<WeylTableau> enumerate_ssyt(const Partition& lambda, int n);
std::vector<WeylTableau> enumerate_ssyt_with_weight(const Partition& lambda,
                                                    const Composition& mu);

std::vector<Partition> partitions_of(int total, int max_parts);
std::vector<Composition> compositions_of(int total, int n);

// Text formats: tableau rows joined by '/', digits packed when all letters
// are <= 9, comma-separated otherwise; partitions and configurations are
// comma-separated.
std::string format_rows(const std::vector<std::vector<int>>& rows);
std::string format_tableau(const WeylTableau& t);
std::string format_tableau(const YoungTableau& y);
std::string format_int_list(const std::vector<int>& values);
std::string format_gt_pattern(const GTPattern& p);  // "(310/21/1)", top row first

std::vector<std::vector<int>> parse_rows(const std::string& text);
WeylTableau parse_weyl_tableau(const std::string& text);
YoungTableau parse_young_tableau(const std::string& text);
Partition parse_partition(const std::string& text);
Configuration parse_configuration(const std::string& text);

}  // namespace schurweyl
