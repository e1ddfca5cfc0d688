#pragma once

// Counting Cauchon diagrams and tabulating how stratum dimensions are
// distributed among them.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "cauchon/exactla.hpp"

namespace cauchon {

/// Stirling number of the second kind S(n, k).
Integer stirling2(int n, int k);

/// Number of m x n Cauchon diagrams, via the poly-Bernoulli closed form
/// sum_{k=0}^{min(m,n)} (k!)^2 S(n+1, k+1) S(m+1, k+1).
Integer diagram_count(int m, int n);

/// Number of diagrams produced by streaming DiagramEnumerator.
std::uint64_t enumerated_count(int m, int n, unsigned jobs = 1);

struct EnumerationOptions {
    unsigned jobs = 1;
    /// Refuse to enumerate more diagrams than this.
    std::uint64_t cap = 10'000'000;
};

struct DimDistribution {
    int m = 0;
    int n = 0;
    /// stratum dimension -> number of diagrams
    std::map<std::size_t, std::uint64_t> counts;
    std::uint64_t total = 0;

    std::uint64_t count(std::size_t e) const;
    /// Adds another histogram over the same shape.
    void merge(const DimDistribution& other);

    friend bool operator==(const DimDistribution&, const DimDistribution&) = default;
};

/// Exact histogram of stratum_dim over all m x n diagrams. Work is split by
/// first row across `jobs` threads; the result does not depend on `jobs`.
/// Throws CapExceeded if diagram_count(m, n) exceeds the cap.
DimDistribution dim_distribution(int m, int n, const EnumerationOptions& opts = {});

/// 2^{1 - [i == 0]} * binom(2m, m + i) / 4^m.
Rational conjecture_limit(int m, int i);

struct ConjectureRow {
    int m = 0;
    int n = 0;
    int i = 0;
    std::uint64_t count = 0;
    std::uint64_t total = 0;
    Rational empirical;
    Rational limit;
    Rational abs_error;
};

/// Rows for n = m..n_max and i = 0..m.
std::vector<ConjectureRow> conjecture_table(int m, int n_max, const EnumerationOptions& opts = {});

/// Decimal rendering of an exact rational, rounded half away from zero.
std::string to_decimal(const Rational& q, int digits = 6);

/// CSV with header m,n,i,count,total,empirical,limit,abs_error. Rationals
/// are rendered with to_decimal, or as p/q when digits < 0.
void write_conjecture_csv(std::ostream& out, const std::vector<ConjectureRow>& rows,
                          int digits = 6);
/// CSV with header m,n,i,count,total,empirical.
void write_distribution_csv(std::ostream& out, const DimDistribution& dist, int digits = 6);

} // namespace cauchon
