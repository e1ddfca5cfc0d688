#include "cauchon/counting.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cauchon/diagram.hpp"
#include "cauchon/error.hpp"
#include "cauchon/strata.hpp"
#include "parallel.hpp"

namespace cauchon {

namespace {

Integer factorial(int k) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return f;
}

Integer binomial(int n, int k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

std::string render(const Rational& q, int digits) {
    return digits < 0 ? q.get_str() : to_decimal(q, digits);
}

// Partition the enumeration by first row. With more than 32 columns the
// partition index space is too large and the walk runs as one stream.
template <class Visit, class Merge>
void for_each_partition(int m, int n, unsigned jobs, Visit&& visit, Merge&& merge) {
    if (n > 20 || jobs <= 1) {
        DiagramEnumerator it(m, n);
        visit(it);
        merge(0U);
        return;
    }
    const std::uint64_t parts = partition_count(n);
    detail::parallel_for(parts, jobs, [&](unsigned worker, std::uint64_t k) {
        DiagramEnumerator it(m, n, partition_first_row(n, k));
        visit(it, worker);
    });
    for (unsigned w = 0; w < jobs; ++w)
        merge(w);
}

} // namespace

Integer stirling2(int n, int k) {
    if (n < 0 || k < 0)
        throw std::invalid_argument("stirling2: negative argument");
    if (k > n)
        return 0;
    // Row-by-row recurrence S(r, j) = j S(r-1, j) + S(r-1, j-1).
    std::vector<Integer> row(static_cast<std::size_t>(k) + 1);
    row[0] = 1;
    for (int r = 1; r <= n; ++r)
        for (int j = std::min(r, k); j >= 0; --j)
            row[static_cast<std::size_t>(j)] =
                j == 0 ? Integer(0)
                       : j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
    return row[static_cast<std::size_t>(k)];
}

Integer diagram_count(int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("diagram_count: dimensions must be positive");
    Integer total = 0;
    for (int k = 0; k <= std::min(m, n); ++k) {
        const Integer f = factorial(k);
        total += f * f * stirling2(n + 1, k + 1) * stirling2(m + 1, k + 1);
    }
    return total;
}

std::uint64_t enumerated_count(int m, int n, unsigned jobs) {
    jobs = std::max(1U, jobs);
    std::vector<std::uint64_t> per_worker(jobs, 0);
    std::uint64_t total = 0;
    for_each_partition(
        m, n, jobs,
        [&](DiagramEnumerator& it, unsigned worker = 0) {
            std::uint64_t c = 0;
            while (it.next())
                ++c;
            per_worker[worker] += c;
        },
        [&](unsigned worker) { total += per_worker[worker]; });
    return total;
}

std::uint64_t DimDistribution::count(std::size_t e) const {
    auto it = counts.find(e);
    return it == counts.end() ? 0 : it->second;
}

void DimDistribution::merge(const DimDistribution& other) {
    if (other.m != m || other.n != n)
        throw std::invalid_argument("cannot merge distributions of different shapes");
    for (const auto& [e, c] : other.counts)
        counts[e] += c;
    total += other.total;
}

DimDistribution dim_distribution(int m, int n, const EnumerationOptions& opts) {
    if (diagram_count(m, n) > Integer(std::to_string(opts.cap)))
        throw CapExceeded(std::to_string(m) + "x" + std::to_string(n) + " has " +
                          diagram_count(m, n).get_str() + " diagrams, above the cap of " +
                          std::to_string(opts.cap));
    const unsigned jobs = std::max(1U, opts.jobs);
    std::vector<DimDistribution> partial(jobs, DimDistribution{m, n, {}, 0});
    DimDistribution result{m, n, {}, 0};
    for_each_partition(
        m, n, jobs,
        [&](DiagramEnumerator& it, unsigned worker = 0) {
            auto& h = partial[worker];
            while (auto c = it.next()) {
                ++h.counts[stratum_dim(*c)];
                ++h.total;
            }
        },
        [&](unsigned worker) { result.merge(partial[worker]); });
    return result;
}

Rational conjecture_limit(int m, int i) {
    if (m < 1 || i < 0 || i > m)
        throw std::invalid_argument("conjecture_limit: need m >= 1 and 0 <= i <= m");
    Integer four_m;
    mpz_ui_pow_ui(four_m.get_mpz_t(), 4, static_cast<unsigned long>(m));
    Rational q(binomial(2 * m, m + i) * (i == 0 ? 1 : 2), four_m);
    q.canonicalize();
    return q;
}

std::vector<ConjectureRow> conjecture_table(int m, int n_max, const EnumerationOptions& opts) {
    if (m < 1)
        throw std::invalid_argument("conjecture_table: m must be positive");
    std::vector<ConjectureRow> rows;
    for (int n = m; n <= n_max; ++n) {
        const auto dist = dim_distribution(m, n, opts);
        for (int i = 0; i <= m; ++i) {
            ConjectureRow r;
            r.m = m;
            r.n = n;
            r.i = i;
            r.count = dist.count(static_cast<std::size_t>(i));
            r.total = dist.total;
            r.empirical = Rational(Integer(std::to_string(r.count)), Integer(std::to_string(r.total)));
            r.empirical.canonicalize();
            r.limit = conjecture_limit(m, i);
            r.abs_error = abs(r.empirical - r.limit);
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

std::string to_decimal(const Rational& q, int digits) {
    if (digits < 0)
        throw std::invalid_argument("to_decimal: negative precision");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const bool negative = sgn(q) < 0;
    const Integer num = abs(q.get_num()) * scale * 2 + q.get_den();
    Integer scaled = num / (2 * q.get_den()); // round half away from zero
    std::string s = scaled.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits))
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (negative && sgn(scaled) != 0)
        s.insert(0, "-");
    return s;
}

void write_conjecture_csv(std::ostream& out, const std::vector<ConjectureRow>& rows, int digits) {
    out << "m,n,i,count,total,empirical,limit,abs_error\n";
    for (const auto& r : rows)
        out << r.m << ',' << r.n << ',' << r.i << ',' << r.count << ',' << r.total << ','
            << render(r.empirical, digits) << ',' << render(r.limit, digits) << ','
            << render(r.abs_error, digits) << '\n';
}

void write_distribution_csv(std::ostream& out, const DimDistribution& dist, int digits) {
    out << "m,n,i,count,total,empirical\n";
    for (const auto& [e, c] : dist.counts) {
        Rational q(Integer(std::to_string(c)), Integer(std::to_string(dist.total)));
        q.canonicalize();
        out << dist.m << ',' << dist.n << ',' << e << ',' << c << ',' << dist.total << ','
            << render(q, digits) << '\n';
    }
}

} // namespace cauchon
