// Exact partition numbers: pentagonal recurrence, a structurally independent
// DP oracle, and a persistent plain-text table.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace partcert {

struct TableParseError : std::runtime_error {
    explicit TableParseError(const std::string& what) : std::runtime_error(what) {}
};

// p(0..n_max) by Euler's pentagonal recurrence:
//   p(n) = sum_{j>=1} (-1)^{j+1} [ p(n - j(3j-1)/2) + p(n - j(3j+1)/2) ],
// with p(0) = 1 and p(m) = 0 for m < 0.
//
// Construction is serial; a fully built table is immutable under the const
// API and safe to share across threads.
class PartitionTable {
public:
    PartitionTable() { values_.emplace_back(1); }

    long n_max() const { return static_cast<long>(values_.size()) - 1; }

    // Extends the table to cover n (amortized doubling), then returns p(n).
    const mpz_class& value(long n);

    // Read-only access; n must already be covered.
    const mpz_class& at(long n) const;

    void extend_to(long n);

    // Plain text, one "<n> <decimal>" line per entry, ascending from 0.
    void save(std::ostream& out) const;
    void save_file(const std::string& path) const;
    // Same format, restricted to entries 0..n (n must be covered).
    void save_upto(std::ostream& out, long n) const;
    static PartitionTable load(std::istream& in);
    static PartitionTable load_file(const std::string& path);

private:
    std::vector<mpz_class> values_;
};

// p(n) via the shared table (extends on demand).
inline const mpz_class& p_exact(long n, PartitionTable& table) {
    return table.value(n);
}

inline constexpr long kDefaultOracleCeiling = 2000;

// p(0..n) by dynamic programming over part sizes (count partitions with parts
// <= k, k increasing) -- independent of the pentagonal recurrence.
std::vector<mpz_class> p_brute_upto(long n);

// Single-value DP oracle; rejects n above the ceiling (oracle misuse guard).
mpz_class p_brute(long n, long ceiling = kDefaultOracleCeiling);

}  // namespace partcert
