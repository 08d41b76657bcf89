#include "partcert/partition.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace partcert {

void PartitionTable::extend_to(long n) {
    if (n < 0) throw std::domain_error("PartitionTable: negative index");
    if (n <= n_max()) return;
    values_.reserve(static_cast<std::size_t>(
        std::max<long>(n + 1, 2 * n_max() + 2)));
    mpz_class acc;
    for (long m = n_max() + 1; m <= n; ++m) {
        acc = 0;
        // generalized pentagonal numbers g = j(3j-1)/2 and j(3j+1)/2
        for (long j = 1;; ++j) {
            long g1 = j * (3 * j - 1) / 2;
            if (g1 > m) break;
            long g2 = g1 + j;  // j(3j+1)/2
            if (j % 2 == 1) {
                acc += values_[static_cast<std::size_t>(m - g1)];
                if (g2 <= m) acc += values_[static_cast<std::size_t>(m - g2)];
            } else {
                acc -= values_[static_cast<std::size_t>(m - g1)];
                if (g2 <= m) acc -= values_[static_cast<std::size_t>(m - g2)];
            }
        }
        values_.push_back(acc);
    }
}

const mpz_class& PartitionTable::value(long n) {
    extend_to(n);
    return values_[static_cast<std::size_t>(n)];
}

const mpz_class& PartitionTable::at(long n) const {
    if (n < 0 || n > n_max()) {
        throw std::out_of_range("PartitionTable::at: index not covered");
    }
    return values_[static_cast<std::size_t>(n)];
}

void PartitionTable::save(std::ostream& out) const {
    save_upto(out, n_max());
}

void PartitionTable::save_upto(std::ostream& out, long n) const {
    if (n < 0 || n > n_max()) {
        throw std::out_of_range("PartitionTable::save_upto: index not covered");
    }
    for (long i = 0; i <= n; ++i) {
        out << i << ' ' << values_[static_cast<std::size_t>(i)].get_str() << '\n';
    }
}

void PartitionTable::save_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    save(out);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

PartitionTable PartitionTable::load(std::istream& in) {
    PartitionTable table;
    table.values_.clear();
    std::string line;
    long line_no = 0;
    long expect = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        long n = -1;
        std::string digits;
        if (!(ls >> n >> digits) || !(ls >> std::ws).eof()) {
            throw TableParseError("table parse error at line " +
                                  std::to_string(line_no) + ": '" + line + "'");
        }
        if (n != expect) {
            throw TableParseError("table parse error at line " +
                                  std::to_string(line_no) + ": expected index " +
                                  std::to_string(expect) + ", got " +
                                  std::to_string(n));
        }
        mpz_class v;
        if (v.set_str(digits, 10) != 0 || v < 0) {
            throw TableParseError("table parse error at line " +
                                  std::to_string(line_no) +
                                  ": bad value '" + digits + "'");
        }
        table.values_.push_back(v);
        ++expect;
    }
    if (table.values_.empty()) {
        throw TableParseError("table parse error: empty file");
    }
    if (table.values_[0] != 1) {
        throw TableParseError("table parse error at line 1: p(0) must be 1");
    }
    return table;
}

PartitionTable PartitionTable::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return load(in);
}

std::vector<mpz_class> p_brute_upto(long n) {
    if (n < 0) throw std::domain_error("p_brute_upto: negative n");
    std::vector<mpz_class> ways(static_cast<std::size_t>(n) + 1);
    ways[0] = 1;
    for (long k = 1; k <= n; ++k) {
        for (long j = k; j <= n; ++j) {
            ways[static_cast<std::size_t>(j)] +=
                ways[static_cast<std::size_t>(j - k)];
        }
    }
    return ways;
}

mpz_class p_brute(long n, long ceiling) {
    if (n < 0) throw std::domain_error("p_brute: negative n");
    if (n > ceiling) {
        throw std::out_of_range("p_brute: n=" + std::to_string(n) +
                                " above oracle ceiling " +
                                std::to_string(ceiling));
    }
    return p_brute_upto(n).back();
}

}  // namespace partcert
