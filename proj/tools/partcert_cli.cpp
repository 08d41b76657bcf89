// partcert command line front end.
//
//   partcert compute --n 100 [--method recurrence|series]
//   partcert enclose --n 100 [--terms N]
//   partcert verify <check> --from A --to B [--expect SET] [--out report.json]
//   partcert decay --from 2 --to 2000 --out fig1.csv [--order K]
//   partcert table --to 100000 --out table.txt
//
// Exit codes: 0 success, 1 check failed, 2 usage error, 3 I/O failure.
// Results go to stdout, diagnostics to stderr.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "partcert/bounds.hpp"
#include "partcert/decay.hpp"
#include "partcert/enclosure.hpp"
#include "partcert/hr_series.hpp"
#include "partcert/partition.hpp"
#include "partcert/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct CacheState {
    std::string path;
    long loaded_n_max = -1;
};

// PARTCERT_CACHE (or --cache) names a table file reused across invocations.
CacheState load_cache(partcert::PartitionTable& table, const std::string& flag_path) {
    CacheState st;
    st.path = flag_path;
    if (st.path.empty()) {
        const char* env = std::getenv("PARTCERT_CACHE");
        if (env != nullptr) st.path = env;
    }
    if (!st.path.empty()) {
        std::ifstream probe(st.path);
        if (probe.good()) {
            table = partcert::PartitionTable::load_file(st.path);
            st.loaded_n_max = table.n_max();
        }
    }
    return st;
}

void store_cache(const partcert::PartitionTable& table, const CacheState& st) {
    if (!st.path.empty() && table.n_max() > st.loaded_n_max) {
        table.save_file(st.path);
    }
}

// --expect vocabulary: none | odd-le-25 | even-lt-45 | comma list of points.
std::optional<std::set<long>> parse_expect(const std::string& spec) {
    std::set<long> out;
    if (spec == "none") return out;
    if (spec == "odd-le-25") {
        for (long n = 1; n <= 25; n += 2) out.insert(n);
        return out;
    }
    if (spec == "even-lt-45") {
        for (long n = 2; n < 45; n += 2) out.insert(n);
        return out;
    }
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            long v = std::stol(item, &pos);
            if (pos != item.size()) return std::nullopt;
            out.insert(v);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    if (out.empty()) return std::nullopt;
    return out;
}

int run_compute(long n, const std::string& method, partcert::PartitionTable& table) {
    if (method == "series") {
        if (n < 1) {
            std::cerr << "compute: --method series requires n >= 1\n";
            return kExitUsage;
        }
        std::cout << partcert::p_via_series(n).get_str() << "\n";
    } else {
        std::cout << partcert::p_exact(n, table).get_str() << "\n";
    }
    return kExitOk;
}

int run_enclose(long n, long terms, partcert::Precision prec) {
    partcert::Enclosure e = partcert::rademacher_enclosure(n, terms, prec);
    std::cout << e.lo_string(25) << " " << e.hi_string(25) << "\n";
    return kExitOk;
}

int run_verify(const std::string& check, long from, long to,
               const std::string& expect_spec, const std::string& out_path,
               const std::string& norm_name, partcert::PartitionTable& table,
               partcert::Precision prec) {
    partcert::ScanOptions options;
    options.prec = prec;
    options.janoski_norm = norm_name == "star-over-sqrtk"
                               ? partcert::JanoskiNorm::star_over_sqrtk
                               : partcert::JanoskiNorm::standard;
    partcert::CheckReport report = partcert::scan(check, from, to, table, options);

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "verify: cannot open " << out_path << " for writing\n";
            return kExitIo;
        }
        out << report.to_json_string();
        if (!out) {
            std::cerr << "verify: write to " << out_path << " failed\n";
            return kExitIo;
        }
    } else {
        std::cout << report.to_json_string();
    }

    if (!report.indeterminate.empty()) {
        std::cerr << "verify: " << report.indeterminate.size()
                  << " indeterminate point(s)\n";
        return kExitCheckFailed;
    }
    if (!expect_spec.empty()) {
        auto expected = parse_expect(expect_spec);
        if (!expected) {
            std::cerr << "verify: unparsable --expect '" << expect_spec << "'\n";
            return kExitUsage;
        }
        std::set<long> got;
        for (const auto& v : report.violations) {
            if (v.point.m) {
                std::cerr << "verify: --expect does not support pair-valued points\n";
                return kExitUsage;
            }
            got.insert(v.point.n);
        }
        if (got != *expected) {
            std::cerr << "verify: violation set does not match --expect (got "
                      << got.size() << " points, expected " << expected->size()
                      << ")\n";
            return kExitCheckFailed;
        }
        return kExitOk;
    }
    return report.passed ? kExitOk : kExitCheckFailed;
}

int run_decay(long from, long to, const std::string& out_path, int order,
              partcert::PartitionTable& table, partcert::Precision prec) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "decay: cannot open " << out_path << " for writing\n";
            return kExitIo;
        }
        out = &file;
    }
    *out << "n,d_lo,d_hi,normalized_lo,normalized_hi";
    if (order >= 0) *out << ",L_plus,L_minus";
    *out << "\n";
    auto samples = partcert::figure1_series(from, to, table, prec);
    for (const auto& s : samples) {
        *out << s.n << ',' << s.d_value.lo_string(21) << ','
             << s.d_value.hi_string(21) << ',' << s.normalized.lo_string(21)
             << ',' << s.normalized.hi_string(21);
        if (order >= 0) {
            partcert::Enclosure lp =
                partcert::L_expansion(s.n, order, partcert::LSign::plus, prec);
            partcert::Enclosure lm =
                partcert::L_expansion(s.n, order, partcert::LSign::minus, prec);
            *out << ',' << lp.midpoint().lo_string(21) << ','
                 << lm.midpoint().lo_string(21);
        }
        *out << "\n";
    }
    out->flush();
    if (!*out) {
        std::cerr << "decay: write failed\n";
        return kExitIo;
    }
    return kExitOk;
}

int run_table(long to, const std::string& out_path, partcert::PartitionTable& table) {
    table.extend_to(to);
    try {
        if (out_path.empty()) {
            table.save_upto(std::cout, to);
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
            table.save_upto(out, to);
            out.flush();
            if (!out) throw std::runtime_error("write failed: " + out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "table: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified partition-function computations"};
    app.require_subcommand(1);

    long arg_n = 0;
    long arg_from = 0, arg_to = 0, arg_terms = 2;
    int arg_order = -1;
    std::string arg_method = "recurrence";
    std::string arg_expect, arg_out, arg_cache, arg_norm = "standard";
    long arg_prec = static_cast<long>(partcert::default_precision());

    app.add_option("--precision", arg_prec, "working precision in bits");
    app.add_option("--cache", arg_cache, "partition table cache file");

    CLI::App* compute = app.add_subcommand("compute", "print exact p(n)");
    compute->add_option("--n", arg_n, "index n")->required();
    compute->add_option("--method", arg_method, "recurrence|series")
        ->check(CLI::IsMember({"recurrence", "series"}));

    CLI::App* enclose =
        app.add_subcommand("enclose", "print a certified p(n) series window");
    enclose->add_option("--n", arg_n, "index n")->required();
    enclose->add_option("--terms", arg_terms, "series truncation N (default 2)");

    CLI::App* verify = app.add_subcommand("verify", "run a certified range scan");
    std::string arg_check;
    verify->add_option("check", arg_check, "check id")->required();
    verify->add_option("--from", arg_from, "range start");
    verify->add_option("--to", arg_to, "range end")->required();
    verify->add_option("--expect", arg_expect,
                       "expected violation set: none|odd-le-25|even-lt-45|n1,n2,...");
    verify->add_option("--out", arg_out, "report path (stdout if omitted)");
    verify->add_option("--normalization", arg_norm, "janoski A_k normalization")
        ->check(CLI::IsMember({"standard", "star-over-sqrtk"}));

    CLI::App* decay = app.add_subcommand("decay", "emit the decay series CSV");
    decay->add_option("--from", arg_from, "first n")->required();
    decay->add_option("--to", arg_to, "last n")->required();
    decay->add_option("--out", arg_out, "CSV path (stdout if omitted)");
    decay->add_option("--order", arg_order, "append L_k^+/- columns of this order");

    CLI::App* table_cmd = app.add_subcommand("table", "write the exact table");
    table_cmd->add_option("--to", arg_to, "largest n")->required();
    table_cmd->add_option("--out", arg_out, "table path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (arg_prec < partcert::kMinPrecision || arg_prec > partcert::kMaxPrecision) {
        std::cerr << "precision must be in [" << partcert::kMinPrecision << ", "
                  << partcert::kMaxPrecision << "]\n";
        return kExitUsage;
    }
    auto prec = static_cast<partcert::Precision>(arg_prec);

    partcert::PartitionTable table;
    CacheState cache;
    try {
        cache = load_cache(table, arg_cache);
    } catch (const std::exception& e) {
        std::cerr << "cache: " << e.what() << "\n";
        return kExitIo;
    }

    int rc = kExitOk;
    try {
        if (compute->parsed()) {
            if (arg_n < 0) {
                std::cerr << "compute: n must be nonnegative\n";
                return kExitUsage;
            }
            rc = run_compute(arg_n, arg_method, table);
        } else if (enclose->parsed()) {
            if (arg_n < 1 || arg_terms < 1) {
                std::cerr << "enclose: need n >= 1 and terms >= 1\n";
                return kExitUsage;
            }
            rc = run_enclose(arg_n, arg_terms, prec);
        } else if (verify->parsed()) {
            rc = run_verify(arg_check, arg_from, arg_to, arg_expect, arg_out,
                            arg_norm, table, prec);
        } else if (decay->parsed()) {
            if (arg_from < 2 || arg_from > arg_to) {
                std::cerr << "decay: need 2 <= from <= to\n";
                return kExitUsage;
            }
            if (arg_order > partcert::kLOrderCap) {
                std::cerr << "decay: --order above derivative cap "
                          << partcert::kLOrderCap << "\n";
                return kExitUsage;
            }
            rc = run_decay(arg_from, arg_to, arg_out, arg_order, table, prec);
        } else if (table_cmd->parsed()) {
            if (arg_to < 0) {
                std::cerr << "table: --to must be nonnegative\n";
                return kExitUsage;
            }
            rc = run_table(arg_to, arg_out, table);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitIo;
    }

    try {
        store_cache(table, cache);
    } catch (const std::exception& e) {
        std::cerr << "cache: " << e.what() << "\n";
        return kExitIo;
    }
    return rc;
}
