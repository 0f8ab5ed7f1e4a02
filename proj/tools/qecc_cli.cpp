// qecc: construct, verify, bound, puncture, and derive nonbinary stabilizer
// codes through their additive-code carriers. All inputs and outputs are
// JSON; exit codes are 0 (pass/feasible), 1 (fail/infeasible), 2 (error).
// QECC_WORKERS controls the worker count of exhaustive scans.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "qecc/derive.hpp"
#include "qecc/json_io.hpp"
#include "qecc/puncture.hpp"

using namespace qecc;

namespace {

StabilizerCode load_code(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "IOError", "cannot open " + path);
    Json j;
    in >> j;
    return stabilizer_from_json(j);
}

void emit(const Json& j, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream os(out);
        require(os.good(), "IOError", "cannot write " + out);
        os << j.dump(2) << "\n";
    }
}

DistanceMode mode_of(const std::string& s) { return s == "exact" ? DistanceMode::Exact : DistanceMode::Skip; }

StabilizerCode construct_family(const std::string& family, std::uint64_t q, unsigned m, std::uint64_t n,
                                std::uint64_t delta, unsigned r1, unsigned r2, DistanceMode mode) {
    if (family == "hamming-h") return quantum_hamming_hermitian(q, m, mode);
    if (family == "hamming-e") return quantum_hamming_euclidean(q, m, mode);
    if (family == "qr") return quantum_qr(q, n, mode);
    if (family == "melas") return quantum_melas(q, m, mode);
    if (family == "bch-e") return quantum_bch_euclidean(q, m, delta, mode);
    if (family == "bch-h") return quantum_bch_hermitian(q, m, delta, mode);
    if (family == "bch-ext") return extend_bch(quantum_bch_hermitian(q, m, delta, DistanceMode::Skip), mode);
    if (family == "character") return quantum_character(q, m, r1, r2, mode);
    fail("BadParameters", "unknown family: " + family);
}

StabilizerCode construct_auto(const std::string& family, std::uint64_t q, unsigned m, std::uint64_t n,
                              std::uint64_t delta, unsigned r1, unsigned r2) {
    try {
        return construct_family(family, q, m, n, delta, r1, r2, DistanceMode::Exact);
    } catch (const Error& e) {
        if (e.code() != "CodeTooLarge" && e.code() != "SearchSpaceTooLarge") throw;
        return construct_family(family, q, m, n, delta, r1, r2, DistanceMode::Skip);
    }
}

struct TableRow {
    std::string family, params, purity, method, ms;
};

void sweep_family(std::vector<TableRow>& rows, const std::string& family, std::uint64_t q, std::uint64_t max_n,
                  const std::string& distance, bool timings) {
    struct Point {
        unsigned m = 0;
        std::uint64_t n = 0, delta = 0;
        unsigned r1 = 0, r2 = 0;
    };
    std::vector<Point> grid;
    auto fits = [&](std::uint64_t len) { return len >= 1 && len <= max_n; };
    if (family == "hamming-h") {
        for (unsigned m = 2; m <= 16; ++m) {
            if ((powu64(q, 2 * m) - 1) / (q * q - 1) > max_n) break;
            grid.push_back({m});
        }
    } else if (family == "hamming-e") {
        for (unsigned m = 2; m <= 24; ++m) {
            if ((powu64(q, m) - 1) / (q - 1) > max_n) break;
            grid.push_back({m});
        }
    } else if (family == "qr") {
        for (std::uint64_t n = 3; n <= max_n; n += 2)
            if (detail::is_prime_u64(n) && q % n != 0 && detail::powmod(q, (n - 1) / 2, n) == 1)
                grid.push_back({0, n});
    } else if (family == "melas") {
        for (unsigned m = 1; m <= 12; ++m) {
            if (!fits(powu64(q, 2 * m) - 1)) break;
            grid.push_back({m});
        }
    } else if (family == "bch-e") {
        for (unsigned m = 2; m <= 24 && fits(powu64(q, m) - 1); ++m)
            for (std::uint64_t delta = 2; delta <= powu64(q, (m + 1) / 2); ++delta) grid.push_back({m, 0, delta});
    } else if (family == "bch-h" || family == "bch-ext") {
        std::uint64_t extra = family == "bch-ext" ? 1 : 0;
        for (unsigned m = 1; m <= 12 && fits(powu64(q, 2 * m) - 1 + extra); ++m)
            for (std::uint64_t delta = 2; delta + 1 <= powu64(q, m); ++delta) grid.push_back({m, 0, delta});
    } else if (family == "character") {
        for (unsigned m = 1; m <= 20 && fits(std::uint64_t(1) << m); ++m)
            for (unsigned r1 = 0; r1 < m; ++r1)
                for (unsigned r2 = r1 + 1; r2 <= m; ++r2) grid.push_back({m, 0, 0, r1, r2});
    }
    for (const auto& pt : grid) {
        auto t0 = std::chrono::steady_clock::now();
        TableRow row;
        row.family = family;
        try {
            StabilizerCode code = [&] {
                if (distance == "exact")
                    return construct_family(family, q, pt.m, pt.n, pt.delta, pt.r1, pt.r2, DistanceMode::Exact);
                if (distance == "bound")
                    return construct_family(family, q, pt.m, pt.n, pt.delta, pt.r1, pt.r2, DistanceMode::Skip);
                return construct_auto(family, q, pt.m, pt.n, pt.delta, pt.r1, pt.r2);
            }();
            row.params = code.params_string();
            row.purity = code.pure_to ? std::to_string(*code.pure_to) : "?";
            row.method = code.d_status == DistanceStatus::Exact ? "exact" : "bound";
        } catch (const Error& e) {
            if (e.code() == "BadParameters" || e.code() == "DeltaOutOfRange" || e.code() == "NotResidue" ||
                e.code() == "NotPrime")
                continue;  // not a member of the family's parameter set
            row.params = "error";
            row.purity = "-";
            row.method = e.code();
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (timings) row.ms = std::to_string(static_cast<long long>(ms + 0.5));
        rows.push_back(std::move(row));
    }
}

int run_table(std::uint64_t q, std::uint64_t max_n, bool csv, bool as_json, const std::string& distance,
              bool timings) {
    std::vector<TableRow> rows;
    for (const char* fam : {"hamming-h", "hamming-e", "qr", "melas", "bch-e", "bch-h", "bch-ext", "character"})
        sweep_family(rows, fam, q, max_n, distance, timings);
    if (as_json) {
        Json out = Json::array();
        for (const auto& r : rows) {
            Json j{{"family", r.family}, {"params", r.params}, {"pure_to", r.purity}, {"method", r.method}};
            if (timings) j["ms"] = r.ms;
            out.push_back(j);
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::vector<std::string> header = {"family", "code", "pure_to", "method"};
    if (timings) header.push_back("ms");
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows) {
        std::vector<std::string> c = {r.family, r.params, r.purity, r.method};
        if (timings) c.push_back(r.ms);
        cells.push_back(std::move(c));
    }
    if (csv) {
        for (std::size_t j = 0; j < header.size(); ++j) std::cout << (j ? "," : "") << header[j];
        std::cout << "\n";
        for (const auto& row : cells) {
            for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? "," : "") << row[j];
            std::cout << "\n";
        }
        return 0;
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t j = 0; j < header.size(); ++j) width[j] = header[j].size();
    for (const auto& row : cells)
        for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
    auto print_row = [&](const std::vector<std::string>& row) {
        for (std::size_t j = 0; j < row.size(); ++j)
            std::cout << row[j] << std::string(width[j] - row[j].size(), ' ') << (j + 1 < row.size() ? "  " : "");
        std::cout << "\n";
    };
    print_row(header);
    for (const auto& row : cells) print_row(row);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nonbinary stabilizer codes via additive-code carriers"};
    app.require_subcommand(1);
    int exit_code = 0;

    auto* c = app.add_subcommand("construct", "build a family member and emit its JSON");
    std::string c_family, c_distance = "exact", c_out = "-";
    std::uint64_t c_q = 0, c_n = 0, c_delta = 0;
    unsigned c_m = 0, c_r1 = 0, c_r2 = 0;
    c->add_option("--family", c_family, "hamming-h|hamming-e|qr|melas|bch-e|bch-h|bch-ext|character")->required();
    c->add_option("--q", c_q, "alphabet size (prime power)")->required();
    c->add_option("--m", c_m, "extension/length parameter");
    c->add_option("--n", c_n, "length (qr)");
    c->add_option("--delta", c_delta, "design distance (bch)");
    c->add_option("--r1", c_r1, "character order r1");
    c->add_option("--r2", c_r2, "character order r2");
    c->add_option("--distance", c_distance, "exact|bound")->check(CLI::IsMember({"exact", "bound"}));
    c->add_option("--out", c_out, "output file (default stdout)");
    c->callback([&] {
        auto code = construct_family(c_family, c_q, c_m, c_n, c_delta, c_r1, c_r2, mode_of(c_distance));
        emit(stabilizer_to_json(code), c_out);
    });

    auto* v = app.add_subcommand("verify", "re-check a stabilizer code file");
    std::string v_file, v_distance = "exact";
    v->add_option("file", v_file, "stabilizer code JSON")->required();
    v->add_option("--distance", v_distance, "exact|bound-only")->check(CLI::IsMember({"exact", "bound-only"}));
    v->callback([&] {
        auto code = load_code(v_file);
        auto rep = verify(code, v_distance == "exact" ? DistanceMode::Exact : DistanceMode::Skip);
        std::cout << report_to_json(rep).dump(2) << "\n";
        exit_code = rep.ok() ? 0 : 1;
    });

    auto* b = app.add_subcommand("bound", "evaluate a bound or feasibility predicate");
    std::string b_check;
    std::uint64_t b_q = 0, b_delta = 0;
    long long b_n = 0, b_k = 0, b_d = 0;
    unsigned b_m = 0;
    bool b_conj = false;
    b->add_option("--check", b_check, "singleton|hamming|gv|gv-linear|mds-gv|lp|carlitz|mds-length")->required();
    b->add_option("--n", b_n, "length");
    b->add_option("--k", b_k, "dimension in q-units");
    b->add_option("--d", b_d, "distance");
    b->add_option("--q", b_q, "alphabet size (the prime p for carlitz)")->required();
    b->add_option("--m", b_m, "extension degree (carlitz)");
    b->add_option("--delta", b_delta, "design distance (carlitz)");
    b->add_flag("--assume-mds-conjecture", b_conj, "apply the classical MDS conjecture cap");
    b->callback([&] {
        if (b_check == "carlitz") {
            auto r = carlitz_uchiyama(static_cast<std::uint32_t>(b_q), b_m, b_delta);
            Json j{{"bound", "carlitz-uchiyama"},
                   {"value", rat_to_string(r.value)},
                   {"clamped", r.clamped.str()},
                   {"trivial", r.trivial}};
            std::cout << j.dump(2) << "\n";
            exit_code = r.trivial ? 1 : 0;
            return;
        }
        auto [p, e] = prime_power(b_q);
        unsigned k_exp = static_cast<unsigned>(b_k) * e;
        if (b_check == "singleton") {
            auto verdict = singleton_check(static_cast<unsigned>(b_n), k_exp, static_cast<unsigned>(b_d), b_q, p, e);
            std::cout << verdict_to_json(verdict).dump(2) << "\n";
            exit_code = verdict.satisfied ? 0 : 1;
        } else if (b_check == "hamming") {
            auto verdict = (b_d == 0 || b_d == 3)
                               ? hamming_check_d3(static_cast<unsigned>(b_n), k_exp, b_q, p)
                               : hamming_check_pure(static_cast<unsigned>(b_n), k_exp, static_cast<unsigned>(b_d), b_q, p);
            std::cout << verdict_to_json(verdict).dump(2) << "\n";
            exit_code = verdict.satisfied ? 0 : 1;
        } else if (b_check == "gv") {
            bool ok = gv_exists(static_cast<unsigned>(b_n), k_exp, static_cast<unsigned>(b_d), b_q, p);
            std::cout << Json{{"bound", "gilbert-varshamov"}, {"exists", ok}}.dump(2) << "\n";
            exit_code = ok ? 0 : 1;
        } else if (b_check == "gv-linear") {
            bool ok = gv_linear_exists(static_cast<unsigned>(b_n), static_cast<unsigned>(b_k),
                                       static_cast<unsigned>(b_d), b_q);
            std::cout << Json{{"bound", "gilbert-varshamov-linear"}, {"exists", ok}}.dump(2) << "\n";
            exit_code = ok ? 0 : 1;
        } else if (b_check == "mds-gv") {
            bool ok = mds_gv_exists(static_cast<unsigned>(b_n), static_cast<unsigned>(b_d), b_q);
            std::cout << Json{{"bound", "mds-gilbert-varshamov"}, {"exists", ok}}.dump(2) << "\n";
            exit_code = ok ? 0 : 1;
        } else if (b_check == "lp") {
            auto r = lp_feasible(static_cast<unsigned>(b_n), k_exp, static_cast<unsigned>(b_d), b_q, p);
            Json j{{"bound", "lp"}, {"feasible", r.feasible}};
            if (r.feasible) {
                Json w = Json::array();
                for (const auto& x : r.witness) w.push_back(rat_to_string(x));
                j["witness"] = w;
                j["witness_integral"] = r.witness_integral;
                j["divisibility_filter_ok"] = r.divisibility_filter_ok;
            }
            std::cout << j.dump(2) << "\n";
            exit_code = r.feasible ? 0 : 1;
        } else if (b_check == "mds-length") {
            auto verdict = mds_constraints(static_cast<unsigned>(b_n), static_cast<unsigned>(b_d), b_q, b_conj);
            std::cout << verdict_to_json(verdict).dump(2) << "\n";
            exit_code = verdict.satisfied ? 0 : 1;
        } else {
            fail("BadParameters", "unknown check: " + b_check);
        }
    });

    auto* pu = app.add_subcommand("puncture", "puncture codes via their puncture codes");
    std::string pu_code, pu_bch, pu_distance = "exact", pu_out = "-";
    long long pu_target = -1;
    bool pu_menu = false, pu_json = false;
    pu->add_option("--code", pu_code, "stabilizer code JSON file");
    pu->add_option("--bch", pu_bch, "q,m,delta triple selecting a BCH base");
    pu->add_option("--target-length", pu_target, "desired punctured length r");
    pu->add_flag("--menu", pu_menu, "print the certified BCH puncture menu");
    pu->add_flag("--json", pu_json, "machine-readable menu");
    pu->add_option("--distance", pu_distance, "exact|bound")->check(CLI::IsMember({"exact", "bound"}));
    pu->add_option("--out", pu_out, "output file (default stdout)");
    pu->callback([&] {
        if (!pu_bch.empty()) {
            unsigned long long q = 0, delta = 0;
            unsigned m = 0;
            if (std::sscanf(pu_bch.c_str(), "%llu,%u,%llu", &q, &m, &delta) != 3)
                fail("BadParameters", "--bch expects q,m,delta");
            if (pu_menu) {
                auto menu = bch_puncture_menu(q, m, delta);
                if (pu_json) {
                    Json out = Json::array();
                    for (const auto& e : menu)
                        out.push_back(
                            Json{{"mu", e.mu}, {"length", e.length}, {"k_at_least", e.k_guarantee}, {"d_at_least", e.delta}});
                    std::cout << out.dump(2) << "\n";
                } else {
                    for (const auto& e : menu)
                        std::cout << "mu=" << e.mu << "  length=" << e.length << "  [[" << e.length << ",>="
                                  << e.k_guarantee << ",>=" << e.delta << "]]_" << q << "\n";
                }
                return;
            }
            require(pu_target >= 1, "BadParameters", "need --target-length with --bch");
            auto base = quantum_bch_euclidean(q, m, delta, DistanceMode::Skip);
            auto P = bch_puncture_code(q, m, delta);
            auto word = find_weight_word(P, static_cast<unsigned>(pu_target));
            if (!word) {
                std::cout << Json{{"found", false}}.dump(2) << "\n";
                exit_code = 1;
                return;
            }
            auto punct = puncture_to(base.carrier, *word, mode_of(pu_distance), base.d_claimed);
            emit(stabilizer_to_json(punct), pu_out);
            return;
        }
        require(!pu_code.empty(), "BadParameters", "need --code or --bch");
        require(pu_target >= 1, "BadParameters", "need --target-length");
        auto code = load_code(pu_code);
        auto P = puncture_code_symplectic(code.carrier);
        auto word = find_weight_word(P, static_cast<unsigned>(pu_target));
        if (!word) {
            std::cout << Json{{"found", false}}.dump(2) << "\n";
            exit_code = 1;
            return;
        }
        auto punct = puncture_to(code.carrier, *word, mode_of(pu_distance), code.d_claimed);
        emit(stabilizer_to_json(punct), pu_out);
    });

    auto* de = app.add_subcommand("derive", "apply a secondary construction");
    std::string de_rule, de_in, de_in2, de_distance = "exact", de_out = "-";
    unsigned de_degree = 1, de_block = 1;
    de->add_option("--rule", de_rule, "lengthen|shorten|reduce|sum|combine|difference|expand|contract")->required();
    de->add_option("--in", de_in, "input code JSON")->required();
    de->add_option("--in2", de_in2, "second input (sum/combine/difference)");
    de->add_option("--target-degree", de_degree, "target subfield degree (expand)");
    de->add_option("--block", de_block, "block size (contract)");
    de->add_option("--distance", de_distance, "exact|bound")->check(CLI::IsMember({"exact", "bound"}));
    de->add_option("--out", de_out, "output file (default stdout)");
    de->callback([&] {
        auto X = load_code(de_in);
        DistanceMode mode = mode_of(de_distance);
        StabilizerCode Y = [&]() -> StabilizerCode {
            if (de_rule == "lengthen") return lengthen(X, mode);
            if (de_rule == "shorten") return shorten_pure(X, mode);
            if (de_rule == "reduce") return reduce_dim(X, mode);
            if (de_rule == "expand") return expand_field(X, de_degree, mode);
            if (de_rule == "contract") return contract_field(X, de_block, mode);
            require(!de_in2.empty(), "BadParameters", "rule needs --in2");
            auto X2 = load_code(de_in2);
            if (de_rule == "sum") return direct_sum(X, X2, mode);
            if (de_rule == "combine") return nested_combine(X, X2, mode);
            if (de_rule == "difference") return difference_combine(X, X2, mode);
            fail("BadParameters", "unknown rule: " + de_rule);
        }();
        emit(stabilizer_to_json(Y), de_out);
    });

    auto* t = app.add_subcommand("table", "family table over a parameter grid");
    std::uint64_t t_q = 2, t_maxn = 100;
    bool t_csv = false, t_json = false, t_timings = false;
    std::string t_distance = "auto";
    t->add_option("--q", t_q, "alphabet size")->required();
    t->add_option("--max-n", t_maxn, "largest length to include");
    t->add_flag("--csv", t_csv, "CSV output");
    t->add_flag("--json", t_json, "JSON output");
    t->add_flag("--timings", t_timings, "include wall times (non-deterministic column)");
    t->add_option("--distance", t_distance, "exact|bound|auto")->check(CLI::IsMember({"exact", "bound", "auto"}));
    t->callback([&] { exit_code = run_table(t_q, t_maxn, t_csv, t_json, t_distance, t_timings); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << Json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }
    return exit_code;
}
