// Command-line front end: triangle emission, orbit inspection, orbit
// censuses, verification suites, single operator steps, and PAP listing.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/input error,
// 3 internal consistency error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pap/census.hpp"
#include "pap/checks.hpp"
#include "pap/io.hpp"
#include "pap/kernels.hpp"
#include "pap/operators.hpp"
#include "pap/permutation.hpp"
#include "pap/triangles.hpp"

namespace {

using namespace pap;

enum class Format { Pretty, Json, Csv };

Format parse_format(const std::string& text) {
    if (text == "pretty") return Format::Pretty;
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    throw std::invalid_argument("unknown format '" + text + "'");
}

constexpr int kRecurrenceCap = 14;

void require_range(int n, int cap, const std::string& what) {
    if (n < 1 || n > cap) {
        throw std::invalid_argument(what + " supports n in 1.." + std::to_string(cap) +
                                    " (got " + std::to_string(n) + ")");
    }
}

Triangle build_triangle(TriangleKind kind, int n, const std::string& method, int chunks) {
    const bool pap_kind = kind == TriangleKind::S || kind == TriangleKind::P ||
                          kind == TriangleKind::Q || kind == TriangleKind::R;

    auto from_full_scan = [&]() {
        require_range(n, kFullScanCap, "the full factorial scan");
        TriangleSet ts = enumerate_triangles(n, chunks);
        switch (kind) {
            case TriangleKind::A: return ts.a;
            case TriangleKind::B: return ts.b;
            case TriangleKind::C: return ts.c;
            case TriangleKind::D: return ts.d;
            case TriangleKind::S: return ts.s;
            case TriangleKind::P: return ts.p;
            case TriangleKind::Q: return ts.q;
            case TriangleKind::R: return ts.r;
        }
        throw std::logic_error("unreachable");
    };
    auto from_pap_scan = [&]() {
        require_range(n, kPapScanCap, "PAP-only enumeration");
        PapTriangleSet ps = enumerate_pap_triangles(n);
        switch (kind) {
            case TriangleKind::S: return ps.s;
            case TriangleKind::P: return ps.p;
            case TriangleKind::Q: return ps.q;
            case TriangleKind::R: return ps.r;
            default: throw std::logic_error("unreachable");
        }
    };
    auto from_recurrence = [&]() {
        require_range(n, kRecurrenceCap, "the recurrence");
        switch (kind) {
            case TriangleKind::A: return eulerian_recurrence(n);
            case TriangleKind::D: return signed_recurrence(n);
            case TriangleKind::R: return r_recurrence(n);
            case TriangleKind::B: return bc_from_ad(eulerian_recurrence(n), signed_recurrence(n)).first;
            case TriangleKind::C: return bc_from_ad(eulerian_recurrence(n), signed_recurrence(n)).second;
            default:
                throw std::invalid_argument(
                    "S, P and Q have no recurrence route (odd rows require enumeration); "
                    "use --method enumerate");
        }
    };

    if (method == "recurrence") return from_recurrence();
    if (method == "enumerate") return pap_kind ? from_pap_scan() : from_full_scan();
    // auto: recurrences where they exist, enumeration elsewhere
    switch (kind) {
        case TriangleKind::A:
        case TriangleKind::D:
        case TriangleKind::R: return from_recurrence();
        case TriangleKind::B:
        case TriangleKind::C: return from_full_scan();
        default: return from_pap_scan();
    }
}

std::string render(const Triangle& t, Format fmt) {
    switch (fmt) {
        case Format::Pretty: return io::triangle_pretty(t);
        case Format::Json: return io::triangle_json(t).dump(2) + "\n";
        case Format::Csv: return io::triangle_csv(t);
    }
    return {};
}

int run_triangle(const std::string& kind_text, int n, const std::string& method, int chunks,
                 Format fmt, const std::string& cache_dir) {
    const TriangleKind kind = triangle_kind_from(kind_text);
    std::optional<Triangle> t;
    if (!cache_dir.empty())
        t = io::cache_load(std::filesystem::path(cache_dir), kind, n, method);
    if (!t) {
        t = build_triangle(kind, n, method, chunks);
        if (!cache_dir.empty()) io::cache_store(std::filesystem::path(cache_dir), method, *t);
    }
    std::cout << render(*t, fmt);
    return 0;
}

int run_orbit(const std::string& perm_text, const std::string& op, Format fmt) {
    const Permutation p = parse_permutation(perm_text);
    const OrbitRecord record = (op == "tau") ? orbit_tau(p) : orbit_sigma(p);
    switch (fmt) {
        case Format::Pretty: std::cout << io::orbit_pretty(record); break;
        case Format::Json: std::cout << io::orbit_json(record).dump(2) << "\n"; break;
        case Format::Csv: std::cout << io::orbit_csv(record); break;
    }
    return 0;
}

int run_apply(const std::string& perm_text, const std::string& op, Format fmt) {
    const Permutation p = parse_permutation(perm_text);
    const Permutation result = (op == "tau") ? apply_tau(p) : apply_sigma(p);
    switch (fmt) {
        case Format::Pretty: std::cout << result.str() << "\n"; break;
        case Format::Json: {
            nlohmann::ordered_json j;
            j["operator"] = op;
            j["input"] = nlohmann::ordered_json::array();
            for (Entry e : p.entries()) j["input"].push_back(int(e));
            j["result"] = nlohmann::ordered_json::array();
            for (Entry e : result.entries()) j["result"].push_back(int(e));
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::Csv: std::cout << "permutation\n" << result.str() << "\n"; break;
    }
    return 0;
}

int run_census(int n, std::optional<int> k, bool all_k, Format fmt) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("census requires an even n >= 2");
    if (!k && !all_k) throw std::invalid_argument("pass --k or --all-k");
    require_range(n, kPapScanCap, "the orbit census");

    const PapTriangleSet ps = enumerate_pap_triangles(n - 1);
    std::vector<int> ks;
    if (all_k) {
        for (int i = 1; i <= n - 1; ++i) ks.push_back(i);
    } else {
        ks.push_back(*k);
    }

    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    bool first = true;
    for (int kk : ks) {
        const OrbitCensus census = orbit_census(n, kk);
        const std::int64_t p_target = ps.p.at_or_zero(n - 1, kk - 1);
        const std::int64_t q_target = ps.q.at_or_zero(n - 1, kk - 1);
        switch (fmt) {
            case Format::Pretty:
                if (!first) std::cout << "\n";
                std::cout << io::census_pretty(census, p_target, q_target);
                break;
            case Format::Json: cells.push_back(io::census_json(census, p_target, q_target)); break;
            case Format::Csv:
                if (first) std::cout << "n,k,d,alpha,beta\n";
                for (const auto& [d, ab] : census.by_period)
                    std::cout << n << "," << kk << "," << d << "," << ab.first << ","
                              << ab.second << "\n";
                break;
        }
        first = false;
    }
    if (fmt == Format::Json) std::cout << cells.dump(2) << "\n";
    return 0;
}

int run_paps(int n, Format fmt) {
    require_range(n, kPapScanCap, "PAP listing");
    switch (fmt) {
        case Format::Pretty: {
            for_each_pap(n, [&](std::span<const Entry> a) {
                std::cout << Permutation(std::vector<Entry>(a.begin(), a.end())).str() << "\n";
            });
            break;
        }
        case Format::Json: {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for_each_pap(n, [&](std::span<const Entry> a) {
                nlohmann::ordered_json one = nlohmann::ordered_json::array();
                for (Entry e : a) one.push_back(int(e));
                arr.push_back(one);
            });
            std::cout << arr.dump(2) << "\n";
            break;
        }
        case Format::Csv: {
            std::cout << "index,permutation\n";
            std::uint64_t i = 0;
            for_each_pap(n, [&](std::span<const Entry> a) {
                std::cout << i++ << ","
                          << Permutation(std::vector<Entry>(a.begin(), a.end())).str() << "\n";
            });
            break;
        }
    }
    return 0;
}

int run_verify(const std::string& suite, int n, int chunks, Format fmt) {
    std::vector<CheckReport> reports;
    const bool all = suite == "all";

    if (all || suite == "d-eq-r") {
        const TriangleSet ts = enumerate_triangles(std::min(n, kFullScanCap), chunks);
        reports.push_back(verify_d_equals_r(ts.d, ts.r));
    }
    if (all || suite == "thm41") {
        const PapTriangleSet ps = enumerate_pap_triangles(std::min(n, kPapScanCap));
        reports.push_back(verify_even_row_recurrence(ps.r));
    }
    if (all || suite == "thm51") {
        CheckReport combined{"orbit-vanishing", {}};
        for (int even_n = 2; even_n <= std::min(n, kPapScanCap); even_n += 2)
            for (int k = 1; k <= even_n - 1; ++k)
                combined.merge(verify_orbit_vanishing(orbit_census(even_n, k)));
        reports.push_back(std::move(combined));
    }
    if (all || suite == "thm52") {
        const int cap = std::min(n, kPapScanCap);
        CheckReport combined{"prime-power-divisibility", {}};
        if (cap >= 2) {
            const PapTriangleSet ps = enumerate_pap_triangles(cap - 1);
            const Triangle d = signed_recurrence(cap - 1);
            for (const DivisibilityTuple& t : divisibility_tuples(2, cap, true, false)) {
                combined.merge(to_report(verify_prime_power_divisibility(
                    t.p, t.m, t.n, t.k, ps.s, ps.p, ps.q, ps.r, d)));
            }
        }
        reports.push_back(std::move(combined));
    }
    if (all || suite == "cor53") {
        const int cap = std::min(n, kRecurrenceCap);
        CheckReport combined{"bc-divisibility", {}};
        if (cap >= 2) {
            const auto [b, c] = bc_from_ad(eulerian_recurrence(cap - 1), signed_recurrence(cap - 1));
            for (const DivisibilityTuple& t : divisibility_tuples(2, cap, false, true))
                combined.merge(to_report(verify_bc_divisibility(t.p, t.m, t.n, t.k, b, c)));
        }
        reports.push_back(std::move(combined));
    }
    if (all || suite == "cor54") {
        const PapTriangleSet ps = enumerate_pap_triangles(std::min(n, kPapScanCap));
        reports.push_back(verify_pap_recurrence_even(ps.s));
    }
    if (all || suite == "eq11") {
        const int cap = std::min(n, kPapScanCap);
        const PapTriangleSet ps = enumerate_pap_triangles(cap);
        CheckReport combined{"canonical-count", {}};
        for (int even_n = 2; even_n <= cap; even_n += 2)
            for (int k = 0; k <= even_n - 1; ++k)
                combined.merge(verify_canonical_count_identity(even_n, k, ps.s));
        reports.push_back(std::move(combined));
    }
    if (all || suite == "symmetry") {
        const PapTriangleSet ps = enumerate_pap_triangles(std::min(n, kPapScanCap));
        reports.push_back(check_symmetries(ps.s, ps.p, ps.q));
    }

    bool ok = true;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckReport& r : reports) {
        ok = ok && r.ok();
        switch (fmt) {
            case Format::Pretty: std::cout << io::report_pretty(r); break;
            case Format::Json: arr.push_back(io::report_json(r)); break;
            case Format::Csv: std::cout << io::report_csv(r); break;
        }
    }
    if (fmt == Format::Json) std::cout << arr.dump(2) << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parity-alternate permutation statistics"};
    app.set_version_flag("--version", io::kVersionTag);
    app.require_subcommand(1);

    std::string kind = "D";
    std::string method = "auto";
    std::string format = "pretty";
    std::string op = "sigma";
    std::string perm_text;
    std::string suite = "all";
    std::string cache_dir;
    if (const char* env = std::getenv("PAP_CACHE_DIR")) cache_dir = env;
    int n = 10;
    int chunks = 1;
    std::optional<int> k;
    bool all_k = false;

    const auto formats = CLI::IsMember({"pretty", "json", "csv"});
    const auto ops = CLI::IsMember({"sigma", "tau"});

    CLI::App* cmd_triangle = app.add_subcommand("triangle", "emit one statistics triangle");
    cmd_triangle->add_option("--kind", kind, "A B C D S P Q R")->required();
    cmd_triangle->add_option("--n", n, "largest row");
    cmd_triangle->add_option("--method", method, "recurrence, enumerate or auto")
        ->check(CLI::IsMember({"recurrence", "enumerate", "auto"}));
    cmd_triangle->add_option("--chunks", chunks, "parallel scan chunks")->check(CLI::PositiveNumber);
    cmd_triangle->add_option("--format", format)->check(formats);
    cmd_triangle->add_option("--cache-dir", cache_dir, "triangle cache directory");

    CLI::App* cmd_orbit = app.add_subcommand("orbit", "walk a sigma or tau orbit");
    cmd_orbit->add_option("--perm", perm_text, "permutation literal")->required();
    cmd_orbit->add_option("--op", op)->check(ops);
    cmd_orbit->add_option("--format", format)->check(formats);

    CLI::App* cmd_apply = app.add_subcommand("apply", "apply one sigma or tau step");
    cmd_apply->add_option("--perm", perm_text, "permutation literal")->required();
    cmd_apply->add_option("--op", op)->check(ops);
    cmd_apply->add_option("--format", format)->check(formats);

    CLI::App* cmd_census = app.add_subcommand("census", "tau-orbit census for even n");
    cmd_census->add_option("--n", n, "even size")->required();
    auto* k_opt = cmd_census->add_option("--k", k, "ascent count");
    cmd_census->add_flag("--all-k", all_k, "every k in 1..n-1")->excludes(k_opt);
    cmd_census->add_option("--format", format)->check(formats);

    CLI::App* cmd_verify = app.add_subcommand("verify", "run verification suites");
    cmd_verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"d-eq-r", "thm41", "thm51", "thm52", "cor53", "cor54", "eq11",
                               "symmetry", "all"}));
    cmd_verify->add_option("--n", n, "largest size checked");
    cmd_verify->add_option("--chunks", chunks)->check(CLI::PositiveNumber);
    cmd_verify->add_option("--format", format)->check(formats);

    CLI::App* cmd_paps = app.add_subcommand("paps", "list parity-alternate permutations");
    cmd_paps->add_option("--n", n, "size")->required();
    cmd_paps->add_option("--format", format)->check(formats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Format fmt = parse_format(format);
        if (cmd_triangle->parsed()) return run_triangle(kind, n, method, chunks, fmt, cache_dir);
        if (cmd_orbit->parsed()) return run_orbit(perm_text, op, fmt);
        if (cmd_apply->parsed()) return run_apply(perm_text, op, fmt);
        if (cmd_census->parsed()) return run_census(n, k, all_k, fmt);
        if (cmd_verify->parsed()) return run_verify(suite, n, chunks, fmt);
        if (cmd_paps->parsed()) return run_paps(n, fmt);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
