#include "pap/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace pap::io {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json triangle_json(const Triangle& t) {
    ordered_json j;
    j["kind"] = std::string(1, to_letter(t.kind));
    j["n_max"] = t.n_max;
    j["provenance"] = to_string(t.provenance);
    j["rows"] = t.rows;
    return j;
}

Triangle triangle_from_json(const json& j) {
    Triangle t;
    t.kind = triangle_kind_from(j.at("kind").get<std::string>());
    t.n_max = j.at("n_max").get<int>();
    t.provenance = provenance_from(j.at("provenance").get<std::string>());
    t.rows = j.at("rows").get<std::vector<std::vector<std::int64_t>>>();
    if (static_cast<int>(t.rows.size()) != t.n_max)
        throw std::invalid_argument("triangle json: row count does not match n_max");
    for (int n = 1; n <= t.n_max; ++n) {
        if (static_cast<int>(t.rows[static_cast<std::size_t>(n - 1)].size()) != n)
            throw std::invalid_argument("triangle json: row " + std::to_string(n) +
                                        " has the wrong length");
    }
    return t;
}

std::string triangle_csv(const Triangle& t) {
    std::string out = "n,k,value\n";
    for (int n = 1; n <= t.n_max; ++n) {
        for (int k = 0; k < n; ++k) {
            out += std::to_string(n) + "," + std::to_string(k) + "," +
                   std::to_string(t.at(n, k)) + "\n";
        }
    }
    return out;
}

std::string triangle_pretty(const Triangle& t) {
    std::size_t width = std::string("k=" + std::to_string(t.n_max - 1)).size();
    for (const auto& row : t.rows)
        for (std::int64_t v : row) width = std::max(width, std::to_string(v).size());

    const int label_width = std::max(
        7, static_cast<int>(std::string("n = " + std::to_string(t.n_max)).size()));
    const int col_width = static_cast<int>(width) + 2;

    std::ostringstream out;
    out << std::left << std::setw(label_width) << (std::string(1, to_letter(t.kind)) + "(n,k)")
        << std::right;
    for (int k = 0; k < t.n_max; ++k)
        out << std::setw(col_width) << ("k=" + std::to_string(k));
    out << "\n";
    for (int n = 1; n <= t.n_max; ++n) {
        out << std::left << std::setw(label_width) << ("n = " + std::to_string(n))
            << std::right;
        for (int k = 0; k < n; ++k) out << std::setw(col_width) << t.at(n, k);
        out << "\n";
    }
    return out.str();
}

namespace {

ordered_json perm_values(const Permutation& p) {
    ordered_json values = ordered_json::array();
    for (Entry e : p.entries()) values.push_back(int(e));
    return values;
}

const char* op_name(OperatorTag op) {
    return op == OperatorTag::Sigma ? "sigma" : "tau";
}

}  // namespace

ordered_json orbit_json(const OrbitRecord& o) {
    ordered_json j;
    j["operator"] = op_name(o.op);
    j["base"] = perm_values(o.base);
    j["period"] = o.period;
    ordered_json elements = ordered_json::array();
    for (const Permutation& p : o.elements) elements.push_back(perm_values(p));
    j["elements"] = elements;
    return j;
}

std::string orbit_pretty(const OrbitRecord& o) {
    std::ostringstream out;
    out << "operator: " << op_name(o.op) << "\n";
    out << "base:     " << o.base.str() << "\n";
    out << "period:   " << o.period << "\n";
    out << "orbit:    ";
    for (std::size_t i = 0; i < o.elements.size(); ++i) {
        if (i > 0) out << " -> ";
        out << o.elements[i].str();
    }
    out << "\n";
    return out.str();
}

std::string orbit_csv(const OrbitRecord& o) {
    std::string out = "step,permutation\n";
    for (std::size_t i = 0; i < o.elements.size(); ++i)
        out += std::to_string(i + 1) + "," + o.elements[i].str() + "\n";
    return out;
}

ordered_json census_json(const OrbitCensus& c, std::int64_t p_target, std::int64_t q_target) {
    ordered_json j;
    j["n"] = c.n;
    j["k"] = c.k;
    ordered_json entries = ordered_json::array();
    for (const auto& [d, ab] : c.by_period) {
        ordered_json e;
        e["d"] = d;
        e["alpha"] = ab.first;
        e["beta"] = ab.second;
        entries.push_back(e);
    }
    j["entries"] = entries;
    j["alpha_weighted_sum"] = c.alpha_weighted_sum();
    j["p_target"] = p_target;
    j["beta_weighted_sum"] = c.beta_weighted_sum();
    j["q_target"] = q_target;
    return j;
}

std::string census_pretty(const OrbitCensus& c, std::int64_t p_target, std::int64_t q_target) {
    std::ostringstream out;
    out << "census n=" << c.n << " k=" << c.k << "\n";
    out << std::setw(6) << "d" << std::setw(10) << "alpha" << std::setw(10) << "beta" << "\n";
    for (const auto& [d, ab] : c.by_period)
        out << std::setw(6) << d << std::setw(10) << ab.first << std::setw(10) << ab.second
            << "\n";
    out << "sum d*alpha = " << c.alpha_weighted_sum() << "  (target P(" << c.n - 1 << ","
        << c.k - 1 << ") = " << p_target << ")\n";
    out << "sum d*beta  = " << c.beta_weighted_sum() << "  (target Q(" << c.n - 1 << ","
        << c.k - 1 << ") = " << q_target << ")\n";
    return out.str();
}

std::string census_csv(const OrbitCensus& c) {
    std::string out = "n,k,d,alpha,beta\n";
    for (const auto& [d, ab] : c.by_period) {
        out += std::to_string(c.n) + "," + std::to_string(c.k) + "," + std::to_string(d) + "," +
               std::to_string(ab.first) + "," + std::to_string(ab.second) + "\n";
    }
    return out;
}

ordered_json report_json(const CheckReport& r) {
    ordered_json j;
    j["name"] = r.name;
    j["ok"] = r.ok();
    j["checks"] = r.items.size();
    j["failures"] = r.failure_count();
    ordered_json items = ordered_json::array();
    for (const CheckItem& item : r.items) {
        ordered_json e;
        e["label"] = item.label;
        e["lhs"] = item.lhs;
        e["rhs"] = item.rhs;
        e["pass"] = item.pass;
        items.push_back(e);
    }
    j["items"] = items;
    return j;
}

std::string report_pretty(const CheckReport& r) {
    std::ostringstream out;
    for (const CheckItem& item : r.items) {
        out << (item.pass ? "ok   " : "FAIL ") << item.label;
        if (!item.pass) out << "  [lhs=" << item.lhs << " rhs=" << item.rhs << "]";
        out << "\n";
    }
    out << r.name << ": " << r.items.size() << " checks, " << r.failure_count()
        << " failures\n";
    return out.str();
}

std::string report_csv(const CheckReport& r) {
    std::string out = "label,lhs,rhs,pass\n";
    for (const CheckItem& item : r.items) {
        std::string label = item.label;
        for (char& ch : label)
            if (ch == ',') ch = ';';
        out += label + "," + std::to_string(item.lhs) + "," + std::to_string(item.rhs) + "," +
               (item.pass ? "1" : "0") + "\n";
    }
    return out;
}

std::string cache_key(TriangleKind kind, int n_max, const std::string& method) {
    return std::string("triangle-") + to_letter(kind) + "-n" + std::to_string(n_max) + "-" +
           method + "-" + kVersionTag;
}

std::optional<Triangle> cache_load(const std::filesystem::path& dir, TriangleKind kind,
                                   int n_max, const std::string& method) {
    const std::filesystem::path file = dir / (cache_key(kind, n_max, method) + ".json");
    std::ifstream in(file);
    if (!in) return std::nullopt;
    json j;
    in >> j;
    Triangle t = triangle_from_json(j);
    if (t.kind != kind || t.n_max != n_max)
        throw std::invalid_argument("cache file " + file.string() + " does not match its key");
    return t;
}

void cache_store(const std::filesystem::path& dir, const std::string& method,
                 const Triangle& t) {
    std::filesystem::create_directories(dir);
    const std::filesystem::path file = dir / (cache_key(t.kind, t.n_max, method) + ".json");
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write cache file " + file.string());
    out << triangle_json(t).dump(2) << "\n";
}

}  // namespace pap::io
