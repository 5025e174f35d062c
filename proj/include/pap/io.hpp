#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "pap/census.hpp"
#include "pap/operators.hpp"
#include "pap/report.hpp"
#include "pap/triangle.hpp"

// Serialization (pretty / json / csv) and the on-disk triangle cache.

namespace pap::io {

inline constexpr const char* kVersionTag = "pap-0.1.0";

nlohmann::ordered_json triangle_json(const Triangle& t);
Triangle triangle_from_json(const nlohmann::json& j);
std::string triangle_csv(const Triangle& t);
std::string triangle_pretty(const Triangle& t);

nlohmann::ordered_json orbit_json(const OrbitRecord& o);
std::string orbit_pretty(const OrbitRecord& o);
std::string orbit_csv(const OrbitRecord& o);

nlohmann::ordered_json census_json(const OrbitCensus& c, std::int64_t p_target,
                                   std::int64_t q_target);
std::string census_pretty(const OrbitCensus& c, std::int64_t p_target, std::int64_t q_target);
std::string census_csv(const OrbitCensus& c);

nlohmann::ordered_json report_json(const CheckReport& r);
std::string report_pretty(const CheckReport& r);
std::string report_csv(const CheckReport& r);

/// Cache key: (kind, n_max, method, code-version tag). Exact-match reuse only.
std::string cache_key(TriangleKind kind, int n_max, const std::string& method);
std::optional<Triangle> cache_load(const std::filesystem::path& dir, TriangleKind kind,
                                   int n_max, const std::string& method);
void cache_store(const std::filesystem::path& dir, const std::string& method,
                 const Triangle& t);

}  // namespace pap::io
