#pragma once

#include "motivic/ext.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace motivic {

enum class CacheKind { Differential, Comparison, ExtCell };

const char* cache_kind_name(CacheKind k);

struct CacheKey {
    std::string schema_version = "1";
    Side side = Side::Real;
    Fp p = 3;
    CacheKind kind = CacheKind::Differential;
    int f = 0;
    int m = 0;
    int n = 0;

    // <schema>/<side>/<p>/<kind>/<f>_<m>_<n>.dat, injective in the key
    std::filesystem::path relative_path() const;
    // First line of every payload serialized under this key.
    std::string header() const;
};

// On-disk cache.  put appends a checksum line and writes through a
// temporary file plus rename; get strips and verifies the checksum,
// reporting mismatches on stderr and treating them as misses.  Writers of
// the same key produce identical bytes, so concurrent last-write-wins is
// safe without locks.
class Store {
  public:
    explicit Store(std::filesystem::path root) : root_(std::move(root)) {}

    const std::filesystem::path& root() const { return root_; }
    std::optional<std::string> get(const CacheKey& key) const;
    // payload must be empty or newline-terminated so the checksum line
    // stays a line of its own
    void put(const CacheKey& key, const std::string& payload) const;

  private:
    std::filesystem::path root_;
};

// Canonical text payloads.  The key is embedded so a misfiled payload is
// rejected on read; deserialization throws std::runtime_error on any
// mismatch or malformation.
std::string serialize_matrix(const CacheKey& key, const FpMatrix& a);
FpMatrix deserialize_matrix(const CacheKey& key, const std::string& payload);
std::string serialize_cell(const CacheKey& key, const ExtCell& cell);
ExtCell deserialize_cell(const CacheKey& key, const std::string& payload);

enum class ChartFormat { Ascii, Svg, Json };

// Renders the nonzero cells of a chart.  Ascii and svg draw one page per
// weight in the Adams convention, x = stem (total degree minus f) and
// y = f.  Json lists the cells flat; comparison data fills the optional
// map_rank/verdict fields when supplied.  Output bytes depend only on the
// chart contents.
std::string emit_chart(const ExtChart& chart, ChartFormat format,
                       const std::map<Tridegree, ComparisonCell>* comparisons = nullptr);

}  // namespace motivic
