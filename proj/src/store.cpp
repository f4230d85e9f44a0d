#include "motivic/store.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace motivic {

const char* cache_kind_name(CacheKind k) {
    switch (k) {
        case CacheKind::Differential: return "differential";
        case CacheKind::Comparison: return "comparison";
        case CacheKind::ExtCell: return "ext_cell";
    }
    return "?";
}

std::filesystem::path CacheKey::relative_path() const {
    std::filesystem::path out = schema_version;
    out /= side_name(side);
    out /= std::to_string(p);
    out /= cache_kind_name(kind);
    out /= std::to_string(f) + "_" + std::to_string(m) + "_" + std::to_string(n) + ".dat";
    return out;
}

std::string CacheKey::header() const {
    std::ostringstream out;
    out << "motivic-cache " << schema_version << " " << side_name(side) << " " << p << " "
        << cache_kind_name(kind) << " " << f << " " << m << " " << n;
    return out.str();
}

namespace {

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string checksum_line(const std::string& payload) {
    std::ostringstream out;
    out << "fnv1a64 " << std::hex << fnv1a64(payload) << "\n";
    return out.str();
}

}  // namespace

std::optional<std::string> Store::get(const CacheKey& key) const {
    std::filesystem::path path = root_ / key.relative_path();
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string file = buf.str();

    std::string payload;
    if (file.empty() || file.back() != '\n') {
        std::cerr << "warning: cache file truncated, treating as miss: " << path << "\n";
        return std::nullopt;
    }
    std::size_t split = file.rfind('\n', file.size() - 2);
    payload = (split == std::string::npos) ? std::string{} : file.substr(0, split + 1);
    std::string last = file.substr(payload.size());
    if (last != checksum_line(payload)) {
        std::cerr << "warning: cache checksum mismatch, treating as miss: " << path << "\n";
        return std::nullopt;
    }
    return payload;
}

void Store::put(const CacheKey& key, const std::string& payload) const {
    if (!payload.empty() && payload.back() != '\n')
        throw std::invalid_argument("Store::put: payload must end with a newline");
    std::filesystem::path path = root_ / key.relative_path();
    std::filesystem::create_directories(path.parent_path());

    static std::mt19937_64 rng{std::random_device{}()};
    std::filesystem::path tmp = path;
    tmp += ".tmp" + std::to_string(rng());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("Store::put: cannot open " + tmp.string());
        out << payload << checksum_line(payload);
    }
    std::filesystem::rename(tmp, path);
}

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw std::runtime_error("cache payload rejected: " + what);
}

void expect_header(const CacheKey& key, std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != key.header()) malformed("key header mismatch");
}

}  // namespace

std::string serialize_matrix(const CacheKey& key, const FpMatrix& a) {
    std::ostringstream out;
    out << key.header() << "\n";
    out << "matrix " << a.p() << " " << a.rows() << " " << a.cols() << " "
        << a.entries().size() << "\n";
    for (const FpTriplet& t : a.entries()) out << t.row << " " << t.col << " " << t.val << "\n";
    return out.str();
}

FpMatrix deserialize_matrix(const CacheKey& key, const std::string& payload) {
    std::istringstream in(payload);
    expect_header(key, in);
    std::string tag;
    Fp p = 0;
    int rows = 0, cols = 0;
    std::size_t nnz = 0;
    if (!(in >> tag >> p >> rows >> cols >> nnz) || tag != "matrix") malformed("matrix line");
    if (p != key.p) malformed("prime disagrees with key");
    std::vector<FpTriplet> triplets;
    triplets.reserve(nnz);
    for (std::size_t i = 0; i < nnz; ++i) {
        FpTriplet t;
        if (!(in >> t.row >> t.col >> t.val)) malformed("triplet count");
        triplets.push_back(t);
    }
    std::string rest;
    if (in >> rest) malformed("trailing data");
    try {
        return FpMatrix::from_triplets(p, rows, cols, std::move(triplets));
    } catch (const std::exception& e) {
        malformed(e.what());
    }
}

std::string serialize_cell(const CacheKey& key, const ExtCell& cell) {
    std::ostringstream out;
    out << key.header() << "\n";
    out << "cell " << cell.tri.f << " " << cell.tri.deg.m << " " << cell.tri.deg.n << " "
        << cell.ambient.size() << " " << cell.basis.size() << "\n";
    for (const CobarWord& w : cell.ambient) {
        out << "word " << w.theta << " " << w.factors.size();
        for (const Monomial& u : w.factors) {
            if (u.theta != 0) throw std::runtime_error("serialize_cell: letter carries theta");
            out << " " << u.taus << " " << u.xis.size();
            for (int e : u.xis) out << " " << e;
        }
        out << "\n";
    }
    for (const FpVec& v : cell.basis) {
        out << "class";
        if (v.size() != cell.ambient.size())
            throw std::runtime_error("serialize_cell: coordinate length mismatch");
        for (Fp c : v) out << " " << c;
        out << "\n";
    }
    return out.str();
}

ExtCell deserialize_cell(const CacheKey& key, const std::string& payload) {
    std::istringstream in(payload);
    expect_header(key, in);
    std::string tag;
    ExtCell cell;
    std::size_t ambient_count = 0, class_count = 0;
    if (!(in >> tag >> cell.tri.f >> cell.tri.deg.m >> cell.tri.deg.n >> ambient_count >>
          class_count) ||
        tag != "cell")
        malformed("cell line");
    if (cell.tri.f != key.f || cell.tri.deg.m != key.m || cell.tri.deg.n != key.n)
        malformed("tridegree disagrees with key");
    for (std::size_t i = 0; i < ambient_count; ++i) {
        std::size_t factor_count = 0;
        CobarWord w;
        if (!(in >> tag >> w.theta >> factor_count) || tag != "word") malformed("word line");
        for (std::size_t j = 0; j < factor_count; ++j) {
            Monomial u;
            std::size_t xi_count = 0;
            if (!(in >> u.taus >> xi_count)) malformed("letter");
            u.xis.resize(xi_count);
            for (std::size_t k = 0; k < xi_count; ++k)
                if (!(in >> u.xis[k])) malformed("xi exponent");
            w.factors.push_back(std::move(u));
        }
        cell.ambient.push_back(std::move(w));
    }
    for (std::size_t i = 0; i < class_count; ++i) {
        if (!(in >> tag) || tag != "class") malformed("class line");
        FpVec v(cell.ambient.size(), 0);
        for (Fp& c : v)
            if (!(in >> c)) malformed("class coordinate");
        cell.basis.push_back(std::move(v));
    }
    std::string rest;
    if (in >> rest) malformed("trailing data");
    return cell;
}

namespace {

// Nonzero cells grouped by weight, each as (stem, f, dim).
struct PageCell {
    int stem = 0;
    int f = 0;
    int dim = 0;
};

std::map<int, std::vector<PageCell>> nonzero_pages(const ExtChart& chart) {
    std::map<int, std::vector<PageCell>> pages;
    for (const auto& [tri, cell] : chart.cells) {
        if (cell.dimension() == 0) continue;
        pages[tri.deg.n].push_back(
            {tri.deg.total() - tri.f, tri.f, cell.dimension()});
    }
    return pages;
}

char dim_glyph(int dim) {
    if (dim < 10) return static_cast<char>('0' + dim);
    return '*';
}

std::string emit_ascii(const ExtChart& chart) {
    std::map<int, std::vector<PageCell>> pages = nonzero_pages(chart);
    if (pages.empty()) return "empty chart\n";
    std::ostringstream out;
    for (const auto& [weight, cells] : pages) {
        int min_stem = cells[0].stem, max_stem = cells[0].stem, max_f = 0;
        for (const PageCell& c : cells) {
            min_stem = std::min(min_stem, c.stem);
            max_stem = std::max(max_stem, c.stem);
            max_f = std::max(max_f, c.f);
        }
        int label_width = 1;
        for (int x = min_stem; x <= max_stem; ++x)
            label_width = std::max(label_width, static_cast<int>(std::to_string(x).size()));

        out << "weight " << weight << " (side " << side_name(chart.params.side) << ", p="
            << chart.params.p << ")\n";
        std::vector<std::string> grid(max_f + 1,
                                      std::string(static_cast<std::size_t>(max_stem - min_stem + 1), '.'));
        for (const PageCell& c : cells) grid[c.f][c.stem - min_stem] = dim_glyph(c.dim);
        for (int f = max_f; f >= 0; --f) {
            out << "f " << f << " |";
            for (char g : grid[f]) out << " " << std::string(label_width - 1, ' ') << g;
            out << "\n";
        }
        out << "    +" << std::string(static_cast<std::size_t>((max_stem - min_stem + 1) * (label_width + 1)), '-')
            << "\n     ";
        for (int x = min_stem; x <= max_stem; ++x) {
            std::string label = std::to_string(x);
            out << " " << std::string(label_width - label.size(), ' ') << label;
        }
        out << "  stem\n\n";
    }
    return out.str();
}

std::string emit_svg(const ExtChart& chart) {
    std::map<int, std::vector<PageCell>> pages = nonzero_pages(chart);
    const int cell_px = 24, margin = 40, page_gap = 30;

    std::ostringstream body;
    int y_offset = 20;
    int doc_width = 300;
    for (const auto& [weight, cells] : pages) {
        int min_stem = cells[0].stem, max_stem = cells[0].stem, max_f = 0;
        for (const PageCell& c : cells) {
            min_stem = std::min(min_stem, c.stem);
            max_stem = std::max(max_stem, c.stem);
            max_f = std::max(max_f, c.f);
        }
        body << "<text x=\"10\" y=\"" << y_offset + 14 << "\" font-size=\"14\">weight "
             << weight << "</text>\n";
        int grid_top = y_offset + 24;
        for (const PageCell& c : cells) {
            int cx = margin + (c.stem - min_stem) * cell_px;
            int cy = grid_top + (max_f - c.f) * cell_px + cell_px / 2;
            body << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"4\" fill=\"black\"/>\n";
            if (c.dim > 1)
                body << "<text x=\"" << cx + 6 << "\" y=\"" << cy + 4
                     << "\" font-size=\"10\">" << c.dim << "</text>\n";
        }
        for (int f = 0; f <= max_f; ++f)
            body << "<text x=\"" << margin - 24 << "\" y=\"" << grid_top + (max_f - f) * cell_px + cell_px / 2 + 4
                 << "\" font-size=\"10\">f" << f << "</text>\n";
        for (int x = min_stem; x <= max_stem; ++x)
            body << "<text x=\"" << margin + (x - min_stem) * cell_px - 3 << "\" y=\""
                 << grid_top + (max_f + 1) * cell_px + 12 << "\" font-size=\"10\">" << x
                 << "</text>\n";
        y_offset = grid_top + (max_f + 1) * cell_px + page_gap;
        doc_width = std::max(doc_width, margin + (max_stem - min_stem + 1) * cell_px + 60);
    }
    if (pages.empty())
        body << "<text x=\"10\" y=\"34\" font-size=\"14\">empty chart</text>\n";

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << doc_width << "\" height=\""
        << std::max(y_offset, 60) << "\">\n"
        << body.str() << "</svg>\n";
    return out.str();
}

std::string emit_json(const ExtChart& chart,
                      const std::map<Tridegree, ComparisonCell>* comparisons) {
    nlohmann::json doc;
    doc["schema"] = "1";
    doc["algebra"] = {{"side", side_name(chart.params.side)}, {"prime", chart.params.p}};
    doc["window"] = {{"max_f", chart.window.max_f},
                     {"max_total", chart.window.max_total},
                     {"min_weight", chart.window.min_weight},
                     {"max_weight", chart.window.max_weight}};
    doc["cells"] = nlohmann::json::array();
    for (const auto& [tri, cell] : chart.cells) {
        if (cell.dimension() == 0) continue;
        nlohmann::json entry = {{"f", tri.f},
                                {"m", tri.deg.m},
                                {"n", tri.deg.n},
                                {"dim", cell.dimension()}};
        if (comparisons) {
            auto it = comparisons->find(tri);
            if (it != comparisons->end()) {
                entry["map_rank"] = it->second.map_rank;
                entry["verdict"] = verdict_name(it->second.verdict);
            }
        }
        doc["cells"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

}  // namespace

std::string emit_chart(const ExtChart& chart, ChartFormat format,
                       const std::map<Tridegree, ComparisonCell>* comparisons) {
    switch (format) {
        case ChartFormat::Ascii: return emit_ascii(chart);
        case ChartFormat::Svg: return emit_svg(chart);
        case ChartFormat::Json: return emit_json(chart, comparisons);
    }
    throw std::invalid_argument("emit_chart: unknown format");
}

}  // namespace motivic
