#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "motivic/parallel.hpp"
#include "motivic/store.hpp"
#include "motivic/verify.hpp"

using namespace motivic;

namespace {

constexpr int kUnsetWeight = std::numeric_limits<int>::min();

Side parse_side(const std::string& s) {
    if (s == "classical") return Side::Classical;
    if (s == "real") return Side::Real;
    if (s == "c2") return Side::C2;
    throw std::invalid_argument("unknown side: " + s);
}

void write_document(const std::string& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc;
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << doc;
}

struct ExtOptions {
    std::string side = "real";
    int prime = 3;
    int max_f = 4;
    int max_total = 12;
    int min_weight = kUnsetWeight;
    int max_weight = kUnsetWeight;
    std::string format = "ascii";
    std::string cache_dir;
    int jobs = default_jobs();
    std::string out_path;
};

int run_ext(const ExtOptions& opt) {
    validate_prime(static_cast<Fp>(opt.prime));
    if (opt.max_f < 0 || opt.max_total < 0)
        throw std::invalid_argument("window bounds must be nonnegative");
    if (opt.jobs < 1) throw std::invalid_argument("--jobs must be at least 1");

    AlgebraParams params{static_cast<Fp>(opt.prime), parse_side(opt.side)};
    Window window{opt.max_f, opt.max_total,
                  opt.min_weight == kUnsetWeight ? -opt.max_total : opt.min_weight,
                  opt.max_weight == kUnsetWeight ? opt.max_total : opt.max_weight};
    if (window.min_weight > window.max_weight)
        throw std::invalid_argument("--min-weight exceeds --max-weight");

    std::string cache_dir = opt.cache_dir;
    if (const char* env = std::getenv("MOTIVIC_EXT_CACHE"); env && *env) cache_dir = env;

    ExtChart result;
    if (cache_dir.empty()) {
        result = chart(params, window, opt.jobs);
    } else {
        Store store(cache_dir);
        result.params = params;
        result.window = window;
        std::vector<Tridegree> cells;
        for (int f = 0; f <= window.max_f; ++f)
            for (int total = 0; total <= window.max_total; ++total)
                for (int n = window.min_weight; n <= window.max_weight; ++n)
                    cells.push_back({f, {total - n, n}});
        std::vector<ExtCell> computed(cells.size());
        parallel_for(static_cast<int>(cells.size()), opt.jobs, [&](int i) {
            Tridegree tri = cells[static_cast<std::size_t>(i)];
            CacheKey key{"1", params.side, params.p, CacheKind::ExtCell,
                         tri.f, tri.deg.m, tri.deg.n};
            if (auto payload = store.get(key)) {
                try {
                    computed[static_cast<std::size_t>(i)] = deserialize_cell(key, *payload);
                    return;
                } catch (const std::exception& e) {
                    std::cerr << "warning: discarding unreadable cache entry: " << e.what()
                              << "\n";
                }
            }
            ExtCell cell = ext_cell(params, tri);
            store.put(key, serialize_cell(key, cell));
            computed[static_cast<std::size_t>(i)] = std::move(cell);
        });
        for (std::size_t i = 0; i < cells.size(); ++i)
            result.cells.emplace(cells[i], std::move(computed[i]));
    }

    ChartFormat format = ChartFormat::Ascii;
    if (opt.format == "svg") format = ChartFormat::Svg;
    if (opt.format == "json") format = ChartFormat::Json;
    write_document(emit_chart(result, format), opt.out_path);
    return 0;
}

struct VerifyOptions {
    std::string suite;
    std::string side = "real";
    int prime = 3;
    int max_f = kUnsetWeight;
    int max_total = kUnsetWeight;
    int min_weight = kUnsetWeight;
    int max_weight = kUnsetWeight;
    int max_prime = 97;
    long long max_n = 10000;
    long long grid = 100;
    std::string format = "text";
    std::string out_path;
};

// Fills suite-appropriate defaults for any window flag the user left unset.
void apply_window_defaults(VerifyOptions& opt, int def_f, int def_total, int def_weight) {
    if (opt.max_f == kUnsetWeight) opt.max_f = def_f;
    if (opt.max_total == kUnsetWeight) opt.max_total = def_total;
    if (opt.min_weight == kUnsetWeight) opt.min_weight = -def_weight;
    if (opt.max_weight == kUnsetWeight) opt.max_weight = def_weight;
}

int run_verify(VerifyOptions opt) {
    validate_prime(static_cast<Fp>(opt.prime));
    Fp p = static_cast<Fp>(opt.prime);

    VerificationReport report;
    if (opt.suite == "lemma-coarse") {
        if (opt.max_total == kUnsetWeight) opt.max_total = 200;
        report = verify_lemma_coarse(p, opt.max_total);
    } else if (opt.suite == "cobar-d2") {
        apply_window_defaults(opt, 5, 30, 30);
        report = verify_cobar_d2({p, parse_side(opt.side)}, opt.max_f, opt.max_total,
                                 opt.min_weight, opt.max_weight);
    } else if (opt.suite == "cobar-map") {
        apply_window_defaults(opt, 3, 16, 16);
        report = verify_cobar_map(p, opt.max_f, opt.max_total, opt.min_weight, opt.max_weight);
    } else if (opt.suite == "ext-map") {
        apply_window_defaults(opt, 4, 24, 24);
        report = verify_ext_map(p, opt.max_f, opt.max_total, opt.min_weight, opt.max_weight);
    } else if (opt.suite == "uct") {
        apply_window_defaults(opt, 4, 24, 24);
        report = verify_uct({p, parse_side(opt.side)}, opt.max_f, opt.max_total,
                            opt.min_weight, opt.max_weight);
    } else if (opt.suite == "ranges") {
        report = verify_ranges(static_cast<Fp>(opt.max_prime), opt.max_n, opt.grid);
    } else if (opt.suite == "split") {
        report = verify_split();
    } else {
        throw std::invalid_argument("unknown suite: " + opt.suite);
    }

    std::string doc = (opt.format == "json") ? report.json() : report.text();
    write_document(doc, opt.out_path);
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Adams E2-page charts and verification for motivic and"
                 " C2-equivariant Ext at odd primes"};
    app.require_subcommand(1);

    ExtOptions ext_opt;
    CLI::App* ext = app.add_subcommand("ext", "compute a windowed chart");
    ext->add_option("--side", ext_opt.side, "real, c2, or classical")
        ->check(CLI::IsMember({"real", "c2", "classical"}));
    ext->add_option("--prime", ext_opt.prime, "odd prime p");
    ext->add_option("--max-f", ext_opt.max_f, "largest filtration");
    ext->add_option("--max-total", ext_opt.max_total, "largest total degree");
    ext->add_option("--min-weight", ext_opt.min_weight, "smallest weight (default -max-total)");
    ext->add_option("--max-weight", ext_opt.max_weight, "largest weight (default max-total)");
    ext->add_option("--format", ext_opt.format, "ascii, svg, or json")
        ->check(CLI::IsMember({"ascii", "svg", "json"}));
    ext->add_option("--cache", ext_opt.cache_dir,
                    "cache directory (MOTIVIC_EXT_CACHE overrides)");
    ext->add_option("--jobs", ext_opt.jobs, "worker threads");
    ext->add_option("--out", ext_opt.out_path, "write to file instead of stdout");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", verify_opt.suite, "which suite to run")
        ->required()
        ->check(CLI::IsMember({"lemma-coarse", "cobar-d2", "cobar-map", "ext-map", "uct",
                               "ranges", "split"}));
    verify->add_option("--side", verify_opt.side, "real, c2, or classical")
        ->check(CLI::IsMember({"real", "c2", "classical"}));
    verify->add_option("--prime", verify_opt.prime, "odd prime p");
    verify->add_option("--max-f", verify_opt.max_f, "largest filtration");
    verify->add_option("--max-total", verify_opt.max_total, "largest total degree");
    verify->add_option("--min-weight", verify_opt.min_weight, "smallest weight");
    verify->add_option("--max-weight", verify_opt.max_weight, "largest weight");
    verify->add_option("--max-prime", verify_opt.max_prime, "largest prime (ranges suite)");
    verify->add_option("--max-n", verify_opt.max_n, "largest weight n (ranges suite)");
    verify->add_option("--grid", verify_opt.grid, "grid radius (ranges suite)");
    verify->add_option("--format", verify_opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", verify_opt.out_path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (ext->parsed()) return run_ext(ext_opt);
        return run_verify(verify_opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
