#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "logfold/bench.hpp"
#include "logfold/compressor.hpp"
#include "logfold/errors.hpp"

namespace fs = std::filesystem;
using namespace logfold;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in.good() && !in.eof()) throw IoFailure("read error on " + path.string());
    return std::move(ss).str();
}

fs::path scratch_dir() {
    if (const char* env = std::getenv("LOGFOLD_TMPDIR"); env && *env) return fs::path(env);
    return fs::temp_directory_path();
}

/// Writes via a scratch file so a failed run never leaves a torn output.
void write_file(const fs::path& path, std::string_view data) {
    const fs::path tmp =
        scratch_dir() / (path.filename().string() + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoFailure("cannot open scratch file " + tmp.string());
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
        if (!out.good()) throw IoFailure("write error on " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {  // scratch dir may sit on a different filesystem
        fs::copy_file(tmp, path, fs::copy_options::overwrite_existing);
        fs::remove(tmp);
    }
}

struct CommonFlags {
    Config cfg = default_config();
    std::string backend = "lzma";
    std::string strategy = "num_path";
    bool parallel = false;

    void attach(CLI::App* app) {
        app->add_option("--chunk-lines", cfg.chunk_lines, "Lines per chunk");
        app->add_option("--theta-rv", cfg.theta_rv, "Max representative values");
        app->add_option("--phi-d", cfg.phi_d, "Dominance ratio threshold");
        app->add_option("--zeta-uv", cfg.zeta_uv, "Full vs partial re-grouping cut-off");
        app->add_option("--backend", backend, "Backend: gzip, bzip2, lzma")
            ->check(CLI::IsMember({"gzip", "bzip2", "lzma"}));
        app->add_option("--level", cfg.backend_level, "Backend level 1..9 (0 = default)")
            ->check(CLI::Range(0, 9));
        app->add_option("--token-strategy", strategy,
                        "Dynamic token strategy: num, num_path, num_classpath, all")
            ->check(CLI::IsMember({"num", "num_path", "num_classpath", "all"}));
        app->add_flag("--disable-processor", cfg.disable_processor,
                      "Skip structured-token mining (skeleton grouping only)");
        app->add_flag("--disable-encoder", cfg.disable_hybrid_encoder,
                      "Dictionary-encode all dynamic tokens");
        app->add_flag("--parallel", parallel, "Process chunks on a thread pool");
    }

    Config resolve() {
        cfg.backend = backend_from_string(backend);
        cfg.token_strategy = strategy_from_string(strategy);
        cfg.validate();
        return cfg;
    }
};

int cmd_compress(const std::string& input_path, const std::string& output_path,
                 CommonFlags& flags) {
    const Config cfg = flags.resolve();
    const std::string input = read_file(input_path);

    const auto t0 = std::chrono::steady_clock::now();
    const std::string archive = compress(input, cfg, flags.parallel);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    write_file(output_path, archive);
    const double cr = archive.empty() ? 0 : static_cast<double>(input.size()) / archive.size();
    const double cs = secs > 0 ? static_cast<double>(input.size()) / secs / 1e6 : 0;
    std::printf("CR = %.3f  CS = %.3f MB/s  (%zu -> %zu bytes in %.3f s)\n", cr, cs,
                input.size(), archive.size(), secs);
    return 0;
}

int cmd_decompress(const std::string& archive_path, const std::string& output_path,
                   bool profile, bool parallel) {
    const std::string archive = read_file(archive_path);

    std::string restored;
    DecompressProfile prof;
    const auto t0 = std::chrono::steady_clock::now();
    if (profile)
        restored = decompress_profiled(archive, prof);
    else
        restored = decompress(archive, parallel);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    write_file(output_path, restored);
    const double ds = secs > 0 ? static_cast<double>(restored.size()) / secs / 1e6 : 0;
    std::printf("DS = %.3f MB/s  (%zu -> %zu bytes in %.3f s)\n", ds, archive.size(),
                restored.size(), secs);

    if (profile) {
        std::printf("%-6s %-28s %10s %8s\n", "step", "name", "seconds", "share");
        for (std::size_t s = 1; s <= DecompressProfile::kSteps; ++s) {
            const double share = prof.total > 0 ? prof.seconds[s] / prof.total * 100 : 0;
            std::printf("%-6zu %-28s %10.6f %7.2f%%\n", s, DecompressProfile::step_name(s),
                        prof.seconds[s], share);
        }
        for (std::size_t s = 1; s <= DecompressProfile::kSteps; ++s)
            std::printf("profile,%zu,%s,%.9f\n", s, DecompressProfile::step_name(s),
                        prof.seconds[s]);
    }
    return 0;
}

int cmd_verify(const std::string& input_path, CommonFlags& flags) {
    const Config cfg = flags.resolve();
    const std::string input = read_file(input_path);
    const BenchResult r = bench_run(input, cfg, flags.parallel);
    if (!r.verified) {
        std::fprintf(stderr, "verify FAILED: round trip is not byte-identical\n");
        return 1;
    }
    std::printf("verify OK  CR = %.3f  CS = %.3f MB/s  DS = %.3f MB/s\n", r.cr(),
                r.cs_bytes_per_sec() / 1e6, r.ds_bytes_per_sec() / 1e6);
    return 0;
}

struct SweepCell {
    std::string label;
    Config cfg;
};

std::vector<SweepCell> build_sweep(const std::string& sweep, const Config& base) {
    std::vector<SweepCell> cells;
    auto add = [&cells](std::string label, Config cfg) {
        cells.push_back({std::move(label), cfg});
    };
    if (sweep == "none") {
        add("base", base);
    } else if (sweep == "theta") {
        for (const std::uint32_t v : {20u, 30u, 40u, 50u}) {
            Config c = base;
            c.theta_rv = v;
            add("theta_rv=" + std::to_string(v), c);
        }
    } else if (sweep == "phi") {
        for (const double v : {0.5, 0.6, 0.7, 0.8, 0.9}) {
            Config c = base;
            c.phi_d = v;
            char buf[32];
            std::snprintf(buf, sizeof buf, "phi_d=%.1f", v);
            add(buf, c);
        }
    } else if (sweep == "zeta") {
        for (std::uint32_t v = 3; v <= 10; ++v) {
            Config c = base;
            c.zeta_uv = v;
            add("zeta_uv=" + std::to_string(v), c);
        }
    } else if (sweep == "levels") {
        for (const int v : {1, 3, 6, 9}) {
            Config c = base;
            c.backend_level = v;
            add(std::string(to_string(c.backend)) + "-" + std::to_string(v), c);
        }
    } else if (sweep == "strategy") {
        for (const auto s : {TokenStrategy::Num, TokenStrategy::NumPath,
                             TokenStrategy::NumClasspath, TokenStrategy::All}) {
            Config c = base;
            c.token_strategy = s;
            add(std::string("strategy=") + to_string(s), c);
        }
    }
    return cells;
}

int cmd_bench(const std::string& corpus_dir, const std::string& sweep, const std::string& csv_path,
              bool ci, CommonFlags& flags) {
    const Config base = flags.resolve();
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(corpus_dir))
        if (e.is_regular_file()) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::fprintf(stderr, "bench: no files in %s\n", corpus_dir.c_str());
        return 1;
    }
    const std::vector<SweepCell> cells = build_sweep(sweep, base);

    std::ostringstream csv;
    csv << "file,config,original_bytes,compressed_bytes,cr,cs_mb_s,ds_mb_s,verified\n";
    bool all_verified = true;

    std::printf("%-24s %-18s %10s %10s %10s %9s\n", "file", "config", "CR", "CS MB/s",
                "DS MB/s", "verified");
    for (const auto& file : files) {
        std::string input;
        try {
            input = read_file(file);
        } catch (const std::exception& e) {
            std::printf("%-24s %-18s %s\n", file.filename().c_str(), "-", e.what());
            all_verified = false;
            continue;
        }
        for (const auto& cell : cells) {
            try {
                const BenchResult r = bench_run(input, cell.cfg, flags.parallel);
                all_verified = all_verified && r.verified;
                std::printf("%-24s %-18s %10.3f %10.3f %10.3f %9s\n", file.filename().c_str(),
                            cell.label.c_str(), r.cr(), r.cs_bytes_per_sec() / 1e6,
                            r.ds_bytes_per_sec() / 1e6, r.verified ? "yes" : "NO");
                csv << file.filename().string() << ',' << cell.label << ',' << r.original_size
                    << ',' << r.compressed_size << ',' << r.cr() << ','
                    << r.cs_bytes_per_sec() / 1e6 << ',' << r.ds_bytes_per_sec() / 1e6 << ','
                    << (r.verified ? "yes" : "no") << '\n';
            } catch (const std::exception& e) {
                std::printf("%-24s %-18s error: %s\n", file.filename().c_str(),
                            cell.label.c_str(), e.what());
                csv << file.filename().string() << ',' << cell.label << ",,,,,,error\n";
                all_verified = false;
            }
        }
    }

    if (!csv_path.empty())
        write_file(csv_path, csv.str());
    else
        std::fputs(csv.str().c_str(), stdout);

    if (ci && !all_verified) {
        std::fprintf(stderr, "bench: unverified cells present (CI mode)\n");
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"logfold - lossless structured log compressor"};
    app.require_subcommand(1);

    std::string input_path, output_path, archive_path, corpus_dir;
    std::string sweep = "none", csv_path;
    bool profile = false, ci = false;

    CommonFlags compress_flags, verify_flags, bench_flags;

    CLI::App* c = app.add_subcommand("compress", "Compress a log file");
    c->add_option("input", input_path, "Input log file")->required();
    c->add_option("-o,--output", output_path, "Archive path")->required();
    compress_flags.attach(c);

    CLI::App* d = app.add_subcommand("decompress", "Restore a log file from an archive");
    d->add_option("archive", archive_path, "Archive path")->required();
    d->add_option("-o,--output", output_path, "Restored file path")->required();
    d->add_flag("--profile", profile, "Print per-step decompression timings");
    bool d_parallel = false;
    d->add_flag("--parallel", d_parallel, "Decode chunks on a thread pool");

    CLI::App* v = app.add_subcommand("verify", "Round-trip a file in memory and compare");
    v->add_option("input", input_path, "Input log file")->required();
    verify_flags.attach(v);

    CLI::App* b = app.add_subcommand("bench", "Benchmark a corpus directory");
    b->add_option("corpus", corpus_dir, "Directory of log files")->required();
    b->add_option("--sweep", sweep, "Sweep: none, theta, phi, zeta, levels, strategy")
        ->check(CLI::IsMember({"none", "theta", "phi", "zeta", "levels", "strategy"}));
    b->add_option("--csv", csv_path, "Write delimited rows to this file");
    b->add_flag("--ci", ci, "Fail if any cell is unverified");
    bench_flags.attach(b);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c->parsed()) return cmd_compress(input_path, output_path, compress_flags);
        if (d->parsed()) return cmd_decompress(archive_path, output_path, profile, d_parallel);
        if (v->parsed()) return cmd_verify(input_path, verify_flags);
        if (b->parsed()) return cmd_bench(corpus_dir, sweep, csv_path, ci, bench_flags);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
