#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "holz/container.hpp"
#include "holz/stats.hpp"

namespace fs = std::filesystem;
using namespace holz;

namespace {

const std::map<std::string, Method> kMethodNames = {
    {"lz-nsvpsv", Method::lz_nsvpsv},
    {"lz-rightmost", Method::lz_rightmost},
    {"lz-opt", Method::lz_opt},
    {"holz", Method::holz},
    {"holz-opt", Method::holz_opt},
};

const std::map<std::string, CodeKind> kCodeNames = {
    {"gamma", CodeKind::gamma},
    {"delta", CodeKind::delta},
};

const char* code_name(CodeKind code) { return code == CodeKind::delta ? "delta" : "gamma"; }

template <typename Map>
std::vector<std::string> keys_of(const Map& map) {
    std::vector<std::string> keys;
    for (const auto& [name, value] : map) {
        keys.push_back(name);
    }
    return keys;
}

std::vector<uint8_t> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::vector<uint8_t> bytes;
    bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw std::runtime_error("read failed on " + path.string());
    }
    return bytes;
}

// Writes through a temporary so a failure never leaves a partial output file.
void write_file(const fs::path& path, const std::vector<uint8_t>& bytes) {
    fs::path tmp = path;
    tmp += ".tmp";
    try {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot create " + tmp.string());
        }
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        out.close();
        if (!out) {
            throw std::runtime_error("write failed on " + tmp.string());
        }
        fs::rename(tmp, path);
    } catch (...) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw;
    }
}

// A file argument expands to itself, a directory to its regular files.
std::vector<fs::path> expand_inputs(const std::vector<fs::path>& inputs) {
    std::vector<fs::path> files;
    for (const fs::path& input : inputs) {
        if (fs::is_directory(input)) {
            std::vector<fs::path> dir;
            for (const auto& entry : fs::directory_iterator(input)) {
                if (entry.is_regular_file()) {
                    dir.push_back(entry.path());
                }
            }
            std::sort(dir.begin(), dir.end());
            files.insert(files.end(), dir.begin(), dir.end());
        } else {
            files.push_back(input);
        }
    }
    return files;
}

int cmd_compress(const fs::path& in, const fs::path& out, Method method, CodeKind code,
                 bool escape) {
    const std::vector<uint8_t> raw = read_file(in);
    const CompressResult result = compress(raw, method, code, escape);
    write_file(out, result.bytes);
    const double ratio =
        raw.empty() ? 0.0 : static_cast<double>(result.bytes.size()) / raw.size();
    std::fprintf(stderr, "%s %s/%s: z=%llu bytes=%llu ratio=%.6f\n", in.string().c_str(),
                 method_name(method), code_name(code),
                 static_cast<unsigned long long>(result.z),
                 static_cast<unsigned long long>(result.bytes.size()), ratio);
    return 0;
}

int cmd_decompress(const fs::path& in, const fs::path& out) {
    const std::vector<uint8_t> body = decompress(read_file(in));
    write_file(out, body);
    return 0;
}

int cmd_stats(const fs::path& in, unsigned max_k, bool escape, FILE* sink) {
    std::fprintf(sink, "name,n,sigma,z,r");
    for (unsigned k = 0; k <= max_k; ++k) {
        std::fprintf(sink, ",H%u", k);
    }
    std::fprintf(sink, "\n");
    for (const fs::path& file : expand_inputs({in})) {
        std::vector<uint8_t> body = read_file(file);
        if (escape) {
            body = escape_zeros(body);
        }
        StatsReport report = dataset_stats(text_from_bytes(body));
        report.name = file.filename().string();
        std::fprintf(sink, "%s,%llu,%u,%llu,%llu", report.name.c_str(),
                     static_cast<unsigned long long>(report.n), report.sigma,
                     static_cast<unsigned long long>(report.z),
                     static_cast<unsigned long long>(report.r));
        for (unsigned k = 0; k <= max_k; ++k) {
            std::fprintf(sink, ",%.2f", report.h[k]);
        }
        std::fprintf(sink, "\n");
    }
    return 0;
}

struct BenchConfig {
    std::vector<fs::path> inputs;
    std::vector<Method> methods;
    std::vector<CodeKind> codes;
    uint64_t prefix_bytes = 0;
    bool escape = false;
    unsigned jobs = 1;
};

std::vector<std::string> bench_file(const fs::path& file, const BenchConfig& config) {
    std::vector<uint8_t> body = read_file(file);
    if (config.prefix_bytes > 0 && body.size() > config.prefix_bytes) {
        body.resize(config.prefix_bytes);
    }
    std::vector<std::string> rows;
    for (const Method method : config.methods) {
        for (const CodeKind code : config.codes) {
            const auto start = std::chrono::steady_clock::now();
            const CompressResult result = compress(body, method, code, config.escape);
            const std::chrono::duration<double> wall =
                std::chrono::steady_clock::now() - start;
            if (decompress(result.bytes) != body) {
                throw std::runtime_error("round trip failed: " + file.string() + " " +
                                         method_name(method) + " " + code_name(code));
            }
            const double ratio =
                body.empty() ? 0.0 : static_cast<double>(result.bytes.size()) / body.size();
            char row[512];
            std::snprintf(row, sizeof(row), "%s,%s,%s,%llu,%llu,%.6f,%llu,%llu,%.6f",
                          file.filename().string().c_str(), method_name(method),
                          code_name(code), static_cast<unsigned long long>(body.size()),
                          static_cast<unsigned long long>(result.bytes.size()), ratio,
                          static_cast<unsigned long long>(result.offset_bits),
                          static_cast<unsigned long long>(result.length_bits), wall.count());
            rows.emplace_back(row);
        }
    }
    return rows;
}

int cmd_bench(const BenchConfig& config, const fs::path& out_csv) {
    const std::vector<fs::path> files = expand_inputs(config.inputs);
    std::vector<std::vector<std::string>> per_file(files.size());
    std::vector<std::exception_ptr> errors(files.size());

    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1)) {
            try {
                per_file[i] = bench_file(files[i], config);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < config.jobs && t < files.size(); ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (std::thread& thread : pool) {
        thread.join();
    }
    for (const std::exception_ptr& error : errors) {
        if (error) {
            std::rethrow_exception(error);
        }
    }

    std::string csv = "dataset,method,code,input_bytes,output_bytes,ratio,"
                      "offset_bits,length_bits,wall_time_s\n";
    for (const auto& rows : per_file) {
        for (const std::string& row : rows) {
            csv += row;
            csv += '\n';
        }
    }
    if (out_csv.empty()) {
        std::fputs(csv.c_str(), stdout);
    } else {
        write_file(out_csv, std::vector<uint8_t>(csv.begin(), csv.end()));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lossless compression toolkit: HOLZ rank offsets and LZ baselines"};
    app.require_subcommand(1);

    fs::path in_path;
    fs::path out_path;
    std::string method_arg = "holz";
    std::string code_arg = "delta";
    std::vector<std::string> method_args;
    std::vector<std::string> code_args;
    bool escape = false;
    unsigned max_k = 4;
    BenchConfig bench;

    CLI::App* compress_cmd = app.add_subcommand("compress", "compress a file");
    compress_cmd->add_option("--method", method_arg, "parsing method")
        ->check(CLI::IsMember(keys_of(kMethodNames)));
    compress_cmd->add_option("--code", code_arg, "integer code for offsets and lengths")
        ->check(CLI::IsMember(keys_of(kCodeNames)));
    compress_cmd->add_flag("--escape-zero", escape, "escape 0x00 bytes before parsing");
    compress_cmd->add_option("-o,--output", out_path, "output file")->required();
    compress_cmd->add_option("input", in_path, "input file")->required();

    CLI::App* decompress_cmd = app.add_subcommand("decompress", "restore a compressed file");
    decompress_cmd->add_option("-o,--output", out_path, "output file")->required();
    decompress_cmd->add_option("input", in_path, "compressed input file")->required();

    CLI::App* stats_cmd = app.add_subcommand("stats", "dataset statistics as CSV");
    stats_cmd->add_option("--max-k", max_k, "largest entropy order to report")
        ->check(CLI::Range(0u, 4u));
    stats_cmd->add_flag("--escape-zero", escape, "measure the zero-escaped body");
    stats_cmd->add_option("input", in_path, "input file or directory")->required();

    CLI::App* bench_cmd = app.add_subcommand("bench", "compression benchmark as CSV");
    bench_cmd->add_option("--methods", method_args, "methods to run (default: all)")
        ->check(CLI::IsMember(keys_of(kMethodNames)));
    bench_cmd->add_option("--codes", code_args, "codes to run (default: both)")
        ->check(CLI::IsMember(keys_of(kCodeNames)));
    bench_cmd->add_option("--prefix-bytes", bench.prefix_bytes,
                          "trim each dataset to this many leading bytes");
    bench_cmd->add_flag("--escape-zero", bench.escape, "escape 0x00 bytes before parsing");
    bench_cmd->add_option("--jobs", bench.jobs, "worker threads across files")
        ->check(CLI::Range(1u, 64u));
    bench_cmd->add_option("-o,--output", out_path, "CSV output file (default: stdout)");
    bench_cmd->add_option("inputs", bench.inputs, "input files or directories")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code_out = app.exit(e);
        return code_out == 0 ? 0 : 2;
    }

    try {
        if (compress_cmd->parsed()) {
            return cmd_compress(in_path, out_path, kMethodNames.at(method_arg),
                                kCodeNames.at(code_arg), escape);
        }
        if (decompress_cmd->parsed()) {
            return cmd_decompress(in_path, out_path);
        }
        if (stats_cmd->parsed()) {
            return cmd_stats(in_path, max_k, escape, stdout);
        }
        for (const std::string& name : method_args) {
            bench.methods.push_back(kMethodNames.at(name));
        }
        for (const std::string& name : code_args) {
            bench.codes.push_back(kCodeNames.at(name));
        }
        if (bench.methods.empty()) {
            for (const auto& [name, value] : kMethodNames) {
                bench.methods.push_back(value);
            }
            std::sort(bench.methods.begin(), bench.methods.end());
        }
        if (bench.codes.empty()) {
            bench.codes = {CodeKind::gamma, CodeKind::delta};
        }
        return cmd_bench(bench, out_path);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "holz: %s\n", e.what());
        return 1;
    }
}
