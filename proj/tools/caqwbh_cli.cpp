// caqwbh_cli.cpp -- command-line front end
//
// Subcommands: hash, mac, prng, test, vectors.  Messages are byte streams
// (stdin or file) unpacked MSB-first.  Exit codes: 0 success, 1 I/O failure,
// 2 invalid parameters or arguments, 3 assertion failure (--assert),
// 4 test-vector mismatch.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "caqwbh/keyed.hpp"
#include "caqwbh/stats.hpp"
#include "caqwbh/vectors.hpp"

namespace {

using namespace caqwbh;

struct InstanceOptions {
    std::string instance = "caqwbh-256";
    unsigned q = 0;
    unsigned k = 0;
    std::string theta1;
    std::string theta2;
    std::string alpha_file;
};

void add_instance_options(CLI::App* cmd, InstanceOptions& opts) {
    cmd->add_option("--instance", opts.instance,
                    "named instance: caqwbh-256, caqwbh-512 or custom")
        ->default_val("caqwbh-256");
    cmd->add_option("--q", opts.q, "position bits (custom instance), N = 2^q");
    cmd->add_option("--k", opts.k, "digest bits per position (custom instance)");
    cmd->add_option("--theta1", opts.theta1,
                    "first coin angle as a decimal string (custom instance)");
    cmd->add_option("--theta2", opts.theta2,
                    "second coin angle as a decimal string (custom instance)");
    cmd->add_option("--alpha-file", opts.alpha_file,
                    "key file whose key1 supplies the initial amplitudes");
}

HashParams resolve_params(const InstanceOptions& opts) {
    HashParams params;
    if (opts.instance == "caqwbh-256") {
        params = HashParams::caqwbh256();
    } else if (opts.instance == "caqwbh-512") {
        params = HashParams::caqwbh512();
    } else if (opts.instance == "custom") {
        if (opts.q == 0 || opts.k == 0 || opts.theta1.empty() || opts.theta2.empty()) {
            throw InvalidSize("custom instance needs --q, --k, --theta1 and --theta2");
        }
        params = HashParams::custom(opts.q, opts.k, decimal_to_double(opts.theta1),
                                    decimal_to_double(opts.theta2));
    } else {
        throw DomainError("unknown instance: " + opts.instance);
    }
    if (opts.instance != "custom" &&
        (opts.q != 0 || opts.k != 0 || !opts.theta1.empty() || !opts.theta2.empty())) {
        throw DomainError("--q/--k/--theta1/--theta2 require --instance custom");
    }
    if (!opts.alpha_file.empty()) {
        HashParams file_params;
        MacKey key;
        load_key_file(opts.alpha_file, file_params, key);
        if (key.key1.size() != params.block_bits()) {
            throw InvalidAlpha("alpha file holds " + std::to_string(key.key1.size()) +
                               " amplitudes, instance needs " +
                               std::to_string(params.block_bits()));
        }
        params.alpha = key.key1;
    }
    validate_params(params);
    return params;
}

std::vector<std::uint8_t> read_input(const std::string& path) {
    std::vector<std::uint8_t> data;
    if (path.empty() || path == "-") {
        std::cin.sync_with_stdio(false);
        char chunk[4096];
        while (std::cin.read(chunk, sizeof chunk) || std::cin.gcount() > 0) {
            data.insert(data.end(), chunk, chunk + std::cin.gcount());
        }
        if (std::cin.bad()) throw IoError("failed to read stdin");
        return data;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open input file: " + path);
    char chunk[4096];
    while (in.read(chunk, sizeof chunk) || in.gcount() > 0) {
        data.insert(data.end(), chunk, chunk + in.gcount());
    }
    if (in.bad()) throw IoError("failed to read input file: " + path);
    return data;
}

void write_output(const Bits& bits, const std::string& format) {
    if (format == "raw") {
        if (bits.size() % 8 != 0) {
            throw DomainError("raw output needs a byte-aligned bit count");
        }
        std::fwrite(bits.bytes().data(), 1, bits.bytes().size(), stdout);
    } else {
        std::puts(bits.to_hex().c_str());
    }
}

void write_report(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw IoError("cannot open report file for writing: " + out_path);
    out << text;
    if (!out.flush()) throw IoError("failed to write report file: " + out_path);
}

int run(int argc, char** argv) {
    CLI::App app{"CAQWBH: controlled alternate quantum walk block hash"};
    app.require_subcommand(1);

    // hash
    InstanceOptions hash_opts;
    std::string hash_input;
    std::string hash_format = "hex";
    CLI::App* cmd_hash = app.add_subcommand("hash", "hash a file or stdin");
    add_instance_options(cmd_hash, hash_opts);
    cmd_hash->add_option("input", hash_input, "input file ('-' for stdin)");
    cmd_hash->add_option("--format", hash_format, "hex or raw")->default_val("hex");

    // mac
    std::string mac_key_file;
    std::string mac_input;
    std::string mac_format = "hex";
    CLI::App* cmd_mac = app.add_subcommand("mac", "message authentication tag");
    cmd_mac->add_option("--key-file", mac_key_file, "key file (params + key1 + key2)")
        ->required();
    cmd_mac->add_option("input", mac_input, "input file ('-' for stdin)");
    cmd_mac->add_option("--format", mac_format, "hex or raw")->default_val("hex");

    // prng
    InstanceOptions prng_opts;
    std::size_t prng_nbits = 0;
    std::uint64_t prng_seed = 0;
    std::string prng_init_block;
    std::string prng_format = "hex";
    CLI::App* cmd_prng = app.add_subcommand("prng", "pseudo-random bit generator");
    add_instance_options(cmd_prng, prng_opts);
    cmd_prng->add_option("--nbits", prng_nbits, "number of output bits")->required();
    CLI::Option* seed_opt =
        cmd_prng->add_option("--seed", prng_seed, "derive the N-bit init block from this seed")
            ->default_val(0);
    cmd_prng->add_option("--init-block", prng_init_block, "N-bit init block as hex")
        ->excludes(seed_opt);
    cmd_prng->add_option("--format", prng_format, "hex or raw")->default_val("hex");

    // test
    InstanceOptions test_opts;
    std::string test_name;
    std::size_t test_trials = 10000;
    std::uint64_t test_seed = 0;
    std::size_t test_msg_len = 1024;
    unsigned test_jobs = 1;
    bool test_assert = false;
    bool test_verbose = false;
    std::string test_out;
    CLI::App* cmd_test = app.add_subcommand("test", "statistical test harness");
    add_instance_options(cmd_test, test_opts);
    cmd_test->add_option("name", test_name, "sensitivity, diffusion, uniformity or collision")
        ->required();
    cmd_test->add_option("-T,--trials", test_trials, "trial count")->default_val(10000);
    cmd_test->add_option("--seed", test_seed, "trial rng seed")->default_val(0);
    cmd_test->add_option("--msg-len", test_msg_len, "message length in bits")
        ->default_val(1024);
    cmd_test->add_option("--jobs", test_jobs, "worker threads (does not change results)")
        ->default_val(1);
    cmd_test->add_flag("--assert", test_assert, "enforce the acceptance bands, exit 3 on violation");
    cmd_test->add_flag("--verbose", test_verbose, "include raw per-trial arrays in the report");
    cmd_test->add_option("-o,--out", test_out, "write the report to a file instead of stdout");

    // vectors
    InstanceOptions vec_opts;
    std::string vec_action;
    std::string vec_path;
    CLI::App* cmd_vectors = app.add_subcommand("vectors", "golden test vectors");
    add_instance_options(cmd_vectors, vec_opts);
    cmd_vectors->add_option("action", vec_action, "generate or verify")->required();
    cmd_vectors->add_option("path", vec_path, "vector file path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            return app.exit(e);
        }
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (cmd_hash->parsed()) {
        const HashParams params = resolve_params(hash_opts);
        const std::vector<std::uint8_t> data = read_input(hash_input);
        write_output(hash_bytes(params, data), hash_format);
        return 0;
    }

    if (cmd_mac->parsed()) {
        HashParams params;
        MacKey key;
        load_key_file(mac_key_file, params, key);
        const std::vector<std::uint8_t> data = read_input(mac_input);
        write_output(mac(params, key, Bits::from_bytes(data)), mac_format);
        return 0;
    }

    if (cmd_prng->parsed()) {
        const HashParams params = resolve_params(prng_opts);
        const std::size_t n = params.block_bits();
        Bits init_bits;
        if (!prng_init_block.empty()) {
            init_bits = Bits::from_hex(prng_init_block, n);
        } else {
            init_bits = TrialRng(prng_seed).next_bits(n);
        }
        std::vector<std::uint8_t> init(n);
        for (std::size_t i = 0; i < n; ++i) init[i] = init_bits.bit(i) ? 1 : 0;
        Prng prng(params, params.alpha, ControlBlock(std::move(init)));
        write_output(prng.fill(prng_nbits), prng_format);
        return 0;
    }

    if (cmd_test->parsed()) {
        const HashParams params = resolve_params(test_opts);
        std::vector<std::string> violations;
        if (test_name == "sensitivity") {
            TrialRng rng(test_seed);
            const Bits message = rng.next_bits(test_msg_len);
            const SensitivityReport report = sensitivity_report(params, message, rng);
            write_report(sensitivity_report_json(params, report), test_out);
            if (test_assert) violations = check_sensitivity_bands(report);
        } else if (test_name == "diffusion") {
            const DiffusionReport report =
                diffusion_confusion(params, test_trials, test_msg_len, test_seed, test_jobs);
            write_report(diffusion_report_json(params, report, test_verbose), test_out);
            if (test_assert) violations = check_diffusion_bands(report);
        } else if (test_name == "uniformity") {
            const UniformityReport report =
                uniformity(params, test_trials, test_msg_len, test_seed, test_jobs);
            write_report(uniformity_report_json(params, report), test_out);
            if (test_assert) violations = check_uniformity_bands(report);
        } else if (test_name == "collision") {
            const CollisionReport report =
                collision_test(params, test_trials, test_msg_len, test_seed, test_jobs);
            write_report(collision_report_json(params, report, test_verbose), test_out);
            if (test_assert) violations = check_collision_bands(report);
        } else {
            throw DomainError("unknown test: " + test_name);
        }
        if (!violations.empty()) {
            for (const std::string& v : violations) std::cerr << "assert: " << v << "\n";
            return 3;
        }
        return 0;
    }

    if (cmd_vectors->parsed()) {
        const HashParams params = resolve_params(vec_opts);
        if (vec_action == "generate") {
            save_vectors_file(vec_path, params);
            return 0;
        }
        if (vec_action == "verify") {
            std::string details;
            const std::vector<std::size_t> bad = verify_vectors_file(vec_path, &details);
            if (!bad.empty()) {
                std::cerr << details;
                return 4;
            }
            return 0;
        }
        throw DomainError("vectors action must be generate or verify");
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
