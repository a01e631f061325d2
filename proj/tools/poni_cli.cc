// Copyright 2026 The poni Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>

#include <nlohmann/json.hpp>

#include "poni/bytes.h"
#include "poni/enc.h"
#include "poni/errors.h"
#include "poni/games.h"
#include "poni/osp.h"
#include "poni/store.h"
#include "poni/transport.h"

namespace fs = std::filesystem;
using namespace poni;

namespace {

constexpr std::array<uint8_t, 7> kPublicMagic = {'P', 'O', 'N', 'I', 'P', 'K', 1};
constexpr std::array<uint8_t, 7> kSecretMagic = {'P', 'O', 'N', 'I', 'S', 'K', 1};
constexpr std::array<uint8_t, 7> kVkMagic = {'P', 'O', 'N', 'I', 'V', 'K', 1};

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string env_or(const char *name, const std::string &fallback) {
    const char *v = std::getenv(name);
    return v != nullptr && *v != '\0' ? std::string(v) : fallback;
}

uint64_t default_seed() {
    if (const char *v = std::getenv("PONI_SEED"); v != nullptr && *v != '\0') {
        return std::stoull(v);
    }
    std::random_device rd;
    return (uint64_t{rd()} << 32) | rd();
}

std::vector<uint8_t> read_file(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        throw CliError("cannot read " + p.string());
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file_atomic(const fs::path &p, std::span<const uint8_t> data) {
    if (p.has_parent_path()) {
        fs::create_directories(p.parent_path());
    }
    fs::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(reinterpret_cast<const char *>(data.data()), static_cast<std::streamsize>(data.size()));
        if (!out) {
            throw CliError("cannot write " + tmp.string());
        }
    }
    fs::rename(tmp, p);
}

std::vector<uint8_t> with_magic(std::span<const uint8_t> magic, std::span<const uint8_t> body) {
    std::vector<uint8_t> out(magic.begin(), magic.end());
    out.insert(out.end(), body.begin(), body.end());
    return out;
}

std::span<const uint8_t> strip_magic(std::span<const uint8_t> magic, const std::vector<uint8_t> &data,
                                     const fs::path &p) {
    if (data.size() < magic.size() || !std::equal(magic.begin(), magic.end(), data.begin())) {
        throw CliError(p.string() + " is not the expected key file");
    }
    return std::span(data).subspan(magic.size());
}

void check_lambda(size_t lambda) {
    if (lambda == 0 || lambda % 6 != 0 || lambda > 1536) {
        throw CliError("lambda must be a positive multiple of 6 (got " + std::to_string(lambda) + ")");
    }
}

struct VkFile {
    size_t lambda = 0;
    VerificationKey vk;
};

VkFile load_vk(const fs::path &p) {
    auto data = read_file(p);
    auto body = strip_magic(kVkMagic, data, p);
    ByteReader r(body);
    VkFile f;
    f.lambda = r.u16();
    f.vk = VerificationKey::from_bytes(r.bytes(r.remaining()));
    check_lambda(f.lambda);
    return f;
}

void save_vk(const fs::path &p, const VkFile &f) {
    ByteWriter w;
    w.u16(static_cast<uint16_t>(f.lambda));
    w.bytes(f.vk.to_bytes());
    write_file_atomic(p, with_magic(kVkMagic, w.data()));
}

struct Paths {
    std::string store;
    std::string keys;

    fs::path records() const { return fs::path(store) / "records"; }
    fs::path channel() const { return fs::path(store) / "channel"; }
    fs::path public_key() const { return fs::path(keys) / "public.key"; }
    fs::path secret_key() const { return fs::path(keys) / "secret.key"; }
    fs::path vk() const { return fs::path(keys) / "verifier.vk"; }
};

void add_path_options(CLI::App *cmd, Paths &paths) {
    cmd->add_option("--store", paths.store, "prover store directory (env PONI_STORE)");
    cmd->add_option("--keys", paths.keys, "key directory (env PONI_KEYS)");
}

std::string message_hex(const F2Vector &m) { return to_hex(m.to_bytes()); }

F2Vector parse_message(const std::string &hex, size_t bits) {
    std::vector<uint8_t> bytes;
    try {
        bytes = from_hex(hex);
    } catch (const std::exception &) {
        throw CliError("--msg must be hex");
    }
    size_t want = (bits + 7) / 8;
    if (bytes.size() != want) {
        throw CliError("--msg must be " + std::to_string(want) + " bytes (" + std::to_string(2 * want) +
                       " hex chars) for a " + std::to_string(bits) + "-bit message");
    }
    try {
        return F2Vector::from_bytes(bits, bytes);
    } catch (const std::exception &) {
        throw CliError("--msg has bits set beyond the " + std::to_string(bits) + "-bit message length");
    }
}

void write_out(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') {
            std::cout << '\n';
        }
        return;
    }
    std::ofstream out(path);
    out << text;
    if (!out) {
        throw CliError("cannot write " + path);
    }
}

volatile std::sig_atomic_t g_stop = 0;

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"poni: encryption with proofs of no-intrusion (simulated quantum storage)"};
    app.require_subcommand(1);

    Paths paths{env_or("PONI_STORE", "poni-store"), env_or("PONI_KEYS", "poni-keys")};
    std::string addr = env_or("PONI_ADDR", "127.0.0.1:7411");
    uint64_t seed = 0;
    bool seed_given = false;
    auto add_seed = [&](CLI::App *cmd) {
        cmd->add_option_function<uint64_t>(
            "--seed", [&](uint64_t s) {
                seed = s;
                seed_given = true;
            }, "RNG seed (env PONI_SEED)");
    };

    auto *keygen = app.add_subcommand("keygen", "generate the PKE and AHE key pair");
    add_path_options(keygen, paths);
    add_seed(keygen);

    size_t lambda = 0;
    auto *vkgen = app.add_subcommand("vkgen", "generate a verification key");
    add_path_options(vkgen, paths);
    add_seed(vkgen);
    vkgen->add_option("--lambda", lambda, "security parameter, a multiple of 6")->required();

    std::string msg;
    uint64_t explicit_index = 0;
    auto *encrypt = app.add_subcommand("encrypt", "encrypt a message into the prover store");
    add_path_options(encrypt, paths);
    add_seed(encrypt);
    encrypt->add_option("--lambda", lambda, "must match the verification key");
    encrypt->add_option("--msg", msg, "message as hex, ceil(lambda/3 / 8) bytes")->required();
    encrypt->add_option("--index", explicit_index, "index to encrypt under (must be unused)");

    uint64_t index = 0;
    auto *audit = app.add_subcommand("audit", "run one proof of no-intrusion against the daemon");
    add_path_options(audit, paths);
    add_seed(audit);
    audit->add_option("--index", index, "ciphertext index")->required();
    audit->add_option("--addr", addr, "daemon address host:port (env PONI_ADDR)");

    auto *decrypt = app.add_subcommand("decrypt", "consume a stored ciphertext and print the message");
    add_path_options(decrypt, paths);
    add_seed(decrypt);
    decrypt->add_option("--index", index, "ciphertext index")->required();

    std::string adversary = "hadamard_measure_splitter";
    std::string game = "moe";
    std::string cd_first = "computational_measurer";
    std::string cd_second = "best_counting";
    uint64_t trials = 1000;
    uint64_t audits = 0;
    unsigned threads = 1;
    std::string json_out;
    std::string csv_out;
    auto *attack = app.add_subcommand("attack-demo", "run a built-in adversary and print its game report");
    add_seed(attack);
    attack->add_option("--adversary", adversary, "honest_keeper | comp_measure_splitter | hadamard_measure_splitter");
    attack->add_option("--game", game, "moe | enc | cd")->check(CLI::IsMember({"moe", "enc", "cd"}));
    attack->add_option("--first", cd_first, "cd game: computational_measurer | hadamard_measurer");
    attack->add_option("--second", cd_second, "cd game: best_counting | fixed_guess");
    attack->add_option("--lambda", lambda, "security parameter (default 12)");
    attack->add_option("--trials", trials, "number of trials");
    attack->add_option("--audits", audits, "enc game: honest audits before the split");
    attack->add_option("--threads", threads, "worker threads, 0 = all cores");
    attack->add_option("--json", json_out, "write the JSON report here instead of stdout");
    attack->add_option("--csv", csv_out, "write the per-trial CSV log here");

    uint64_t samples = 10000;
    auto *stats = app.add_subcommand("stats", "run the distribution-lemma batteries");
    add_seed(stats);
    stats->add_option("--lambda", lambda, "security parameter (default 24)");
    stats->add_option("--samples", samples, "samples per battery");
    stats->add_option("--json", json_out, "write the JSON report here instead of stdout");
    stats->add_option("--csv", csv_out, "write a metric,value CSV here");

    std::string port_file;
    auto *daemon = app.add_subcommand("daemon", "serve audits out of the prover store");
    add_path_options(daemon, paths);
    add_seed(daemon);
    daemon->add_option("--addr", addr, "listen address host:port (env PONI_ADDR)");
    daemon->add_option("--port-file", port_file, "write the bound port here once listening");

    CLI11_PARSE(app, argc, argv);
    if (!seed_given) {
        seed = default_seed();
    }
    Rng rng(seed);

    try {
        if (*keygen) {
            PoniEncryption scheme(6);
            KeyPair kp = scheme.keygen(rng);
            write_file_atomic(paths.public_key(), with_magic(kPublicMagic, kp.public_bytes()));
            write_file_atomic(paths.secret_key(), with_magic(kSecretMagic, kp.secret_bytes()));
            std::cout << "wrote " << paths.public_key().string() << " and " << paths.secret_key().string() << '\n';
            return 0;
        }
        if (*vkgen) {
            check_lambda(lambda);
            PoniEncryption scheme(lambda);
            VkFile f{lambda, scheme.vkgen(rng)};
            save_vk(paths.vk(), f);
            std::cout << "wrote " << paths.vk().string() << " (lambda " << lambda << ")\n";
            return 0;
        }
        if (*encrypt) {
            VkFile f = load_vk(paths.vk());
            if (lambda != 0 && lambda != f.lambda) {
                throw CliError("--lambda " + std::to_string(lambda) + " does not match the verification key (" +
                               std::to_string(f.lambda) + ")");
            }
            check_lambda(f.lambda);
            if (explicit_index != 0) {
                if (explicit_index < f.vk.counter) {
                    throw CliError("index " + std::to_string(explicit_index) +
                                   " was already used by this verification key; refusing counter reuse");
                }
                f.vk.counter = explicit_index;
            }
            FileStore store(paths.records());
            if (store.contains(f.vk.counter)) {
                throw CliError("the store already holds index " + std::to_string(f.vk.counter) +
                               "; refusing counter reuse");
            }
            PoniEncryption scheme(f.lambda);
            auto pk_data = read_file(paths.public_key());
            auto pk = KeyPair::parse_public(strip_magic(kPublicMagic, pk_data, paths.public_key()));
            F2Vector m = parse_message(msg, scheme.message_bits());
            auto res = scheme.encrypt(pk, m, f.vk, rng);
            store.put(res.ct);
            save_vk(paths.vk(), VkFile{f.lambda, res.next_vk});
            std::cout << "index " << res.ct.index << '\n';
            return 0;
        }
        if (*audit) {
            VkFile f = load_vk(paths.vk());
            PoniEncryption scheme(f.lambda);
            auto pk_data = read_file(paths.public_key());
            auto pk = KeyPair::parse_public(strip_magic(kPublicMagic, pk_data, paths.public_key()));
            FileChannelOsp channel(paths.channel());
            uint64_t session = rng() | 1;
            auto res = remote_audit(Endpoint::parse(addr), scheme, f.vk, pk.ahe, index, channel, rng, session);
            if (res.error) {
                std::cerr << "audit error: " << res.error->message << '\n';
            }
            std::cout << decision_name(res.decision) << '\n';
            return res.decision == Decision::Acc ? 0 : 1;
        }
        if (*decrypt) {
            FileStore store(paths.records());
            auto ct = store.take(index);
            if (!ct) {
                throw CliError("no ciphertext with index " + std::to_string(index));
            }
            check_lambda(ct->lambda);
            PoniEncryption scheme(ct->lambda);
            auto sk_data = read_file(paths.secret_key());
            auto sk = KeyPair::parse_secret(strip_magic(kSecretMagic, sk_data, paths.secret_key()));
            std::cout << message_hex(scheme.decrypt(sk, std::move(*ct), rng)) << '\n';
            return 0;
        }
        if (*attack) {
            if (lambda == 0) {
                lambda = 12;
            }
            check_lambda(lambda);
            GameConfig cfg{DimensionProfile::standard(lambda), trials, seed, threads};
            GameReport report;
            if (game == "cd") {
                std::optional<CdFirst> a1;
                std::optional<CdSecond> a2;
                if (cd_first == "computational_measurer") {
                    a1 = cd_computational_measurer();
                } else if (cd_first == "hadamard_measurer") {
                    a1 = cd_hadamard_measurer();
                }
                if (cd_second == "best_counting") {
                    a2 = cd_best_counting();
                } else if (cd_second == "fixed_guess") {
                    a2 = cd_fixed_guess();
                }
                if (!a1 || !a2) {
                    throw CliError("unknown cd adversary pair " + cd_first + "+" + cd_second);
                }
                report = run_cd_game(*a1, *a2, cfg);
            } else {
                auto adv = builtin_adversary(adversary);
                if (!adv) {
                    throw CliError("unknown adversary '" + adversary + "'");
                }
                report = game == "moe" ? run_poni_moe(*adv, cfg) : run_enc_search_game(*adv, audits, cfg);
            }
            write_out(json_out, report.to_json());
            if (!csv_out.empty()) {
                write_out(csv_out, report.to_csv());
            }
            return 0;
        }
        if (*stats) {
            if (lambda == 0) {
                lambda = 24;
            }
            check_lambda(lambda);
            auto dist = test_distribution_1sample(lambda, samples, seed);
            auto inter = test_intersection_claim(lambda, samples, seed);
            auto mixed = test_mixed_state_identity(6, 2, 4, 2000, seed);
            nlohmann::json j;
            j["schema"] = 1;
            j["seed"] = seed;
            j["lambda"] = lambda;
            j["distribution_1sample"] = {{"samples", dist.samples},
                                         {"chi_square", dist.chi.statistic},
                                         {"dof", dist.chi.dof},
                                         {"p_value", dist.chi.p_value},
                                         {"left_equal_rate", dist.left_equal_rate},
                                         {"right_equal_rate", dist.right_equal_rate},
                                         {"left_equal_exact", dist.left_equal_exact},
                                         {"recomputed_bound", dist.recomputed_bound},
                                         {"printed_bound", dist.printed_bound}};
            j["intersection_claim"] = {{"samples", inter.samples},
                                       {"rate", inter.rate},
                                       {"bound", inter.bound},
                                       {"sigma", inter.sigma},
                                       {"meets_bound", inter.meets_bound()}};
            j["mixed_state_identity"] = {{"n", mixed.n},
                                         {"d_S", mixed.d_S},
                                         {"d_W", mixed.d_W},
                                         {"samples", mixed.samples},
                                         {"distance_s1_s2", mixed.distance_s1_s2},
                                         {"distance_s1_uniform", mixed.distance_s1_uniform},
                                         {"distance_s2_uniform", mixed.distance_s2_uniform},
                                         {"control_distance", mixed.control_distance}};
            write_out(json_out, j.dump(2));
            if (!csv_out.empty()) {
                std::ostringstream csv;
                csv << "battery,metric,value\n";
                for (const auto &[battery, obj] : j.items()) {
                    if (!obj.is_object()) {
                        continue;
                    }
                    for (const auto &[k, v] : obj.items()) {
                        csv << battery << ',' << k << ',' << v.dump() << '\n';
                    }
                }
                write_out(csv_out, csv.str());
            }
            return 0;
        }
        if (*daemon) {
            DaemonConfig cfg{paths.records(), addr, paths.channel(), seed};
            ProverDaemon d(cfg);
            std::cout << d.banner() << std::flush;
            if (!port_file.empty()) {
                std::string text = std::to_string(d.port()) + "\n";
                write_file_atomic(port_file, std::span(reinterpret_cast<const uint8_t *>(text.data()), text.size()));
            }
            std::signal(SIGINT, [](int) { g_stop = 1; });
            std::signal(SIGTERM, [](int) { g_stop = 1; });
            d.start();
            while (g_stop == 0) {
                std::this_thread::sleep_for(std::chrono::milliseconds(50));
            }
            d.stop();
            return 0;
        }
    } catch (const CliError &e) {
        std::cerr << "poni: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "poni: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
