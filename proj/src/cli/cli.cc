// Copyright 2026 The Coset Game Authors
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

#include "cosetgame/cli/cli.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fmt/ranges.h>

#include "cosetgame/bound/bound.h"
#include "cosetgame/cosets/cosets.h"
#include "cosetgame/game/game.h"
#include "cosetgame/strategy/strategy.h"

namespace cosetgame::cli {

namespace {

constexpr unsigned MAX_BOUND_M = 512;

std::string join_indices(const std::vector<size_t> &v) {
    return fmt::format("{{{}}}", fmt::join(v, ", "));
}

std::string join_pairs(const std::vector<f2::IndexPair> &v) {
    std::vector<std::string> parts;
    for (const auto &[a, b] : v) {
        parts.push_back(fmt::format("({},{})", a, b));
    }
    return fmt::format("{{{}}}", fmt::join(parts, ", "));
}

// Six significant digits, '.' separator, no grouping, independent of locale.
std::string decimal(double v) {
    return fmt::format("{:.6g}", v);
}

}  // namespace

unsigned thread_count_from_env() {
    const char *raw = std::getenv(THREADS_ENV);
    if (raw == nullptr) {
        return 1;
    }
    std::string_view s(raw);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || value == 0) {
        return 1;
    }
    return std::min(value, 256u);
}

int cmd_bound(unsigned m_max, std::ostream &out) {
    int status = EXIT_OK;
    fmt::print(out, "m, upper_bound, decimal, envelope\n");
    for (unsigned m = 1; m <= m_max; m++) {
        auto ub = bound::upper_bound(m);
        bool ok = bound::rate_envelope(m).contains(ub);
        if (!ok) {
            status = EXIT_CHECK_FAILED;
        }
        fmt::print(out, "{}, {}, {}, {}\n", m, bound::to_string(ub), decimal(bound::to_double(ub)), ok ? "ok" : "FAIL");
    }
    return status;
}

int cmd_exact(unsigned m, std::ostream &out) {
    auto value = game::exact_value(m);
    auto ub = bound::upper_bound(m);
    if (value == ub) {
        fmt::print(out, "{} TIGHT\n", bound::to_string(value));
        return EXIT_OK;
    }
    fmt::print(out, "{} NOT TIGHT (upper bound {})\n", bound::to_string(value), bound::to_string(ub));
    return EXIT_CHECK_FAILED;
}

int cmd_simulate(unsigned m, uint64_t rounds, uint64_t seed, unsigned threads, std::ostream &out) {
    game::MonteCarloOptions options;
    options.threads = threads;
    auto stats = game::monte_carlo(m, rounds, seed, options);
    fmt::print(out, "m,rounds,seed,joint_wins,bob_wins,charlie_wins,joint_rate,bob_rate,charlie_rate\n");
    fmt::print(out, "{},{},{},{},{},{},{},{},{}\n", stats.m, stats.rounds, stats.seed, stats.joint_wins, stats.bob_wins,
               stats.charlie_wins, decimal(stats.joint_rate()), decimal(stats.bob_rate()),
               decimal(stats.charlie_rate()));
    return EXIT_OK;
}

int cmd_subspace(std::string_view matrix_text, std::ostream &out, std::ostream &err) {
    f2::BitMat g;
    try {
        g = f2::BitMat::parse(matrix_text);
    } catch (const std::exception &e) {
        fmt::print(err, "error: malformed matrix: {}\n", e.what());
        return EXIT_USAGE;
    }
    if (g.cols() == 0 || g.cols() % 2 != 0 || g.rows() * 2 != g.cols() || g.rank() != g.rows()) {
        fmt::print(err, "error: need m linearly independent rows of length 2m, got {} rows of length {}\n", g.rows(),
                   g.cols());
        return EXIT_USAGE;
    }
    auto w = f2::Subspace::span(g);
    auto lf = strategy::localize(w);
    auto reps = f2::coset_reps(w);
    std::vector<std::string> rows;
    for (const auto &r : w.generator().row_data()) {
        rows.push_back(r.str());
    }
    fmt::print(out, "rref: {}\n", fmt::join(rows, ","));
    fmt::print(out, "I: {}\n", join_indices(w.pivots()));
    fmt::print(out, "J: {}\n", join_pairs(w.cross_pairs()));
    fmt::print(out, "CS(W): {}\n", join_indices(reps.x_support));
    fmt::print(out, "CS(W_perp): {}\n", join_indices(reps.z_support));
    fmt::print(out, "encoder:\n{}", cosets::format_circuit(cosets::encoder_circuit(w)));
    fmt::print(out, "bob_circuit:\n{}", cosets::format_circuit(lf.bob_circuit));
    fmt::print(out, "charlie_circuit:\n{}", cosets::format_circuit(lf.charlie_circuit));
    fmt::print(out, "ell: {}\n", lf.num_pairs());
    fmt::print(out, "residual_pairs: {}\n", join_pairs(lf.residual_pairs));
    fmt::print(out, "h: {}\n", join_pairs(lf.h));
    auto p = strategy::win_probability_formula(w);
    fmt::print(out, "win_probability: {} ({})\n", bound::to_string(p), decimal(bound::to_double(p)));
    return EXIT_OK;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Coset guessing game simulator and verifier", args.empty() ? "cosetgame" : args[0]};
    app.require_subcommand(1);

    int64_t m_max = 0;
    auto *bound_cmd = app.add_subcommand("bound", "Print the upper bound for m = 1..m_max");
    bound_cmd->add_option("--m-max", m_max, "Largest m")->required()->check(CLI::Range(int64_t{1}, int64_t{MAX_BOUND_M}));

    int64_t exact_m = 0;
    auto *exact_cmd = app.add_subcommand("exact", "Exact game value by enumeration");
    exact_cmd->add_option("--m", exact_m, "Half the number of qubits")->required()->check(CLI::Range(1, 3));

    int64_t sim_m = 0;
    int64_t rounds = 0;
    uint64_t seed = 0;
    auto *sim_cmd = app.add_subcommand("simulate", "Monte Carlo play; one CSV row");
    sim_cmd->add_option("--m", sim_m, "Half the number of qubits")
        ->required()
        ->check(CLI::Range(int64_t{1}, int64_t{game::MAX_SIMULATED_M}));
    sim_cmd->add_option("--rounds", rounds, "Number of rounds")
        ->required()
        ->check(CLI::Range(int64_t{1}, int64_t{1} << 40));
    sim_cmd->add_option("--seed", seed, "64-bit seed")->required();

    std::string matrix;
    auto *sub_cmd = app.add_subcommand("subspace", "Describe one subspace and its strategy");
    sub_cmd->add_option("--matrix", matrix, "Generator rows, e.g. 101001,011101,000010")->required();

    int64_t verify_m = 0;
    auto *verify_cmd = app.add_subcommand("verify", "Run the invariant checks at scale m");
    verify_cmd->add_option("--m", verify_m, "Half the number of qubits")->required()->check(CLI::Range(1, 3));

    std::vector<std::string> tail(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(tail.begin(), tail.end());
    try {
        app.parse(tail);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? EXIT_OK : EXIT_USAGE;
    }

    try {
        if (bound_cmd->parsed()) {
            return cmd_bound(static_cast<unsigned>(m_max), out);
        }
        if (exact_cmd->parsed()) {
            return cmd_exact(static_cast<unsigned>(exact_m), out);
        }
        if (sim_cmd->parsed()) {
            return cmd_simulate(static_cast<unsigned>(sim_m), static_cast<uint64_t>(rounds), seed,
                                thread_count_from_env(), out);
        }
        if (sub_cmd->parsed()) {
            return cmd_subspace(matrix, out, err);
        }
        return cmd_verify(static_cast<unsigned>(verify_m), out);
    } catch (const std::invalid_argument &e) {
        fmt::print(err, "error: {}\n", e.what());
        return EXIT_USAGE;
    } catch (const std::out_of_range &e) {
        fmt::print(err, "error: {}\n", e.what());
        return EXIT_USAGE;
    } catch (const std::exception &e) {
        fmt::print(err, "internal error: {}\n", e.what());
        return EXIT_CHECK_FAILED;
    }
}

}  // namespace cosetgame::cli
