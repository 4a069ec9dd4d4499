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

#ifndef COSETGAME_CLI_CLI_H
#define COSETGAME_CLI_CLI_H

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace cosetgame::cli {

constexpr int EXIT_OK = 0;
constexpr int EXIT_CHECK_FAILED = 1;
constexpr int EXIT_USAGE = 2;

/// Name of the environment variable holding the worker thread count.
constexpr const char *THREADS_ENV = "COSETGAME_THREADS";

/// Parses argv (argv[0] is the program name) and runs one subcommand.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Worker threads from THREADS_ENV; 1 when unset or unparsable.
unsigned thread_count_from_env();

int cmd_bound(unsigned m_max, std::ostream &out);
int cmd_exact(unsigned m, std::ostream &out);
int cmd_simulate(unsigned m, uint64_t rounds, uint64_t seed, unsigned threads, std::ostream &out);
int cmd_subspace(std::string_view matrix_text, std::ostream &out, std::ostream &err);
int cmd_verify(unsigned m, std::ostream &out);

}  // namespace cosetgame::cli

#endif
