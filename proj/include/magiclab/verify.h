// Copyright 2026 The MagicLab Authors
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

#ifndef MAGICLAB_VERIFY_H
#define MAGICLAB_VERIFY_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace magiclab {

/// One verification record.
struct Check {
    std::string name;
    int p;
    nlohmann::json expected;
    nlohmann::json computed;
    bool pass;
    double tolerance;
};

struct VerifyOptions {
    /// Restrict p-dependent checks to this prime.
    std::optional<int> p;
    /// Largest prime for the theorem2 suite.
    int p_max = 13;
    uint64_t seed = 0;
};

/// Suite names accepted by run_suite, with "all" last.
const std::vector<std::string> &suite_names();

/// Throws UnknownSuite.
std::vector<Check> run_suite(const std::string &suite, const VerifyOptions &options = {});

bool all_pass(const std::vector<Check> &checks);
nlohmann::json to_json(const Check &c);
/// {suite, pass, checks: [...]}
nlohmann::json suite_report(const std::string &suite, const std::vector<Check> &checks);

}  // namespace magiclab

#endif
