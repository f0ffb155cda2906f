// Copyright 2026 The riskgame Authors
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

#ifndef RISKGAME_CLI_DOCUMENT_HPP
#define RISKGAME_CLI_DOCUMENT_HPP

// Policy documents and advisor answers.
//
// PolicyDocument (version 1):
//   {
//     "n": 3,
//     "p_first": {"approx": 0.5454..., "den": "11", "num": "6"},
//     "positions": [{"a": 2, "action": "stop", "b": 0, "c": 0,
//                    "p": {...}, "tie": false}, ...],
//     "thresholds": [[t(2,2), ..., t(2,n)], ..., [t(n,2), ..., t(n,n)]],
//     "version": 1
//   }
// positions lists every alive position in alive_positions order; a = 0
// entries carry the action "toss". Fractions are decimal strings in lowest
// terms; approx is for display only.

#include <filesystem>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "riskgame/policy.hpp"

namespace riskgame::cli {

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json fraction_json(const BigRational& value);

nlohmann::json policy_document(const Solution& solution);

// Sorted keys, two-space indent, LF line endings, trailing newline.
std::string canonical_dump(const nlohmann::json& doc);

// Validates the document and rebuilds the solution it describes. Throws
// DocumentError on schema violations, non-canonical fractions, or a
// threshold grid that disagrees with the policy.
Solution solution_from_document(const nlohmann::json& doc);

Solution load_policy_file(const std::filesystem::path& path);
void write_policy_file(const std::filesystem::path& path, const Solution& solution);

// StateAnswer for an alive position. Throws DeadPosition otherwise.
nlohmann::json state_answer(const Solution& solution, const Position& pos);

}  // namespace riskgame::cli

#endif  // RISKGAME_CLI_DOCUMENT_HPP
