// SPDX-License-Identifier: Apache-2.0
//
// leosim - multibeam LEO satellite downlink precoding simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "leosim/experiment.hpp"
#include "leosim/scenario.hpp"

namespace leosim
{

// Bad key, value, unit, or bound. Exit code 1 territory.
struct ConfigError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

// Unreadable or unwritable file. Exit code 3 territory.
struct IoError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct RunConfig
{
    Scenario scenario;
    SweepConfig sweep;
};

RunConfig default_run_config();

// Quantity parsers. A bare number is taken in the base unit; the listed
// suffixes are accepted with or without a separating space.
double parse_length_m(const std::string &text);      // m (default), mm, cm, km
double parse_frequency_hz(const std::string &text);  // Hz (default), kHz, MHz, GHz
double parse_db(const std::string &text, const std::string &suffix); // optional dBi / dBW
double parse_real(const std::string &text);
int parse_int(const std::string &text);
std::uint64_t parse_uint64(const std::string &text);

// Grid and scheme-list parsers.
//   distance grid: "log:<lo>:<hi>:<n>", "lin:<lo>:<hi>:<n>", or a comma list
//                  of lengths.
//   alpha grid:    "step:<h>" for 0..1 in steps of h, or a comma list.
//   schemes:       comma list of SDMA, OMA, RSMA-opt, RSMA[:<alpha>].
std::vector<double> parse_distance_grid(const std::string &text);
std::vector<double> parse_alpha_grid(const std::string &text);
std::vector<SchemeSpec> parse_schemes(const std::string &text);
std::string scheme_token(const SchemeSpec &spec);

// Applies one "key = value" setting. Throws ConfigError for unknown keys or
// unparsable values.
void apply_setting(RunConfig &config, const std::string &key, const std::string &value);

// Flat key = value file; '#' starts a comment. Settings apply on top of the
// defaults in `config`.
void load_config_file(RunConfig &config, const std::string &path);

// CSV serialization. Doubles are printed with %.17g so that parsing the text
// back recovers the exact bit pattern.
std::string format_g17(double value);
std::string rates_csv(const SweepResult &result);
std::string correlation_csv(const std::vector<std::pair<double, double>> &rows);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &content);

// Run manifest: the fully resolved configuration of a finished run, written
// alongside the result file. Re-running from the manifest reproduces the
// result byte for byte.
std::string manifest_json(const RunConfig &config, const std::string &command,
                          const std::string &output_path);
RunConfig config_from_manifest(const std::string &json_text, std::string *command_out);

} // namespace leosim
