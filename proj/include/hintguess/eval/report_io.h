// Copyright 2026 The HintGuess Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HINTGUESS_EVAL_REPORT_IO_H_
#define HINTGUESS_EVAL_REPORT_IO_H_

#include <string>

#include "json.hpp"

#include "hintguess/eval/analysis.h"
#include "hintguess/eval/crossplay.h"
#include "hintguess/training/trainer.h"

namespace hintguess {

nlohmann::json ToJson(const CrossPlayReport& report);
CrossPlayReport CrossPlayReportFromJson(const nlohmann::json& j);
nlohmann::json ToJson(const ConditionalMatrix& matrix);
nlohmann::json ToJson(const ProbeReport& report);
nlohmann::json ToJson(const OrderMatchingResult& result);

// The score matrix with a header row of guesser ids and a leading column of
// hinter ids.
std::string CrossPlayCsv(const CrossPlayReport& report);
std::string ConditionalCsv(const ConditionalMatrix& matrix);
// scenario,mode,human_pct,win_pct,repetitions
std::string ProbeCsv(const ProbeReport& report);
// episode,epsilon,score,loss_hinter,loss_guesser,updates
std::string CurveCsv(const std::vector<CurvePoint>& curve);

// Writes text to path, creating parent directories.
void WriteTextFile(const std::string& path, const std::string& text);
std::string ReadTextFile(const std::string& path);

}  // namespace hintguess

#endif  // HINTGUESS_EVAL_REPORT_IO_H_
