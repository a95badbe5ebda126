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

#include "hintguess/service/checkpoint.h"

#include <openssl/evp.h>

#include <bit>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hintguess/errors.h"
#include "hintguess/eval/match.h"
#include "hintguess/game/config_io.h"

namespace hintguess {

using nlohmann::json;

namespace {

json Payload(const ModelCheckpoint& c) {
  json params = json::array();
  for (const nn::Parameter& p : c.params.all()) {
    params.push_back({{"name", p.name},
                      {"rows", p.value.rows()},
                      {"cols", p.value.cols()},
                      {"data", EncodeDoubles(p.value.storage())}});
  }
  return {{"format", kCheckpointFormat},
          {"version", c.version},
          {"architecture", ArchitectureToJson(c.architecture)},
          {"game", GameConfigToJson(c.game)},
          {"role", RoleName(c.role)},
          {"seed", c.seed},
          {"manifest", c.manifest},
          {"parameters", params}};
}

}  // namespace

std::string Sha256Hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static const char* kHex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 15]);
  }
  return out;
}

std::string EncodeDoubles(const std::vector<double>& values) {
  std::string bytes(values.size() * 8, '\0');
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(values[i]);
    for (int b = 0; b < 8; ++b) bytes[i * 8 + b] = static_cast<char>((bits >> (8 * b)) & 0xff);
  }
  std::string out(4 * ((bytes.size() + 2) / 3), '\0');
  const int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                                reinterpret_cast<const unsigned char*>(bytes.data()),
                                static_cast<int>(bytes.size()));
  out.resize(n);
  return out;
}

std::vector<double> DecodeDoubles(const std::string& base64, std::size_t expected_count) {
  if (base64.size() % 4 != 0) throw CorruptionError("base64 length is not a multiple of 4");
  std::string bytes(base64.size() / 4 * 3, '\0');
  const int n = EVP_DecodeBlock(reinterpret_cast<unsigned char*>(bytes.data()),
                                reinterpret_cast<const unsigned char*>(base64.data()),
                                static_cast<int>(base64.size()));
  if (n < 0) throw CorruptionError("invalid base64");
  // EVP_DecodeBlock keeps the zero bytes that stand for padding.
  std::size_t size = static_cast<std::size_t>(n);
  if (!base64.empty() && base64.back() == '=') --size;
  if (base64.size() >= 2 && base64[base64.size() - 2] == '=') --size;
  if (size != expected_count * 8) throw CorruptionError("parameter blob has the wrong length");
  std::vector<double> out(expected_count);
  for (std::size_t i = 0; i < expected_count; ++i) {
    std::uint64_t bits = 0;
    for (int b = 0; b < 8; ++b)
      bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[i * 8 + b])) << (8 * b);
    out[i] = std::bit_cast<double>(bits);
  }
  return out;
}

ModelCheckpoint ModelCheckpoint::FromAgent(const Agent& agent, json manifest) {
  ModelCheckpoint c;
  c.architecture = agent.architecture();
  c.game = agent.config();
  c.role = agent.role();
  c.seed = agent.seed();
  c.manifest = std::move(manifest);
  c.params = agent.params();
  return c;
}

Agent ModelCheckpoint::ToAgent() const { return Agent(architecture, game, role, seed, params); }

std::string SerializeCheckpoint(ModelCheckpoint& c) {
  json payload = Payload(c);
  c.digest = "sha256:" + Sha256Hex(payload.dump());
  payload["digest"] = c.digest;
  return payload.dump(1) + "\n";
}

ModelCheckpoint ParseCheckpoint(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CorruptionError(std::string("checkpoint is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw CorruptionError("checkpoint is not a JSON object");
  try {
    if (j.value("format", std::string()) != kCheckpointFormat) {
      throw UnsupportedFormat("not a hintguess checkpoint");
    }
    const int version = j.at("version").get<int>();
    if (version != kCheckpointVersion) {
      throw UnsupportedFormat("unsupported checkpoint version " + std::to_string(version));
    }
    const std::string digest = j.at("digest").get<std::string>();
    json payload = j;
    payload.erase("digest");
    if (digest != "sha256:" + Sha256Hex(payload.dump())) {
      throw CorruptionError("checkpoint digest mismatch");
    }
    ModelCheckpoint c;
    c.version = version;
    c.architecture = ArchitectureFromJson(j.at("architecture"));
    c.game = GameConfigFromJson(j.at("game"));
    c.role = ParseRole(j.at("role").get<std::string>());
    c.seed = j.at("seed").get<std::uint64_t>();
    c.manifest = j.at("manifest");
    for (const json& p : j.at("parameters")) {
      const int rows = p.at("rows").get<int>(), cols = p.at("cols").get<int>();
      if (rows < 0 || cols < 0) throw CorruptionError("negative parameter shape");
      nn::Parameter& param = c.params.Add(p.at("name").get<std::string>(), rows, cols);
      param.value = nn::Matrix(rows, cols,
                               DecodeDoubles(p.at("data").get<std::string>(),
                                             static_cast<std::size_t>(rows) * cols));
    }
    c.digest = digest;
    return c;
  } catch (const json::exception& e) {
    throw CorruptionError(std::string("checkpoint field error: ") + e.what());
  }
}

std::string SaveCheckpoint(const Agent& agent, const std::string& path, const json& manifest) {
  if (agent.params().HasNonZeroGrad()) {
    throw StateError("agent has pending gradients; save a frozen agent");
  }
  ModelCheckpoint c = ModelCheckpoint::FromAgent(agent, manifest);
  const std::string text = SerializeCheckpoint(c);
  const std::filesystem::path target(path);
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigurationError("cannot write " + tmp.string());
    out << text;
    if (!out) throw ConfigurationError("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
  return c.digest;
}

ModelCheckpoint LoadCheckpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigurationError("cannot open checkpoint " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ParseCheckpoint(ss.str());
}

Agent LoadAgent(const std::string& path) { return LoadCheckpoint(path).ToAgent(); }

Agent LoadAgent(const std::string& path, const GameConfig& game) {
  Agent agent = LoadAgent(path);
  CheckCompatible(agent, agent.role(), game);
  return agent;
}

}  // namespace hintguess
