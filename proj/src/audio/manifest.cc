// src/audio/manifest.cc

// Copyright 2026  vocdet authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "vocdet/audio/manifest.h"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "vocdet/common/error.h"

namespace vocdet::audio {

using nlohmann::json;

std::string label_name(Label label) {
  return label == Label::kReal ? "real" : "fake";
}

Label parse_label(const std::string& name) {
  if (name == "real") return Label::kReal;
  if (name == "fake") return Label::kFake;
  throw FormatError("manifest: label must be \"real\" or \"fake\", got \"" +
                    name + "\"");
}

std::vector<std::string> CorpusManifest::collections() const {
  std::vector<std::string> names;
  for (const auto& e : entries)
    if (std::find(names.begin(), names.end(), e.collection) == names.end())
      names.push_back(e.collection);
  return names;
}

std::vector<std::string> CorpusManifest::collections(Label label) const {
  std::vector<std::string> names;
  for (const auto& e : entries) {
    if (e.label != label) continue;
    if (std::find(names.begin(), names.end(), e.collection) == names.end())
      names.push_back(e.collection);
  }
  return names;
}

std::vector<const ManifestEntry*> CorpusManifest::entries_in(
    const std::string& collection, Label label) const {
  std::vector<const ManifestEntry*> out;
  for (const auto& e : entries)
    if (e.collection == collection && e.label == label) out.push_back(&e);
  return out;
}

CorpusManifest load_manifest(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open manifest " + file.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("manifest " + file.string() + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("root") || !doc.contains("entries"))
    throw FormatError("manifest " + file.string() +
                      ": expected {root, entries}");

  CorpusManifest manifest;
  std::filesystem::path root = doc.at("root").get<std::string>();
  if (root.is_relative()) root = file.parent_path() / root;
  manifest.root = root;

  for (const auto& item : doc.at("entries")) {
    ManifestEntry entry;
    entry.path = item.at("path").get<std::string>();
    entry.label = parse_label(item.at("label").get<std::string>());
    entry.collection = item.at("collection").get<std::string>();
    if (entry.collection.empty())
      throw FormatError("manifest: empty collection tag for " + entry.path);
    if (!std::filesystem::exists(manifest.resolve(entry)))
      throw DataError("manifest: missing file " +
                      manifest.resolve(entry).string());
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

void save_manifest(const std::filesystem::path& file,
                   const CorpusManifest& manifest) {
  json doc;
  doc["root"] = manifest.root.string();
  doc["entries"] = json::array();
  for (const auto& e : manifest.entries) {
    doc["entries"].push_back({{"path", e.path},
                              {"label", label_name(e.label)},
                              {"collection", e.collection}});
  }
  std::ofstream out(file, std::ios::trunc);
  if (!out) throw IoError("cannot create manifest " + file.string());
  out << doc.dump(2) << "\n";
}

}  // namespace vocdet::audio
