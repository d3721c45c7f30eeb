// include/vocdet/audio/manifest.h

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

#ifndef VOCDET_AUDIO_MANIFEST_H_
#define VOCDET_AUDIO_MANIFEST_H_

#include <filesystem>
#include <string>
#include <vector>

namespace vocdet::audio {

enum class Label { kReal, kFake };

std::string label_name(Label label);
Label parse_label(const std::string& name);

struct ManifestEntry {
  std::string path;  // relative to the manifest root
  Label label = Label::kReal;
  std::string collection;
};

// Maps a corpus directory onto labeled collections. Serialized as JSON:
//   {"root": "...", "entries": [{"path": ..., "label": "real"|"fake",
//    "collection": ...}, ...]}
struct CorpusManifest {
  std::filesystem::path root;
  std::vector<ManifestEntry> entries;

  std::filesystem::path resolve(const ManifestEntry& entry) const {
    return root / entry.path;
  }
  // Unique collection names in first-appearance order.
  std::vector<std::string> collections() const;
  std::vector<std::string> collections(Label label) const;
  std::vector<const ManifestEntry*> entries_in(const std::string& collection,
                                               Label label) const;
};

// Loads and validates a manifest. A relative root is resolved against the
// manifest file's directory. Every entry path must exist on disk.
CorpusManifest load_manifest(const std::filesystem::path& file);

void save_manifest(const std::filesystem::path& file,
                   const CorpusManifest& manifest);

}  // namespace vocdet::audio

#endif  // VOCDET_AUDIO_MANIFEST_H_
