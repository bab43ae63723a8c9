#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace astmask::text {

using TokenId = std::int32_t;

// Frequency-ranked surface vocabulary with a fixed block of special ids.
// The special surfaces ([MASK], [UNK], region delimiters) can never be
// produced by encoding plain text: the tokenizers split their bracket
// characters apart, and lookup only consults the ordinary table.
class Vocabulary {
 public:
  static constexpr TokenId kMaskId = 0;
  static constexpr TokenId kUnkId = 1;
  static constexpr TokenId kPromptDelimId = 2;
  static constexpr TokenId kReasoningDelimId = 3;
  static constexpr TokenId kCodeDelimId = 4;
  static constexpr TokenId kNumSpecials = 5;

  static constexpr std::string_view kMaskSurface = "[MASK]";
  static constexpr std::string_view kUnkSurface = "[UNK]";
  static constexpr std::string_view kPromptDelim = "<|prompt|>";
  static constexpr std::string_view kReasoningDelim = "<|reasoning|>";
  static constexpr std::string_view kCodeDelim = "<|code|>";

  // Builds from surface occurrence counts: the max_size most frequent
  // surfaces are kept, ties broken lexicographically (the smaller string
  // wins the lower id). Throws std::invalid_argument on an empty corpus.
  static Vocabulary build(const std::map<std::string, std::uint64_t>& counts,
                          std::size_t max_size);

  // Convenience over a flat list of surface occurrences.
  static Vocabulary build(const std::vector<std::string>& surfaces,
                          std::size_t max_size);

  TokenId id_of(std::string_view surface) const;  // kUnkId when absent
  const std::string& surface_of(TokenId id) const;
  bool is_special(TokenId id) const { return id >= 0 && id < kNumSpecials; }
  // Total entries including specials; valid ids are [0, size()).
  std::size_t size() const { return surfaces_.size(); }

  // Short identity string ("v<size>-<hash>") recorded in token sequences.
  const std::string& fingerprint() const { return fingerprint_; }

  // Line-oriented text format: line number = id, specials as a fixed header
  // block. load() rejects files whose header does not match.
  void save(const std::filesystem::path& path) const;
  static Vocabulary load(const std::filesystem::path& path);

 private:
  Vocabulary() = default;
  void finish();  // rebuilds the lookup map and fingerprint

  std::vector<std::string> surfaces_;
  std::unordered_map<std::string, TokenId> ids_;
  std::string fingerprint_;
};

}  // namespace astmask::text
