#include "astmask/text/vocab.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "astmask/rng.hpp"

namespace astmask::text {

namespace {

const std::string_view kSpecialSurfaces[] = {
    Vocabulary::kMaskSurface, Vocabulary::kUnkSurface,
    Vocabulary::kPromptDelim, Vocabulary::kReasoningDelim,
    Vocabulary::kCodeDelim};

}  // namespace

Vocabulary Vocabulary::build(const std::map<std::string, std::uint64_t>& counts,
                             std::size_t max_size) {
  if (counts.empty()) throw std::invalid_argument("empty corpus");
  std::vector<std::pair<std::string_view, std::uint64_t>> ranked;
  ranked.reserve(counts.size());
  for (const auto& [surface, count] : counts) ranked.emplace_back(surface, count);
  // counts is ordered by surface, so a stable sort on count alone leaves
  // ties lexicographic.
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (ranked.size() > max_size) ranked.resize(max_size);

  Vocabulary vocab;
  vocab.surfaces_.reserve(ranked.size() + kNumSpecials);
  for (auto surface : kSpecialSurfaces) vocab.surfaces_.emplace_back(surface);
  for (const auto& [surface, count] : ranked)
    vocab.surfaces_.emplace_back(surface);
  vocab.finish();
  return vocab;
}

Vocabulary Vocabulary::build(const std::vector<std::string>& surfaces,
                             std::size_t max_size) {
  std::map<std::string, std::uint64_t> counts;
  for (const std::string& s : surfaces) ++counts[s];
  return build(counts, max_size);
}

void Vocabulary::finish() {
  ids_.clear();
  // Specials are excluded from lookup so plain text can never encode to them.
  for (std::size_t i = kNumSpecials; i < surfaces_.size(); ++i)
    ids_.emplace(surfaces_[i], static_cast<TokenId>(i));
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const std::string& s : surfaces_) h = mix_seed(h, fnv1a64(s));
  fingerprint_ = "v" + std::to_string(surfaces_.size()) + "-" +
                 std::to_string(h % 0xffffffULL);
}

TokenId Vocabulary::id_of(std::string_view surface) const {
  auto it = ids_.find(std::string(surface));
  return it == ids_.end() ? kUnkId : it->second;
}

const std::string& Vocabulary::surface_of(TokenId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= surfaces_.size())
    throw std::out_of_range("token id out of range");
  return surfaces_[static_cast<std::size_t>(id)];
}

void Vocabulary::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  for (const std::string& s : surfaces_) out << s << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  Vocabulary vocab;
  std::string line;
  while (std::getline(in, line)) vocab.surfaces_.push_back(line);
  if (vocab.surfaces_.size() < kNumSpecials)
    throw std::runtime_error("vocabulary file too short: " + path.string());
  for (TokenId i = 0; i < kNumSpecials; ++i) {
    if (vocab.surfaces_[static_cast<std::size_t>(i)] != kSpecialSurfaces[i])
      throw std::runtime_error("vocabulary header mismatch: " + path.string());
  }
  vocab.finish();
  return vocab;
}

}  // namespace astmask::text
