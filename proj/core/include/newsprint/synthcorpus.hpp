// Copyright 2026 The Newsprint Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NEWSPRINT_SYNTHCORPUS_HPP
#define NEWSPRINT_SYNTHCORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "newsprint/raster.hpp"

namespace newsprint {

enum class Category { article, ad, header, headline, illustration };

std::string to_string(Category c);
Category category_from_string(const std::string& s);

enum class WordRole { headline, body };

/// One rendered word with its page-coordinate cell-metric box.
struct WordBox {
  std::string text;
  Box box;
  int font_scale = 1;
  std::string article_id;
  WordRole role = WordRole::body;

  friend bool operator==(const WordBox&, const WordBox&) = default;
};

/// Labeled page element; the region is a union of axis-aligned rects.
struct ElementAnnotation {
  Category category = Category::article;
  std::vector<Box> region;
  std::string id;

  Box bounding_box() const;
  BinaryMask rasterize(int page_width, int page_height) const;
  bool contains(int x, int y) const;

  friend bool operator==(const ElementAnnotation&, const ElementAnnotation&) = default;
};

struct ArticleText {
  std::string headline;
  std::string body;

  friend bool operator==(const ArticleText&, const ArticleText&) = default;
};

/// A rendered synthetic page with pixel-exact ground truth.
struct PageRecord {
  std::string id;
  PixelGrid grid;
  std::vector<ElementAnnotation> annotations;
  std::vector<WordBox> words;  // per article, in reading (flow) order
  std::map<std::string, ArticleText> article_texts;
  std::string masthead;
  std::string date;  // ISO-8601
  std::uint64_t seed = 0;

  std::vector<const ElementAnnotation*> elements(Category c) const;
  const ElementAnnotation* find(const std::string& id) const;

  friend bool operator==(const PageRecord&, const PageRecord&) = default;
};

struct LayoutSpec {
  int columns = 4;                        // 2..5
  int articles = 6;                       // 3..12
  double illustration_probability = 0.25; // per article
  std::uint64_t seed = 1;
};

/// Deterministic page synthesis: masthead header strip, column layout,
/// rectilinear article regions (unions of up to 3 rects, some spanning
/// two columns) with a scale-2 headline and scale-1 body text, optional
/// solid-gray illustration, and at least one ad region. Throws
/// std::runtime_error when the requested article count cannot be placed.
PageRecord generate_page(const LayoutSpec& spec);

/// Corpus sampling helper: page i uses layout parameters drawn from
/// mix_seed(seed, i).
std::vector<PageRecord> generate_corpus(int pages, std::uint64_t seed);

struct OcrToken {
  std::string text;
  Box box;

  friend bool operator==(const OcrToken&, const OcrToken&) = default;
};

/// Metadata-driven OCR with a deterministic boundary corruption model.
/// Each character cell of each word is classified by its visible-pixel
/// fraction f under `visible`: f >= 0.8 emits the character verbatim,
/// 0.2 < f < 0.8 emits the substitution character '#', f <= 0.2 drops
/// it. Words with every character dropped are omitted.
std::vector<OcrToken> oracle_ocr(const PageRecord& page, const BinaryMask& visible);

inline constexpr int kAnnotationSchemaVersion = 1;

// Corpus directory layout: <dir>/pages/<id>.pgm + <dir>/pages/<id>.ann
// (JSON with schema_version, masthead, date, seed, elements[], words[],
// article_texts{}).
void save_corpus(std::span<const PageRecord> records, const std::filesystem::path& dir);
std::vector<PageRecord> load_corpus(const std::filesystem::path& dir);

void save_page(const PageRecord& record, const std::filesystem::path& pages_dir);
PageRecord load_page(const std::filesystem::path& ann_path);

}  // namespace newsprint

#endif  // NEWSPRINT_SYNTHCORPUS_HPP
