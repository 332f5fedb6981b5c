// Copyright 2026 The Newsprint Authors
// SPDX-License-Identifier: Apache-2.0

#include "newsprint/synthcorpus.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <stdexcept>

#include "json.hpp"
#include "newsprint/font.hpp"
#include "newsprint/pgm.hpp"
#include "newsprint/rng.hpp"

namespace newsprint {

namespace {

// Page geometry. Column width fits 26 body characters per line; the
// gutter is wider than one glyph cell so column clustering is stable,
// and wider than any proposal jitter used in the experiments so a
// jittered box never reaches a horizontal neighbor's text.
constexpr int kMargin = 10;
constexpr int kGutter = 12;
constexpr int kColumnWidth = 162;
constexpr int kPageHeight = 960;
constexpr int kHeaderHeight = 44;
constexpr int kSidePad = 3;
constexpr int kTopPad = 3;
constexpr int kBottomPad = 3;
constexpr int kHeadlineGap = 3;
constexpr int kHeadlineScale = 2;
constexpr int kBodyScale = 1;
constexpr int kLineHeight = kCellHeight * kBodyScale;           // 8
constexpr int kHeadlineHeight = kCellHeight * kHeadlineScale;   // 16
constexpr int kMinBodyLines = 3;
constexpr int kMaxBodyLines = 10;
constexpr int kMinArticleHeight =
    kTopPad + kHeadlineHeight + kHeadlineGap + kMinBodyLines * kLineHeight + kBottomPad;
constexpr int kMinAdHeight = 24;
constexpr int kIllustrationLines = 5;  // 40 px tall, >= 32x32 block
constexpr std::uint8_t kIllustrationGray = 128;

const char* const kMastheads[] = {
    "THE DAILY CHRONICLE", "THE MORNING HERALD", "THE EVENING STAR",
    "THE CITY TRIBUNE",    "THE WEEKLY GAZETTE", "THE VALLEY COURIER",
    "THE HARBOR TIMES",    "THE PLAINS OBSERVER",
};

const char* const kMonths[] = {"JANUARY", "FEBRUARY", "MARCH",     "APRIL",   "MAY",      "JUNE",
                               "JULY",    "AUGUST",   "SEPTEMBER", "OCTOBER", "NOVEMBER", "DECEMBER"};

const char* const kLexicon[] = {
    "THE",      "OF",       "TO",      "IN",      "AND",     "FOR",     "ON",       "AT",
    "BY",       "NEW",      "CITY",    "MAYOR",   "COUNCIL", "REPORT",  "MARKET",   "PRICES",
    "RISE",     "FALL",     "TRADE",   "LOCAL",   "STATE",   "PLAN",    "VOTE",     "BILL",
    "LAW",      "COURT",    "JUDGE",   "POLICE",  "RIVER",   "BRIDGE",  "ROAD",     "RAIL",
    "TRAIN",    "PORT",     "SHIP",    "CARGO",   "FARM",    "CROP",    "GRAIN",    "WHEAT",
    "CORN",     "CATTLE",   "WEATHER", "STORM",   "RAIN",    "SNOW",    "WIND",     "FLOOD",
    "DROUGHT",  "SCHOOL",   "TEACHER", "STUDENT", "HOSPITAL","DOCTOR",  "NURSE",    "FACTORY",
    "WORKER",   "UNION",    "STRIKE",  "WAGES",   "BANK",    "LOAN",    "DEBT",     "TAX",
    "BUDGET",   "FUND",     "SHARE",   "STOCK",   "BOND",    "FIRM",    "COMPANY",  "BOARD",
    "CHAIR",    "MEETING",  "SPEECH",  "CROWD",   "PARADE",  "FESTIVAL","MUSIC",    "BAND",
    "THEATER",  "STAGE",    "GAME",    "TEAM",    "SCORE",   "MATCH",   "RACE",     "WINNER",
    "PRIZE",    "MEDAL",    "RECORD",  "BUILDING","TOWER",   "HALL",    "PARK",     "GARDEN",
    "MUSEUM",   "LIBRARY",  "BOOKS",   "PRESS",   "EDITOR",  "LETTER",  "NOTICE",   "SALE",
    "AUCTION",  "ESTATE",   "HOUSE",   "LAND",    "ACRE",    "MINE",    "COAL",     "IRON",
    "STEEL",    "OIL",      "GAS",     "POWER",   "LIGHT",   "WATER",   "HEALTH",   "SAFETY",
    "INQUIRY",  "VERDICT",  "APPEAL",  "TREATY",  "BORDER",  "ENVOY",   "SUMMIT",   "BALLOT",
    "PARTY",    "LEADER",   "MOTION",  "DEBATE",  "REFORM",  "CENSUS",  "SURVEY",   "HARVEST",
    "SEASON",   "SPRING",   "SUMMER",  "AUTUMN",  "WINTER",  "FERRY",   "CANAL",    "MILL",
};

const char* const kAdWords[] = {"SALE",  "SHOP",   "TODAY", "FINE",  "GOODS", "BEST",
                                "FRESH", "OFFER",  "STORE", "VISIT", "GRAND", "OPEN"};

int column_x(int c) { return kMargin + c * (kColumnWidth + kGutter); }

std::string pick_word(std::mt19937_64& rng) {
  return kLexicon[uniform_int(rng, 0, std::size(kLexicon) - 1)];
}

// A vertical run of body-text lines inside one column strip.
struct FlowStrip {
  int text_x = 0;
  int first_line_y = 0;
  int lines = 0;
  int width_cells = 0;
};

struct ArticleBuild {
  std::string id;
  std::vector<Box> rects;
  std::vector<FlowStrip> strips;  // flow order: left strip first
  Box headline_area;              // where the headline text starts
  int headline_cells = 0;
  std::vector<Box> illustrations;
};

// Fills one line with lexicon words; emits word boxes and appends to the
// ground-truth body string.
void fill_line(std::mt19937_64& rng, PageRecord& page, const std::string& article_id, int x,
               int y, int width_cells, int& sentence_left, std::string& body_text) {
  int used = 0;
  while (true) {
    std::string word = pick_word(rng);
    if (sentence_left <= 1) {
      word += '.';
      sentence_left = static_cast<int>(uniform_int(rng, 6, 12));
    } else if (uniform_double(rng) < 0.08) {
      word += ',';
      --sentence_left;
    } else {
      --sentence_left;
    }
    const int need = (used > 0 ? 1 : 0) + static_cast<int>(word.size());
    if (used + need > width_cells) break;
    used += need;
    const int wx = x + (used - static_cast<int>(word.size())) * kCellWidth;
    draw_text(page.grid, wx, y, word, kBodyScale);
    WordBox wb;
    wb.text = word;
    wb.box = text_box(wx, y, word, kBodyScale);
    wb.font_scale = kBodyScale;
    wb.article_id = article_id;
    wb.role = WordRole::body;
    page.words.push_back(wb);
    if (!body_text.empty()) body_text += ' ';
    body_text += word;
    // a line is full once no plausible word would fit
    if (width_cells - used < 4) break;
  }
}

void render_article(std::mt19937_64& rng, PageRecord& page, const ArticleBuild& build,
                    double /*unused*/) {
  // headline
  std::string headline_text = pick_word(rng);
  if (uniform_double(rng) < 0.7) {
    const std::string second = pick_word(rng);
    if (static_cast<int>(headline_text.size() + 1 + second.size()) <= build.headline_cells) {
      headline_text += ' ';
      headline_text += second;
    }
  }
  std::string gt_headline;
  Box headline_bbox{0, 0, 0, 0};
  {
    int cx = build.headline_area.x0;
    const int cy = build.headline_area.y0;
    std::string token;
    for (std::size_t i = 0; i <= headline_text.size(); ++i) {
      if (i < headline_text.size() && headline_text[i] != ' ') {
        token += headline_text[i];
        continue;
      }
      if (!token.empty()) {
        draw_text(page.grid, cx, cy, token, kHeadlineScale);
        WordBox wb;
        wb.text = token;
        wb.box = text_box(cx, cy, token, kHeadlineScale);
        wb.font_scale = kHeadlineScale;
        wb.article_id = build.id;
        wb.role = WordRole::headline;
        page.words.push_back(wb);
        headline_bbox = headline_bbox.area() == 0
                            ? wb.box
                            : Box{std::min(headline_bbox.x0, wb.box.x0),
                                  std::min(headline_bbox.y0, wb.box.y0),
                                  std::max(headline_bbox.x1, wb.box.x1),
                                  std::max(headline_bbox.y1, wb.box.y1)};
        if (!gt_headline.empty()) gt_headline += ' ';
        gt_headline += token;
        cx = wb.box.x1 + kCellWidth * kHeadlineScale;
        token.clear();
      }
    }
  }

  // body text through the flow strips, skipping illustration rows
  std::string body_text;
  int sentence_left = static_cast<int>(uniform_int(rng, 6, 12));
  for (const FlowStrip& strip : build.strips) {
    for (int line = 0; line < strip.lines; ++line) {
      const int y = strip.first_line_y + line * kLineHeight;
      const Box line_box{strip.text_x, y, strip.text_x + strip.width_cells * kCellWidth,
                         y + kLineHeight};
      bool blocked = false;
      for (const Box& ill : build.illustrations) {
        const Box overlap = intersect(ill, line_box);
        if (overlap.width() > 0 && overlap.height() > 0) blocked = true;
      }
      if (blocked) continue;
      fill_line(rng, page, build.id, strip.text_x, y, strip.width_cells, sentence_left,
                body_text);
    }
  }

  for (const Box& ill : build.illustrations) {
    for (int y = ill.y0; y < ill.y1; ++y) {
      for (int x = ill.x0; x < ill.x1; ++x) {
        page.grid.set(x, y, kIllustrationGray);
      }
    }
  }

  ElementAnnotation article;
  article.category = Category::article;
  article.region = build.rects;
  article.id = build.id;
  page.annotations.push_back(article);

  ElementAnnotation headline;
  headline.category = Category::headline;
  headline.region = {headline_bbox};
  headline.id = build.id + "_h";
  page.annotations.push_back(headline);

  int ill_index = 0;
  for (const Box& ill : build.illustrations) {
    ElementAnnotation note;
    note.category = Category::illustration;
    note.region = {ill};
    note.id = build.id + "_i" + std::to_string(ill_index++);
    page.annotations.push_back(note);
  }

  page.article_texts[build.id] = ArticleText{gt_headline, body_text};
}

void render_ad(std::mt19937_64& rng, PageRecord& page, const Box& rect, int index) {
  // 1 px frame inset by 2 px
  for (int x = rect.x0 + 2; x < rect.x1 - 2; ++x) {
    page.grid.set(x, rect.y0 + 2, 0);
    page.grid.set(x, rect.y1 - 3, 0);
  }
  for (int y = rect.y0 + 2; y < rect.y1 - 2; ++y) {
    page.grid.set(rect.x0 + 2, y, 0);
    page.grid.set(rect.x1 - 3, y, 0);
  }
  const std::string line = std::string(kAdWords[uniform_int(rng, 0, std::size(kAdWords) - 1)]) +
                           " " + kAdWords[uniform_int(rng, 0, std::size(kAdWords) - 1)];
  if (rect.height() >= kMinAdHeight && rect.width() >= static_cast<int>(line.size()) * 6 + 12) {
    draw_text(page.grid, rect.x0 + 6, rect.y0 + 8, line, 1);
  }
  ElementAnnotation ad;
  ad.category = Category::ad;
  ad.region = {rect};
  ad.id = "ad" + std::to_string(index);
  page.annotations.push_back(ad);
}

}  // namespace

std::string to_string(Category c) {
  switch (c) {
    case Category::article: return "article";
    case Category::ad: return "ad";
    case Category::header: return "header";
    case Category::headline: return "headline";
    case Category::illustration: return "illustration";
  }
  return "article";
}

Category category_from_string(const std::string& s) {
  if (s == "article") return Category::article;
  if (s == "ad") return Category::ad;
  if (s == "header") return Category::header;
  if (s == "headline") return Category::headline;
  if (s == "illustration") return Category::illustration;
  throw std::runtime_error("unknown element category: " + s);
}

Box ElementAnnotation::bounding_box() const {
  if (region.empty()) return Box{0, 0, 0, 0};
  Box out = region.front();
  for (const Box& r : region) {
    out.x0 = std::min(out.x0, r.x0);
    out.y0 = std::min(out.y0, r.y0);
    out.x1 = std::max(out.x1, r.x1);
    out.y1 = std::max(out.y1, r.y1);
  }
  return out;
}

BinaryMask ElementAnnotation::rasterize(int page_width, int page_height) const {
  BinaryMask mask(page_width, page_height, false);
  for (const Box& r : region) {
    mask.fill_box(r, true);
  }
  return mask;
}

bool ElementAnnotation::contains(int x, int y) const {
  return std::any_of(region.begin(), region.end(),
                     [&](const Box& r) { return r.contains(x, y); });
}

std::vector<const ElementAnnotation*> PageRecord::elements(Category c) const {
  std::vector<const ElementAnnotation*> out;
  for (const auto& a : annotations) {
    if (a.category == c) out.push_back(&a);
  }
  return out;
}

const ElementAnnotation* PageRecord::find(const std::string& target) const {
  for (const auto& a : annotations) {
    if (a.id == target) return &a;
  }
  return nullptr;
}

PageRecord generate_page(const LayoutSpec& spec) {
  if (spec.columns < 2 || spec.columns > 5) {
    throw std::invalid_argument("generate_page: columns must be in [2, 5]");
  }
  if (spec.articles < 3 || spec.articles > 12) {
    throw std::invalid_argument("generate_page: articles must be in [3, 12]");
  }
  if (spec.illustration_probability < 0.0 || spec.illustration_probability > 1.0) {
    throw std::invalid_argument("generate_page: illustration probability must be in [0, 1]");
  }

  std::mt19937_64 rng(mix_seed(spec.seed, 0x70a6e5));
  const int cols = spec.columns;
  const int width = 2 * kMargin + cols * kColumnWidth + (cols - 1) * kGutter;

  PageRecord page;
  page.seed = spec.seed;
  page.grid = PixelGrid(width, kPageHeight, 255);

  // header strip: masthead + date
  page.masthead = kMastheads[uniform_int(rng, 0, std::size(kMastheads) - 1)];
  const int year = static_cast<int>(uniform_int(rng, 2018, 2026));
  const int month = static_cast<int>(uniform_int(rng, 1, 12));
  const int day = static_cast<int>(uniform_int(rng, 1, 28));
  {
    char iso[16];
    std::snprintf(iso, sizeof(iso), "%04d-%02d-%02d", year, month, day);
    page.date = iso;
  }
  draw_text(page.grid, kMargin, 8, page.masthead, 2);
  const std::string pretty_date =
      std::string(kMonths[month - 1]) + " " + std::to_string(day) + ", " + std::to_string(year);
  draw_text(page.grid, kMargin, 30, pretty_date, 1);
  {
    ElementAnnotation header;
    header.category = Category::header;
    header.region = {Box{0, 0, width, kHeaderHeight}};
    header.id = "header";
    page.annotations.push_back(header);
  }

  const int top = kHeaderHeight + 6;
  const int bottom = kPageHeight - kMargin;
  std::vector<int> fill(cols, top);
  std::vector<int> cap(cols, bottom);
  // keep a guaranteed ad slot at the bottom of the last column
  const int ad_reserve = 50 + static_cast<int>(uniform_int(rng, 0, 50));
  cap[cols - 1] = bottom - ad_reserve;

  std::vector<Box> ad_rects;
  int cur = 0;
  for (int i = 0; i < spec.articles; ++i) {
    ArticleBuild build;
    build.id = "a" + std::to_string(i);
    bool placed = false;
    while (!placed) {
      if (cur >= cols) {
        throw std::runtime_error("generate_page: infeasible layout, too many articles");
      }
      if (cap[cur] - fill[cur] < kMinArticleHeight) {
        if (cap[cur] - fill[cur] >= kMinAdHeight) {
          ad_rects.push_back(Box{column_x(cur), fill[cur], column_x(cur) + kColumnWidth, cap[cur]});
        }
        fill[cur] = cap[cur];
        ++cur;
        continue;
      }

      enum class Shape { kSingle, kSpan, kSpanWithTail };
      Shape shape = Shape::kSingle;
      if (cur + 1 < cols && uniform_double(rng) < 0.30) {
        shape = uniform_double(rng) < 0.6 ? Shape::kSpan : Shape::kSpanWithTail;
      }
      int y = fill[cur];
      int avail = cap[cur] - y;
      if (shape != Shape::kSingle) {
        y = std::max(fill[cur], fill[cur + 1]);
        avail = std::min(cap[cur], cap[cur + 1]) - y;
        if (avail < kMinArticleHeight) {
          shape = Shape::kSingle;
          y = fill[cur];
          avail = cap[cur] - y;
        }
      }

      const int max_lines =
          std::min(kMaxBodyLines, (avail - kMinArticleHeight) / kLineHeight + kMinBodyLines);
      const int lines = static_cast<int>(uniform_int(rng, kMinBodyLines, max_lines));
      const int head_h = kTopPad + kHeadlineHeight + kHeadlineGap;
      const int body_y = y + head_h;

      if (shape == Shape::kSingle) {
        const int h = head_h + lines * kLineHeight + kBottomPad;
        const Box rect{column_x(cur), y, column_x(cur) + kColumnWidth, y + h};
        build.rects = {rect};
        build.strips = {{rect.x0 + kSidePad, body_y, lines, 26}};
        build.headline_area = Box{rect.x0 + kSidePad, y + kTopPad, 0, 0};
        build.headline_cells = 13;
        fill[cur] = rect.y1;
      } else {
        const int span_w = 2 * kColumnWidth + kGutter;
        const int x0 = column_x(cur);
        // gap created by top alignment becomes an ad when tall enough
        for (int c = cur; c <= cur + 1; ++c) {
          if (y - fill[c] >= kMinAdHeight) {
            ad_rects.push_back(Box{column_x(c), fill[c], column_x(c) + kColumnWidth, y});
          }
        }
        if (shape == Shape::kSpan) {
          const int h = head_h + lines * kLineHeight + kBottomPad;
          const Box rect{x0, y, x0 + span_w, y + h};
          build.rects = {rect};
          build.strips = {{rect.x0 + kSidePad, body_y, lines, 26},
                          {rect.x0 + kColumnWidth + kGutter + kSidePad, body_y, lines, 26}};
          fill[cur] = rect.y1;
          fill[cur + 1] = rect.y1;
        } else {
          const Box rect1{x0, y, x0 + span_w, body_y + lines * kLineHeight};
          const int tail_max =
              std::min(6, (cap[cur] - rect1.y1 - kBottomPad) / kLineHeight);
          const int tail_lines =
              tail_max >= 2 ? static_cast<int>(uniform_int(rng, 2, tail_max)) : 0;
          if (tail_lines < 2) {
            // no room for the tail: degrade to a plain span
            const Box rect{x0, y, x0 + span_w, body_y + lines * kLineHeight + kBottomPad};
            build.rects = {rect};
            build.strips = {{rect.x0 + kSidePad, body_y, lines, 26},
                            {rect.x0 + kColumnWidth + kGutter + kSidePad, body_y, lines, 26}};
            fill[cur] = rect.y1;
            fill[cur + 1] = rect.y1;
          } else {
            const Box rect2{x0, rect1.y1, x0 + kColumnWidth,
                            rect1.y1 + tail_lines * kLineHeight + kBottomPad};
            build.rects = {rect1, rect2};
            // the left strip flows through both rects without a visual seam
            build.strips = {{x0 + kSidePad, body_y, lines + tail_lines, 26},
                            {x0 + kColumnWidth + kGutter + kSidePad, body_y, lines, 26}};
            fill[cur] = rect2.y1;
            fill[cur + 1] = rect1.y1;
          }
        }
        build.headline_area = Box{x0 + kSidePad, y + kTopPad, 0, 0};
        build.headline_cells = 27;
      }

      // optional solid-gray illustration inside one strip
      if (uniform_double(rng) < spec.illustration_probability) {
        for (std::size_t s = 0; s < build.strips.size(); ++s) {
          const FlowStrip& strip = build.strips[s];
          if (strip.lines < kIllustrationLines + 2) continue;
          const int start =
              static_cast<int>(uniform_int(rng, 1, strip.lines - kIllustrationLines - 1));
          const int iy = strip.first_line_y + start * kLineHeight;
          build.illustrations.push_back(Box{strip.text_x, iy,
                                            strip.text_x + 26 * kCellWidth,
                                            iy + kIllustrationLines * kLineHeight});
          break;
        }
      }

      render_article(rng, page, build, 0.0);
      placed = true;
    }
  }

  // leftover column space becomes ads
  for (int c = 0; c < cols; ++c) {
    if (cap[c] - fill[c] >= kMinAdHeight) {
      ad_rects.push_back(Box{column_x(c), fill[c], column_x(c) + kColumnWidth, cap[c]});
    }
  }
  ad_rects.push_back(
      Box{column_x(cols - 1), cap[cols - 1], column_x(cols - 1) + kColumnWidth, bottom});

  int ad_index = 0;
  for (const Box& rect : ad_rects) {
    render_ad(rng, page, rect, ad_index++);
  }
  return page;
}

std::vector<PageRecord> generate_corpus(int pages, std::uint64_t seed) {
  std::vector<PageRecord> out;
  out.reserve(static_cast<std::size_t>(pages));
  for (int i = 0; i < pages; ++i) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    LayoutSpec spec;
    spec.columns = static_cast<int>(uniform_int(rng, 3, 5));
    spec.articles = static_cast<int>(uniform_int(rng, 4, 9));
    spec.illustration_probability = 0.25;
    spec.seed = mix_seed(seed, 0x1000000ULL + static_cast<std::uint64_t>(i));
    PageRecord page = generate_page(spec);
    char id[16];
    std::snprintf(id, sizeof(id), "page_%04d", i);
    page.id = id;
    out.push_back(std::move(page));
  }
  return out;
}

std::vector<OcrToken> oracle_ocr(const PageRecord& page, const BinaryMask& visible) {
  if (visible.width() != page.grid.width() || visible.height() != page.grid.height()) {
    throw std::invalid_argument("oracle_ocr: visible mask dimension mismatch");
  }
  const IntegralMask integral(visible);
  std::vector<OcrToken> out;
  for (const WordBox& word : page.words) {
    const int cell_w = kCellWidth * word.font_scale;
    const double cell_area = static_cast<double>(cell_w) * word.box.height();
    std::string emitted;
    bool any = false;
    for (std::size_t i = 0; i < word.text.size(); ++i) {
      const int cx0 = word.box.x0 + static_cast<int>(i) * cell_w;
      const Box cell{cx0, word.box.y0, cx0 + cell_w, word.box.y1};
      const double f = static_cast<double>(integral.count(cell)) / cell_area;
      if (f >= 0.8) {
        emitted += word.text[i];
        any = true;
      } else if (f > 0.2) {
        emitted += '#';
        any = true;
      }
      // f <= 0.2: dropped
    }
    if (any && !emitted.empty()) {
      out.push_back(OcrToken{emitted, word.box});
    }
  }
  return out;
}

namespace {

nlohmann::json box_to_json(const Box& b) { return nlohmann::json::array({b.x0, b.y0, b.x1, b.y1}); }

Box box_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 4) throw std::runtime_error("corpus: malformed box");
  return Box{j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>()};
}

}  // namespace

void save_page(const PageRecord& record, const std::filesystem::path& pages_dir) {
  std::filesystem::create_directories(pages_dir);
  write_pgm(record.grid, pages_dir / (record.id + ".pgm"));

  nlohmann::json doc;
  doc["schema_version"] = kAnnotationSchemaVersion;
  doc["id"] = record.id;
  doc["masthead"] = record.masthead;
  doc["date"] = record.date;
  doc["seed"] = record.seed;
  doc["elements"] = nlohmann::json::array();
  for (const auto& e : record.annotations) {
    nlohmann::json je;
    je["id"] = e.id;
    je["category"] = to_string(e.category);
    je["rects"] = nlohmann::json::array();
    for (const Box& r : e.region) je["rects"].push_back(box_to_json(r));
    doc["elements"].push_back(je);
  }
  doc["words"] = nlohmann::json::array();
  for (const auto& w : record.words) {
    nlohmann::json jw;
    jw["text"] = w.text;
    jw["box"] = box_to_json(w.box);
    jw["scale"] = w.font_scale;
    jw["article"] = w.article_id;
    jw["role"] = w.role == WordRole::headline ? "headline" : "body";
    doc["words"].push_back(jw);
  }
  doc["article_texts"] = nlohmann::json::object();
  for (const auto& [id, text] : record.article_texts) {
    doc["article_texts"][id] = {{"headline", text.headline}, {"body", text.body}};
  }

  std::ofstream out(pages_dir / (record.id + ".ann"));
  if (!out) throw std::runtime_error("corpus: cannot write " + (pages_dir / record.id).string());
  out << doc.dump(1) << "\n";
}

PageRecord load_page(const std::filesystem::path& ann_path) {
  std::ifstream in(ann_path);
  if (!in) throw std::runtime_error("corpus: cannot open " + ann_path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("corpus: malformed annotation file " + ann_path.string() + ": " +
                             e.what());
  }
  if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer()) {
    throw std::runtime_error("corpus: missing schema_version in " + ann_path.string());
  }
  if (doc["schema_version"].get<int>() != kAnnotationSchemaVersion) {
    throw std::runtime_error("corpus: unsupported schema_version " +
                             doc["schema_version"].dump() + " in " + ann_path.string());
  }

  PageRecord record;
  record.id = doc.at("id").get<std::string>();
  record.masthead = doc.at("masthead").get<std::string>();
  record.date = doc.at("date").get<std::string>();
  record.seed = doc.at("seed").get<std::uint64_t>();
  for (const auto& je : doc.at("elements")) {
    ElementAnnotation e;
    e.id = je.at("id").get<std::string>();
    e.category = category_from_string(je.at("category").get<std::string>());
    for (const auto& jr : je.at("rects")) e.region.push_back(box_from_json(jr));
    record.annotations.push_back(std::move(e));
  }
  for (const auto& jw : doc.at("words")) {
    WordBox w;
    w.text = jw.at("text").get<std::string>();
    w.box = box_from_json(jw.at("box"));
    w.font_scale = jw.at("scale").get<int>();
    w.article_id = jw.at("article").get<std::string>();
    w.role = jw.at("role").get<std::string>() == "headline" ? WordRole::headline : WordRole::body;
    record.words.push_back(std::move(w));
  }
  for (const auto& [id, jt] : doc.at("article_texts").items()) {
    record.article_texts[id] =
        ArticleText{jt.at("headline").get<std::string>(), jt.at("body").get<std::string>()};
  }

  const auto pgm_path = ann_path.parent_path() / (record.id + ".pgm");
  record.grid = read_pgm(pgm_path);
  return record;
}

void save_corpus(std::span<const PageRecord> records, const std::filesystem::path& dir) {
  const auto pages_dir = dir / "pages";
  std::filesystem::create_directories(pages_dir);
  for (const auto& record : records) {
    save_page(record, pages_dir);
  }
}

std::vector<PageRecord> load_corpus(const std::filesystem::path& dir) {
  const auto pages_dir = dir / "pages";
  if (!std::filesystem::exists(pages_dir)) {
    throw std::runtime_error("corpus: no pages/ directory under " + dir.string());
  }
  std::vector<std::filesystem::path> ann_files;
  for (const auto& entry : std::filesystem::directory_iterator(pages_dir)) {
    if (entry.path().extension() == ".ann") ann_files.push_back(entry.path());
  }
  std::sort(ann_files.begin(), ann_files.end());
  std::vector<PageRecord> out;
  out.reserve(ann_files.size());
  for (const auto& path : ann_files) {
    out.push_back(load_page(path));
  }
  return out;
}

}  // namespace newsprint
