// cpyr: build combinatorial pyramids from PNM images and query them.
//
// Exit status: 0 ok, 1 usage, 2 unreadable input, 3 bad query,
// 4 no sign found, 5 invariant violated, 6 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cpyr/containment.hpp"
#include "cpyr/errors.hpp"
#include "cpyr/invariants.hpp"
#include "cpyr/pyramid_io.hpp"
#include "cpyr/relations.hpp"
#include "cpyr/segmentation.hpp"

using namespace cpyr;
using nlohmann::json;

namespace {

enum Exit { ok = 0, usage = 1, input = 2, query = 3, no_sign = 4, invalid = 5, internal = 6 };

int parse_level(const std::string& s, const Pyramid& pyr) {
  if (s == "top") return pyr.top_level();
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidArgument("bad level '" + s + "'");
}

std::array<double, 3> parse_color(const std::string& s) {
  std::array<double, 3> c{};
  std::istringstream in(s);
  char sep = 0;
  if (!(in >> c[0] >> sep >> c[1] >> sep >> c[2]) || !in.eof()) {
    throw InvalidArgument("bad color '" + s + "', expected R,G,B");
  }
  return c;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + path);
  f << text;
}

// Deterministic distinct-ish colors for label images.
Image label_image(const Partition& part) {
  Image img(part.labels.width, part.labels.height, 3);
  for (std::int32_t y = 0; y < img.height; ++y) {
    for (std::int32_t x = 0; x < img.width; ++x) {
      const auto l = static_cast<std::uint32_t>(part.labels.at(x, y));
      const std::uint32_t h = (l + 1) * 2654435761u;
      img.set_rgb(x, y,
                  {static_cast<std::uint8_t>(h >> 24), static_cast<std::uint8_t>(h >> 16),
                   static_cast<std::uint8_t>(h >> 8)});
    }
  }
  return img;
}

json segments_json(const std::vector<Segment>& segs) {
  json out = json::array();
  for (const auto& s : segs) {
    json darts = json::array();
    for (Dart d : s.darts) darts.push_back(d.id());
    out.push_back({{"darts", darts}, {"freeman", freeman_chain(s)}});
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial pyramids over pixel grids"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "segment an image into a pyramid");
  std::string in_path, out_path;
  double threshold = 24;
  build->add_option("--input", in_path, "PGM/PPM image")->required();
  build->add_option("--threshold", threshold, "merge threshold on mean color distance");
  build->add_option("--out", out_path, "pyramid file")->required();

  // query
  auto* q = app.add_subcommand("query", "answer relation queries as JSON");
  std::string pyr_path, level_str = "top";
  std::vector<int> contains_ab, inside_ab, meets_ab;
  int composed = 0, region = 0;
  bool report = false;
  q->add_option("--pyr", pyr_path, "pyramid file")->required();
  q->add_option("--level", level_str, "level index or 'top'");
  q->add_option("--contains", contains_ab, "A B: does region A contain region B")->expected(2);
  q->add_option("--inside", inside_ab, "A B: is region A inside region B")->expected(2);
  q->add_option("--meets", meets_ab, "A B: boundary pieces between A and B")->expected(2);
  q->add_option("--composed-of", composed, "region: regions of the level below it came from");
  q->add_flag("--report", report, "full relation report");
  q->add_option("--region", region, "restrict the report to one region");

  // export
  auto* ex = app.add_subcommand("export", "export a level");
  std::string format = "dot";
  ex->add_option("--pyr", pyr_path, "pyramid file")->required();
  ex->add_option("--level", level_str, "level index or 'top'");
  ex->add_option("--format", format, "dot | map-dot | labels | mean")
      ->check(CLI::IsMember({"dot", "map-dot", "labels", "mean"}));
  ex->add_option("--out", out_path, "output file ('-' for stdout, text formats only)");

  // roadsign
  auto* rs = app.add_subcommand("roadsign", "extract the symbol of a road sign");
  int k = 5;
  std::string bg = "20,40,200", sym = "255,255,255", mask_path;
  bool each = false;
  rs->add_option("--pyr", pyr_path, "pyramid file with embedded image");
  rs->add_option("--input", in_path, "image (built on the fly)");
  rs->add_option("--threshold", threshold, "merge threshold when building from --input");
  rs->add_option("--k", k, "number of background candidates");
  rs->add_option("--background", bg, "background color R,G,B");
  rs->add_option("--symbol", sym, "symbol color R,G,B");
  rs->add_flag("--each", each, "one result per sign");
  rs->add_option("--mask", mask_path, "write the symbol mask (PGM)");

  // validate
  auto* va = app.add_subcommand("validate", "run the invariant suite on a pyramid file");
  va->add_option("--pyr", pyr_path, "pyramid file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ok : usage;
  }

  try {
    if (*build) {
      const Image img = load_image(in_path);
      std::vector<std::size_t> counts;
      const Pyramid pyr = segment_image(img, threshold, &counts);
      save_pyramid(out_path, pyr, &img);
      for (std::size_t i = 0; i < counts.size(); ++i) {
        std::cerr << "merge step " << i << ": " << counts[i] << " regions\n";
      }
      std::cerr << "levels: " << pyr.top_level() << ", regions: " << counts.back() << "\n";
      return ok;
    }

    if (*q) {
      const PyramidFile f = load_pyramid(pyr_path);
      const LevelView view(f.pyramid, parse_level(level_str, f.pyramid));
      json out{{"level", view.level()}};
      auto vertex = [&](int id) { return view.vertex(Dart(id)).id(); };
      if (!contains_ab.empty()) {
        out["a"] = vertex(contains_ab[0]);
        out["b"] = vertex(contains_ab[1]);
        out["contains"] = contains(view, Dart(contains_ab[0]), Dart(contains_ab[1]));
      }
      if (!inside_ab.empty()) {
        out["a"] = vertex(inside_ab[0]);
        out["b"] = vertex(inside_ab[1]);
        out["inside"] = contains(view, Dart(inside_ab[1]), Dart(inside_ab[0]));
      }
      if (!meets_ab.empty()) {
        const auto segs = meets_each(view, Dart(meets_ab[0]), Dart(meets_ab[1]));
        out["a"] = vertex(meets_ab[0]);
        out["b"] = vertex(meets_ab[1]);
        out["meets_exists"] = !segs.empty();
        out["meets_each"] = segs.size();
        out["segments"] = segments_json(segs);
      }
      if (composed != 0) {
        if (view.level() == 0) throw InvalidArgument("composed-of needs a level above 0");
        json parts = json::array();
        for (Dart p : f.pyramid.composed_of(view.level(), view.vertex(Dart(composed)))) {
          parts.push_back(p.id());
        }
        out["region"] = vertex(composed);
        out["composed_of"] = parts;
      }
      if (report) {
        const auto rep = relation_report(
            view, region != 0 ? std::optional<Dart>(Dart(region)) : std::nullopt);
        for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
        std::cout << report_json(rep);
        return ok;
      }
      if (out.size() == 1) throw InvalidArgument("nothing to query");
      std::cout << out.dump(2) << "\n";
      return ok;
    }

    if (*ex) {
      const PyramidFile f = load_pyramid(pyr_path);
      const LevelView view(f.pyramid, parse_level(level_str, f.pyramid));
      if (format == "dot") {
        write_text(out_path, rag_dot(rag_export(view)));
      } else if (format == "map-dot") {
        write_text(out_path, to_dot(view.map()));
      } else {
        if (out_path.empty() || out_path == "-") throw InvalidArgument("image export needs --out");
        const Partition part = partition_at(view);
        if (format == "labels") {
          save_image(out_path, label_image(part));
        } else {
          if (!f.image) throw InvalidArgument("pyramid file holds no image");
          save_image(out_path, mean_color_image(part, region_stats(part, *f.image)));
        }
      }
      return ok;
    }

    if (*rs) {
      PyramidFile f;
      if (!pyr_path.empty()) {
        f = load_pyramid(pyr_path);
        if (!f.image) throw InvalidArgument("pyramid file holds no image");
      } else if (!in_path.empty()) {
        f.image = load_image(in_path);
        f.pyramid = segment_image(*f.image, threshold);
      } else {
        throw InvalidArgument("roadsign needs --pyr or --input");
      }
      const LevelView view(f.pyramid, f.pyramid.top_level());
      const Partition part = partition_at(view);
      const auto stats = region_stats(part, *f.image);
      const RoadsignQuery rq{k, parse_color(bg), parse_color(sym)};
      std::vector<RoadsignResult> results;
      if (each) {
        results = roadsign_extract_each(view, part, stats, rq);
      } else {
        results.push_back(roadsign_extract(view, part, stats, rq));
      }
      json out = json::array();
      std::vector<int> symbol;
      for (const auto& r : results) {
        if (!r.found) continue;
        json regs = json::array();
        for (int s : r.symbol_regions) {
          regs.push_back(part.regions[static_cast<std::size_t>(s)].id());
          symbol.push_back(s);
        }
        out.push_back(
            {{"background", part.regions[static_cast<std::size_t>(r.background_region)].id()},
             {"symbol", regs},
             {"score", r.score}});
      }
      if (symbol.empty()) {
        std::cout << json{{"found", false}, {"message", "no sign found"}}.dump(2) << "\n";
        std::cerr << "no sign found\n";
        return no_sign;
      }
      if (!mask_path.empty()) save_image(mask_path, region_mask(part, symbol));
      std::cout << json{{"found", true}, {"signs", out}}.dump(2) << "\n";
      return ok;
    }

    if (*va) {
      const PyramidFile f = load_pyramid(pyr_path);
      bool all = true;
      for (const auto& r : check_invariants(f.pyramid, f.image ? &*f.image : nullptr)) {
        std::cout << (r.passed ? "ok   " : "FAIL ") << r.name << " (" << r.checked << ")";
        if (!r.passed) std::cout << ": " << r.detail;
        std::cout << "\n";
        all = all && r.passed;
      }
      return all ? ok : invalid;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return query;
  } catch (const RedundantEdgeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return query;
  } catch (const KernelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return invalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal;
  }
  return usage;
}
