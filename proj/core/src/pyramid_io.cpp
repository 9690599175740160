#include "cpyr/pyramid_io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "cpyr/errors.hpp"

namespace cpyr {

using nlohmann::json;

std::string to_json(const Pyramid& pyr, const Image* image) {
  json j;
  j["format"] = "cpyr";
  j["version"] = 1;
  j["width"] = pyr.width();
  j["height"] = pyr.height();
  const std::size_t slots = pyr.base().slot_count();
  std::vector<int> levels(slots);
  for (std::size_t s = 0; s < slots; ++s) levels[s] = pyr.level(Dart::from_slot(s));
  j["levels"] = levels;
  std::vector<std::string> states;
  for (int k = 1; k <= pyr.top_level(); ++k) states.emplace_back(to_string(pyr.state(k)));
  j["states"] = states;
  j["orientations"] = pyr.cached_orientations();
  if (image) {
    j["image"] = {{"width", image->width},
                  {"height", image->height},
                  {"channels", image->channels},
                  {"data", image->data}};
  }
  return j.dump() + "\n";
}

PyramidFile from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed pyramid file: ") + e.what());
  }
  try {
    if (j.value("format", std::string{}) != "cpyr") throw ParseError("not a cpyr pyramid file");
    if (j.at("version").get<int>() != 1) throw ParseError("unsupported pyramid file version");
    const auto w = j.at("width").get<std::int32_t>();
    const auto h = j.at("height").get<std::int32_t>();
    if (w < 1 || h < 1) throw ParseError("bad grid size");
    std::vector<KernelState> states;
    for (const auto& s : j.at("states")) {
      states.push_back(kernel_state_from_string(s.get<std::string>()));
    }
    PyramidFile f{Pyramid::from_encoding(w, h, j.at("levels").get<std::vector<int>>(), states,
                                         j.at("orientations").get<std::vector<int>>()),
                  std::nullopt};
    if (j.contains("image")) {
      const auto& im = j["image"];
      Image img;
      img.width = im.at("width").get<std::int32_t>();
      img.height = im.at("height").get<std::int32_t>();
      img.channels = im.at("channels").get<int>();
      img.data = im.at("data").get<std::vector<std::uint8_t>>();
      if (img.width != w || img.height != h || (img.channels != 1 && img.channels != 3) ||
          img.data.size() != static_cast<std::size_t>(w) * h * img.channels) {
        throw ParseError("embedded image does not match the grid");
      }
      f.image = std::move(img);
    }
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed pyramid file: ") + e.what());
  } catch (const KernelError& e) {
    throw ParseError(std::string("inconsistent pyramid file: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("inconsistent pyramid file: ") + e.what());
  }
}

void save_pyramid(const std::string& path, const Pyramid& pyr, const Image* image) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + path);
  f << to_json(pyr, image);
}

PyramidFile load_pyramid(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path);
  return from_json(std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()));
}

}  // namespace cpyr
