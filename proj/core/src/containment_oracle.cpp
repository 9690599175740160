#include "cpyr/containment_oracle.hpp"

#include <algorithm>
#include <string>

#include "cpyr/errors.hpp"

namespace cpyr {

namespace {

// Pixels outside `a` reachable from the border, 8-connected.
std::vector<char> reach_border(const LabelImage& img, std::int32_t a) {
  const std::int32_t w = img.width;
  const std::int32_t h = img.height;
  std::vector<char> seen(static_cast<std::size_t>(w) * h, 0);
  std::vector<std::int32_t> todo;
  auto push = [&](std::int32_t x, std::int32_t y) {
    const auto i = static_cast<std::size_t>(y) * w + x;
    if (seen[i] || img.labels[i] == a) return;
    seen[i] = 1;
    todo.push_back(static_cast<std::int32_t>(i));
  };
  for (std::int32_t x = 0; x < w; ++x) {
    push(x, 0);
    push(x, h - 1);
  }
  for (std::int32_t y = 0; y < h; ++y) {
    push(0, y);
    push(w - 1, y);
  }
  while (!todo.empty()) {
    const std::int32_t i = todo.back();
    todo.pop_back();
    const std::int32_t x = i % w;
    const std::int32_t y = i / w;
    for (std::int32_t dy = -1; dy <= 1; ++dy) {
      for (std::int32_t dx = -1; dx <= 1; ++dx) {
        const std::int32_t nx = x + dx;
        const std::int32_t ny = y + dy;
        if ((dx || dy) && nx >= 0 && ny >= 0 && nx < w && ny < h) push(nx, ny);
      }
    }
  }
  return seen;
}

void require_label(const LabelImage& img, std::int32_t label) {
  if (std::find(img.labels.begin(), img.labels.end(), label) == img.labels.end()) {
    throw InvalidArgument("unknown label " + std::to_string(label));
  }
}

}  // namespace

bool flood_fill_contains_oracle(const LabelImage& image, std::int32_t a, std::int32_t b) {
  require_label(image, a);
  require_label(image, b);
  if (a == b) return false;
  const auto seen = reach_border(image, a);
  for (std::size_t i = 0; i < image.labels.size(); ++i) {
    if (image.labels[i] == b && seen[i]) return false;
  }
  return true;
}

std::vector<std::int32_t> flood_fill_inside_oracle(const LabelImage& image, std::int32_t a) {
  require_label(image, a);
  const auto seen = reach_border(image, a);
  std::vector<std::int32_t> reached;
  std::vector<std::int32_t> all;
  for (std::size_t i = 0; i < image.labels.size(); ++i) {
    const std::int32_t l = image.labels[i];
    if (l == a) continue;
    all.push_back(l);
    if (seen[i]) reached.push_back(l);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::sort(reached.begin(), reached.end());
  reached.erase(std::unique(reached.begin(), reached.end()), reached.end());
  std::vector<std::int32_t> out;
  std::set_difference(all.begin(), all.end(), reached.begin(), reached.end(),
                      std::back_inserter(out));
  return out;
}

LabelImage connected_components(const LabelImage& image) {
  LabelImage out{image.width, image.height,
                 std::vector<std::int32_t>(image.labels.size(), -1)};
  std::int32_t next = 0;
  std::vector<std::int32_t> todo;
  for (std::size_t start = 0; start < image.labels.size(); ++start) {
    if (out.labels[start] >= 0) continue;
    const std::int32_t src = image.labels[start];
    out.labels[start] = next;
    todo.push_back(static_cast<std::int32_t>(start));
    while (!todo.empty()) {
      const std::int32_t i = todo.back();
      todo.pop_back();
      const std::int32_t x = i % image.width;
      const std::int32_t y = i / image.width;
      const std::int32_t nbr[4][2] = {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
      for (const auto& n : nbr) {
        if (n[0] < 0 || n[1] < 0 || n[0] >= image.width || n[1] >= image.height) continue;
        const auto j = static_cast<std::size_t>(n[1]) * image.width + n[0];
        if (out.labels[j] >= 0 || image.labels[j] != src) continue;
        out.labels[j] = next;
        todo.push_back(static_cast<std::int32_t>(j));
      }
    }
    ++next;
  }
  return out;
}

}  // namespace cpyr
