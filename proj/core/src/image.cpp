#include "cpyr/image.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>

#include "cpyr/errors.hpp"

namespace cpyr {

std::array<double, 3> Image::rgb(std::int32_t x, std::int32_t y) const {
  if (channels == 1) {
    const double g = at(x, y);
    return {g, g, g};
  }
  return {static_cast<double>(at(x, y, 0)), static_cast<double>(at(x, y, 1)),
          static_cast<double>(at(x, y, 2))};
}

void Image::set_rgb(std::int32_t x, std::int32_t y, std::array<std::uint8_t, 3> c) {
  if (channels == 1) {
    at(x, y) = c[0];
    return;
  }
  for (int k = 0; k < 3; ++k) at(x, y, k) = c[static_cast<std::size_t>(k)];
}

namespace {

class Reader {
 public:
  explicit Reader(std::string bytes) : buf_(std::move(bytes)) {}

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError(what + " at byte " + std::to_string(at));
  }

  void skip_space() {
    while (pos_ < buf_.size()) {
      const char c = buf_[pos_];
      if (c == '#') {
        while (pos_ < buf_.size() && buf_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  long number(const char* what) {
    skip_space();
    if (pos_ >= buf_.size()) fail(std::string("truncated: expected ") + what);
    if (!std::isdigit(static_cast<unsigned char>(buf_[pos_]))) {
      fail(std::string("expected ") + what);
    }
    long v = 0;
    while (pos_ < buf_.size() && std::isdigit(static_cast<unsigned char>(buf_[pos_]))) {
      v = v * 10 + (buf_[pos_] - '0');
      if (v > (1L << 30)) fail(std::string("value too large for ") + what);
      ++pos_;
    }
    return v;
  }

  int byte() {
    if (pos_ >= buf_.size()) fail("truncated payload");
    return static_cast<unsigned char>(buf_[pos_++]);
  }

  std::size_t pos() const { return pos_; }
  std::size_t size() const { return buf_.size(); }
  const std::string& buf() const { return buf_; }
  void advance(std::size_t n) { pos_ += n; }

 private:
  std::string buf_;
  std::size_t pos_ = 0;
};

}  // namespace

Image read_pnm(std::istream& in) {
  Reader r{std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>())};
  if (r.size() < 2 || r.buf()[0] != 'P') r.fail("missing PNM magic");
  const char kind = r.buf()[1];
  if (kind != '2' && kind != '3' && kind != '5' && kind != '6') {
    r.fail(std::string("unsupported format P") + kind);
  }
  r.advance(2);
  const long w = r.number("width");
  const long h = r.number("height");
  const long maxval = r.number("maxval");
  if (w <= 0 || h <= 0) r.fail("empty image");
  if (w * h > (1L << 26)) r.fail("image too large");
  if (maxval <= 0 || maxval > 65535) r.fail("maxval out of range");

  const int channels = (kind == '3' || kind == '6') ? 3 : 1;
  Image img(static_cast<std::int32_t>(w), static_cast<std::int32_t>(h), channels);
  auto scale = [&](long v, std::size_t at) {
    if (v > maxval) r.fail_at("sample exceeds maxval", at);
    return static_cast<std::uint8_t>((v * 255 + maxval / 2) / maxval);
  };

  const std::size_t count = img.data.size();
  if (kind == '2' || kind == '3') {
    for (std::size_t i = 0; i < count; ++i) {
      r.skip_space();
      const std::size_t at = r.pos();
      img.data[i] = scale(r.number("sample"), at);
    }
    return img;
  }
  // Binary: exactly one whitespace byte after maxval.
  if (r.pos() >= r.size()) r.fail("truncated payload");
  r.advance(1);
  const bool wide = maxval > 255;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t at = r.pos();
    long v = r.byte();
    if (wide) v = (v << 8) | r.byte();
    img.data[i] = scale(v, at);
  }
  return img;
}

Image load_image(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path);
  return read_pnm(f);
}

void write_pnm(std::ostream& out, const Image& img) {
  if (img.channels != 1 && img.channels != 3) {
    throw InvalidArgument("write_pnm needs 1 or 3 channels");
  }
  out << (img.channels == 1 ? "P5" : "P6") << '\n'
      << img.width << ' ' << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.data.data()),
            static_cast<std::streamsize>(img.data.size()));
}

void save_image(const std::string& path, const Image& img) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + path);
  write_pnm(f, img);
}

}  // namespace cpyr
