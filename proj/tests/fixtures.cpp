// Writes the synthetic sign images used by the CLI test into a directory.
#include <filesystem>
#include <iostream>
#include <string>

#include "cpyr/image.hpp"
#include "gen.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: cpyr_fixtures DIR\n";
    return 1;
  }
  const std::string dir = argv[1];
  try {
    std::filesystem::create_directories(dir);
    cpyr::save_image(dir + "/arrow.ppm", cpyr::testing::arrow_sign());
    cpyr::save_image(dir + "/flag.ppm", cpyr::testing::flag_sign());
    cpyr::save_image(dir + "/two_signs.ppm", cpyr::testing::two_signs());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
