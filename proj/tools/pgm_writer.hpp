#ifndef TRIOBS_TOOLS_PGM_WRITER_HPP_
#define TRIOBS_TOOLS_PGM_WRITER_HPP_

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace triobs_cli {

// Binary PGM (P5), maxval 255, row-major with the top row first.
inline void write_pgm(const std::string& path, int width, int height,
                      const std::vector<std::uint8_t>& pixels) {
  if (static_cast<std::size_t>(width) * height != pixels.size())
    throw std::invalid_argument("write_pgm: pixel buffer size mismatch");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_pgm: cannot open " + path);
  out << "P5\n" << width << " " << height << "\n255\n";
  out.write(reinterpret_cast<const char*>(pixels.data()),
            static_cast<std::streamsize>(pixels.size()));
  if (!out) throw std::runtime_error("write_pgm: write failed for " + path);
}

}  // namespace triobs_cli

#endif  // TRIOBS_TOOLS_PGM_WRITER_HPP_
