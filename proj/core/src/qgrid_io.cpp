#include "qpswf/qgrid_io.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <limits>

#include "qpswf/error.hpp"

namespace qpswf {

namespace {

constexpr std::array<char, 4> kMagic = {'Q', 'G', 'R', 'D'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::ostream& os, T v) {
  static_assert(std::endian::native == std::endian::little, "QGRID IO assumes a little-endian host");
  char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  os.write(buf, sizeof(T));
}

template <typename T>
T get(std::istream& is) {
  char buf[sizeof(T)];
  if (!is.read(buf, sizeof(T))) throw Error(ErrorKind::MalformedInput, "QGRID: truncated file");
  T v;
  std::memcpy(&v, buf, sizeof(T));
  return v;
}

}  // namespace

void write_qgrid(std::ostream& os, const QSignal& f) {
  os.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(os, kVersion);
  put<std::uint32_t>(os, static_cast<std::uint32_t>(f.nx()));
  put<std::uint32_t>(os, static_cast<std::uint32_t>(f.ny()));
  put<double>(os, f.ax_x().start);
  put<double>(os, f.ax_x().step);
  put<double>(os, f.ax_y().start);
  put<double>(os, f.ax_y().step);
  for (const auto& q : f.values()) {
    put<double>(os, q.w);
    put<double>(os, q.x);
    put<double>(os, q.y);
    put<double>(os, q.z);
  }
}

void write_qgrid(const std::filesystem::path& path, const QSignal& f) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::BadParameters, "cannot open " + path.string() + " for writing");
  write_qgrid(os, f);
  if (!os) throw Error(ErrorKind::BadParameters, "write failed for " + path.string());
}

QSignal read_qgrid(std::istream& is) {
  std::array<char, 4> magic{};
  if (!is.read(magic.data(), magic.size()) || magic != kMagic) {
    throw Error(ErrorKind::MalformedInput, "QGRID: bad magic");
  }
  const auto version = get<std::uint32_t>(is);
  if (version != kVersion) {
    throw Error(ErrorKind::MalformedInput, "QGRID: unsupported version " + std::to_string(version));
  }
  const auto nx = get<std::uint32_t>(is);
  const auto ny = get<std::uint32_t>(is);
  const double x0 = get<double>(is);
  const double dx = get<double>(is);
  const double y0 = get<double>(is);
  const double dy = get<double>(is);
  if (nx < 2 || ny < 2 || static_cast<std::uint64_t>(nx) * ny > (1ULL << 28)) {
    throw Error(ErrorKind::MalformedInput, "QGRID: implausible grid size");
  }
  if (!(dx > 0.0) || !(dy > 0.0) || !std::isfinite(x0) || !std::isfinite(y0)) {
    throw Error(ErrorKind::MalformedInput, "QGRID: bad axis description");
  }
  std::vector<Quaternion> values(static_cast<std::size_t>(nx) * ny);
  for (auto& q : values) {
    q.w = get<double>(is);
    q.x = get<double>(is);
    q.y = get<double>(is);
    q.z = get<double>(is);
  }
  if (is.peek() != std::char_traits<char>::eof()) {
    throw Error(ErrorKind::MalformedInput, "QGRID: trailing bytes after payload");
  }
  return QSignal(GridAxis(x0, dx, nx), GridAxis(y0, dy, ny), std::move(values));
}

QSignal read_qgrid(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorKind::MalformedInput, "cannot open " + path.string());
  return read_qgrid(is);
}

void write_csv(const std::filesystem::path& path, const QSignal& f) {
  std::ofstream os(path);
  if (!os) throw Error(ErrorKind::BadParameters, "cannot open " + path.string() + " for writing");
  os << "x,y,w,i,j,k\n" << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t ix = 0; ix < f.nx(); ++ix) {
    const double x = f.ax_x().coord(ix);
    for (std::size_t iy = 0; iy < f.ny(); ++iy) {
      const auto& q = f(ix, iy);
      os << x << ',' << f.ax_y().coord(iy) << ',' << q.w << ',' << q.x << ',' << q.y << ',' << q.z
         << '\n';
    }
  }
}

}  // namespace qpswf
