#pragma once

#include <filesystem>
#include <iosfwd>

#include "qpswf/grid.hpp"

namespace qpswf {

// QGRID layout, little-endian: "QGRD", u32 version (1), u32 nx, u32 ny,
// f64 x0, dx, y0, dy, then nx*ny*4 f64 in row-major (x-major) order with
// components w, i, j, k.
void write_qgrid(const std::filesystem::path& path, const QSignal& f);
void write_qgrid(std::ostream& os, const QSignal& f);
QSignal read_qgrid(const std::filesystem::path& path);
QSignal read_qgrid(std::istream& is);

// CSV with header x,y,w,i,j,k, one row per node in storage order.
void write_csv(const std::filesystem::path& path, const QSignal& f);

}  // namespace qpswf
