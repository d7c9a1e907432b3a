#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "diskbez/disk_bezier.hpp"

namespace diskbez {

/// Problem with a curve file. `field()` names the offending entry, e.g.
/// "weights[3]" or "disks[0].r", when one can be identified.
class CurveFileError : public std::runtime_error {
 public:
  enum class Kind { Io, Parse, Shape, Invariant };

  CurveFileError(Kind kind, std::string field, const std::string& what)
      : std::runtime_error(what), kind_(kind), field_(std::move(field)) {}

  Kind kind() const { return kind_; }
  const std::string& field() const { return field_; }

 private:
  Kind kind_;
  std::string field_;
};

// Curve file schema (JSON):
//   { "degree": n,
//     "disks": [ {"x": .., "y": .., "r": ..}, ... n+1 entries ],
//     "weights": [ ..., n+1 entries ] }

DiskRationalBezier parse_curve(std::string_view text);
DiskRationalBezier load_curve(const std::filesystem::path& path);

/// Serializes with 17 significant digits; parse_curve(format_curve(c))
/// reproduces c bit for bit.
std::string format_curve(const DiskRationalBezier& c);
void save_curve(const DiskRationalBezier& c, const std::filesystem::path& path);

/// Shortest-safe decimal for a double: "%.17g", with ".0" appended when the
/// result would otherwise read back as a JSON integer.
std::string format_real(double v);

}  // namespace diskbez
