#include "diskbez/curve_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace diskbez {

using Kind = CurveFileError::Kind;
using nlohmann::json;

std::string format_real(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("format_real: non-finite value");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

namespace {

double read_real(const json& obj, const std::string& field) {
  if (!obj.is_number()) throw CurveFileError(Kind::Parse, field, field + ": expected a number");
  const double v = obj.get<double>();
  if (!std::isfinite(v)) throw CurveFileError(Kind::Invariant, field, field + ": not finite");
  return v;
}

const json& member(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    const std::string field = where.empty() ? key : where + "." + key;
    throw CurveFileError(Kind::Parse, field, "missing field \"" + field + "\"");
  }
  return *it;
}

}  // namespace

DiskRationalBezier parse_curve(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw CurveFileError(Kind::Parse, "", std::string("curve file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw CurveFileError(Kind::Parse, "", "curve file must hold a JSON object");

  const json& jdeg = member(doc, "degree", "");
  if (!jdeg.is_number_integer()) throw CurveFileError(Kind::Parse, "degree", "degree: expected an integer");
  const long long degree = jdeg.get<long long>();
  if (degree < 0) throw CurveFileError(Kind::Invariant, "degree", "degree must be >= 0");

  const json& jdisks = member(doc, "disks", "");
  const json& jweights = member(doc, "weights", "");
  if (!jdisks.is_array()) throw CurveFileError(Kind::Parse, "disks", "disks: expected an array");
  if (!jweights.is_array()) throw CurveFileError(Kind::Parse, "weights", "weights: expected an array");
  const auto expected = static_cast<std::size_t>(degree) + 1;
  if (jdisks.size() != expected) {
    throw CurveFileError(Kind::Shape, "disks",
                         "disks has " + std::to_string(jdisks.size()) + " entries, degree " +
                             std::to_string(degree) + " needs " + std::to_string(expected));
  }
  if (jweights.size() != expected) {
    throw CurveFileError(Kind::Shape, "weights",
                         "weights has " + std::to_string(jweights.size()) + " entries, degree " +
                             std::to_string(degree) + " needs " + std::to_string(expected));
  }

  std::vector<Disk> disks;
  std::vector<double> weights;
  for (std::size_t i = 0; i < expected; ++i) {
    const std::string where = "disks[" + std::to_string(i) + "]";
    const json& jd = jdisks[i];
    if (!jd.is_object()) throw CurveFileError(Kind::Parse, where, where + ": expected an object");
    const double x = read_real(member(jd, "x", where), where + ".x");
    const double y = read_real(member(jd, "y", where), where + ".y");
    const double r = read_real(member(jd, "r", where), where + ".r");
    if (r < 0.0) throw CurveFileError(Kind::Invariant, where + ".r", where + ".r must be >= 0");
    disks.emplace_back(x, y, r);

    const std::string wfield = "weights[" + std::to_string(i) + "]";
    const double w = read_real(jweights[i], wfield);
    if (!(w > 0.0)) throw CurveFileError(Kind::Invariant, wfield, wfield + " must be > 0");
    weights.push_back(w);
  }
  return {std::move(disks), std::move(weights)};
}

DiskRationalBezier load_curve(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CurveFileError(Kind::Io, "", "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw CurveFileError(Kind::Io, "", "error reading " + path.string());
  return parse_curve(ss.str());
}

std::string format_curve(const DiskRationalBezier& c) {
  std::string out = "{\n  \"degree\": " + std::to_string(c.degree()) + ",\n  \"disks\": [\n";
  const auto disks = c.disks();
  for (std::size_t i = 0; i < disks.size(); ++i) {
    out += "    {\"x\": " + format_real(disks[i].cx()) + ", \"y\": " + format_real(disks[i].cy()) +
           ", \"r\": " + format_real(disks[i].r()) + "}";
    out += i + 1 < disks.size() ? ",\n" : "\n";
  }
  out += "  ],\n  \"weights\": [";
  const auto w = c.weights();
  for (std::size_t i = 0; i < w.size(); ++i) {
    out += format_real(w[i]);
    if (i + 1 < w.size()) out += ", ";
  }
  out += "]\n}\n";
  return out;
}

void save_curve(const DiskRationalBezier& c, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CurveFileError(Kind::Io, "", "cannot write " + path.string());
  out << format_curve(c);
  if (!out) throw CurveFileError(Kind::Io, "", "error writing " + path.string());
}

}  // namespace diskbez
