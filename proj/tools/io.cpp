#include "io.hpp"

#include <absorb/errors.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace absorb::cli {

namespace {

template <class T>
T scalar_from_json(const json& v) {
  try {
    if (v.is_number_integer()) {
      if constexpr (is_rational_v<T>)
        return v.is_number_unsigned() ? Rational(v.get<std::uint64_t>())
                                      : Rational(v.get<std::int64_t>());
      else
        return static_cast<double>(v.get<std::int64_t>());
    }
    if (v.is_number()) return from_double<T>(v.get<double>());
    if (v.is_string()) {
      const Rational r = parse_rational(v.get<std::string>());
      if constexpr (is_rational_v<T>)
        return r;
      else
        return to_double(r);
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad number: ") + e.what());
  }
  throw ParseError("expected a number or a \"p/q\" string, got " + v.dump());
}

template <class T>
BasicPoint<T> point_from_json(const json& v) {
  if (!v.is_array()) throw ParseError("expected an array of coordinates");
  BasicPoint<T> p;
  p.reserve(v.size());
  for (const auto& x : v) p.push_back(scalar_from_json<T>(x));
  return p;
}

}  // namespace

template <class T>
BasicSimplex<T> simplex_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("vertices"))
    throw ParseError("simplex document needs a \"vertices\" array");
  const json& rows = doc.at("vertices");
  if (!rows.is_array() || rows.size() < 2)
    throw ParseError("\"vertices\" must hold n+1 >= 2 points");
  const std::size_t n = rows.size() - 1;
  if (doc.contains("dim")) {
    if (!doc.at("dim").is_number_integer() || doc.at("dim").get<long>() != static_cast<long>(n))
      throw ParseError("\"dim\" does not match the number of vertices");
  }
  std::vector<BasicPoint<T>> verts;
  for (const auto& row : rows) {
    verts.push_back(point_from_json<T>(row));
    if (verts.back().size() != n)
      throw ParseError("every vertex needs exactly " + std::to_string(n) + " coordinates");
  }
  return BasicSimplex<T>(std::move(verts));
}

json number_to_json(double x) { return x; }

json number_to_json(const Rational& x) {
  if (denominator(x) == 1 && abs(numerator(x)) < boost::multiprecision::cpp_int(1) << 53)
    return numerator(x).convert_to<long long>();
  return format_rational(x);
}

json point_to_json(const Point& p) {
  json out = json::array();
  for (double x : p) out.push_back(x);
  return out;
}

json point_to_json(const BasicPoint<Rational>& p) {
  json out = json::array();
  for (const auto& x : p) out.push_back(number_to_json(x));
  return out;
}

json simplex_to_json(const Simplex& s) {
  json rows = json::array();
  for (const auto& v : s.vertices()) rows.push_back(point_to_json(v));
  return {{"dim", s.dim()}, {"vertices", rows}};
}

json simplex_to_json(const RationalSimplex& s) {
  json rows = json::array();
  for (const auto& v : s.vertices()) rows.push_back(point_to_json(v));
  return {{"dim", s.dim()}, {"vertices", rows}};
}

template <class T>
BasicConvexBody<T> body_from_json(const json& doc, std::size_t dim) {
  if (!doc.is_object() || !doc.contains("kind") || !doc.at("kind").is_string())
    throw ParseError("body descriptor needs a \"kind\" string");
  const std::string kind = doc.at("kind").get<std::string>();
  if (doc.contains("dim")) {
    if (!doc.at("dim").is_number_integer()) throw ParseError("\"dim\" must be an integer");
    if (doc.at("dim").get<long>() != static_cast<long>(dim))
      throw DimensionMismatch("body dimension differs from simplex dimension");
  }
  auto centered = [&](bool with_default_center) {
    BasicPoint<T> center = doc.contains("center") ? point_from_json<T>(doc.at("center"))
                           : with_default_center ? BasicPoint<T>(dim, T(0))
                                                 : throw ParseError("body needs \"center\"");
    if (center.size() != dim)
      throw DimensionMismatch("body center dimension differs from simplex dimension");
    if (!doc.contains("radius")) throw ParseError("body needs \"radius\"");
    const T radius = scalar_from_json<T>(doc.at("radius"));
    if (!(radius > 0)) throw ParseError("\"radius\" must be positive");
    return std::pair{std::move(center), radius};
  };
  if (kind == "unit_cube") return BasicConvexBody<T>::unit_cube(dim);
  if (kind == "sym_cube") return BasicConvexBody<T>::sym_cube(dim);
  if (kind == "unit_ball") return BasicConvexBody<T>::unit_ball(dim);
  if (kind == "ball") {
    auto [c, r] = centered(true);
    return BasicConvexBody<T>::ball(std::move(c), r);
  }
  if (kind == "cube") {
    auto [c, r] = centered(false);
    return BasicConvexBody<T>::cube(std::move(c), r);
  }
  throw ParseError("unknown body kind \"" + kind + "\"");
}

json body_to_json(const ConvexBody& body) {
  const std::string label = body.label();
  if (label == "unit_cube" || label == "sym_cube") return {{"kind", label}};
  return {{"kind", label}, {"center", point_to_json(body.center())}, {"radius", body.radius()}};
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

std::string history_csv(const SearchResult& result) {
  std::ostringstream out;
  out.precision(17);
  out << "restart,iteration,value\n";
  for (const auto& t : result.history)
    out << t.restart << ',' << t.iteration << ',' << t.value << '\n';
  return out.str();
}

template Simplex simplex_from_json<double>(const json&);
template RationalSimplex simplex_from_json<Rational>(const json&);
template ConvexBody body_from_json<double>(const json&, std::size_t);
template RationalConvexBody body_from_json<Rational>(const json&, std::size_t);

}  // namespace absorb::cli
