#pragma once

// JSON and CSV formats used by the command-line tool.
//
//   simplex: {"dim": n, "vertices": [[x_1, ..., x_n], ... n+1 rows ...]}
//   body:    {"kind": "ball", "center": [...], "radius": r}
//            {"kind": "unit_cube"} | {"kind": "sym_cube"}
//            {"kind": "cube", "center": [...], "radius": half_side}
//
// Coordinates may be JSON numbers or strings holding "p/q" or a decimal
// literal; in rational mode decimals are read exactly (0.1 is 1/10).

#include <absorb/bodies.hpp>
#include <absorb/search.hpp>
#include <absorb/simplex.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace absorb::cli {

using nlohmann::json;

/// Malformed input document.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

template <class T>
BasicSimplex<T> simplex_from_json(const json& doc);

json simplex_to_json(const Simplex& s);
json simplex_to_json(const RationalSimplex& s);

/// `dim` fills in the dimension of cube bodies; balls carry it in their center.
template <class T>
BasicConvexBody<T> body_from_json(const json& doc, std::size_t dim);

json body_to_json(const ConvexBody& body);

json point_to_json(const Point& p);
json point_to_json(const BasicPoint<Rational>& p);

json number_to_json(double x);
json number_to_json(const Rational& x);

/// Parses JSON text; throws ParseError with the parser's message.
json parse_json(std::string_view text);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);

/// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);

/// "restart,iteration,value" header plus one row per trace entry.
std::string history_csv(const SearchResult& result);

}  // namespace absorb::cli
