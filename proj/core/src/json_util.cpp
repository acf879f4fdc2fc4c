#include "json_util.hpp"

#include <algorithm>
#include <limits>

namespace quasitile::detail {

void fail(const std::string& where, const std::string& message) { throw ParseError(where, message); }

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    fail("", std::string("invalid JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string dump_document(const Json& doc) {
  if (!doc.is_object()) return doc.dump() + "\n";
  std::string out = "{\n";
  std::size_t n = 0;
  for (const auto& [key, value] : doc.items()) {
    out += "  " + Json(key).dump() + ": ";
    if (value.is_array() && !value.empty()) {
      out += "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        out += "    " + value[i].dump() + (i + 1 < value.size() ? ",\n" : "\n");
      }
      out += "  ]";
    } else {
      out += value.dump();
    }
    out += ++n < doc.size() ? ",\n" : "\n";
  }
  return out + "}\n";
}

void expect_object(const Json& j, const std::string& where, std::initializer_list<std::string_view> keys) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) fail(at(where, key), "unknown field");
  }
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(at(where, key), "missing field");
  return *it;
}

const Json& expect_array(const Json& j, const std::string& where, std::size_t exact_size) {
  if (!j.is_array()) fail(where, "expected an array");
  if (exact_size != SIZE_MAX && j.size() != exact_size) {
    fail(where, "expected " + std::to_string(exact_size) + " elements, got " + std::to_string(j.size()));
  }
  return j;
}

std::int64_t get_int(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      fail(where, "integer out of range");
    }
    return j.get<std::int64_t>();
  }
  fail(where, "expected an integer");
}

int get_int_in(const Json& j, const std::string& where, int lo, int hi) {
  const std::int64_t v = get_int(j, where);
  if (v < lo || v > hi) fail(where, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

bool get_bool(const Json& j, const std::string& where) {
  if (!j.is_boolean()) fail(where, "expected a boolean");
  return j.get<bool>();
}

std::string get_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

void expect_version(const Json& doc) {
  const Json& v = member(doc, "version", "");
  if (get_int(v, "/version") != kFormatVersion) fail("/version", "unsupported version " + v.dump());
}

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(std::to_string(get_int(j, where)));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const bool digits = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
                        s != "-";
    if (!digits) fail(where, "malformed integer string");
    return Integer(s);
  }
  fail(where, "expected an integer");
}

namespace {

Rational checked_rational(const Integer& num, const Integer& den, const std::string& where) {
  if (den == 0) fail(where, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

Json to_json(const Rational& x) { return Json::array({to_json(x.get_num()), to_json(x.get_den())}); }

Rational rational_from_json(const Json& j, const std::string& where) {
  expect_array(j, where, 2);
  return checked_rational(integer_from_json(j[0], at(where, 0)), integer_from_json(j[1], at(where, 1)), where);
}

Json to_json(const GoldenRat& x) {
  return Json::array({to_json(x.a().get_num()), to_json(x.a().get_den()), to_json(x.b().get_num()), to_json(x.b().get_den())});
}

GoldenRat golden_from_json(const Json& j, const std::string& where) {
  expect_array(j, where, 4);
  Integer v[4];
  for (std::size_t i = 0; i < 4; ++i) v[i] = integer_from_json(j[i], at(where, i));
  return GoldenRat(checked_rational(v[0], v[1], where), checked_rational(v[2], v[3], where));
}

Json to_json(const GoldenExt& x) {
  Json j = Json::object();
  j["u"] = to_json(x.u());
  j["v"] = to_json(x.v());
  return j;
}

GoldenExt ext_from_json(const Json& j, const std::string& where) {
  expect_object(j, where, {"u", "v"});
  return GoldenExt(golden_from_json(member(j, "u", where), at(where, "u")),
                   golden_from_json(member(j, "v", where), at(where, "v")));
}

namespace {

std::array<Coord, 4> coords_from_json(const Json& j, const std::string& where) {
  expect_array(j, where, 4);
  std::array<Coord, 4> c{};
  for (std::size_t i = 0; i < 4; ++i) c[i] = get_int(j[i], at(where, i));
  return c;
}

}  // namespace

QuasiPoint point_from_json(const Json& j, const std::string& where) { return QuasiPoint(coords_from_json(j, where)); }
QVector qvector_from_json(const Json& j, const std::string& where) { return QVector(coords_from_json(j, where)); }

}  // namespace quasitile::detail
