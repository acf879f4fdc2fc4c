// Strict JSON readers and writers shared by the file formats.
#pragma once

#include "quasitile/golden.hpp"
#include "quasitile/patch_io.hpp"
#include "quasitile/quasilattice.hpp"

#include "json.hpp"

#include <initializer_list>
#include <string>
#include <string_view>

namespace quasitile::detail {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& message);

Json parse_document(std::string_view text);
/// Top-level keys one per line, top-level arrays one element per line.
std::string dump_document(const Json& doc);

void expect_object(const Json& j, const std::string& where, std::initializer_list<std::string_view> keys);
const Json& member(const Json& obj, const char* key, const std::string& where);
const Json& expect_array(const Json& j, const std::string& where, std::size_t exact_size = SIZE_MAX);
std::int64_t get_int(const Json& j, const std::string& where);
int get_int_in(const Json& j, const std::string& where, int lo, int hi);
bool get_bool(const Json& j, const std::string& where);
std::string get_string(const Json& j, const std::string& where);
void expect_version(const Json& doc);

Json to_json(const Integer& x);
Integer integer_from_json(const Json& j, const std::string& where);
Json to_json(const Rational& x);  // [num, den]
Rational rational_from_json(const Json& j, const std::string& where);
Json to_json(const GoldenRat& x);  // [a_num, a_den, b_num, b_den]
GoldenRat golden_from_json(const Json& j, const std::string& where);
Json to_json(const GoldenExt& x);  // {"u": ..., "v": ...}
GoldenExt ext_from_json(const Json& j, const std::string& where);

template <class Basis>
Json to_json(const StarCoords<Basis>& p) {
  return Json::array({p[0], p[1], p[2], p[3]});
}
QuasiPoint point_from_json(const Json& j, const std::string& where);
QVector qvector_from_json(const Json& j, const std::string& where);

inline std::string at(const std::string& where, std::string_view key) { return where + "/" + std::string(key); }
inline std::string at(const std::string& where, std::size_t index) { return where + "/" + std::to_string(index); }

}  // namespace quasitile::detail
