#include "setforge/json_io.hpp"

#include <cctype>
#include <cstdint>
#include <utility>
#include <vector>

namespace setforge {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string field(const std::string& name, std::size_t i) {
  return "\"" + name + "\"[" + std::to_string(i) + "]";
}

[[noreturn]] void fail(const std::string& what) { throw input_error(what); }

int universe_size_from(const json& j) {
  if (!j.is_object()) fail("family JSON must be an object");
  if (!j.contains("universe") || !j["universe"].is_number_integer())
    fail("\"universe\" must be an integer in 1.." + std::to_string(max_universe_size));
  const auto u = j["universe"].get<std::int64_t>();
  if (u < 1 || u > max_universe_size)
    fail("\"universe\" must be an integer in 1.." + std::to_string(max_universe_size) +
         ", got " + std::to_string(u));
  return static_cast<int>(u);
}

// Shared by families and partitions: masks in file order, unnormalized.
std::pair<Universe, std::vector<set_mask>> parse_sets(const json& j) {
  const Universe universe{universe_size_from(j)};
  if (!j.contains("sets") || !j["sets"].is_array()) fail("\"sets\" must be an array");
  std::vector<set_mask> masks;
  masks.reserve(j["sets"].size());
  for (std::size_t i = 0; i < j["sets"].size(); ++i) {
    const json& entry = j["sets"][i];
    if (!entry.is_array()) fail(field("sets", i) + " must be an array of elements");
    set_mask m = 0;
    for (std::size_t k = 0; k < entry.size(); ++k) {
      if (!entry[k].is_number_integer())
        fail(field("sets", i) + "[" + std::to_string(k) + "] must be an integer");
      const auto e = entry[k].get<std::int64_t>();
      if (e < 1 || e > universe.size())
        fail(field("sets", i) + "[" + std::to_string(k) + "]: element " + std::to_string(e) +
             " out of range for universe size " + std::to_string(universe.size()));
      m |= set_mask{1} << (e - 1);
    }
    masks.push_back(m);
  }
  return {universe, std::move(masks)};
}

ordered_json sets_to_json(Universe universe, const std::vector<set_mask>& masks) {
  ordered_json sets = ordered_json::array();
  for (set_mask m : masks) {
    ordered_json one = ordered_json::array();
    for (const int e : ElementSet(universe, m).elements()) one.push_back(e);
    sets.push_back(std::move(one));
  }
  ordered_json out;
  out["universe"] = universe.size();
  out["sets"] = std::move(sets);
  return out;
}

}  // namespace

ordered_json family_to_json(const Family& f) {
  return sets_to_json(f.universe(), f.masks());
}

Family family_from_json(const json& j, bool allow_empty) {
  auto [universe, masks] = parse_sets(j);
  return Family::normalized(universe, std::move(masks), allow_empty);
}

ordered_json partition_to_json(const Partition& p) {
  return sets_to_json(p.universe(), p.blocks());
}

Partition partition_from_json(const json& j) {
  auto [universe, masks] = parse_sets(j);
  return Partition::from_blocks(universe, std::move(masks));
}

std::string rational_to_string(const rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

rational rational_from_string(const std::string& text) {
  const auto bad = [&] { return input_error("bad rational '" + text + "'"); };
  const auto digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const auto split_sign = [](std::string s) {
    int sign = 1;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
      if (s.front() == '-') sign = -1;
      s.erase(s.begin());
    }
    return std::pair{sign, std::move(s)};
  };

  using boost::multiprecision::cpp_int;
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    auto [ns, np] = split_sign(text.substr(0, slash));
    auto [ds, dp] = split_sign(text.substr(slash + 1));
    if (!digits(np) || !digits(dp)) throw bad();
    const cpp_int den{dp};
    if (den == 0) throw bad();
    return rational(ns * ds * cpp_int{np}, den);
  }
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    auto [sign, body] = split_sign(text);
    const auto d = body.find('.');
    const std::string ip = d == 0 ? "0" : body.substr(0, d);
    const std::string fp = body.substr(d + 1);
    if (!digits(ip) || !digits(fp)) throw bad();
    cpp_int den = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
    return rational(sign * (cpp_int{ip} * den + cpp_int{fp}), den);
  }
  auto [sign, body] = split_sign(text);
  if (!digits(body)) throw bad();
  return rational(sign * cpp_int{body});
}

std::string ext_real_to_string(const ExtReal& x) {
  if (x.is_neg_inf()) return "-inf";
  if (x.is_pos_inf()) return "+inf";
  return rational_to_string(x.value());
}

ExtReal ext_real_from_string(const std::string& text) {
  if (text == "-inf") return ExtReal::neg_inf();
  if (text == "+inf" || text == "inf") return ExtReal::pos_inf();
  return {rational_from_string(text)};
}

ordered_json interval_set_to_json(const IntervalSet& s) {
  ordered_json points = ordered_json::array();
  for (const rational& p : s.points()) points.push_back(rational_to_string(p));
  ordered_json intervals = ordered_json::array();
  for (const Interval& iv : s.intervals())
    intervals.push_back(
        ordered_json{{"lo", ext_real_to_string(iv.lo)}, {"hi", ext_real_to_string(iv.hi)}});
  ordered_json out;
  out["points"] = std::move(points);
  out["intervals"] = std::move(intervals);
  return out;
}

IntervalSet interval_set_from_json(const json& j) {
  if (!j.is_object()) fail("interval-set JSON must be an object");
  const auto endpoint = [&](const json& v, const std::string& where) -> ExtReal {
    if (v.is_number_integer()) return {rational(v.get<std::int64_t>())};
    if (!v.is_string()) fail(where + " must be a rational string or \"-inf\"/\"+inf\"");
    try {
      return ext_real_from_string(v.get<std::string>());
    } catch (const input_error& e) {
      fail(where + ": " + e.what());
    }
  };

  std::vector<rational> points;
  if (j.contains("points")) {
    if (!j["points"].is_array()) fail("\"points\" must be an array");
    for (std::size_t i = 0; i < j["points"].size(); ++i) {
      const ExtReal p = endpoint(j["points"][i], field("points", i));
      if (!p.is_finite()) fail(field("points", i) + " must be finite");
      points.push_back(p.value());
    }
  }

  std::vector<Interval> intervals;
  if (j.contains("intervals")) {
    if (!j["intervals"].is_array()) fail("\"intervals\" must be an array");
    for (std::size_t i = 0; i < j["intervals"].size(); ++i) {
      const json& entry = j["intervals"][i];
      if (!entry.is_object() || !entry.contains("lo") || !entry.contains("hi"))
        fail(field("intervals", i) + " must be an object with \"lo\" and \"hi\"");
      Interval iv{endpoint(entry["lo"], field("intervals", i) + ".lo"),
                  endpoint(entry["hi"], field("intervals", i) + ".hi")};
      if (!(iv.lo < iv.hi)) fail(field("intervals", i) + ": need lo < hi");
      intervals.push_back(std::move(iv));
    }
  }
  return IntervalSet::normalized(std::move(points), std::move(intervals));
}

}  // namespace setforge
