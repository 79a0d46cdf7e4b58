#include "k3cli/io.hpp"

#include <fstream>
#include <sstream>

#include "k3/errors.hpp"

namespace k3cli {

namespace {

template <std::size_t N>
void read_array(const Json& doc, const char* key, std::array<k3::Scalar, N>& out, const k3::CoeffRing& ring) {
  if (!doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  const Json& arr = doc.at(key);
  if (!arr.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
  if (arr.size() != N) {
    throw InputError(std::string("field '") + key + "' must have " + std::to_string(N) + " entries, got " +
                     std::to_string(arr.size()));
  }
  for (std::size_t i = 0; i < N; ++i) {
    const std::string field = std::string(key) + "[" + std::to_string(i) + "]";
    const Json& entry = arr[i];
    std::string text;
    if (entry.is_string()) {
      text = entry.get<std::string>();
    } else if (entry.is_number_integer()) {
      text = entry.dump();
    } else {
      throw InputError("field '" + field + "' must be a decimal string");
    }
    try {
      out[i] = ring.parse(text);
    } catch (const k3::Error& e) {
      throw InputError("field '" + field + "': " + e.what());
    }
  }
}

bool has_fraction(const Json& doc) {
  for (const char* key : {"g2", "g3"}) {
    if (!doc.contains(key) || !doc.at(key).is_array()) continue;
    for (const auto& entry : doc.at(key)) {
      if (entry.is_string() && entry.get<std::string>().find_first_of("/.") != std::string::npos) return true;
    }
  }
  return false;
}

}  // namespace

k3::SurfaceParams parse_surface_params(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("surface parameters must be a JSON object");
  const k3::CoeffRing ring = has_fraction(doc) ? k3::CoeffRing::rationals() : k3::CoeffRing::integers();
  k3::SurfaceParams u = k3::SurfaceParams::zero(ring);
  read_array(doc, "g2", u.g2, ring);
  read_array(doc, "g3", u.g3, ring);
  return u;
}

k3::SurfaceParams read_surface_params(const std::filesystem::path& path) {
  return parse_surface_params(read_text(path));
}

Json surface_params_json(const k3::SurfaceParams& u) {
  Json g2 = Json::array(), g3 = Json::array();
  for (const auto& c : u.g2) g2.push_back(c.str());
  for (const auto& c : u.g3) g3.push_back(c.str());
  return Json{{"g2", g2}, {"g3", g3}};
}

Json order_json(int order) {
  if (order == k3::kInfiniteOrder) return "inf";
  return order;
}

Json fiber_report_json(const k3::FiberReport& report) {
  Json places = Json::array();
  for (const auto& p : report.places) {
    places.push_back({{"place", p.place},
                      {"residue_degree", p.residue_degree},
                      {"m2", order_json(p.m2)},
                      {"m3", order_json(p.m3)},
                      {"d", order_json(p.d)},
                      {"kodaira", p.kodaira.tag()}});
  }
  return Json{{"places", places},
              {"in_U", report.in_U},
              {"h_is_zero", report.h_is_zero},
              {"euler_sum", report.euler_sum}};
}

std::string read_text(const std::filesystem::path& path) {
  if (path.empty()) throw InputError("missing --input");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text(const std::filesystem::path& path, std::string_view text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace k3cli
