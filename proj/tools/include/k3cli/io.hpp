#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "k3/weierstrass.hpp"

namespace k3cli {

using Json = nlohmann::json;

/// Malformed input or unusable flags; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"g2": [9 strings], "g3": [13 strings]}; entries are decimal integers or "p/q".
/// All entries are integers unless one of them is a fraction, in which case
/// the whole point is read over Q. Errors name the offending field, e.g. "g3[4]".
k3::SurfaceParams parse_surface_params(std::string_view text);
k3::SurfaceParams read_surface_params(const std::filesystem::path& path);

Json surface_params_json(const k3::SurfaceParams& u);
Json fiber_report_json(const k3::FiberReport& report);

/// Orders of vanishing of identically zero forms are written as "inf".
Json order_json(int order);

std::string read_text(const std::filesystem::path& path);
/// Writes to the file, or to `fallback` when path is empty.
void write_text(const std::filesystem::path& path, std::string_view text, std::ostream& fallback);

/// Pretty JSON with sorted keys and a trailing newline.
std::string dump(const Json& j);

}  // namespace k3cli
