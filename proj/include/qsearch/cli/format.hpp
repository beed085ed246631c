// format.hpp
// Number formatting for CSV and JSON emission.

#pragma once

#include <cmath>
#include <iomanip>
#include <locale>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace qsearch::cli {

using Json = nlohmann::ordered_json;

// 17 significant digits; non-finite values print as "divergent".
inline std::string fmt_num(double x) {
  if (!std::isfinite(x)) return "divergent";
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(17) << x;
  return os.str();
}

inline std::string fmt_opt(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }

inline Json jnum(double x) { return std::isfinite(x) ? Json(x) : Json("divergent"); }

inline Json jopt(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }
inline Json jopt(const std::optional<double>& v) { return v ? jnum(*v) : Json(nullptr); }

}  // namespace qsearch::cli
