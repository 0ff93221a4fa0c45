#include "distspec/report.hpp"

#include <cmath>
#include <sstream>

namespace distspec {

Json spectrum_json(const Spectrum& s) {
  Json arr = Json::array();
  for (const auto& it : s.items) {
    Json item;
    if (it.exact)
      item["value"] = static_cast<long>(std::llround(it.value));
    else
      item["value"] = it.value;
    item["multiplicity"] = it.multiplicity;
    item["exact"] = it.exact;
    arr.push_back(std::move(item));
  }
  return arr;
}

std::string spectrum_text(const Spectrum& s, int precision) {
  std::ostringstream os;
  os.precision(precision);
  bool first = true;
  for (const auto& it : s.items) {
    if (!first) os << ' ';
    first = false;
    if (it.exact)
      os << std::llround(it.value);
    else
      os << std::fixed << it.value << std::defaultfloat;
    os << '^' << it.multiplicity;
  }
  return os.str();
}

}  // namespace distspec
