#include "omegatt/dimset.hpp"

#include <charconv>
#include <stdexcept>

namespace omegatt {

DimSet::DimSet(std::set<int> dims) : dims_(std::move(dims)) {
  for (int d : dims_) {
    if (d < 1) throw std::invalid_argument("DimSet: dimensions must be >= 1, got " + std::to_string(d));
  }
}

DimSet::DimSet(std::initializer_list<int> dims) : DimSet(std::set<int>(dims)) {}

DimSet DimSet::parse(std::string_view csv) {
  std::set<int> dims;
  while (!csv.empty()) {
    auto comma = csv.find(',');
    auto item = csv.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (ec != std::errc() || ptr != item.data() + item.size()) {
        throw std::invalid_argument("DimSet: not a dimension: '" + std::string(item) + "'");
      }
      dims.insert(value);
    }
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
  }
  return DimSet(std::move(dims));
}

std::vector<DimSet> DimSet::all_subsets(int upto) {
  std::vector<DimSet> out;
  for (unsigned mask = 0; mask < (1u << upto); ++mask) {
    std::set<int> dims;
    for (int i = 0; i < upto; ++i) {
      if (mask & (1u << i)) dims.insert(i + 1);
    }
    out.emplace_back(std::move(dims));
  }
  return out;
}

DimSet DimSet::symmetric_difference(DimSet const& other) const {
  std::set<int> out;
  for (int d : dims_) if (!other.contains(d)) out.insert(d);
  for (int d : other.dims_) if (!contains(d)) out.insert(d);
  return DimSet(std::move(out));
}

DimSet DimSet::shifted_down() const {
  std::set<int> out;
  for (int d : dims_) if (d >= 2) out.insert(d - 1);
  return DimSet(std::move(out));
}

DimSet DimSet::shifted_up() const {
  std::set<int> out;
  for (int d : dims_) out.insert(d + 1);
  return DimSet(std::move(out));
}

std::string DimSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int d : dims_) {
    if (!first) out += ",";
    out += std::to_string(d);
    first = false;
  }
  return out + "}";
}

}  // namespace omegatt
