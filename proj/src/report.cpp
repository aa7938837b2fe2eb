#include "friablab/report.hpp"

#include <cinttypes>
#include <cstdio>
#include <stdexcept>

namespace friablab {

std::string format_value(const ReportValue& v) {
  char buf[64];
  if (std::holds_alternative<std::int64_t>(v)) {
    std::snprintf(buf, sizeof buf, "%" PRId64, std::get<std::int64_t>(v));
    return buf;
  }
  if (std::holds_alternative<double>(v)) {
    std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(v));
    return buf;
  }
  if (std::holds_alternative<bool>(v)) return std::get<bool>(v) ? "true" : "false";
  return std::get<std::string>(v);
}

ReportRow& ReportRow::add(std::string name, std::int64_t v) {
  fields.emplace_back(std::move(name), ReportValue{v});
  return *this;
}
ReportRow& ReportRow::add(std::string name, std::uint64_t v) {
  fields.emplace_back(std::move(name), ReportValue{static_cast<std::int64_t>(v)});
  return *this;
}
ReportRow& ReportRow::add(std::string name, double v) {
  fields.emplace_back(std::move(name), ReportValue{v});
  return *this;
}
ReportRow& ReportRow::add(std::string name, bool v) {
  fields.emplace_back(std::move(name), ReportValue{v});
  return *this;
}
ReportRow& ReportRow::add(std::string name, std::string v) {
  fields.emplace_back(std::move(name), ReportValue{std::move(v)});
  return *this;
}

const ReportValue* ReportRow::find(const std::string& name) const {
  for (const auto& [k, v] : fields)
    if (k == name) return &v;
  return nullptr;
}

double ReportRow::number(const std::string& name) const {
  const ReportValue* v = find(name);
  if (!v) throw std::out_of_range("report row has no field " + name);
  if (std::holds_alternative<double>(*v)) return std::get<double>(*v);
  if (std::holds_alternative<std::int64_t>(*v))
    return static_cast<double>(std::get<std::int64_t>(*v));
  throw std::invalid_argument("report field " + name + " is not numeric");
}

bool ReportRow::flag(const std::string& name) const {
  const ReportValue* v = find(name);
  if (!v || !std::holds_alternative<bool>(*v))
    throw std::out_of_range("report row has no flag " + name);
  return std::get<bool>(*v);
}

}  // namespace friablab
