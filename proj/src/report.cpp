#include "hopfpar/report.hpp"

#include <sstream>

namespace hopfpar {

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto it : other.items) {
    if (!prefix.empty()) it.id = prefix + "." + it.id;
    items.push_back(std::move(it));
  }
}

const CheckItem* Report::find(const std::string& id) const {
  for (const auto& it : items)
    if (it.id == id) return &it;
  return nullptr;
}

std::string Report::render() const {
  std::ostringstream os;
  os << "suite " << suite << "\n";
  for (const auto& it : items) {
    os << "item " << it.id << " ";
    switch (it.status) {
      case CheckStatus::pass: os << "pass"; break;
      case CheckStatus::fail: os << "fail"; break;
      case CheckStatus::skipped: os << "skipped"; break;
    }
    if (!it.witness.empty()) os << " witness {" << it.witness << "}";
    if (!it.value.empty()) os << " value {" << it.value << "}";
    os << "\n";
  }
  os << "status " << (passed() ? "pass" : "fail") << "\n";
  os << "timing-ms " << timing_ms << "\n";
  return os.str();
}

}  // namespace hopfpar
