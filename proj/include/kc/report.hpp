#pragma once

#include <string>
#include <vector>

namespace kc {

struct CheckItem {
  std::string name;
  bool ok = true;
  std::string detail;
};

// Itemized validation result.
class Report {
 public:
  void add(std::string name, bool ok, std::string detail = {}) {
    items_.push_back({std::move(name), ok, std::move(detail)});
  }
  void merge(const Report& o, const std::string& prefix = {}) {
    for (const auto& it : o.items_) items_.push_back({prefix + it.name, it.ok, it.detail});
  }
  bool ok() const {
    for (const auto& it : items_)
      if (!it.ok) return false;
    return true;
  }
  const std::vector<CheckItem>& items() const { return items_; }
  std::vector<CheckItem> failures() const {
    std::vector<CheckItem> f;
    for (const auto& it : items_)
      if (!it.ok) f.push_back(it);
    return f;
  }
  std::string first_failure() const {
    for (const auto& it : items_)
      if (!it.ok) return it.name + (it.detail.empty() ? "" : ": " + it.detail);
    return {};
  }
  bool has_failure_containing(const std::string& key) const {
    for (const auto& it : items_)
      if (!it.ok && (it.name.find(key) != std::string::npos || it.detail.find(key) != std::string::npos))
        return true;
    return false;
  }

 private:
  std::vector<CheckItem> items_;
};

}  // namespace kc
