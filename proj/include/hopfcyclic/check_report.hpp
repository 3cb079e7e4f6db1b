#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <utility>
#include <vector>

namespace hopfcyclic {

/// One verified identity. On failure `witness` holds the first violating basis tuple.
struct CheckItem {
  std::string name;
  bool pass = true;
  std::vector<std::size_t> witness;
  std::string detail;
};

struct CheckReport {
  std::deque<CheckItem> items;  // stable references across add()

  bool ok() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }

  const CheckItem* first_failure() const {
    for (const auto& i : items)
      if (!i.pass) return &i;
    return nullptr;
  }

  const CheckItem* find(const std::string& name) const {
    for (const auto& i : items)
      if (i.name == name) return &i;
    return nullptr;
  }

  bool passed(const std::string& name) const {
    const CheckItem* i = find(name);
    return i && i->pass;
  }

  CheckItem& add(std::string name, bool pass = true) {
    items.push_back(CheckItem{std::move(name), pass, {}, {}});
    return items.back();
  }

  void fail(CheckItem& item, std::vector<std::size_t> witness, std::string detail) {
    if (!item.pass) return;
    item.pass = false;
    item.witness = std::move(witness);
    item.detail = std::move(detail);
  }

  void append(const CheckReport& other, const std::string& prefix = {}) {
    for (auto i : other.items) {
      i.name = prefix + i.name;
      items.push_back(std::move(i));
    }
  }
};

}  // namespace hopfcyclic
