#include "bruhat/node_set.hpp"

#include <charconv>

#include "bruhat/errors.hpp"

namespace bruhat {

NodeSet NodeSet::of(std::initializer_list<int> nodes) {
  NodeSet s;
  for (int i : nodes) s = s.with(i);
  return s;
}

std::vector<int> NodeSet::elements() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string NodeSet::to_string() const {
  std::string s = "[";
  bool first = true;
  for (int i : elements()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "]";
}

NodeSet NodeSet::parse(std::string_view text) {
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw InvalidInput("malformed node set '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
  }
  NodeSet out;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = -1;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || value < 0 || value > 31) {
      throw InvalidInput("malformed node set entry '" + std::string(item) + "'");
    }
    out = out.with(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<NodeSet> subsets_of(int n) {
  std::vector<NodeSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    out.emplace_back(mask << 1);
  }
  return out;
}

}  // namespace bruhat
