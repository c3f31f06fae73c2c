#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "teachkit/error.hpp"

namespace teachkit {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream ss{std::string(line)};
  for (std::string w; ss >> w;) out.push_back(w);
  return out;
}

/// Non-blank lines with '#' comments stripped, paired with their 1-based line number.
inline std::vector<std::pair<int, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream ss{std::string(text)};
  int number = 0;
  for (std::string line; std::getline(ss, line);) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    std::size_t lead = 0;
    while (lead < line.size() && (line[lead] == ' ' || line[lead] == '\t')) ++lead;
    line.erase(0, lead);
    if (!line.empty()) out.emplace_back(number, line);
  }
  return out;
}

inline long long parse_integer(const std::string& word, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(word, &used);
  } catch (const std::exception&) {
    throw InputError("expected an integer for " + what + ", got '" + word + "'");
  }
  if (used != word.size()) throw InputError("expected an integer for " + what + ", got '" + word + "'");
  return v;
}

}  // namespace teachkit
