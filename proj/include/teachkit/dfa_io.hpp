#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "teachkit/dfa.hpp"
#include "teachkit/text_io.hpp"

namespace teachkit {

// Line-based DFA text format:
//
//   dfa 1
//   states <k>
//   start <s>
//   accept <indices...>
//   t <i> <dest0> <dest1>     (one line per state, i = 0..k-1)
//
// Several machines in one file are separated by lines holding only "---".

inline std::string format_dfa(const Dfa& d) {
  std::ostringstream out;
  out << "dfa 1\nstates " << d.num_states() << "\nstart " << d.start() << "\naccept";
  for (State q = 0; q < d.num_states(); ++q)
    if (d.accepting(q)) out << ' ' << q;
  out << '\n';
  for (State q = 0; q < d.num_states(); ++q)
    out << "t " << q << ' ' << d.next(q, 0) << ' ' << d.next(q, 1) << '\n';
  return out.str();
}

namespace detail {

inline Dfa parse_dfa_lines(const std::vector<std::pair<int, std::string>>& lines, std::size_t begin,
                           std::size_t end) {
  auto fail = [](int line, const std::string& msg) -> InputError {
    return InputError("dfa line " + std::to_string(line) + ": " + msg);
  };
  auto expect = [&](std::size_t i, std::string_view keyword) {
    if (i >= end) throw InputError("dfa: truncated, expected '" + std::string(keyword) + "'");
    auto words = split_words(lines[i].second);
    if (words.empty() || words[0] != keyword)
      throw fail(lines[i].first, "expected '" + std::string(keyword) + "'");
    return words;
  };

  auto header = expect(begin, "dfa");
  if (header.size() != 2 || header[1] != "1") throw fail(lines[begin].first, "unsupported version");
  auto states = expect(begin + 1, "states");
  if (states.size() != 2) throw fail(lines[begin + 1].first, "malformed states line");
  const long long k = parse_integer(states[1], "states");
  if (k < 1 || k > (1LL << 24)) throw fail(lines[begin + 1].first, "state count out of range");
  auto in_range = [k](long long v) { return v >= 0 && v < k; };

  auto start = expect(begin + 2, "start");
  if (start.size() != 2) throw fail(lines[begin + 2].first, "malformed start line");
  const long long s = parse_integer(start[1], "start");
  if (!in_range(s)) throw fail(lines[begin + 2].first, "start state out of range");

  Dfa d(static_cast<std::size_t>(k));
  d.set_start(static_cast<State>(s));
  auto accept = expect(begin + 3, "accept");
  for (std::size_t w = 1; w < accept.size(); ++w) {
    const long long q = parse_integer(accept[w], "accept");
    if (!in_range(q)) throw fail(lines[begin + 3].first, "accepting state out of range");
    d.set_accepting(static_cast<State>(q), true);
  }

  std::vector<bool> defined(static_cast<std::size_t>(k), false);
  for (std::size_t i = begin + 4; i < end; ++i) {
    auto words = split_words(lines[i].second);
    if (words.size() != 4 || words[0] != "t") throw fail(lines[i].first, "expected 't <i> <dest0> <dest1>'");
    const long long q = parse_integer(words[1], "state");
    const long long t0 = parse_integer(words[2], "dest0");
    const long long t1 = parse_integer(words[3], "dest1");
    if (!in_range(q) || !in_range(t0) || !in_range(t1)) throw fail(lines[i].first, "state index out of range");
    if (defined[q]) throw fail(lines[i].first, "duplicate transitions for state " + words[1]);
    defined[q] = true;
    d.set_transition(static_cast<State>(q), 0, static_cast<State>(t0));
    d.set_transition(static_cast<State>(q), 1, static_cast<State>(t1));
  }
  for (long long q = 0; q < k; ++q)
    if (!defined[q]) throw InputError("dfa: missing transitions for state " + std::to_string(q));
  return d;
}

}  // namespace detail

/// Parses every machine in `text` ("---"-separated records).
inline std::vector<Dfa> parse_dfas(std::string_view text) {
  const auto lines = content_lines(text);
  std::vector<Dfa> out;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= lines.size(); ++i) {
    if (i < lines.size() && lines[i].second != "---") continue;
    if (i > begin) out.push_back(detail::parse_dfa_lines(lines, begin, i));
    begin = i + 1;
  }
  return out;
}

/// Parses exactly one machine.
inline Dfa parse_dfa(std::string_view text) {
  auto all = parse_dfas(text);
  if (all.size() != 1) throw InputError("expected exactly one DFA, found " + std::to_string(all.size()));
  return all.front();
}

inline Dfa load_dfa(const std::string& path) { return parse_dfa(read_file(path)); }

}  // namespace teachkit
