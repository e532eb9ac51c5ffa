#pragma once

#include <cstddef>
#include <exception>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "spineless/dcore.hpp"
#include "spineless/errors.hpp"
#include "spineless/knots.hpp"
#include "spineless/rational.hpp"

namespace spineless {

// Text profile documents.
//
//   n 4              order (a bare `4` is also accepted)
//   0 3/4            labelled form: `i value` for i = 0..n-1
//   a 7/4            raw form: `id value`, plus
//   conj c d         one conj line per orbit (`conj a a` for fixed ids), and
//   cyclic a 0       optionally a Z/n label for every id
//   v: 1,0           optional companion V-sequence
//
// `#` starts a comment. A document is raw iff it has conj lines.
// write_profile(read_profile(x)) reproduces canonical output byte for byte.

struct ProfileDocument {
  std::variant<DProfile, RawProfile> profile;
  std::optional<VSequence> v;

  bool is_raw() const noexcept { return std::holds_alternative<RawProfile>(profile); }
  long order() const {
    return std::visit([](const auto& p) { return p.order(); }, profile);
  }
  RawProfile as_raw() const {
    if (const auto* d = std::get_if<DProfile>(&profile)) return RawProfile::from_labeled(*d);
    return std::get<RawProfile>(profile);
  }
};

/// Comma-separated integers, e.g. `1,0` or `-4,-2,0`.
inline std::vector<long> parse_int_list(std::string_view text) {
  std::vector<long> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    std::string item(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    item = first == std::string::npos ? std::string{} : item.substr(first, last - first + 1);
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("malformed integer '" + item + "' in list '" + std::string(text) + "'");
    }
    if (used != item.size()) throw InvalidInput("malformed integer '" + item + "' in list '" + std::string(text) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::string join_ints(const std::vector<long>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline long parse_long(const std::string& tok, std::size_t line, const char* what) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line, std::string("expected integer ") + what + ", got '" + tok + "'");
  return value;
}

}  // namespace detail

inline ProfileDocument read_profile(std::istream& in) {
  struct Entry {
    std::string id;
    Rational value;
    std::size_t line;
  };
  std::optional<long> order;
  std::vector<Entry> entries;
  std::vector<std::pair<std::string, std::string>> conj_lines;
  std::vector<std::pair<std::string, long>> cyclic_lines;
  std::optional<VSequence> v;

  std::string raw_line;
  std::size_t line_no = 0;
  while (std::getline(in, raw_line)) {
    ++line_no;
    if (const auto hash = raw_line.find('#'); hash != std::string::npos) raw_line.erase(hash);
    const auto tokens = detail::split_ws(raw_line);
    if (tokens.empty()) continue;
    if (!order) {
      if (tokens.size() == 2 && tokens[0] == "n") {
        order = detail::parse_long(tokens[1], line_no, "order");
      } else if (tokens.size() == 1) {
        order = detail::parse_long(tokens[0], line_no, "order");
      } else {
        throw ParseError(line_no, "expected `n <order>` header");
      }
      if (*order == 0) throw ParseError(line_no, "order 0 (zero-framed) profiles are not supported");
      if (*order < 0) throw ParseError(line_no, "order must be positive");
      continue;
    }
    if (tokens[0] == "v:") {
      if (v) throw ParseError(line_no, "duplicate v: line");
      std::string rest;
      for (std::size_t k = 1; k < tokens.size(); ++k) rest += tokens[k];
      try {
        const auto values = parse_int_list(rest);
        v = VSequence::from_values(std::span<const long>(values));
      } catch (const InvalidInput& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (tokens[0] == "conj") {
      if (tokens.size() != 3) throw ParseError(line_no, "expected `conj <id> <id>`");
      conj_lines.emplace_back(tokens[1], tokens[2]);
    } else if (tokens[0] == "cyclic") {
      if (tokens.size() != 3) throw ParseError(line_no, "expected `cyclic <id> <label>`");
      cyclic_lines.emplace_back(tokens[1], detail::parse_long(tokens[2], line_no, "cyclic label"));
    } else {
      if (tokens.size() != 2) throw ParseError(line_no, "expected `<id> <value>`");
      try {
        entries.push_back({tokens[0], Rational::parse(tokens[1]), line_no});
      } catch (const InvalidInput& e) {
        throw ParseError(line_no, e.what());
      }
    }
  }
  if (!order) throw ParseError(line_no, "empty profile document");
  if (static_cast<long>(entries.size()) != *order)
    throw ParseError(line_no, "expected " + std::to_string(*order) + " entries, found " + std::to_string(entries.size()));

  ProfileDocument doc{DProfile({Rational(0)}), v};
  if (conj_lines.empty()) {
    if (!cyclic_lines.empty()) throw ParseError(line_no, "cyclic lines require a raw (conj) profile");
    std::vector<std::optional<Rational>> values(static_cast<std::size_t>(*order));
    for (const auto& e : entries) {
      const long i = detail::parse_long(e.id, e.line, "spin^c index");
      if (i < 0 || i >= *order) throw ParseError(e.line, "index " + e.id + " outside 0.." + std::to_string(*order - 1));
      if (values[static_cast<std::size_t>(i)]) throw ParseError(e.line, "duplicate index " + e.id);
      values[static_cast<std::size_t>(i)] = e.value;
    }
    std::vector<Rational> flat;
    for (auto& x : values) flat.push_back(*x);
    try {
      doc.profile = DProfile(std::move(flat));
    } catch (const InvalidInput& e) {
      throw ParseError(line_no, e.what());
    }
    return doc;
  }

  std::map<std::string, std::size_t> index;
  std::vector<RawEntry> raw_entries;
  for (const auto& e : entries) {
    if (!index.emplace(e.id, raw_entries.size()).second) throw ParseError(e.line, "duplicate id '" + e.id + "'");
    raw_entries.push_back({e.id, e.value});
  }
  auto lookup = [&](const std::string& id) {
    const auto it = index.find(id);
    if (it == index.end()) throw ParseError(line_no, "unknown id '" + id + "'");
    return it->second;
  };
  std::vector<std::size_t> conj(raw_entries.size(), raw_entries.size());
  for (const auto& [a, b] : conj_lines) {
    const std::size_t ia = lookup(a), ib = lookup(b);
    if (conj[ia] != raw_entries.size() || conj[ib] != raw_entries.size())
      throw ParseError(line_no, "id listed in more than one conj line");
    conj[ia] = ib;
    conj[ib] = ia;
  }
  for (std::size_t k = 0; k < conj.size(); ++k)
    if (conj[k] == raw_entries.size()) throw ParseError(line_no, "id '" + raw_entries[k].id + "' has no conj line");
  std::optional<std::vector<long>> cyclic;
  if (!cyclic_lines.empty()) {
    if (cyclic_lines.size() != raw_entries.size()) throw ParseError(line_no, "cyclic labels must cover every id");
    cyclic.emplace(raw_entries.size(), -1);
    for (const auto& [id, label] : cyclic_lines) (*cyclic)[lookup(id)] = label;
  }
  try {
    doc.profile = RawProfile(std::move(raw_entries), std::move(conj), std::move(cyclic));
  } catch (const InvalidInput& e) {
    throw ParseError(line_no, e.what());
  }
  return doc;
}

inline ProfileDocument read_profile(const std::string& text) {
  std::istringstream in(text);
  return read_profile(in);
}

inline std::string write_profile(const ProfileDocument& doc) {
  std::ostringstream out;
  out << "n " << doc.order() << '\n';
  if (const auto* d = std::get_if<DProfile>(&doc.profile)) {
    for (long i = 0; i < d->order(); ++i) out << i << ' ' << (*d)[i] << '\n';
  } else {
    const auto& raw = std::get<RawProfile>(doc.profile);
    const auto& entries = raw.entries();
    for (const auto& e : entries) out << e.id << ' ' << e.value << '\n';
    for (std::size_t k = 0; k < entries.size(); ++k)
      if (raw.conj()[k] >= k) out << "conj " << entries[k].id << ' ' << entries[raw.conj()[k]].id << '\n';
    if (raw.cyclic_labels())
      for (std::size_t k = 0; k < entries.size(); ++k)
        out << "cyclic " << entries[k].id << ' ' << (*raw.cyclic_labels())[k] << '\n';
  }
  if (doc.v) out << "v: " << doc.v->str() << '\n';
  return out.str();
}

}  // namespace spineless
