#include "mhg/sentence.hpp"

#include <array>
#include <charconv>
#include <stdexcept>
#include <utility>

namespace mhg {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 12> kNames{{
    {Family::a1_distances, "a1.distances"},
    {Family::a1_no_two_threes, "a1.no_two_threes"},
    {Family::a1_parts, "a1.parts"},
    {Family::a1_pairs, "a1.pairs"},
    {Family::a1_ones_unlabeled, "a1.ones_unlabeled"},
    {Family::a1_ones_labeled, "a1.ones_labeled"},
    {Family::a2_distances, "a2.distances"},
    {Family::a2_parts, "a2.parts"},
    {Family::a2_min_ones, "a2.min_ones"},
    {Family::a2_min_threes, "a2.min_threes"},
    {Family::extension, "ext"},
    {Family::divergence_witness, "witness"},
}};

std::size_t parse_count(std::string_view key, std::string_view v) {
  std::size_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
    throw std::invalid_argument("sentence parameter " + std::string(key) + " is not a non-negative integer");
  }
  return out;
}

}  // namespace

bool has_p(Family f) {
  switch (f) {
    case Family::a1_pairs:
    case Family::a1_ones_unlabeled:
    case Family::a1_ones_labeled:
    case Family::a2_min_ones:
    case Family::a2_min_threes:
    case Family::extension:
      return true;
    default:
      return false;
  }
}

bool allows_gloss(Family f) { return f == Family::a1_pairs || f == Family::a1_ones_unlabeled; }

std::string to_string(const SentenceId& s) {
  std::string out;
  for (const auto& [f, name] : kNames)
    if (f == s.family) out = name;
  if (s.family == Family::extension) {
    out += "?q=" + std::to_string(s.q) + "&p=" + std::to_string(s.p) + "&r=" + std::to_string(s.r);
  } else if (has_p(s.family)) {
    out += "?p=" + std::to_string(s.p);
    if (s.gloss) out += "&gloss=1";
  }
  return out;
}

SentenceId parse_sentence(std::string_view id) {
  const auto qmark = id.find('?');
  const std::string_view name = id.substr(0, qmark);
  SentenceId s;
  bool known = false;
  for (const auto& [f, n] : kNames) {
    if (n == name) {
      s.family = f;
      known = true;
    }
  }
  if (!known) throw std::invalid_argument("unknown sentence family '" + std::string(name) + "'");

  bool seen_p = false, seen_q = false, seen_r = false;
  if (qmark != std::string_view::npos) {
    std::string_view rest = id.substr(qmark + 1);
    while (!rest.empty()) {
      const auto amp = rest.find('&');
      const std::string_view item = rest.substr(0, amp);
      rest = amp == std::string_view::npos ? std::string_view{} : rest.substr(amp + 1);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) throw std::invalid_argument("malformed sentence parameter '" + std::string(item) + "'");
      const std::string_view key = item.substr(0, eq), value = item.substr(eq + 1);
      if (key == "p" && has_p(s.family)) {
        s.p = parse_count(key, value);
        seen_p = true;
      } else if (key == "q" && s.family == Family::extension) {
        s.q = parse_count(key, value);
        seen_q = true;
      } else if (key == "r" && s.family == Family::extension) {
        s.r = parse_count(key, value);
        seen_r = true;
      } else if (key == "gloss" && allows_gloss(s.family)) {
        if (value != "0" && value != "1") throw std::invalid_argument("gloss must be 0 or 1");
        s.gloss = value == "1";
      } else {
        throw std::invalid_argument("unexpected parameter '" + std::string(key) + "' for " + std::string(name));
      }
    }
  }
  if (has_p(s.family) && !seen_p) throw std::invalid_argument("missing parameter p for " + std::string(name));
  if (s.family == Family::extension && (!seen_q || !seen_r)) {
    throw std::invalid_argument("ext requires q, p and r");
  }
  return s;
}

}  // namespace mhg
