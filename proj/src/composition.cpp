#include "palcomp/composition.hpp"

#include <charconv>
#include <stdexcept>

namespace palcomp {

Modulus Modulus::finite(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("modulus must be a positive integer");
  return Modulus(m);
}

Modulus Modulus::parse(std::string_view text) {
  if (text == "inf" || text == "infinity") return infinity();
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("bad modulus '" + std::string(text) +
                                "': expected a positive integer or 'inf'");
  return finite(v);
}

std::int64_t Modulus::value() const {
  if (is_infinite()) throw std::invalid_argument("infinite modulus has no finite value");
  return value_;
}

std::string Modulus::str() const { return is_infinite() ? "inf" : std::to_string(value_); }

Composition::Composition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  for (auto p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
    total_ += p;
  }
}

Composition Composition::reversed() const {
  std::vector<std::int64_t> rev(parts_.rbegin(), parts_.rend());
  return Composition(std::move(rev));
}

bool is_palindrome(const Composition& sigma) {
  const auto& p = sigma.parts();
  for (std::size_t i = 0, j = p.size(); i < j; ++i, --j)
    if (p[i] != p[j - 1]) return false;
  return true;
}

bool is_palindromic_mod(const Composition& sigma, const Modulus& m) {
  const auto& p = sigma.parts();
  for (std::size_t i = 0, j = p.size(); i < j; ++i, --j)
    if (!m.congruent(p[i], p[j - 1])) return false;
  return true;
}

Composition parse_composition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) throw std::invalid_argument("empty composition");

  std::vector<std::int64_t> parts;
  std::size_t token_index = 0;
  std::string_view rest = text;
  while (true) {
    ++token_index;
    auto comma = rest.find(',');
    std::string_view tok = trim(comma == std::string_view::npos ? rest : rest.substr(0, comma));
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("bad composition part #" + std::to_string(token_index) +
                                  ": '" + std::string(tok) + "'");
    if (v < 1)
      throw std::invalid_argument("composition part #" + std::to_string(token_index) +
                                  " must be positive");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return Composition(std::move(parts));
}

std::string format_composition(const Composition& sigma) {
  std::string out;
  for (std::size_t i = 0; i < sigma.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(sigma.part(i));
  }
  return out;
}

} // namespace palcomp
