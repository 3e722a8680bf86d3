#include "palcomp/bijection_m3.hpp"

#include <stdexcept>

namespace palcomp {
namespace {

const Modulus kThree = Modulus::finite(3);

void require_domain(const TwoOneWord& word) {
  if (!in_two_one_domain(word))
    throw std::invalid_argument("word must begin (1,1) or (2)");
}

// All {1,2}-compositions of n in lexicographic order, each prefixed by `head`.
void emit_lex(std::vector<int>& head, int n, std::vector<TwoOneWord>& out) {
  if (n == 0) {
    out.emplace_back(head);
    return;
  }
  for (int first = 1; first <= std::min(n, 2); ++first) {
    head.push_back(first);
    emit_lex(head, n - first, out);
    head.pop_back();
  }
}

} // namespace

TwoOneWord::TwoOneWord(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p != 1 && p != 2) throw std::invalid_argument("word parts must be 1 or 2");
    total_ += p;
  }
}

TwoOneWord parse_two_one_word(std::string_view text) {
  const Composition c = parse_composition(text);
  std::vector<int> parts;
  parts.reserve(c.length());
  for (auto p : c.parts()) {
    if (p != 1 && p != 2)
      throw std::invalid_argument("word parts must be 1 or 2");
    parts.push_back(static_cast<int>(p));
  }
  return TwoOneWord(std::move(parts));
}

std::string format_two_one_word(const TwoOneWord& word) {
  std::string out;
  for (std::size_t i = 0; i < word.parts().size(); ++i) {
    if (i) out += ',';
    out += static_cast<char>('0' + word.parts()[i]);
  }
  return out;
}

bool in_two_one_domain(const TwoOneWord& word) {
  const auto& p = word.parts();
  if (p.empty()) return false;
  if (p[0] == 2) return true;
  return p.size() >= 2 && p[1] == 1;
}

std::vector<TwoOneWord> two_one_domain(int n) {
  if (n < 2) throw std::invalid_argument("domain words need n >= 2");
  std::vector<TwoOneWord> out;
  std::vector<int> head{1, 1};
  emit_lex(head, n - 2, out);
  head = {2};
  emit_lex(head, n - 2, out);
  return out;
}

SegmentStats segment_stats(const TwoOneWord& segment) {
  SegmentStats s;
  s.length = static_cast<std::int64_t>(segment.parts().size());
  bool before_two = true;
  for (int p : segment.parts()) {
    if (p == 2) {
      ++s.twos;
      before_two = false;
    } else {
      ++s.ones;
      if (before_two) ++s.leading_ones;
    }
  }
  return s;
}

std::string format_m3_triples(const std::vector<M3Triple>& triples) {
  std::string out;
  for (std::size_t j = 0; j < triples.size(); ++j) {
    if (j) out += ',';
    out += '(' + std::to_string(triples[j].c) + ',' + std::to_string(triples[j].d) + ',' +
           std::to_string(triples[j].e) + ')';
  }
  return out;
}

M3Decomposition m3_decompose(const TwoOneWord& word) {
  require_domain(word);
  const auto& p = word.parts();
  M3Decomposition d;
  std::size_t i = 0;
  while (i < p.size()) {
    std::size_t start = i;
    while (i < p.size() && p[i] == 1) ++i;
    if (i == p.size()) {
      d.trailing_ones = static_cast<std::int64_t>(i - start);
      break;
    }
    ++i; // the segment's first two
    while (i + 1 < p.size() && p[i] == 1 && p[i + 1] == 2) i += 2;
    d.segments.emplace_back(std::vector<int>(p.begin() + start, p.begin() + i));
  }
  return d;
}

std::string format_m3_decomposition(const M3Decomposition& d) {
  std::string out;
  auto group = [&out](const std::string& body) {
    if (!out.empty()) out += '+';
    out += '(' + body + ')';
  };
  for (const auto& seg : d.segments) group(format_two_one_word(seg));
  if (d.trailing_ones > 0) {
    std::string ones = "1";
    for (std::int64_t i = 1; i < d.trailing_ones; ++i) ones += ",1";
    group(ones);
  }
  return out;
}

M3Triple m3_segment_triple(const TwoOneWord& segment) {
  const SegmentStats s = segment_stats(segment);
  if (s.twos < 1) throw std::invalid_argument("segment must contain a two");
  if (s.length != s.leading_ones + 2 * s.twos - 1)
    throw std::invalid_argument("segment is not of the form 1^o 2 (1 2)^(t-1)");
  const std::int64_t o = s.leading_ones, t = s.twos;
  if (o % 2 == 0) return M3Triple{o / 2 + 1, 3 * (t - 1), 0};
  return M3Triple{(o - 1) / 2, 0, 3 * t};
}

Composition m3_assemble(const std::vector<M3Triple>& triples, std::int64_t trailing_ones) {
  if (trailing_ones < 0) throw std::invalid_argument("negative trailing length");
  if (triples.empty() && trailing_ones == 0) throw std::invalid_argument("empty assembly");
  const std::size_t s = triples.size();
  const std::size_t k = 2 * s + (trailing_ones > 0 ? 1 : 0);
  std::vector<std::int64_t> parts(k);
  for (std::size_t j = 0; j < s; ++j) {
    const M3Triple& t = triples[j];
    if (t.c + t.d < 1 || t.c + t.e < 1 || t.d % 3 != 0 || t.e % 3 != 0 ||
        (t.d != 0 && t.e != 0) || t.d < 0 || t.e < 0)
      throw std::invalid_argument("malformed triple at position " + std::to_string(j + 1));
    parts[j] = t.c + t.d;
    parts[k - 1 - j] = t.c + t.e;
  }
  if (trailing_ones > 0) parts[s] = trailing_ones;
  return Composition(std::move(parts));
}

Composition m3_forward(const TwoOneWord& word) {
  const M3Decomposition d = m3_decompose(word);
  std::vector<M3Triple> triples;
  triples.reserve(d.segments.size());
  for (const auto& seg : d.segments) triples.push_back(m3_segment_triple(seg));
  return m3_assemble(triples, d.trailing_ones);
}

TwoOneWord m3_inverse(const Composition& sigma) {
  if (sigma.total() < 2) throw std::invalid_argument("expected a composition of n >= 2");
  if (!is_palindromic_mod(sigma, kThree))
    throw std::invalid_argument("composition is not palindromic mod 3");
  const auto& p = sigma.parts();
  const std::size_t k = p.size();
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(sigma.total()));
  auto emit_segment = [&word](std::int64_t leading, std::int64_t twos) {
    word.insert(word.end(), leading, 1);
    word.push_back(2);
    for (std::int64_t i = 1; i < twos; ++i) {
      word.push_back(1);
      word.push_back(2);
    }
  };
  for (std::size_t j = 0, jr = k; j < jr; ++j, --jr) {
    const std::int64_t x = p[j], y = p[jr - 1];
    if (j == jr - 1) {
      word.insert(word.end(), x, 1); // the center is the all-ones tail
    } else if (x > y) {
      emit_segment(2 * (y - 1), (x - y) / 3 + 1);
    } else if (x < y) {
      emit_segment(2 * x + 1, (y - x) / 3);
    } else {
      emit_segment(2 * (x - 1), 1);
    }
  }
  return TwoOneWord(std::move(word));
}

} // namespace palcomp
