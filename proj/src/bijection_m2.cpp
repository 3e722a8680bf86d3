#include "palcomp/bijection_m2.hpp"

#include <stdexcept>

#include "palcomp/structural.hpp"

namespace palcomp {
namespace {

const Modulus kTwo = Modulus::finite(2);

void check_triples(const TripleSeq& triples) {
  if (triples.empty()) throw std::invalid_argument("empty triple sequence");
  for (std::size_t j = 0; j < triples.size(); ++j) {
    const Triple& t = triples[j];
    if (t.b < 1 || t.c < 0 || (t.d != 0 && t.d != 1))
      throw std::invalid_argument("malformed triple at position " + std::to_string(j + 1));
    // A d=1 separator only ever appears right after a 2, so c >= 1 there;
    // the final triple may carry d=1 as the family mark with any c.
    if (j + 1 < triples.size() && t.d == 1 && t.c == 0)
      throw std::invalid_argument("triple " + std::to_string(j + 1) +
                                  " has d=1 but no preceding 2 (c=0)");
  }
}

} // namespace

TernaryWord::TernaryWord(std::vector<int> symbols) : symbols_(std::move(symbols)) {
  for (int s : symbols_)
    if (s < 0 || s > 2) throw std::invalid_argument("ternary word symbols must be 0, 1, or 2");
}

TernaryWord parse_ternary_word(std::string_view text) {
  std::vector<int> symbols;
  symbols.reserve(text.size());
  for (char ch : text) {
    if (ch < '0' || ch > '2')
      throw std::invalid_argument(std::string("bad ternary word character '") + ch + "'");
    symbols.push_back(ch - '0');
  }
  return TernaryWord(std::move(symbols));
}

std::string format_ternary_word(const TernaryWord& word) {
  std::string out;
  out.reserve(word.symbols().size());
  for (int s : word.symbols()) out += static_cast<char>('0' + s);
  return out;
}

std::string format_triples(const TripleSeq& triples) {
  std::string out;
  for (std::size_t j = 0; j < triples.size(); ++j) {
    if (j) out += ',';
    out += '(' + std::to_string(triples[j].b) + ',' + std::to_string(triples[j].c) + ',' +
           std::to_string(triples[j].d) + ')';
  }
  return out;
}

TripleSeq word_to_triples(const TernaryWord& word) {
  TripleSeq triples{Triple{}};
  int prev = -1;
  for (int a : word.symbols()) {
    switch (a) {
      case 0:
        triples.push_back(Triple{});
        break;
      case 2:
        ++triples.back().c;
        break;
      default: // 1
        if (prev == 2) {
          triples.back().d = 1;
          triples.push_back(Triple{});
        } else {
          ++triples.back().b;
        }
    }
    prev = a;
  }
  return triples;
}

TripleSeq mark_last(TripleSeq triples) {
  if (triples.empty()) throw std::invalid_argument("empty triple sequence");
  if (triples.back().d != 0) throw std::invalid_argument("final triple is already marked");
  triples.back().d = 1;
  return triples;
}

TernaryWord triples_to_word(const TripleSeq& triples) {
  check_triples(triples);
  if (triples.back().d != 0)
    throw std::invalid_argument("cannot rebuild a word from a marked sequence; unmark first");
  std::vector<int> symbols;
  for (std::size_t j = 0; j < triples.size(); ++j) {
    const Triple& t = triples[j];
    symbols.insert(symbols.end(), t.b - 1, 1);
    symbols.insert(symbols.end(), t.c, 2);
    if (j + 1 < triples.size()) symbols.push_back(t.d == 1 ? 1 : 0);
  }
  return TernaryWord(std::move(symbols));
}

Composition triples_to_composition(const TripleSeq& triples) {
  check_triples(triples);
  const std::size_t ka = triples.size();
  const Triple& last = triples.back();
  const bool has_center = last.d == 0 && last.c == 0;
  const std::size_t k = has_center ? 2 * ka - 1 : 2 * ka;
  std::vector<std::int64_t> parts(k);
  for (std::size_t j = 0; j + 1 < ka; ++j) {
    const Triple& t = triples[j];
    const std::int64_t big = t.b + 2 * t.c;
    parts[j] = t.d == 0 ? big : t.b;
    parts[k - 1 - j] = t.d == 0 ? t.b : big;
  }
  if (has_center) {
    parts[ka - 1] = 2 * last.b;
  } else {
    const std::int64_t big = last.b + 2 * last.c;
    parts[ka - 1] = last.d == 0 ? big : last.b;
    parts[ka] = last.d == 0 ? last.b : big;
  }
  return Composition(std::move(parts));
}

TripleSeq composition_to_triples(const Composition& sigma) {
  if (sigma.total() < 2 || sigma.total() % 2 != 0)
    throw std::invalid_argument("expected a composition of an even total >= 2");
  if (!is_palindromic_mod(sigma, kTwo))
    throw std::invalid_argument("composition is not palindromic mod 2");
  const auto& p = sigma.parts();
  const std::size_t k = p.size();
  const std::size_t ka = (k + 1) / 2;
  TripleSeq triples;
  triples.reserve(ka);
  for (std::size_t j = 0; j + 1 < ka; ++j) {
    const std::int64_t x = p[j], y = p[k - 1 - j];
    if (x >= y)
      triples.push_back(Triple{y, (x - y) / 2, 0});
    else
      triples.push_back(Triple{x, (y - x) / 2, 1});
  }
  if (k % 2 == 1) {
    triples.push_back(Triple{p[ka - 1] / 2, 0, 0}); // center is even: pairs have even sums
  } else {
    const std::int64_t x = p[ka - 1], y = p[ka];
    if (x > y)
      triples.push_back(Triple{y, (x - y) / 2, 0});
    else if (x < y)
      triples.push_back(Triple{x, (y - x) / 2, 1});
    else
      triples.push_back(Triple{x, 0, 1});
  }
  return triples;
}

Composition word_to_composition(const TernaryWord& word, FamilyTag family) {
  TripleSeq triples = word_to_triples(word);
  if (family == FamilyTag::marked) triples = mark_last(std::move(triples));
  return triples_to_composition(triples);
}

WordFamily composition_to_word(const Composition& sigma) {
  TripleSeq triples = composition_to_triples(sigma);
  const FamilyTag family = triples.back().d == 1 ? FamilyTag::marked : FamilyTag::plain;
  if (family == FamilyTag::marked) triples.back().d = 0;
  return WordFamily{triples_to_word(triples), family};
}

Composition lift_parity(const Composition& sigma) { return parity_lift(sigma, kTwo); }

Composition drop_parity(const Composition& sigma) { return parity_drop(sigma, kTwo); }

} // namespace palcomp
