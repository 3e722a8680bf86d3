#include "palcomp/oracle.hpp"

namespace palcomp {
namespace {

void check_domain(int n, int cap) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (cap < 1 || cap > 62) throw std::invalid_argument("oracle cap must be in 1..62");
  if (n > cap) throw OracleCapError(n, cap);
}

// Decodes mask v into the parts buffer (reused across iterations).
void decode(std::uint64_t v, int n, std::vector<std::int64_t>& parts) {
  parts.clear();
  std::int64_t run = 1;
  for (int i = 1; i < n; ++i) {
    if ((v >> (n - 1 - i)) & 1u) {
      parts.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  parts.push_back(run);
}

bool mirror_ok(const std::vector<std::int64_t>& p, const Modulus& m) {
  for (std::size_t i = 0, j = p.size(); i < j; ++i, --j)
    if (!m.congruent(p[i], p[j - 1])) return false;
  return true;
}

} // namespace

CompositionStream::CompositionStream(int n, int cap) : n_(n) {
  check_domain(n, cap);
  end_ = std::uint64_t(1) << (n - 1);
}

std::optional<Composition> CompositionStream::next() {
  if (mask_ >= end_) return std::nullopt;
  std::vector<std::int64_t> parts;
  decode(mask_++, n_, parts);
  return Composition(std::move(parts));
}

CompositionStream enumerate_compositions(int n, int cap) { return CompositionStream(n, cap); }

BigInt oracle_count(int n, const Modulus& m, int cap) {
  check_domain(n, cap);
  const std::uint64_t end = std::uint64_t(1) << (n - 1);
  std::vector<std::int64_t> parts;
  parts.reserve(n);
  std::uint64_t count = 0;
  for (std::uint64_t v = 0; v < end; ++v) {
    decode(v, n, parts);
    if (mirror_ok(parts, m)) ++count;
  }
  return BigInt(count);
}

std::vector<Composition> oracle_list(int n, const Modulus& m, int cap) {
  check_domain(n, cap);
  const std::uint64_t end = std::uint64_t(1) << (n - 1);
  std::vector<Composition> out;
  std::vector<std::int64_t> parts;
  parts.reserve(n);
  for (std::uint64_t v = 0; v < end; ++v) {
    decode(v, n, parts);
    if (mirror_ok(parts, m)) out.emplace_back(parts);
  }
  return out;
}

BigInt oracle_count_palindromes(int n, int cap) {
  return oracle_count(n, Modulus::infinity(), cap);
}

} // namespace palcomp
