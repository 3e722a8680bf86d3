#include "palcomp/counting.hpp"

#include <algorithm>
#include <stdexcept>

#include "palcomp/oracle.hpp"

namespace palcomp {

RationalGF generating_function(int m) {
  if (m < 1) throw std::invalid_argument("generating function needs a finite modulus >= 1");
  RationalGF gf;
  gf.num.assign(m + 2, BigInt(0));
  gf.num[1] += 1;
  gf.num[2] += 2;
  gf.num[m + 1] -= 1;
  gf.den.assign(std::max(m, 2) + 1, BigInt(0));
  gf.den[0] = 1;
  gf.den[2] -= 2;
  gf.den[m] -= 1;
  return gf;
}

std::vector<BigInt> recurrence_counts(int m, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  return expand(generating_function(m), n_max).coeffs;
}

BigInt recurrence_count(int n, int m) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return recurrence_counts(m, n)[n];
}

BigInt fibonacci(int k) {
  if (k < 1) throw std::invalid_argument("fibonacci index must be >= 1");
  BigInt a = 1, b = 1; // fib(1), fib(2)
  for (int i = 2; i < k; ++i) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return k == 1 ? a : b;
}

BigInt pell(int k) {
  if (k < 1) throw std::invalid_argument("pell index must be >= 1");
  BigInt a = 1, b = 2; // pell(1), pell(2)
  for (int i = 2; i < k; ++i) {
    BigInt c = 2 * b + a;
    a = std::move(b);
    b = std::move(c);
  }
  return k == 1 ? a : b;
}

bool closed_form_available(const Modulus& m) {
  if (m.is_infinite()) return true;
  const auto v = m.value();
  return v >= 1 && v <= 4;
}

BigInt closed_form_count(int n, const Modulus& m) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!closed_form_available(m))
    throw std::invalid_argument("no closed form for modulus " + m.str());
  if (m.is_infinite()) return BigInt(1) << (n / 2);
  switch (m.value()) {
    case 1:
      return BigInt(1) << (n - 1);
    case 2:
      if (n == 1) return 1;
      return 2 * boost::multiprecision::pow(BigInt(3), n / 2 - 1);
    case 3:
      if (n == 1) return 1;
      return 2 * fibonacci(n - 1);
    default: // 4
      if (n == 1) return 1;
      return 2 * pell(n / 2);
  }
}

TruncatedSeries congruent_pair_series(int m, int order) {
  if (m < 1) throw std::invalid_argument("pair series needs a finite modulus >= 1");
  if (order < m + 2)
    throw std::invalid_argument("pair series order must be at least m+2");
  auto poly = [order](std::vector<BigInt> low) {
    return TruncatedSeries(std::move(low), order);
  };
  TruncatedSeries one_minus_q2(order);
  one_minus_q2.coeffs[0] = 1;
  one_minus_q2.coeffs[2] = -1;
  TruncatedSeries one_minus_qm(order);
  one_minus_qm.coeffs[0] = 1;
  one_minus_qm.coeffs[m] = -1;
  TruncatedSeries q2 = poly({0, 0, 1});
  TruncatedSeries qm(order);
  qm.coeffs[m] = 1;

  // q^2/(1-q^2): equal pairs (j, j); 2 q^(m+2)/((1-q^2)(1-q^m)): pairs (j, j+tm), both orders.
  TruncatedSeries equal_pairs = series_mul(q2, series_reciprocal(one_minus_q2));
  TruncatedSeries mixed = series_mul(equal_pairs, series_mul(qm, series_reciprocal(one_minus_qm)));
  TruncatedSeries two = poly({2});
  return series_add(equal_pairs, series_mul(two, mixed));
}

bool check_gf_construction(int m, int order) {
  TruncatedSeries g = congruent_pair_series(m, order);
  TruncatedSeries one = TruncatedSeries({1}, order);
  TruncatedSeries q = TruncatedSeries({0, 1}, order);
  TruncatedSeries inv_one_minus_g = series_reciprocal(series_sub(one, g));
  TruncatedSeries inv_one_minus_q = series_reciprocal(series_sub(one, q));
  // Wrap each congruent-pair shell around a shorter palindromic core (or none),
  // then account for an optional middle part: G/(1-G)/(1-q) + q/(1-q).
  TruncatedSeries rhs = series_add(series_mul(series_mul(g, inv_one_minus_g), inv_one_minus_q),
                                   series_mul(q, inv_one_minus_q));
  TruncatedSeries lhs = expand(generating_function(m), order);
  return lhs.coeffs == rhs.coeffs;
}

std::string method_name(CountMethod method) {
  switch (method) {
    case CountMethod::oracle: return "oracle";
    case CountMethod::recurrence: return "recurrence";
    case CountMethod::closed: return "closed";
  }
  return "?";
}

CountMethod parse_method(const std::string& name) {
  if (name == "oracle") return CountMethod::oracle;
  if (name == "recurrence") return CountMethod::recurrence;
  if (name == "closed") return CountMethod::closed;
  throw std::invalid_argument("unknown method '" + name +
                              "': expected oracle, recurrence, or closed");
}

CountTable make_count_table(const std::vector<Modulus>& moduli, int n_max,
                            const std::vector<CountMethod>& methods,
                            int oracle_cap) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (moduli.empty()) throw std::invalid_argument("no moduli given");
  if (methods.empty()) throw std::invalid_argument("no methods given");

  CountTable table;
  for (const auto& m : moduli) {
    for (auto method : methods) {
      if (method == CountMethod::recurrence && m.is_infinite())
        throw std::invalid_argument("recurrence method requires a finite modulus");
      if (method == CountMethod::closed && !closed_form_available(m))
        throw std::invalid_argument("no closed form for modulus " + m.str());
      if (method == CountMethod::oracle && n_max > oracle_cap)
        throw OracleCapError(n_max, oracle_cap);
    }
    std::vector<BigInt> rec;
    if (std::find(methods.begin(), methods.end(), CountMethod::recurrence) != methods.end())
      rec = recurrence_counts(m.value(), n_max);
    for (int n = 1; n <= n_max; ++n) {
      std::vector<CountCell> row;
      for (auto method : methods) {
        BigInt v;
        switch (method) {
          case CountMethod::oracle: v = oracle_count(n, m, oracle_cap); break;
          case CountMethod::recurrence: v = rec[n]; break;
          case CountMethod::closed: v = closed_form_count(n, m); break;
        }
        row.push_back(CountCell{n, m, method, std::move(v), true});
      }
      bool agree = true;
      for (const auto& cell : row) agree = agree && cell.value == row.front().value;
      for (auto& cell : row) {
        cell.agree = agree;
        table.cells.push_back(std::move(cell));
      }
    }
  }
  return table;
}

} // namespace palcomp
